// Copyright 2026 The argcog Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "argcog/harness.hpp"

#include <algorithm>
#include <thread>

#include <nlohmann/json.hpp>

#include "argcog/error.hpp"
#include "argcog/gen.hpp"
#include "argcog/semantics.hpp"

namespace argcog::harness {

namespace {

using Json = nlohmann::ordered_json;

template <typename T>
auto find_named(const std::vector<std::pair<std::string, T>>& entries,
                std::string_view name) -> const T* {
  auto it = std::find_if(entries.begin(), entries.end(),
                         [&](const auto& e) { return e.first == name; });
  return it == entries.end() ? nullptr : &it->second;
}

Json labels_json(const Framework& af, ArgSet s) {
  Json out = Json::array();
  for (auto x : s) out.push_back(af.label(x));
  return out;
}

Json framework_json(const std::string& source,
                    const std::optional<Framework>& af) {
  Json out = Json::object();
  out["source"] = source;
  if (af) {
    auto body = Json::parse(io::render_af(*af, io::RenderFormat::Json));
    out["arguments"] = std::move(body["arguments"]);
    out["attacks"] = std::move(body["attacks"]);
  }
  return out;
}

// Per-framework outcome of a sweep, merged in sweep order afterwards.
struct ItemResult {
  std::vector<Violation> violations;
  std::int64_t cogent_sets = 0;
  std::int64_t lemma_pairs = 0;
};

ItemResult check_item(const SweepItem& item, bool check_lemma,
                      const Limits& limits) {
  ItemResult result;
  auto inclusion = check_inclusion_theorem(item.framework, limits, item.source);
  result.cogent_sets = inclusion.counter("cogent").value_or(0);
  result.violations = std::move(inclusion.violations);
  if (check_lemma) {
    auto lemma = check_defense_lemma(item.framework, limits, item.source);
    result.lemma_pairs = lemma.counter("pairs-checked").value_or(0);
    std::move(lemma.violations.begin(), lemma.violations.end(),
              std::back_inserter(result.violations));
  }
  return result;
}

}  // namespace

const ExtensionSet* Report::find_semantics(std::string_view name) const {
  return find_named(semantics, name);
}

std::optional<std::int64_t> Report::counter(std::string_view name) const {
  if (const auto* v = find_named(counters, name)) return *v;
  return std::nullopt;
}

std::optional<bool> Report::flag(std::string_view name) const {
  if (const auto* v = find_named(flags, name)) return *v;
  return std::nullopt;
}

Report check_inclusion_theorem(const Framework& af, const Limits& limits,
                               std::string source) {
  Report report;
  report.source = std::move(source);
  report.framework = af;
  auto cogent = enumerate_cogent(af, limits);
  auto weak = enumerate_weakly_admissible(af, limits);
  for (auto e : cogent) {
    if (!weak.contains(e)) {
      report.violations.push_back(
          {std::string(kInclusionClaim), report.source, af, e, std::nullopt});
    }
  }
  report.counters = {
      {"cogent", static_cast<std::int64_t>(cogent.size())},
      {"weak-admissible", static_cast<std::int64_t>(weak.size())},
      {"violations", static_cast<std::int64_t>(report.violations.size())},
  };
  report.semantics = {{"cogent", std::move(cogent)},
                      {"weak-admissible", std::move(weak)}};
  return report;
}

ExtensionSet find_strictness_witnesses(const Framework& af,
                                       const Limits& limits) {
  return difference(enumerate_weakly_admissible(af, limits),
                    enumerate_cogent(af, limits));
}

Report check_defense_lemma(const Framework& af, const Limits& limits,
                           std::string source) {
  require_size(af, limits.max_args, "defense lemma check");
  Report report;
  report.source = std::move(source);
  report.framework = af;
  MemoTable memo(af);
  std::int64_t pairs = 0;
  for (auto e : conflict_free_subsets(af, af.arguments())) {
    const auto reduced = af.arguments() - range_closure(af, e).oplus;
    for (auto challenger : memo.weakly_admissible_in(reduced).sets) {
      if (!attacked_by(af, challenger).intersects(e)) continue;
      ++pairs;
      if (!gt_cog(af, challenger, e)) {
        report.violations.push_back(
            {std::string(kLemmaClaim), report.source, af, e, challenger});
      }
    }
  }
  report.counters = {
      {"pairs-checked", pairs},
      {"violations", static_cast<std::int64_t>(report.violations.size())},
  };
  return report;
}

Report compare_semantics(const Framework& af, const Limits& limits,
                         std::string source) {
  Report report;
  report.source = std::move(source);
  report.framework = af;
  auto admissible = enumerate_admissible(af, limits);
  auto cogent = enumerate_cogent(af, limits);
  auto weak = enumerate_weakly_admissible(af, limits);
  auto max_cogent = maximal_by_inclusion(cogent);
  auto max_weak = maximal_by_inclusion(weak);

  report.flags = {
      {"maximal-agreement", max_cogent == max_weak},
      {"admissible-subset-of-cogent", admissible.is_subset_of(cogent)},
      {"cogent-subset-of-weak-admissible", cogent.is_subset_of(weak)},
  };
  report.counters = {
      {"admissible", static_cast<std::int64_t>(admissible.size())},
      {"cogent", static_cast<std::int64_t>(cogent.size())},
      {"weak-admissible", static_cast<std::int64_t>(weak.size())},
      {"weak-admissible-not-cogent",
       static_cast<std::int64_t>(difference(weak, cogent).size())},
  };
  report.semantics = {
      {"admissible", std::move(admissible)},
      {"cogent", std::move(cogent)},
      {"weak-admissible", std::move(weak)},
      {"maximal-cogent", std::move(max_cogent)},
      {"maximal-weak-admissible", std::move(max_weak)},
  };
  return report;
}

std::vector<SweepItem> sweep_frameworks(const SweepConfig& cfg) {
  std::vector<SweepItem> items;
  if (cfg.exhaustive_n) {
    const auto first = cfg.exhaustive_only_largest ? *cfg.exhaustive_n : 0;
    for (std::size_t n = first; n <= *cfg.exhaustive_n; ++n) {
      const gen::AllFrameworks all(n);
      std::uint64_t relation = 0;
      for (auto af : all) {
        items.push_back({"exhaustive n=" + std::to_string(n) +
                             " relation=" + std::to_string(relation++),
                         std::move(af)});
      }
    }
  }
  if (cfg.random_count > 0) {
    if (cfg.min_n > cfg.max_n) {
      throw Error(ErrorKind::InvalidConfig, "sweep min_n exceeds max_n");
    }
    if (cfg.probabilities.empty()) {
      throw Error(ErrorKind::InvalidConfig, "sweep needs at least one probability");
    }
    const auto span = cfg.max_n - cfg.min_n + 1;
    for (std::size_t i = 0; i < cfg.random_count; ++i) {
      gen::GenConfig g;
      g.seed = gen::mix_seed(cfg.seed, i);
      g.n = cfg.min_n + static_cast<std::size_t>(g.seed % span);
      g.p = cfg.probabilities[i % cfg.probabilities.size()];
      g.allow_self_attacks = cfg.allow_self_attacks;
      items.push_back({gen::describe(g), gen::random_af(g, {cfg.max_n})});
    }
  }
  return items;
}

Report run_sweep(const SweepConfig& cfg, const Limits& limits) {
  const auto items = sweep_frameworks(cfg);
  std::vector<ItemResult> results(items.size());

  auto threads = cfg.threads == 0 ? std::thread::hardware_concurrency() : cfg.threads;
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(items.size(), 1));
  if (threads == 1) {
    for (std::size_t i = 0; i < items.size(); ++i) {
      results[i] = check_item(items[i], cfg.check_lemma, limits);
    }
  } else {
    std::vector<std::exception_ptr> errors(threads);
    {
      std::vector<std::jthread> workers;
      for (std::size_t w = 0; w < threads; ++w) {
        workers.emplace_back([&, w] {
          try {
            for (std::size_t i = w; i < items.size(); i += threads) {
              results[i] = check_item(items[i], cfg.check_lemma, limits);
            }
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
    }
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  Report report;
  report.source = "sweep";
  if (cfg.exhaustive_n) report.source += " exhaustive-n=" + std::to_string(*cfg.exhaustive_n);
  if (cfg.random_count > 0) {
    report.source += " random=" + std::to_string(cfg.random_count) +
                     " n=" + std::to_string(cfg.min_n) + ".." +
                     std::to_string(cfg.max_n) +
                     " seed=" + std::to_string(cfg.seed);
  }

  std::int64_t exhaustive = 0;
  std::int64_t cogent_sets = 0;
  std::int64_t lemma_pairs = 0;
  std::int64_t inclusion_violations = 0;
  std::int64_t lemma_violations = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i].source.starts_with("exhaustive")) ++exhaustive;
    cogent_sets += results[i].cogent_sets;
    lemma_pairs += results[i].lemma_pairs;
    for (auto& v : results[i].violations) {
      (v.claim == kInclusionClaim ? inclusion_violations : lemma_violations)++;
      report.violations.push_back(std::move(v));
    }
  }
  report.counters = {
      {"frameworks", static_cast<std::int64_t>(items.size())},
      {"exhaustive-frameworks", exhaustive},
      {"random-frameworks", static_cast<std::int64_t>(items.size()) - exhaustive},
      {"cogent-sets-checked", cogent_sets},
      {"lemma-pairs-checked", lemma_pairs},
      {"inclusion-violations", inclusion_violations},
      {"lemma-violations", lemma_violations},
  };
  return report;
}

std::string render_report(const Report& report, io::RenderFormat fmt) {
  if (fmt == io::RenderFormat::Json) {
    Json doc;
    doc["framework"] = framework_json(report.source, report.framework);
    Json semantics = Json::object();
    for (const auto& [name, sets] : report.semantics) {
      semantics[name] = Json::parse(
          io::render_extensions(*report.framework, sets, io::RenderFormat::Json));
    }
    doc["semantics"] = std::move(semantics);
    Json violations = Json::array();
    for (const auto& v : report.violations) {
      Json entry;
      entry["claim"] = v.claim;
      entry["framework"] = framework_json(v.source, v.framework);
      entry["set"] = labels_json(v.framework, v.set);
      if (v.challenger) entry["challenger"] = labels_json(v.framework, *v.challenger);
      violations.push_back(std::move(entry));
    }
    doc["violations"] = std::move(violations);
    Json summary = Json::object();
    for (const auto& [name, value] : report.counters) summary[name] = value;
    for (const auto& [name, value] : report.flags) summary[name] = value;
    doc["summary"] = std::move(summary);
    return doc.dump();
  }

  std::string out;
  if (!report.source.empty()) out += "source: " + report.source + "\n";
  for (const auto& [name, sets] : report.semantics) {
    out += name + ":";
    for (auto s : sets) out += " " + format_set(*report.framework, s);
    out += "\n";
  }
  for (const auto& [name, value] : report.flags) {
    out += name + ": " + (value ? "true" : "false") + "\n";
  }
  for (const auto& [name, value] : report.counters) {
    out += name + ": " + std::to_string(value) + "\n";
  }
  for (const auto& v : report.violations) {
    out += "violation: " + v.claim + " set=" + format_set(v.framework, v.set);
    if (v.challenger) out += " challenger=" + format_set(v.framework, *v.challenger);
    out += " in [" + v.source + "]\n";
  }
  return out;
}

}  // namespace argcog::harness
