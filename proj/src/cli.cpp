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

#include "argcog/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "argcog/error.hpp"
#include "argcog/gen.hpp"
#include "argcog/harness.hpp"
#include "argcog/io.hpp"
#include "argcog/semantics.hpp"

namespace argcog::cli {

namespace {

constexpr std::size_t kCogentDefaultLimit = 14;
constexpr std::size_t kWeakDefaultLimit = 12;

struct InputOptions {
  std::string path;
  std::string input_format;  // empty = by extension
};

Framework read_framework(const InputOptions& opts, std::istream& in) {
  std::string text;
  if (opts.path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else {
    std::ifstream file(opts.path, std::ios::binary);
    if (!file) {
      throw Error(ErrorKind::InvalidConfig, "cannot open '" + opts.path + "'");
    }
    std::ostringstream buf;
    buf << file.rdbuf();
    text = buf.str();
  }
  auto format = opts.input_format;
  if (format.empty()) {
    format = opts.path.ends_with(".tgf") ? "tgf" : "apx";
  }
  return format == "tgf" ? io::parse_tgf(text) : io::parse_apx(text);
}

io::RenderFormat render_format(const std::string& name) {
  return name == "json" ? io::RenderFormat::Json : io::RenderFormat::Text;
}

// Ends JSON documents with a newline; text renderings already end in one.
void emit(std::ostream& out, const std::string& body, io::RenderFormat fmt) {
  out << body;
  if (fmt == io::RenderFormat::Json) out << '\n';
}

std::string limit_rationale(const std::string& semantics, std::size_t n,
                            std::size_t limit) {
  std::string why;
  if (semantics == "cogent") {
    why = "cogent enumeration compares every conflict-free set against every "
          "conflict-free challenger, up to 4^n comparisons";
  } else if (semantics == "weak-admissible" || semantics == "compare") {
    why = "weak admissibility recurses through the reducts of every "
          "conflict-free set, touching up to 3^n (subframework, set) pairs";
  } else {
    why = "enumeration visits up to 2^n subsets";
  }
  return "framework has " + std::to_string(n) + " arguments but the limit for " +
         semantics + " is " + std::to_string(limit) + "; " + why +
         ". Raise the limit with --max-args.";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumerate and compare cogent and weakly admissible extensions "
               "of abstract argumentation frameworks",
               "argcog"};
  app.require_subcommand(1);

  InputOptions input;
  std::string format = "text";
  std::optional<std::size_t> max_args;

  auto* solve = app.add_subcommand("solve", "Enumerate extensions");
  std::string semantics;
  bool maximal = false;
  solve->add_option("--semantics", semantics, "Semantics")
      ->required()
      ->check(CLI::IsMember(
          {"conflict-free", "admissible", "cogent", "weak-admissible"}));
  solve->add_flag("--maximal", maximal, "Only the subset-maximal extensions");

  auto* compare = app.add_subcommand("compare", "Compare all semantics on one framework");

  for (auto* sub : {solve, compare}) {
    sub->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--input-format", input.input_format)
        ->check(CLI::IsMember({"apx", "tgf"}));
    sub->add_option("--max-args", max_args, "Override the size limit");
    sub->add_option("input", input.path, "Input file, or - for stdin")->required();
  }

  auto* generate = app.add_subcommand("gen", "Generate a random framework");
  gen::GenConfig gen_cfg;
  std::string gen_format = "apx";
  generate->add_option("--n", gen_cfg.n)->required();
  generate->add_option("--p", gen_cfg.p)->required();
  generate->add_option("--seed", gen_cfg.seed)->required();
  generate->add_flag("--self-attacks", gen_cfg.allow_self_attacks);
  generate->add_option("--format", gen_format)->check(CLI::IsMember({"apx", "tgf"}));
  generate->add_option("--max-args", max_args, "Override the size limit");

  auto* check = app.add_subcommand("check", "Sweep the inclusion theorem and defense lemma");
  std::optional<std::size_t> exhaustive_n;
  harness::SweepConfig sweep;
  check->add_option("--exhaustive-n", exhaustive_n,
                    "Check every labeled framework with exactly K arguments")
      ->check(CLI::Range(std::size_t{0}, gen::AllFrameworks::kMaxN));
  auto* random = check->add_option("--random", sweep.random_count,
                                   "Number of random frameworks");
  check->add_option("--min-n", sweep.min_n, "Smallest random framework")
      ->needs(random);
  check->add_option("--max-n", sweep.max_n, "Largest random framework")
      ->needs(random);
  check->add_option("--seed", sweep.seed, "Sweep seed")->needs(random);
  check->add_option("--p", sweep.probabilities,
                    "Attack probabilities, cycled over the random frameworks")
      ->needs(random)
      ->check(CLI::Range(0.0, 1.0));
  check->add_option("--threads", sweep.threads, "Worker threads (0 = all cores)");
  check->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve->parsed()) {
      const auto fmt = render_format(format);
      const auto af = read_framework(input, in);
      std::size_t limit = kDefaultMaxArgs;
      if (semantics == "cogent") limit = kCogentDefaultLimit;
      if (semantics == "weak-admissible") limit = kWeakDefaultLimit;
      limit = max_args.value_or(limit);
      if (af.size() > limit) {
        err << "error: " << limit_rationale(semantics, af.size(), limit) << '\n';
        return kExitUsage;
      }
      const Limits limits{limit};
      ExtensionSet sets;
      if (semantics == "conflict-free") sets = enumerate_conflict_free(af, limits);
      if (semantics == "admissible") sets = enumerate_admissible(af, limits);
      if (semantics == "cogent") sets = enumerate_cogent(af, limits);
      if (semantics == "weak-admissible") sets = enumerate_weakly_admissible(af, limits);
      if (maximal) sets = maximal_by_inclusion(sets);
      emit(out, io::render_extensions(af, sets, fmt), fmt);
      return kExitOk;
    }

    if (compare->parsed()) {
      const auto fmt = render_format(format);
      const auto af = read_framework(input, in);
      const auto limit = max_args.value_or(std::min(kCogentDefaultLimit, kWeakDefaultLimit));
      if (af.size() > limit) {
        err << "error: " << limit_rationale("compare", af.size(), limit) << '\n';
        return kExitUsage;
      }
      const auto report = harness::compare_semantics(af, {limit}, input.path);
      emit(out, harness::render_report(report, fmt), fmt);
      return kExitOk;
    }

    if (generate->parsed()) {
      const auto af = gen::random_af(gen_cfg, {max_args.value_or(kDefaultMaxArgs)});
      out << (gen_format == "tgf" ? io::render_tgf(af)
                                  : io::render_af(af, io::RenderFormat::Text));
      return kExitOk;
    }

    if (check->parsed()) {
      if (!exhaustive_n && sweep.random_count == 0) {
        err << "error: check needs --exhaustive-n and/or --random\n";
        return kExitUsage;
      }
      sweep.exhaustive_n = exhaustive_n;
      sweep.exhaustive_only_largest = true;
      const auto fmt = render_format(format);
      const auto report = harness::run_sweep(sweep, {std::max(sweep.max_n, kDefaultMaxArgs)});
      emit(out, harness::render_report(report, fmt), fmt);
      return report.ok() ? kExitOk : kExitViolation;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace argcog::cli
