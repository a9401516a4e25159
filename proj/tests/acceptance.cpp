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

// Acceptance suite: one PASS/FAIL line per criterion; exit status 0 iff all
// pass.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "argcog/cli.hpp"
#include "argcog/gen.hpp"
#include "argcog/harness.hpp"
#include "argcog/io.hpp"
#include "argcog/oracle.hpp"
#include "argcog/semantics.hpp"
#include "fixtures.hpp"

namespace {

using namespace argcog;
using argcog::testing::f1;
using argcog::testing::f2;
using argcog::testing::f3;
using argcog::testing::sets;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Exhaustive n <= 3 followed by `count` random frameworks with n in
// [min_n, max_n], self-attacks allowed.
std::vector<harness::SweepItem> corpus(std::size_t count, std::size_t min_n,
                                       std::size_t max_n, std::uint64_t seed) {
  harness::SweepConfig cfg;
  cfg.exhaustive_n = 3;
  cfg.random_count = count;
  cfg.min_n = min_n;
  cfg.max_n = max_n;
  cfg.seed = seed;
  return harness::sweep_frameworks(cfg);
}

Outcome motivating_example() {
  Outcome o;
  const auto start = Clock::now();
  const auto af = f1();
  o.require(enumerate_admissible(af) == ExtensionSet{ArgSet{}}, "admissible != {{}}");
  o.require(enumerate_weakly_admissible(af) == sets(af, {{}, {"b"}}),
            "weakly admissible != {{},{b}}");
  o.require(enumerate_cogent(af) == sets(af, {{}, {"b"}}), "cogent != {{},{b}}");
  const auto t = seconds_since(start);
  o.require(t < 1.0, "took " + std::to_string(t) + " s");
  return o;
}

Outcome strictness() {
  Outcome o;
  const auto start = Clock::now();
  const auto af = f2();
  const auto c = set_of(af, {"c"});
  o.require(enumerate_weakly_admissible(af).contains(c), "{c} not weakly admissible");
  o.require(!enumerate_cogent(af).contains(c), "{c} cogent");
  o.require(harness::find_strictness_witnesses(af) == sets(af, {{"c"}}),
            "witnesses != {{c}}");
  const auto t = seconds_since(start);
  o.require(t < 1.0, "took " + std::to_string(t) + " s");
  return o;
}

Outcome maximal_agreement() {
  Outcome o;
  const auto af = f2();
  const auto expected = sets(af, {{"a", "c"}});
  o.require(maximal_by_inclusion(enumerate_weakly_admissible(af)) == expected,
            "maximal weakly admissible != {{a,c}}");
  o.require(maximal_by_inclusion(enumerate_cogent(af)) == expected,
            "maximal cogent != {{a,c}}");
  return o;
}

Outcome maximal_disagreement() {
  Outcome o;
  const auto af = f3();
  const auto report = harness::compare_semantics(af);
  o.require(*report.find_semantics("maximal-weak-admissible") == sets(af, {{"d"}}),
            "maximal weakly admissible != {{d}}");
  o.require(!report.find_semantics("cogent")->contains(set_of(af, {"d"})), "{d} cogent");
  o.require(report.flag("maximal-agreement") == false, "agreement flag not false");
  return o;
}

Outcome theorem_sweep() {
  Outcome o;
  const auto start = Clock::now();
  harness::SweepConfig cfg;
  cfg.exhaustive_n = 3;
  cfg.random_count = 1000;
  cfg.min_n = 4;
  cfg.max_n = 7;
  cfg.probabilities = {0.2, 0.5};
  cfg.seed = 20240101;
  cfg.check_lemma = false;
  const auto report = harness::run_sweep(cfg);
  const auto t = seconds_since(start);
  o.require(report.counter("exhaustive-frameworks") == 1 + 2 + 16 + 512,
            "wrong exhaustive count");
  o.require(report.counter("random-frameworks") == 1000, "wrong random count");
  o.require(report.counter("inclusion-violations") == 0,
            std::to_string(*report.counter("inclusion-violations")) + " violations");
  o.require(t < 120.0, "took " + std::to_string(t) + " s");
  o.detail += std::string(o.detail.empty() ? "" : "; ") + std::to_string(*report.counter("frameworks")) +
              " frameworks in " + std::to_string(t) + " s";
  return o;
}

Outcome lemma_sweep() {
  Outcome o;
  harness::SweepConfig cfg;
  cfg.exhaustive_n = 3;
  cfg.random_count = 200;
  cfg.min_n = 1;
  cfg.max_n = 6;
  cfg.seed = 77;
  const auto report = harness::run_sweep(cfg);
  o.require(report.counter("frameworks") == 531 + 200, "wrong framework count");
  o.require(report.counter("lemma-violations") == 0,
            std::to_string(*report.counter("lemma-violations")) + " violations");
  o.require(*report.counter("lemma-pairs-checked") > 0, "lemma never exercised");
  o.detail += std::string(o.detail.empty() ? "" : "; ") +
              std::to_string(*report.counter("lemma-pairs-checked")) + " pairs checked";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::size_t subsets = 0;
  std::size_t disagreements = 0;
  for (const auto& item : corpus(200, 1, 6, 31337)) {
    const auto& af = item.framework;
    MemoTable memo(af);
    for (ArgSet::Word w = 0; w < (ArgSet::Word{1} << af.size()); ++w) {
      const ArgSet e(w);
      ++subsets;
      disagreements += is_cogent(af, e) != oracle::is_cogent(af, e);
      disagreements +=
          is_weakly_admissible(af, e, memo) != oracle::is_weakly_admissible(af, e);
    }
  }
  o.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
  o.detail += std::string(o.detail.empty() ? "" : "; ") + std::to_string(subsets) + " subsets compared";
  return o;
}

bool strictly_canonical(const ExtensionSet& s) {
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!(s[i - 1] < s[i])) return false;
  }
  return true;
}

bool is_antichain(const ExtensionSet& s) {
  for (auto a : s) {
    for (auto b : s) {
      if (a != b && a.is_subset_of(b)) return false;
    }
  }
  return true;
}

Outcome structural_properties() {
  Outcome o;
  std::size_t frameworks = 0;
  for (const auto& item : corpus(1000, 4, 7, 20240101)) {
    const auto& af = item.framework;
    const auto adm = enumerate_admissible(af);
    const auto cog = enumerate_cogent(af);
    const auto weak = enumerate_weakly_admissible(af);
    const auto cf = enumerate_conflict_free(af);
    const auto where = " in " + item.source;
    ++frameworks;
    if (!cog.contains(ArgSet{})) o.require(false, "empty set not cogent" + where);
    if (!weak.contains(ArgSet{})) o.require(false, "empty set not weakly admissible" + where);
    for (auto e : cog) {
      if (!is_conflict_free(af, e)) o.require(false, "cogent set with conflict" + where);
    }
    if (!adm.is_subset_of(cog)) o.require(false, "admissible not within cogent" + where);
    if (!cog.is_subset_of(weak)) o.require(false, "cogent not within weakly admissible" + where);
    for (const auto* s : {&cf, &adm, &cog, &weak}) {
      if (!strictly_canonical(*s)) o.require(false, "non-canonical output" + where);
    }
    for (const auto* s : {&cog, &weak}) {
      if (!is_antichain(maximal_by_inclusion(*s))) o.require(false, "maximal not antichain" + where);
    }
    if (!o.pass) break;
  }
  o.detail += std::string(o.detail.empty() ? "" : "; ") + std::to_string(frameworks) + " frameworks";
  return o;
}

Outcome io_round_trip() {
  Outcome o;
  for (std::uint64_t i = 0; i < 500; ++i) {
    gen::GenConfig cfg{i % 21, 0.05 + 0.9 * static_cast<double>(i % 10) / 9.0,
                       gen::mix_seed(555, i), i % 3 == 0};
    const auto af = gen::random_af(cfg);
    const auto apx = io::render_af(af, io::RenderFormat::Text);
    if (!(io::parse_apx(apx) == af)) o.require(false, "apx round trip " + gen::describe(cfg));
    if (!(io::parse_tgf(io::render_tgf(af)) == af)) {
      o.require(false, "tgf round trip " + gen::describe(cfg));
    }
    if (io::render_af(gen::random_af(cfg), io::RenderFormat::Text) != apx) {
      o.require(false, "nondeterministic render " + gen::describe(cfg));
    }
  }
  auto invoke = [](const std::vector<std::string>& args, const std::string& input) {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run_cli(args, in, out, err);
    return std::to_string(code) + "\n" + out.str();
  };
  const auto af_text = invoke({"gen", "--n", "9", "--p", "0.3", "--seed", "4", "--self-attacks"}, "");
  o.require(af_text == invoke({"gen", "--n", "9", "--p", "0.3", "--seed", "4", "--self-attacks"}, ""),
            "gen output differs between runs");
  const auto apx = af_text.substr(af_text.find('\n') + 1);
  for (const auto& cmd : std::vector<std::vector<std::string>>{
           {"solve", "--semantics", "cogent", "--format", "json", "-"},
           {"compare", "--format", "json", "-"}}) {
    o.require(invoke(cmd, apx) == invoke(cmd, apx), "output differs between runs: " + cmd[0]);
  }
  const std::vector<std::string> check{"check", "--random", "50", "--max-n", "6", "--seed", "8"};
  o.require(invoke(check, "") == invoke(check, ""), "check output differs between runs");
  return o;
}

Outcome performance() {
  Outcome o;
  const auto cog_af = gen::random_af({12, 0.1, 12, false});
  auto start = Clock::now();
  const auto cog = enumerate_cogent(cog_af);
  const auto t_cog = seconds_since(start);
  const auto weak_af = gen::random_af({10, 0.1, 10, false});
  start = Clock::now();
  const auto weak = enumerate_weakly_admissible(weak_af);
  const auto t_weak = seconds_since(start);
  o.require(t_cog < 120.0, "cogent n=12 took " + std::to_string(t_cog) + " s");
  o.require(t_weak < 60.0, "weakly admissible n=10 took " + std::to_string(t_weak) + " s");
  o.detail += std::string(o.detail.empty() ? "" : "; ") + "cogent n=12: " + std::to_string(cog.size()) +
              " sets in " + std::to_string(t_cog) + " s, weakly admissible n=10: " +
              std::to_string(weak.size()) + " sets in " + std::to_string(t_weak) + " s";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 motivating example (self-attacker)", motivating_example},
      {"2 strictness witness {c}", strictness},
      {"3 maximal agreement on {a,c}", maximal_agreement},
      {"4 maximal disagreement on {d}", maximal_disagreement},
      {"5 inclusion theorem sweep", theorem_sweep},
      {"6 defense lemma sweep", lemma_sweep},
      {"7 oracle equivalence", oracle_equivalence},
      {"8 structural properties", structural_properties},
      {"9 io round trip and determinism", io_round_trip},
      {"10 performance envelope", performance},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome outcome;
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    failures += outcome.pass ? 0 : 1;
    std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << name;
    if (!outcome.detail.empty()) std::cout << " (" << outcome.detail << ")";
    std::cout << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
