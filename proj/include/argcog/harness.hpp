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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "argcog/framework.hpp"
#include "argcog/io.hpp"

namespace argcog::harness {

inline constexpr std::string_view kInclusionClaim = "cogent-implies-weakly-admissible";
inline constexpr std::string_view kLemmaClaim = "reduct-attacker-strictly-more-cogent";

/// One falsified claim. Carries its framework so it can be re-checked in
/// isolation.
struct Violation {
  std::string claim;
  std::string source;
  Framework framework;
  ArgSet set;
  std::optional<ArgSet> challenger;
};

struct Report {
  std::string source;
  std::optional<Framework> framework;
  std::vector<std::pair<std::string, ExtensionSet>> semantics;
  std::vector<Violation> violations;
  std::vector<std::pair<std::string, std::int64_t>> counters;
  std::vector<std::pair<std::string, bool>> flags;

  bool ok() const noexcept { return violations.empty(); }
  const ExtensionSet* find_semantics(std::string_view name) const;
  std::optional<std::int64_t> counter(std::string_view name) const;
  std::optional<bool> flag(std::string_view name) const;
};

/// Every cogent set must be weakly admissible; each one that is not becomes a
/// violation.
Report check_inclusion_theorem(const Framework& af, const Limits& limits = {},
                               std::string source = {});

/// Weakly admissible sets that are not cogent.
ExtensionSet find_strictness_witnesses(const Framework& af,
                                       const Limits& limits = {});

/// For every conflict-free E and every weakly admissible E' of the E-reduct
/// that attacks E, E' must be strictly more cogent than E.
Report check_defense_lemma(const Framework& af, const Limits& limits = {},
                           std::string source = {});

/// Admissible, cogent and weakly admissible sets, the ⊆-maximal cogent and
/// weakly admissible sets, and the flag "maximal-agreement".
Report compare_semantics(const Framework& af, const Limits& limits = {},
                         std::string source = {});

struct SweepConfig {
  /// Every labeled framework with 0..exhaustive_n arguments, or with exactly
  /// exhaustive_n arguments when exhaustive_only_largest is set.
  std::optional<std::size_t> exhaustive_n;
  bool exhaustive_only_largest = false;
  std::size_t random_count = 0;
  std::size_t min_n = 1;
  std::size_t max_n = 7;
  /// Random framework i uses probabilities[i % size].
  std::vector<double> probabilities{0.2, 0.5};
  std::uint64_t seed = 0;
  bool allow_self_attacks = true;
  bool check_lemma = true;
  /// 0 picks std::thread::hardware_concurrency().
  std::size_t threads = 1;
};

struct SweepItem {
  std::string source;
  Framework framework;
};

/// The frameworks a sweep visits, in report order. Random item i is generated
/// from seed mix_seed(cfg.seed, i), which its source string records.
std::vector<SweepItem> sweep_frameworks(const SweepConfig& cfg);

/// Runs the inclusion check (and the lemma check unless disabled) over
/// every sweep framework. Output does not depend on the thread count.
Report run_sweep(const SweepConfig& cfg, const Limits& limits = {});

/// JSON uses the keys "framework", "semantics", "violations", "summary".
std::string render_report(const Report& report, io::RenderFormat fmt);

}  // namespace argcog::harness
