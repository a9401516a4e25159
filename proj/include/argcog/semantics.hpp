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
#include <unordered_map>

#include "argcog/framework.hpp"

namespace argcog {

ExtensionSet enumerate_conflict_free(const Framework& af, const Limits& limits = {});
ExtensionSet enumerate_admissible(const Framework& af, const Limits& limits = {});

/// e is at least as cogent as other: e is admissible in the framework
/// restricted to e ∪ other.
bool geq_cog(const Framework& af, ArgSet e, ArgSet other);

/// geq_cog(e, other) and not geq_cog(other, e).
bool gt_cog(const Framework& af, ArgSet e, ArgSet other);

/// Which challengers is_cogent ranges over. A set with an internal conflict
/// is never admissible in any restriction that contains it, so it can never
/// be strictly more cogent than anything; ConflictFreeOnly skips those.
/// AllSubsets walks every subset of the argument set.
enum class ChallengerScope { AllSubsets, ConflictFreeOnly };

/// True iff no subset of the arguments is strictly more cogent than e.
bool is_cogent(const Framework& af, ArgSet e,
               ChallengerScope scope = ChallengerScope::ConflictFreeOnly,
               const Limits& limits = {});

ExtensionSet enumerate_cogent(const Framework& af, const Limits& limits = {});

/// Cache of weakly admissible sets keyed by induced subframework.
///
/// Every reduct of the root framework, and every reduct of such a reduct, is
/// the subframework induced by some subset of the root's arguments, so the
/// whole recursion can be described by root-level masks. An entry for mask M
/// holds ad^w of the subframework induced by M, expressed in root indices.
/// Confined to one call tree; not thread-safe.
class MemoTable {
 public:
  struct Entry {
    ExtensionSet sets;
    ArgSet union_all;
  };

  explicit MemoTable(Framework root);

  const Framework& root() const noexcept { return root_; }

  /// ad^w of the subframework induced by `sub`, computing and caching it
  /// (and everything it depends on) on first use.
  const Entry& weakly_admissible_in(ArgSet sub);

  /// Whether `e` is weakly admissible in the subframework induced by `sub`.
  /// Requires e ⊆ sub.
  bool is_weakly_admissible_in(ArgSet sub, ArgSet e);

  std::size_t size() const noexcept { return entries_.size(); }

 private:
  Framework root_;
  std::unordered_map<ArgSet::Word, Entry> entries_;
};

/// E is conflict-free and none of its attackers belongs to a weakly
/// admissible set of the E-reduct. `memo` must be built on `af`.
bool is_weakly_admissible(const Framework& af, ArgSet e, MemoTable& memo);
bool is_weakly_admissible(const Framework& af, ArgSet e);

ExtensionSet enumerate_weakly_admissible(const Framework& af,
                                         const Limits& limits = {});

/// Union of all weakly admissible sets.
ArgSet weak_union(const Framework& af, const Limits& limits = {});

/// The ⊆-maximal members; always an antichain.
ExtensionSet maximal_by_inclusion(const ExtensionSet& sets);

/// All conflict-free subsets of `within` (in the subframework it induces),
/// in no particular order.
std::vector<ArgSet> conflict_free_subsets(const Framework& af, ArgSet within);

}  // namespace argcog
