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

#include "argcog/semantics.hpp"

#include <algorithm>

#include "argcog/error.hpp"

namespace argcog {

namespace {

void collect_conflict_free(const Framework& af, ArgSet candidates,
                           ArgSet chosen, std::vector<ArgSet>& out) {
  if (candidates.empty()) {
    out.push_back(chosen);
    return;
  }
  const auto i = *candidates.begin();
  const auto rest = candidates - ArgSet::singleton(i);
  collect_conflict_free(af, rest, chosen, out);
  collect_conflict_free(af, rest - af.targets_of(i) - af.attackers_of(i),
                        chosen.with(i), out);
}

// A conflict-free set together with what it attacks and what attacks it.
struct Profile {
  ArgSet set;
  ArgSet plus;
  ArgSet attackers;
};

Profile profile(const Framework& af, ArgSet s) {
  return {s, attacked_by(af, s), attackers_of(af, s)};
}

// geq_cog for a conflict-free `e`: every attacker of e inside other must be
// counterattacked (attackers inside e itself cannot exist).
bool geq_cog_cf(const Profile& e, const Profile& other) {
  return ((e.attackers & other.set) - e.plus).empty();
}

}  // namespace

std::vector<ArgSet> conflict_free_subsets(const Framework& af, ArgSet within) {
  ArgSet candidates;
  for (auto x : within) {
    if (!af.attacks(x, x)) candidates = candidates.with(x);
  }
  std::vector<ArgSet> out;
  collect_conflict_free(af, candidates, ArgSet{}, out);
  return out;
}

ExtensionSet enumerate_conflict_free(const Framework& af,
                                     const Limits& limits) {
  require_size(af, limits.max_args, "conflict-free enumeration");
  return ExtensionSet(conflict_free_subsets(af, af.arguments()));
}

ExtensionSet enumerate_admissible(const Framework& af, const Limits& limits) {
  require_size(af, limits.max_args, "admissible enumeration");
  auto sets = conflict_free_subsets(af, af.arguments());
  std::erase_if(sets, [&](ArgSet s) { return !is_admissible(af, s); });
  return ExtensionSet(std::move(sets));
}

bool geq_cog(const Framework& af, ArgSet e, ArgSet other) {
  const auto scope = e | other;
  return is_conflict_free(af, e) &&
         (attackers_of(af, e) & scope).is_subset_of(attacked_by(af, e));
}

bool gt_cog(const Framework& af, ArgSet e, ArgSet other) {
  return geq_cog(af, e, other) && !geq_cog(af, other, e);
}

bool is_cogent(const Framework& af, ArgSet e, ChallengerScope scope,
               const Limits& limits) {
  require_size(af, limits.max_args, "cogency check");
  if (scope == ChallengerScope::AllSubsets) {
    const auto last = af.arguments().bits();
    for (ArgSet::Word w = 0;; ++w) {
      if (gt_cog(af, ArgSet(w), e)) return false;
      if (w == last) break;
    }
    return true;
  }
  // The empty set beats any set with an internal conflict.
  if (!is_conflict_free(af, e)) return false;
  const auto target = profile(af, e);
  for (auto challenger : conflict_free_subsets(af, af.arguments())) {
    const auto p = profile(af, challenger);
    if (geq_cog_cf(p, target) && !geq_cog_cf(target, p)) return false;
  }
  return true;
}

ExtensionSet enumerate_cogent(const Framework& af, const Limits& limits) {
  require_size(af, limits.max_args, "cogent enumeration");
  const auto candidates = conflict_free_subsets(af, af.arguments());
  std::vector<Profile> profiles;
  profiles.reserve(candidates.size());
  for (auto s : candidates) profiles.push_back(profile(af, s));

  std::vector<ArgSet> cogent;
  for (const auto& e : profiles) {
    const bool beaten = std::any_of(
        profiles.begin(), profiles.end(), [&](const Profile& challenger) {
          return geq_cog_cf(challenger, e) && !geq_cog_cf(e, challenger);
        });
    if (!beaten) cogent.push_back(e.set);
  }
  return ExtensionSet(std::move(cogent));
}

MemoTable::MemoTable(Framework root) : root_(std::move(root)) {}

bool MemoTable::is_weakly_admissible_in(ArgSet sub, ArgSet e) {
  if (!is_conflict_free(root_, e)) return false;
  const auto attackers = attackers_of(root_, e) & sub;
  if (attackers.empty()) return true;
  // Nonempty e, so the reduct is strictly smaller than sub.
  const auto reduced = sub - (e | (attacked_by(root_, e) & sub));
  return !attackers.intersects(weakly_admissible_in(reduced).union_all);
}

const MemoTable::Entry& MemoTable::weakly_admissible_in(ArgSet sub) {
  if (auto it = entries_.find(sub.bits()); it != entries_.end()) {
    return it->second;
  }
  std::vector<ArgSet> sets;
  for (auto e : conflict_free_subsets(root_, sub)) {
    if (is_weakly_admissible_in(sub, e)) sets.push_back(e);
  }
  Entry entry{ExtensionSet(std::move(sets)), ArgSet{}};
  entry.union_all = entry.sets.union_all();
  return entries_.emplace(sub.bits(), std::move(entry)).first->second;
}

bool is_weakly_admissible(const Framework& af, ArgSet e, MemoTable& memo) {
  if (!(memo.root() == af)) {
    throw Error(ErrorKind::InvalidConfig,
                "memo table was built for a different framework");
  }
  return memo.is_weakly_admissible_in(af.arguments(), e);
}

bool is_weakly_admissible(const Framework& af, ArgSet e) {
  MemoTable memo(af);
  return memo.is_weakly_admissible_in(af.arguments(), e);
}

ExtensionSet enumerate_weakly_admissible(const Framework& af,
                                         const Limits& limits) {
  require_size(af, limits.max_args, "weakly admissible enumeration");
  MemoTable memo(af);
  return memo.weakly_admissible_in(af.arguments()).sets;
}

ArgSet weak_union(const Framework& af, const Limits& limits) {
  return enumerate_weakly_admissible(af, limits).union_all();
}

ExtensionSet maximal_by_inclusion(const ExtensionSet& sets) {
  std::vector<ArgSet> maximal;
  for (auto s : sets) {
    const bool dominated = std::any_of(sets.begin(), sets.end(), [&](ArgSet t) {
      return t != s && s.is_subset_of(t);
    });
    if (!dominated) maximal.push_back(s);
  }
  return ExtensionSet(std::move(maximal));
}

}  // namespace argcog
