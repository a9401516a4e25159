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

#include "argcog/oracle.hpp"

#include <set>
#include <string>

namespace argcog::oracle {

namespace {

bool at_least_as_cogent(const Framework& af, ArgSet e, ArgSet other) {
  return is_admissible(restrict(af, e | other), e);
}

bool weakly_admissible(const Framework& af, ArgSet e);

std::set<std::string> union_of_weakly_admissible(const Framework& af) {
  std::set<std::string> labels;
  const auto count = ArgSet::Word{1} << af.size();
  for (ArgSet::Word w = 0; w < count; ++w) {
    const ArgSet s(w);
    if (!weakly_admissible(af, s)) continue;
    for (auto x : s) labels.insert(af.label(x));
  }
  return labels;
}

bool weakly_admissible(const Framework& af, ArgSet e) {
  if (!is_conflict_free(af, e)) return false;
  const auto attackers = attackers_of(af, e);
  if (attackers.empty()) return true;
  const auto accepted = union_of_weakly_admissible(reduct(af, e));
  for (auto y : attackers) {
    if (accepted.contains(af.label(y))) return false;
  }
  return true;
}

}  // namespace

bool is_cogent(const Framework& af, ArgSet e, std::size_t max_args) {
  require_size(af, max_args, "oracle cogency check");
  const auto count = ArgSet::Word{1} << af.size();
  for (ArgSet::Word w = 0; w < count; ++w) {
    const ArgSet challenger(w);
    if (at_least_as_cogent(af, challenger, e) &&
        !at_least_as_cogent(af, e, challenger)) {
      return false;
    }
  }
  return true;
}

bool is_weakly_admissible(const Framework& af, ArgSet e, std::size_t max_args) {
  require_size(af, max_args, "oracle weak admissibility check");
  return weakly_admissible(af, e);
}

}  // namespace argcog::oracle
