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

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "argcog/framework.hpp"

namespace argcog::testing {

using Pairs = std::vector<std::pair<std::string, std::string>>;

inline Framework make_af(std::vector<std::string> labels, const Pairs& attacks) {
  return Framework::build(std::move(labels), attacks);
}

// ({a,b}, {(a,a),(a,b)}): b is only challenged by a self-attacker.
inline Framework f1() { return make_af({"a", "b"}, {{"a", "a"}, {"a", "b"}}); }

// ({a,b,c}, {(a,b),(b,c)}): a chain.
inline Framework f2() { return make_af({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}); }

// ({a,b,c,d}, {(a,b),(b,c),(c,a),(b,d)}): a 3-cycle with a tail.
inline Framework f3() {
  return make_af({"a", "b", "c", "d"},
                 {{"a", "b"}, {"b", "c"}, {"c", "a"}, {"b", "d"}});
}

/// Extension set from label lists, e.g. sets(f2(), {{}, {"a"}, {"a","c"}}).
inline ExtensionSet sets(const Framework& af,
                         std::vector<std::vector<std::string>> members) {
  std::vector<ArgSet> out;
  for (const auto& m : members) {
    ArgSet s;
    for (const auto& name : m) s = s.with(*af.index_of(name));
    out.push_back(s);
  }
  return ExtensionSet(std::move(out));
}

/// Brute force over all 2^n subsets, independent of the engine's enumerators.
inline ExtensionSet brute_force(const Framework& af,
                                const std::function<bool(ArgSet)>& keep) {
  std::vector<ArgSet> out;
  for (ArgSet::Word w = 0; w < (ArgSet::Word{1} << af.size()); ++w) {
    if (keep(ArgSet(w))) out.push_back(ArgSet(w));
  }
  return ExtensionSet(std::move(out));
}

}  // namespace argcog::testing
