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

#include "argcog/framework.hpp"

/// Reference implementations written straight from the definitions, sharing
/// nothing with the engine beyond the Framework type and its definitional
/// primitives (restrict, reduct, is_admissible). Exponentially slow on
/// purpose; used only as ground truth in tests.
namespace argcog::oracle {

inline constexpr std::size_t kDefaultOracleMaxArgs = 8;

/// Quantifies the challenger over every subset and rebuilds the restricted
/// framework for every comparison.
bool is_cogent(const Framework& af, ArgSet e,
               std::size_t max_args = kDefaultOracleMaxArgs);

/// Plain recursion over materialized reducts, no caching. Attackers are
/// matched against the reduct's weakly admissible sets by label.
bool is_weakly_admissible(const Framework& af, ArgSet e,
                          std::size_t max_args = kDefaultOracleMaxArgs);

}  // namespace argcog::oracle
