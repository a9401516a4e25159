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
#include <iterator>
#include <string>

#include "argcog/framework.hpp"

namespace argcog::gen {

struct GenConfig {
  std::size_t n = 0;
  double p = 0.5;
  std::uint64_t seed = 0;
  bool allow_self_attacks = false;
};

/// Human-readable replay key, e.g. "random n=5 p=0.2 seed=17 self=0".
std::string describe(const GenConfig& cfg);

/// Arguments a0..a(n-1). The ordered pairs (i, j) are visited row-major and
/// each is kept iff the next std::mt19937_64 output, seeded with cfg.seed,
/// shifted right by 11 and scaled by 2^-53, is below p. Both the engine and
/// the scaling are fully specified, so results match on every platform.
/// Throws Error{InvalidConfig} for p outside [0, 1] or n above the limit.
Framework random_af(const GenConfig& cfg, const Limits& limits = {});

/// Labeled framework on a0..a(n-1) whose attack (i, j) is present iff bit
/// i*n + j of `relation` is set.
Framework framework_from_relation(std::size_t n, std::uint64_t relation);

/// Every labeled framework on n arguments, relation masks 0..2^(n*n)-1 in
/// ascending order.
class AllFrameworks {
 public:
  static constexpr std::size_t kMaxN = 4;

  /// Throws Error{SizeLimitExceeded} for n > kMaxN.
  explicit AllFrameworks(std::size_t n);

  class iterator {
   public:
    using value_type = Framework;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(std::size_t n, std::uint64_t relation) : n_(n), relation_(relation) {}

    Framework operator*() const { return framework_from_relation(n_, relation_); }
    iterator& operator++() {
      ++relation_;
      return *this;
    }
    iterator operator++(int) {
      auto copy = *this;
      ++relation_;
      return copy;
    }
    friend bool operator==(const iterator&, const iterator&) = default;

   private:
    std::size_t n_ = 0;
    std::uint64_t relation_ = 0;
  };

  iterator begin() const { return {n_, 0}; }
  iterator end() const { return {n_, count()}; }
  std::uint64_t count() const { return std::uint64_t{1} << (n_ * n_); }

 private:
  std::size_t n_;
};

inline AllFrameworks enumerate_all_afs(std::size_t n) { return AllFrameworks(n); }

/// SplitMix64 finalizer; used to derive per-item seeds from a sweep seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace argcog::gen
