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

#include "argcog/gen.hpp"

#include <charconv>
#include <cmath>
#include <random>

#include "argcog/error.hpp"

namespace argcog::gen {

namespace {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i));
  return labels;
}

}  // namespace

std::string describe(const GenConfig& cfg) {
  char p[32];
  const auto end = std::to_chars(p, p + sizeof p, cfg.p).ptr;
  return "random n=" + std::to_string(cfg.n) + " p=" + std::string(p, end) +
         " seed=" + std::to_string(cfg.seed) +
         " self=" + (cfg.allow_self_attacks ? "1" : "0");
}

Framework random_af(const GenConfig& cfg, const Limits& limits) {
  if (!(cfg.p >= 0.0 && cfg.p <= 1.0)) {
    throw Error(ErrorKind::InvalidConfig,
                "attack probability must lie in [0, 1]");
  }
  if (cfg.n > limits.max_args || cfg.n > ArgSet::kMaxWidth) {
    throw Error(ErrorKind::InvalidConfig,
                "n=" + std::to_string(cfg.n) + " exceeds the limit of " +
                    std::to_string(limits.max_args) + " arguments");
  }
  std::mt19937_64 engine(cfg.seed);
  std::vector<Attack> attacks;
  for (std::size_t i = 0; i < cfg.n; ++i) {
    for (std::size_t j = 0; j < cfg.n; ++j) {
      if (i == j && !cfg.allow_self_attacks) continue;
      const double u = std::ldexp(static_cast<double>(engine() >> 11), -53);
      if (u < cfg.p) {
        attacks.push_back(
            {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
      }
    }
  }
  return Framework::from_indices(default_labels(cfg.n), attacks);
}

Framework framework_from_relation(std::size_t n, std::uint64_t relation) {
  std::vector<Attack> attacks;
  for (std::size_t bit = 0; bit < n * n; ++bit) {
    if ((relation >> bit) & 1U) {
      attacks.push_back({static_cast<std::uint32_t>(bit / n),
                         static_cast<std::uint32_t>(bit % n)});
    }
  }
  return Framework::from_indices(default_labels(n), attacks);
}

AllFrameworks::AllFrameworks(std::size_t n) : n_(n) {
  if (n > kMaxN) {
    throw Error(ErrorKind::SizeLimitExceeded,
                "exhaustive enumeration covers 2^(n*n) frameworks and is "
                "limited to n <= " +
                    std::to_string(kMaxN) + ", got n=" + std::to_string(n));
  }
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace argcog::gen
