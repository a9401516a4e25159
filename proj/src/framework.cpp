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

#include "argcog/framework.hpp"

#include <algorithm>
#include <unordered_map>

#include "argcog/error.hpp"

namespace argcog {

namespace {

void check_width(std::size_t n) {
  if (n > ArgSet::kMaxWidth) {
    throw Error(ErrorKind::SizeLimitExceeded,
                "frameworks are limited to " +
                    std::to_string(ArgSet::kMaxWidth) + " arguments, got " +
                    std::to_string(n));
  }
}

void check_distinct(const std::vector<std::string>& labels) {
  std::unordered_map<std::string_view, std::size_t> seen;
  seen.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!seen.emplace(labels[i], i).second) {
      throw Error(ErrorKind::DuplicateLabel,
                  "duplicate argument '" + labels[i] + "'");
    }
  }
}

}  // namespace

ArgSet::ArgSet(std::initializer_list<std::size_t> members) {
  for (auto i : members) bits_ |= Word{1} << i;
}

Framework::Framework()
    : Framework(std::make_shared<const std::vector<std::string>>(), {}) {}

Framework::Framework(std::shared_ptr<const std::vector<std::string>> labels,
                     std::vector<Attack> attacks)
    : labels_(std::move(labels)), attacks_(std::move(attacks)) {
  std::sort(attacks_.begin(), attacks_.end());
  attacks_.erase(std::unique(attacks_.begin(), attacks_.end()), attacks_.end());
  targets_.assign(labels_->size(), ArgSet{});
  attackers_.assign(labels_->size(), ArgSet{});
  for (const auto& [source, target] : attacks_) {
    targets_[source] = targets_[source].with(target);
    attackers_[target] = attackers_[target].with(source);
  }
}

Framework Framework::build(
    std::vector<std::string> labels,
    std::span<const std::pair<std::string, std::string>> attacks) {
  check_width(labels.size());
  check_distinct(labels);
  std::unordered_map<std::string_view, std::uint32_t> index;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    index.emplace(labels[i], static_cast<std::uint32_t>(i));
  }
  auto lookup = [&](const std::string& name) {
    auto it = index.find(name);
    if (it == index.end()) {
      throw Error(ErrorKind::UnknownLabel,
                  "attack refers to undeclared argument '" + name + "'");
    }
    return it->second;
  };
  std::vector<Attack> resolved;
  resolved.reserve(attacks.size());
  for (const auto& [source, target] : attacks) {
    resolved.push_back({lookup(source), lookup(target)});
  }
  return Framework(
      std::make_shared<const std::vector<std::string>>(std::move(labels)),
      std::move(resolved));
}

Framework Framework::from_indices(std::vector<std::string> labels,
                                  std::span<const Attack> attacks) {
  check_width(labels.size());
  check_distinct(labels);
  for (const auto& a : attacks) {
    if (a.source >= labels.size() || a.target >= labels.size()) {
      throw Error(ErrorKind::UnknownLabel,
                  "attack index out of range (" + std::to_string(a.source) +
                      ", " + std::to_string(a.target) + ")");
    }
  }
  return Framework(
      std::make_shared<const std::vector<std::string>>(std::move(labels)),
      std::vector<Attack>(attacks.begin(), attacks.end()));
}

std::optional<std::size_t> Framework::index_of(std::string_view label) const {
  const auto& names = *labels_;
  auto it = std::find(names.begin(), names.end(), label);
  if (it == names.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names.begin());
}

bool operator==(const Framework& a, const Framework& b) {
  return a.labels() == b.labels() && a.attacks_ == b.attacks_;
}

void require_size(const Framework& af, std::size_t max, std::string_view what) {
  if (af.size() > max) {
    throw Error(ErrorKind::SizeLimitExceeded,
                std::string(what) + ": framework has " +
                    std::to_string(af.size()) +
                    " arguments, the configured limit is " +
                    std::to_string(max));
  }
}

ArgSet attackers_of(const Framework& af, ArgSet s) {
  ArgSet out;
  for (auto x : s) out |= af.attackers_of(x);
  return out;
}

ArgSet attacked_by(const Framework& af, ArgSet s) {
  ArgSet out;
  for (auto x : s) out |= af.targets_of(x);
  return out;
}

RangeClosure range_closure(const Framework& af, ArgSet s) {
  auto plus = attacked_by(af, s);
  return {plus, s | plus};
}

bool is_conflict_free(const Framework& af, ArgSet s) {
  return !attacked_by(af, s).intersects(s);
}

bool is_admissible(const Framework& af, ArgSet s) {
  return is_conflict_free(af, s) &&
         attackers_of(af, s).is_subset_of(attacked_by(af, s));
}

Framework restrict(const Framework& af, ArgSet keep) {
  std::vector<Attack> kept;
  for (const auto& a : af.attacks()) {
    if (keep.contains(a.source) && keep.contains(a.target)) kept.push_back(a);
  }
  return Framework(af.labels_, std::move(kept));
}

Framework reduct(const Framework& af, ArgSet s) {
  const auto remaining = af.arguments() - range_closure(af, s).oplus;
  std::vector<std::uint32_t> renumber(af.size(), 0);
  std::vector<std::string> labels;
  labels.reserve(remaining.size());
  for (auto x : remaining) {
    renumber[x] = static_cast<std::uint32_t>(labels.size());
    labels.push_back(af.label(x));
  }
  std::vector<Attack> kept;
  for (const auto& a : af.attacks()) {
    if (remaining.contains(a.source) && remaining.contains(a.target)) {
      kept.push_back({renumber[a.source], renumber[a.target]});
    }
  }
  return Framework::from_indices(std::move(labels), kept);
}

std::string format_set(const Framework& af, ArgSet s) {
  std::string out = "{";
  bool first = true;
  for (auto x : s) {
    if (!first) out += ',';
    out += af.label(x);
    first = false;
  }
  out += '}';
  return out;
}

ArgSet set_of(const Framework& af,
              std::initializer_list<std::string_view> labels) {
  ArgSet out;
  for (auto name : labels) {
    auto i = af.index_of(name);
    if (!i) {
      throw Error(ErrorKind::UnknownLabel,
                  "unknown argument '" + std::string(name) + "'");
    }
    out = out.with(*i);
  }
  return out;
}

ExtensionSet::ExtensionSet(std::vector<ArgSet> sets) : sets_(std::move(sets)) {
  std::sort(sets_.begin(), sets_.end());
  sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

ExtensionSet::ExtensionSet(std::initializer_list<ArgSet> sets)
    : ExtensionSet(std::vector<ArgSet>(sets)) {}

bool ExtensionSet::contains(ArgSet s) const {
  return std::binary_search(sets_.begin(), sets_.end(), s);
}

ArgSet ExtensionSet::union_all() const {
  ArgSet out;
  for (auto s : sets_) out |= s;
  return out;
}

bool ExtensionSet::is_subset_of(const ExtensionSet& other) const {
  return std::includes(other.sets_.begin(), other.sets_.end(), sets_.begin(),
                       sets_.end());
}

ExtensionSet difference(const ExtensionSet& a, const ExtensionSet& b) {
  std::vector<ArgSet> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return ExtensionSet(std::move(out));
}

}  // namespace argcog
