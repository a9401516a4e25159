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

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace argcog {

/// Default refusal threshold for the exponential enumerators.
inline constexpr std::size_t kDefaultMaxArgs = 20;

struct Limits {
  std::size_t max_args = kDefaultMaxArgs;
};

/// A subset of a framework's arguments, stored as a single machine word.
/// Bit i is set iff argument i is a member. Equality is extensional.
class ArgSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kMaxWidth = 64;

  constexpr ArgSet() noexcept = default;
  constexpr explicit ArgSet(Word bits) noexcept : bits_(bits) {}
  ArgSet(std::initializer_list<std::size_t> members);

  /// {0, ..., n-1}.
  static constexpr ArgSet full(std::size_t n) noexcept {
    return ArgSet(n >= kMaxWidth ? ~Word{0} : (Word{1} << n) - 1);
  }
  static constexpr ArgSet singleton(std::size_t i) noexcept {
    return ArgSet(Word{1} << i);
  }

  constexpr Word bits() const noexcept { return bits_; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr std::size_t size() const noexcept {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool contains(std::size_t i) const noexcept {
    return i < kMaxWidth && ((bits_ >> i) & 1U) != 0;
  }
  constexpr ArgSet with(std::size_t i) const noexcept {
    return ArgSet(bits_ | (Word{1} << i));
  }
  constexpr bool is_subset_of(ArgSet other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(ArgSet other) const noexcept {
    return (bits_ & other.bits_) != 0;
  }

  friend constexpr ArgSet operator|(ArgSet a, ArgSet b) noexcept {
    return ArgSet(a.bits_ | b.bits_);
  }
  friend constexpr ArgSet operator&(ArgSet a, ArgSet b) noexcept {
    return ArgSet(a.bits_ & b.bits_);
  }
  /// Set difference.
  friend constexpr ArgSet operator-(ArgSet a, ArgSet b) noexcept {
    return ArgSet(a.bits_ & ~b.bits_);
  }
  constexpr ArgSet& operator|=(ArgSet other) noexcept {
    bits_ |= other.bits_;
    return *this;
  }
  constexpr ArgSet& operator&=(ArgSet other) noexcept {
    bits_ &= other.bits_;
    return *this;
  }

  friend constexpr bool operator==(ArgSet, ArgSet) noexcept = default;

  /// Canonical order: ascending cardinality, then ascending numeric value.
  friend constexpr std::strong_ordering operator<=>(ArgSet a,
                                                    ArgSet b) noexcept {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

  /// Iterates member indices in ascending order.
  class iterator {
   public:
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;

    constexpr iterator() noexcept = default;
    constexpr explicit iterator(Word rest) noexcept : rest_(rest) {}
    constexpr std::size_t operator*() const noexcept {
      return static_cast<std::size_t>(std::countr_zero(rest_));
    }
    constexpr iterator& operator++() noexcept {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) noexcept {
      auto copy = *this;
      ++*this;
      return copy;
    }
    friend constexpr bool operator==(iterator, iterator) noexcept = default;

   private:
    Word rest_ = 0;
  };

  constexpr iterator begin() const noexcept { return iterator(bits_); }
  constexpr iterator end() const noexcept { return iterator(0); }

 private:
  Word bits_ = 0;
};

struct Attack {
  std::uint32_t source = 0;
  std::uint32_t target = 0;

  friend constexpr auto operator<=>(const Attack&, const Attack&) = default;
};

/// A finite argumentation framework (A, R). Arguments are the dense indices
/// 0..n-1 in declaration order; each carries a distinct label. Immutable.
class Framework {
 public:
  /// The empty framework.
  Framework();

  /// Builds from names. Attack pairs may repeat; self-attacks are kept.
  /// Throws Error{DuplicateLabel} or Error{UnknownLabel}.
  static Framework build(
      std::vector<std::string> labels,
      std::span<const std::pair<std::string, std::string>> attacks);

  /// Builds from dense indices; every index must be < labels.size().
  static Framework from_indices(std::vector<std::string> labels,
                                std::span<const Attack> attacks);

  std::size_t size() const noexcept { return labels_->size(); }
  ArgSet arguments() const noexcept { return ArgSet::full(size()); }

  const std::vector<std::string>& labels() const noexcept { return *labels_; }
  const std::string& label(std::size_t i) const { return labels_->at(i); }
  std::optional<std::size_t> index_of(std::string_view label) const;

  /// Sorted by (source, target), without duplicates.
  const std::vector<Attack>& attacks() const noexcept { return attacks_; }

  bool attacks(std::size_t source, std::size_t target) const noexcept {
    return targets_[source].contains(target);
  }
  /// Who i attacks.
  ArgSet targets_of(std::size_t i) const { return targets_.at(i); }
  /// Who attacks i.
  ArgSet attackers_of(std::size_t i) const { return attackers_.at(i); }

  friend bool operator==(const Framework& a, const Framework& b);

 private:
  Framework(std::shared_ptr<const std::vector<std::string>> labels,
            std::vector<Attack> attacks);

  std::shared_ptr<const std::vector<std::string>> labels_;
  std::vector<Attack> attacks_;
  std::vector<ArgSet> targets_;
  std::vector<ArgSet> attackers_;

  friend Framework restrict(const Framework& af, ArgSet keep);
};

/// Throws Error{SizeLimitExceeded} when the framework is larger than `max`.
void require_size(const Framework& af, std::size_t max, std::string_view what);

/// {y : y attacks some x in s}.
ArgSet attackers_of(const Framework& af, ArgSet s);

/// {y : some x in s attacks y}, i.e. s⁺.
ArgSet attacked_by(const Framework& af, ArgSet s);

struct RangeClosure {
  ArgSet plus;   // arguments attacked by the set
  ArgSet oplus;  // the set together with plus

  friend bool operator==(const RangeClosure&, const RangeClosure&) = default;
};

RangeClosure range_closure(const Framework& af, ArgSet s);

bool is_conflict_free(const Framework& af, ArgSet s);

/// Conflict-free and counterattacks every attacker.
bool is_admissible(const Framework& af, ArgSet s);

/// Same arguments, attacks cut down to pairs with both ends in `keep`.
Framework restrict(const Framework& af, ArgSet keep);

/// Induced subframework on the arguments outside s ∪ s⁺, labels carried over
/// and indices renumbered in declaration order.
Framework reduct(const Framework& af, ArgSet s);

/// Members rendered by label, e.g. "{a,c}".
std::string format_set(const Framework& af, ArgSet s);

/// Maps a set of labels to indices; throws Error{UnknownLabel}.
ArgSet set_of(const Framework& af, std::initializer_list<std::string_view> labels);

/// A duplicate-free collection of sets kept in canonical order.
class ExtensionSet {
 public:
  using const_iterator = std::vector<ArgSet>::const_iterator;

  ExtensionSet() = default;
  /// Sorts canonically and drops duplicates.
  explicit ExtensionSet(std::vector<ArgSet> sets);
  ExtensionSet(std::initializer_list<ArgSet> sets);

  std::size_t size() const noexcept { return sets_.size(); }
  bool empty() const noexcept { return sets_.empty(); }
  const_iterator begin() const noexcept { return sets_.begin(); }
  const_iterator end() const noexcept { return sets_.end(); }
  const ArgSet& operator[](std::size_t i) const { return sets_[i]; }
  const std::vector<ArgSet>& sets() const noexcept { return sets_; }

  bool contains(ArgSet s) const;
  /// Union of all members.
  ArgSet union_all() const;
  bool is_subset_of(const ExtensionSet& other) const;

  friend bool operator==(const ExtensionSet&, const ExtensionSet&) = default;

 private:
  std::vector<ArgSet> sets_;
};

/// Members of `a` not in `b`, canonically ordered.
ExtensionSet difference(const ExtensionSet& a, const ExtensionSet& b);

}  // namespace argcog
