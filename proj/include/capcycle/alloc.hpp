// Copyright 2026 The capcycle Authors
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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace capcycle {

// Salary units per category. Signed so that negative input can be rejected
// instead of silently wrapping.
using Value = std::int64_t;

inline constexpr std::uint64_t kDefaultSpaceLimit = 100'000'000;

// Process-wide cap on enumerated strategy spaces (compositions, partitions,
// and partition pairs when building a dominance graph).
std::uint64_t space_limit() noexcept;
void set_space_limit(std::uint64_t limit) noexcept;

// An ordered split of a budget into k nonnegative category values. Also read
// as a k-faced die whose faces are the values.
class Allocation {
 public:
  // Throws kEmptyAllocation, kNegativeEntry, or kOverflow if the sum does not
  // fit in Value.
  static Allocation from_values(std::vector<Value> values);

  // Comma-separated integers, e.g. "1,1,4". Whitespace around entries is
  // ignored. Throws kParse on anything that is not a whole number.
  static Allocation parse(std::string_view text);

  std::span<const Value> values() const noexcept { return values_; }
  Value operator[](std::size_t i) const { return values_[i]; }
  std::size_t k() const noexcept { return values_.size(); }
  Value budget() const noexcept { return budget_; }

  std::string to_string() const;

  friend bool operator==(const Allocation&, const Allocation&) = default;
  friend auto operator<=>(const Allocation& lhs, const Allocation& rhs) {
    return lhs.values_ <=> rhs.values_;
  }

 private:
  Allocation(std::vector<Value> values, Value budget)
      : values_(std::move(values)), budget_(budget) {}

  std::vector<Value> values_;
  Value budget_ = 0;
};

// Canonical (non-increasing) representative of an allocation's permutation
// class. Matchup counts depend only on this form.
class Partition {
 public:
  // Throws kInvalidArgument if the values are not non-increasing.
  static Partition from_sorted(std::vector<Value> values);

  const Allocation& allocation() const noexcept { return alloc_; }
  std::span<const Value> values() const noexcept { return alloc_.values(); }
  std::size_t k() const noexcept { return alloc_.k(); }
  Value budget() const noexcept { return alloc_.budget(); }
  Value operator[](std::size_t i) const { return alloc_[i]; }
  std::string to_string() const { return alloc_.to_string(); }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  friend Partition canonicalize(const Allocation& a);
  explicit Partition(Allocation alloc) : alloc_(std::move(alloc)) {}

  Allocation alloc_;
};

Allocation new_allocation(std::vector<Value> values);

Partition canonicalize(const Allocation& a);

// binomial(budget + k - 1, k - 1). Throws kOverflow past 2^64 - 1 and
// kInvalidArgument for budget < 0 or k == 0.
std::uint64_t composition_count(Value budget, std::size_t k);

// Both enumerations are in lexicographically descending tuple order.
std::vector<Allocation> enumerate_compositions(Value budget, std::size_t k);
std::vector<Allocation> enumerate_compositions(Value budget, std::size_t k,
                                               std::uint64_t limit);

std::vector<Partition> enumerate_partitions(Value budget, std::size_t k);
std::vector<Partition> enumerate_partitions(Value budget, std::size_t k,
                                            std::uint64_t limit);

}  // namespace capcycle
