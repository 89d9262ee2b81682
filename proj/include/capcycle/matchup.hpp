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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "capcycle/alloc.hpp"

namespace capcycle {

enum class Cell : std::uint8_t { kTie, kAWin, kBWin };

enum class SeriesOutcome { kAWins, kBWins, kDraw };

// How tied cells are treated when games are sampled. Never affects
// SeriesOutcome, which compares raw win counts.
enum class TiePolicy {
  kReroll,         // condition on decisive cells
  kCountAsNoGame,  // ties stay in the denominator as non-wins
};

struct MatchupCounts {
  std::uint64_t wins_a = 0;
  std::uint64_t wins_b = 0;
  std::uint64_t ties = 0;

  friend bool operator==(const MatchupCounts&, const MatchupCounts&) = default;
};

// Unreduced integer ratio, e.g. 6/9 stays 6/9 so it reads as a cell count.
struct ExactRatio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  ExactRatio reduced() const;
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  // "5/9 (0.5556)"
  std::string to_string() const;

  friend bool operator==(const ExactRatio&, const ExactRatio&) = default;
};

// The k x k grid of a_i vs b_j comparisons.
class MatchupTable {
 public:
  MatchupTable(const Allocation& a, const Allocation& b);

  std::size_t k() const noexcept { return k_; }
  Cell cell(std::size_t i, std::size_t j) const { return cells_[i * k_ + j]; }
  std::span<const Value> a_values() const noexcept { return a_; }
  std::span<const Value> b_values() const noexcept { return b_; }
  Value a_budget() const noexcept;
  Value b_budget() const noexcept;

  const MatchupCounts& counts() const noexcept { return counts_; }
  std::uint64_t wins_a() const noexcept { return counts_.wins_a; }
  std::uint64_t wins_b() const noexcept { return counts_.wins_b; }
  std::uint64_t ties() const noexcept { return counts_.ties; }

 private:
  std::size_t k_;
  std::vector<Value> a_;
  std::vector<Value> b_;
  std::vector<Cell> cells_;
  MatchupCounts counts_;
};

// Throws kDimensionMismatch when a.k() != b.k().
MatchupTable matchup_table(const Allocation& a, const Allocation& b);

// Counts only, via sorting and binary search: O(k log k) instead of O(k^2).
// Used on the graph-building hot path.
MatchupCounts matchup_counts(std::span<const Value> a, std::span<const Value> b);

SeriesOutcome series_outcome(const MatchupCounts& counts) noexcept;
SeriesOutcome series_outcome(const MatchupTable& t) noexcept;

bool dominates(const Allocation& a, const Allocation& b);

// Reroll: wins_a / (wins_a + wins_b), throws kAllTies if nothing is decisive.
// CountAsNoGame: wins_a / k^2.
ExactRatio win_probability(const MatchupTable& t, TiePolicy policy);

const char* to_string(SeriesOutcome outcome) noexcept;
const char* to_string(TiePolicy policy) noexcept;

}  // namespace capcycle
