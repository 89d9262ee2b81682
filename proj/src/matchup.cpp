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

#include "capcycle/matchup.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <numeric>

#include "capcycle/error.hpp"

namespace capcycle {
namespace {

void require_same_k(std::size_t ka, std::size_t kb) {
  if (ka != kb) {
    throw Error(ErrorCode::kDimensionMismatch, "allocations have different lengths (" +
                                                   std::to_string(ka) + " vs " +
                                                   std::to_string(kb) + ")");
  }
}

Value sum(std::span<const Value> v) { return std::accumulate(v.begin(), v.end(), Value{0}); }

}  // namespace

ExactRatio ExactRatio::reduced() const {
  const std::uint64_t g = std::gcd(num, den);
  if (g == 0) return *this;
  return {num / g, den / g};
}

std::string ExactRatio::to_string() const {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%llu/%llu (%.4f)", static_cast<unsigned long long>(num),
                static_cast<unsigned long long>(den), to_double());
  return buf;
}

MatchupTable::MatchupTable(const Allocation& a, const Allocation& b)
    : k_(a.k()), a_(a.values().begin(), a.values().end()), b_(b.values().begin(), b.values().end()) {
  require_same_k(a.k(), b.k());
  cells_.reserve(k_ * k_);
  for (std::size_t i = 0; i < k_; ++i) {
    for (std::size_t j = 0; j < k_; ++j) {
      Cell c = Cell::kTie;
      if (a_[i] > b_[j]) {
        c = Cell::kAWin;
        ++counts_.wins_a;
      } else if (a_[i] < b_[j]) {
        c = Cell::kBWin;
        ++counts_.wins_b;
      } else {
        ++counts_.ties;
      }
      cells_.push_back(c);
    }
  }
}

Value MatchupTable::a_budget() const noexcept { return sum(a_); }
Value MatchupTable::b_budget() const noexcept { return sum(b_); }

MatchupTable matchup_table(const Allocation& a, const Allocation& b) { return MatchupTable(a, b); }

MatchupCounts matchup_counts(std::span<const Value> a, std::span<const Value> b) {
  require_same_k(a.size(), b.size());
  std::vector<Value> sorted_b(b.begin(), b.end());
  if (!std::is_sorted(sorted_b.begin(), sorted_b.end())) std::sort(sorted_b.begin(), sorted_b.end());
  MatchupCounts counts;
  for (Value x : a) {
    const auto [lo, hi] = std::equal_range(sorted_b.begin(), sorted_b.end(), x);
    counts.wins_a += static_cast<std::uint64_t>(lo - sorted_b.begin());
    counts.ties += static_cast<std::uint64_t>(hi - lo);
    counts.wins_b += static_cast<std::uint64_t>(sorted_b.end() - hi);
  }
  return counts;
}

SeriesOutcome series_outcome(const MatchupCounts& counts) noexcept {
  if (counts.wins_a > counts.wins_b) return SeriesOutcome::kAWins;
  if (counts.wins_b > counts.wins_a) return SeriesOutcome::kBWins;
  return SeriesOutcome::kDraw;
}

SeriesOutcome series_outcome(const MatchupTable& t) noexcept { return series_outcome(t.counts()); }

bool dominates(const Allocation& a, const Allocation& b) {
  return series_outcome(matchup_counts(a.values(), b.values())) == SeriesOutcome::kAWins;
}

ExactRatio win_probability(const MatchupTable& t, TiePolicy policy) {
  switch (policy) {
    case TiePolicy::kReroll: {
      const std::uint64_t decisive = t.wins_a() + t.wins_b();
      if (decisive == 0) throw Error(ErrorCode::kAllTies, "every cell of the matchup is a tie");
      return {t.wins_a(), decisive};
    }
    case TiePolicy::kCountAsNoGame:
      return {t.wins_a(), static_cast<std::uint64_t>(t.k()) * t.k()};
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown tie policy");
}

const char* to_string(SeriesOutcome outcome) noexcept {
  switch (outcome) {
    case SeriesOutcome::kAWins: return "A";
    case SeriesOutcome::kBWins: return "B";
    case SeriesOutcome::kDraw: return "draw";
  }
  return "?";
}

const char* to_string(TiePolicy policy) noexcept {
  switch (policy) {
    case TiePolicy::kReroll: return "reroll";
    case TiePolicy::kCountAsNoGame: return "nogame";
  }
  return "?";
}

}  // namespace capcycle
