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

#include "capcycle/sim.hpp"

#include "capcycle/error.hpp"

namespace capcycle {
namespace {

void require_decisive(const Allocation& a, const Allocation& b) {
  const MatchupCounts c = matchup_counts(a.values(), b.values());
  if (c.wins_a + c.wins_b == 0) {
    throw Error(ErrorCode::kAllTies, "matchup has no decisive cells");
  }
}

// Rolls until a decisive cell under Reroll; a single roll under
// CountAsNoGame. Updates game tallies and returns the roll that counted.
Cell play_game(const Allocation& a, const Allocation& b, TiePolicy policy, SplitMix64& rng,
               SeriesStats& stats) {
  while (true) {
    const Cell c = sample_cell(a, b, rng);
    if (c == Cell::kTie) {
      ++stats.tie_games;
      if (policy == TiePolicy::kReroll) continue;
      ++stats.games_played;
      return c;
    }
    ++stats.games_played;
    ++(c == Cell::kAWin ? stats.a_game_wins : stats.b_game_wins);
    return c;
  }
}

}  // namespace

std::uint64_t uniform_index(SplitMix64& rng, std::uint64_t k) noexcept {
  // 2^64 mod k; zero means k divides 2^64 and nothing is rejected.
  const std::uint64_t rem = (0 - k) % k;
  const std::uint64_t last_ok = UINT64_MAX - rem;
  while (true) {
    const std::uint64_t x = rng.next();
    if (rem == 0 || x <= last_ok) return x % k;
  }
}

Cell sample_cell(const Allocation& a, const Allocation& b, SplitMix64& rng) {
  if (a.k() != b.k()) {
    throw Error(ErrorCode::kDimensionMismatch, "allocations have different lengths");
  }
  const std::uint64_t i = uniform_index(rng, a.k());
  const std::uint64_t j = uniform_index(rng, b.k());
  if (a[i] > b[j]) return Cell::kAWin;
  if (a[i] < b[j]) return Cell::kBWin;
  return Cell::kTie;
}

void SimConfig::validate() const {
  if (n_games == 0) throw Error(ErrorCode::kInvalidArgument, "n_games must be >= 1");
  if (n_series == 0) throw Error(ErrorCode::kInvalidArgument, "n_series must be >= 1");
  if (n_series > kMaxSeries) {
    throw Error(ErrorCode::kInvalidArgument, "n_series exceeds " + std::to_string(kMaxSeries));
  }
  if (best_of) {
    if (*best_of % 2 == 0) throw Error(ErrorCode::kInvalidArgument, "best_of must be odd");
    if (*best_of > kMaxBestOf) {
      throw Error(ErrorCode::kInvalidArgument, "best_of exceeds " + std::to_string(kMaxBestOf));
    }
  }
}

std::optional<double> SeriesStats::empirical_a_frequency() const {
  const std::uint64_t decisive = a_game_wins + b_game_wins;
  if (decisive == 0) return std::nullopt;
  return static_cast<double>(a_game_wins) / static_cast<double>(decisive);
}

SeriesStats simulate_games(const Allocation& a, const Allocation& b, const SimConfig& config) {
  config.validate();
  if (a.k() != b.k()) {
    throw Error(ErrorCode::kDimensionMismatch, "allocations have different lengths");
  }
  if (config.tie_policy == TiePolicy::kReroll) require_decisive(a, b);

  SeriesStats stats;
  SplitMix64 rng(config.seed);
  while (stats.games_played < config.n_games) play_game(a, b, config.tie_policy, rng, stats);
  return stats;
}

SeriesStats simulate_best_of(const Allocation& a, const Allocation& b, const SimConfig& config) {
  config.validate();
  if (!config.best_of) throw Error(ErrorCode::kInvalidArgument, "best_of is not set");
  if (a.k() != b.k()) {
    throw Error(ErrorCode::kDimensionMismatch, "allocations have different lengths");
  }
  // A series needs decisive games under either policy to terminate.
  require_decisive(a, b);

  const std::uint64_t needed = (*config.best_of + 1) / 2;
  SeriesStats stats;
  SplitMix64 seeder(config.seed);
  for (std::uint64_t s = 0; s < config.n_series; ++s) {
    SplitMix64 rng(seeder.next());
    std::uint64_t a_wins = 0;
    std::uint64_t b_wins = 0;
    while (a_wins < needed && b_wins < needed) {
      const Cell c = play_game(a, b, config.tie_policy, rng, stats);
      if (c == Cell::kAWin) ++a_wins;
      if (c == Cell::kBWin) ++b_wins;
    }
    ++(a_wins == needed ? stats.a_series_wins : stats.b_series_wins);
  }
  return stats;
}

}  // namespace capcycle
