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

#include <cstdint>
#include <optional>
#include <utility>

#include "capcycle/alloc.hpp"
#include "capcycle/matchup.hpp"

namespace capcycle {

inline constexpr std::uint64_t kMaxBestOf = 1'000'000;
inline constexpr std::uint64_t kMaxSeries = 1'000'000;

// One splitmix64 step: returns (next_state, output).
constexpr std::pair<std::uint64_t, std::uint64_t> prng_next(std::uint64_t state) noexcept {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return {state, z ^ (z >> 31)};
}

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    const auto [state, out] = prng_next(state_);
    state_ = state;
    return out;
  }
  std::uint64_t state() const noexcept { return state_; }

 private:
  std::uint64_t state_;
};

// Uniform index in [0, k) by rejecting outputs >= floor(2^64 / k) * k.
std::uint64_t uniform_index(SplitMix64& rng, std::uint64_t k) noexcept;

// One joint roll: a face of a and a face of b, compared.
Cell sample_cell(const Allocation& a, const Allocation& b, SplitMix64& rng);

struct SimConfig {
  std::uint64_t seed = 0;
  std::uint64_t n_games = 1;
  TiePolicy tie_policy = TiePolicy::kReroll;
  std::optional<std::uint64_t> best_of;  // odd when set
  std::uint64_t n_series = 1;

  // Throws kInvalidArgument on a violated field constraint.
  void validate() const;
};

struct SeriesStats {
  std::uint64_t games_played = 0;
  std::uint64_t a_game_wins = 0;
  std::uint64_t b_game_wins = 0;
  // Reroll: discarded tied rolls, not part of games_played.
  // CountAsNoGame: tied rolls, included in games_played.
  std::uint64_t tie_games = 0;
  std::uint64_t a_series_wins = 0;
  std::uint64_t b_series_wins = 0;

  // a_game_wins / (a_game_wins + b_game_wins); empty with no decisive game.
  std::optional<double> empirical_a_frequency() const;

  friend bool operator==(const SeriesStats&, const SeriesStats&) = default;
};

// Plays config.n_games games from a generator seeded with config.seed.
SeriesStats simulate_games(const Allocation& a, const Allocation& b, const SimConfig& config);

// Plays config.n_series independent first-to-(best_of+1)/2 series. Series i
// draws from its own generator, seeded with the (i+1)-th output of a
// generator seeded with config.seed. Game tallies accumulate over all series.
SeriesStats simulate_best_of(const Allocation& a, const Allocation& b, const SimConfig& config);

}  // namespace capcycle
