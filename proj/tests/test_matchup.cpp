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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "capcycle/error.hpp"
#include "capcycle/matchup.hpp"
#include "oracle.hpp"

using namespace capcycle;

namespace {

Allocation A(std::vector<Value> v) { return new_allocation(std::move(v)); }

MatchupCounts counts(const MatchupTable& t) { return t.counts(); }

bool same(const MatchupCounts& c, const oracle::Counts& o) {
  return c.wins_a == o.wins_a && c.wins_b == o.wins_b && c.ties == o.ties;
}

}  // namespace

TEST_CASE("the three hockey grids") {
  const auto mtl = A({1, 1, 4});
  const auto bos = A({2, 2, 2});
  const auto ny = A({3, 3, 0});

  const auto t1 = matchup_table(mtl, bos);
  CHECK(counts(t1) == MatchupCounts{3, 6, 0});
  CHECK(series_outcome(t1) == SeriesOutcome::kBWins);
  const auto t2 = matchup_table(bos, ny);
  CHECK(counts(t2) == MatchupCounts{3, 6, 0});
  const auto t3 = matchup_table(mtl, ny);
  CHECK(counts(t3) == MatchupCounts{5, 4, 0});
  CHECK(series_outcome(t3) == SeriesOutcome::kAWins);

  // Row 4 of the MTL/NY grid is all MTL; rows 1,1 lose to both 3s.
  CHECK(t3.cell(0, 0) == Cell::kBWin);
  CHECK(t3.cell(0, 2) == Cell::kAWin);
  CHECK(t3.cell(2, 0) == Cell::kAWin);
  CHECK(t3.cell(2, 2) == Cell::kAWin);

  CHECK(counts(matchup_table(bos, bos)) == MatchupCounts{0, 0, 9});
}

TEST_CASE("series_outcome draw") {
  const auto a = A({3, 2, 1});
  const auto b = A({2, 2, 2});
  const auto naive = oracle::naive_counts({3, 2, 1}, {2, 2, 2});
  CHECK(naive.wins_a == 3);
  CHECK(naive.wins_b == 3);
  CHECK(naive.ties == 3);
  CHECK(series_outcome(matchup_table(a, b)) == SeriesOutcome::kDraw);
}

TEST_CASE("dominates") {
  CHECK(dominates(A({2, 2, 2}), A({1, 1, 4})));
  CHECK_FALSE(dominates(A({3, 3, 0}), A({1, 1, 4})));
  for (const auto& v : oracle::brute_compositions(5, 3)) CHECK_FALSE(dominates(A(v), A(v)));
  CHECK_THROWS_AS(dominates(A({1, 2}), A({1, 2, 3})), Error);
}

TEST_CASE("win_probability") {
  CHECK(win_probability(matchup_table(A({1, 1, 4}), A({3, 3, 0})), TiePolicy::kReroll) ==
        ExactRatio{5, 9});
  CHECK(win_probability(matchup_table(A({2, 2, 2}), A({2, 2, 2})), TiePolicy::kCountAsNoGame) ==
        ExactRatio{0, 9});
  const auto naive = oracle::naive_counts({3, 2, 1}, {6, 0, 0});
  CHECK(naive.wins_a == 6);
  CHECK(naive.wins_b == 3);
  const auto p = win_probability(matchup_table(A({3, 2, 1}), A({6, 0, 0})), TiePolicy::kReroll);
  CHECK(p == ExactRatio{6, 9});
  CHECK(p.reduced() == ExactRatio{2, 3});
  CHECK(p.to_string() == "6/9 (0.6667)");

  // Ties count against A under CountAsNoGame, vanish under Reroll.
  const auto t = matchup_table(A({4, 2, 0}), A({5, 1, 0}));
  CHECK(win_probability(t, TiePolicy::kReroll) == ExactRatio{4, 8});
  CHECK(win_probability(t, TiePolicy::kCountAsNoGame) == ExactRatio{4, 9});

  try {
    win_probability(matchup_table(A({2, 2}), A({2, 2})), TiePolicy::kReroll);
    FAIL("expected AllTies");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kAllTies);
  }
}

TEST_CASE("dimension mismatch") {
  try {
    matchup_table(A({1, 1}), A({1, 2, 3}));
    FAIL("expected DimensionMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDimensionMismatch);
  }
}

TEST_CASE("unequal budgets are allowed") {
  const auto t = matchup_table(A({1, 1, 4}), A({3, 3, 1}));
  CHECK(t.a_budget() == 6);
  CHECK(t.b_budget() == 7);
  CHECK(counts(t) == MatchupCounts{3, 4, 2});
}

TEST_CASE("oracle equivalence for every pair with B <= 8, k <= 3") {
  for (std::size_t k = 1; k <= 3; ++k) {
    std::vector<oracle::Tuple> all;
    for (Value b = 0; b <= 8; ++b) {
      for (auto& c : oracle::brute_compositions(b, k)) all.push_back(c);
    }
    for (const auto& x : all) {
      for (const auto& y : all) {
        const auto t = matchup_table(A(x), A(y));
        const auto naive = oracle::naive_counts(x, y);
        REQUIRE(same(t.counts(), naive));
        REQUIRE(matchup_counts(x, y) == t.counts());
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) {
            const Cell want = x[i] > y[j] ? Cell::kAWin : x[i] < y[j] ? Cell::kBWin : Cell::kTie;
            REQUIRE(t.cell(i, j) == want);
          }
        }
      }
    }
  }
}

TEST_CASE("matchup properties on random pairs") {
  std::mt19937_64 rng(20260516);
  std::uniform_int_distribution<std::size_t> pick_k(1, 6);
  std::uniform_int_distribution<Value> pick_b(0, 40);
  std::uniform_int_distribution<Value> pick_c(0, 25);
  std::uniform_int_distribution<Value> pick_s(1, 7);
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t k = pick_k(rng);
    auto x = oracle::random_split(rng, pick_b(rng), k);
    auto y = oracle::random_split(rng, pick_b(rng), k);
    const auto t = matchup_table(A(x), A(y));
    const auto& c = t.counts();
    REQUIRE(c.wins_a + c.wins_b + c.ties == k * k);

    const auto mirror = matchup_table(A(y), A(x)).counts();
    REQUIRE(mirror.wins_a == c.wins_b);
    REQUIRE(mirror.wins_b == c.wins_a);
    REQUIRE(mirror.ties == c.ties);
    REQUIRE_FALSE((dominates(A(x), A(y)) && dominates(A(y), A(x))));

    auto px = x;
    auto py = y;
    std::shuffle(px.begin(), px.end(), rng);
    std::shuffle(py.begin(), py.end(), rng);
    REQUIRE(matchup_table(A(px), A(py)).counts() == c);

    const Value shift = pick_c(rng);
    const Value scale = pick_s(rng);
    auto tx = x, ty = y, sx = x, sy = y;
    for (auto& v : tx) v += shift;
    for (auto& v : ty) v += shift;
    for (auto& v : sx) v *= scale;
    for (auto& v : sy) v *= scale;
    REQUIRE(matchup_table(A(tx), A(ty)).counts() == c);
    REQUIRE(matchup_table(A(sx), A(sy)).counts() == c);
  }
}
