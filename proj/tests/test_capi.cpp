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

#include <cstring>
#include <string>
#include <vector>

#include "capcycle/capcycle.h"

namespace {

capcycle_allocation* parse(const char* text) {
  capcycle_allocation* a = nullptr;
  REQUIRE(capcycle_allocation_parse(text, &a) == CAPCYCLE_OK);
  return a;
}

std::string take(char* s) {
  std::string out = s ? s : "";
  capcycle_free(s);
  return out;
}

}  // namespace

TEST_CASE("allocation handles") {
  const int64_t values[] = {1, 1, 4};
  capcycle_allocation* a = nullptr;
  REQUIRE(capcycle_allocation_create(values, 3, &a) == CAPCYCLE_OK);
  CHECK(capcycle_allocation_k(a) == 3);
  CHECK(capcycle_allocation_budget(a) == 6);

  capcycle_allocation* c = nullptr;
  REQUIRE(capcycle_allocation_canonicalize(a, &c) == CAPCYCLE_OK);
  int64_t out[3] = {};
  CHECK(capcycle_allocation_values(c, out, 3) == 3);
  CHECK(out[0] == 4);
  CHECK(out[2] == 1);
  capcycle_allocation_destroy(c);
  capcycle_allocation_destroy(a);
  capcycle_allocation_destroy(nullptr);
}

TEST_CASE("error codes and last error") {
  capcycle_allocation* a = nullptr;
  CHECK(capcycle_allocation_parse("1,x", &a) == CAPCYCLE_ERR_PARSE);
  CHECK(a == nullptr);
  CHECK(std::string(capcycle_last_error()).find("'x'") != std::string::npos);
  CHECK(capcycle_allocation_parse("1,-2", &a) == CAPCYCLE_ERR_NEGATIVE_ENTRY);
  CHECK(capcycle_allocation_parse("", &a) == CAPCYCLE_ERR_EMPTY_ALLOCATION);
  CHECK(capcycle_allocation_create(nullptr, 0, &a) == CAPCYCLE_ERR_EMPTY_ALLOCATION);
  CHECK(capcycle_allocation_parse(nullptr, &a) == CAPCYCLE_ERR_INVALID_ARGUMENT);
  CHECK(std::strcmp(capcycle_status_string(CAPCYCLE_ERR_SPACE_TOO_LARGE), "strategy space too large") == 0);

  uint64_t n = 0;
  CHECK(capcycle_composition_count(6, 3, &n) == CAPCYCLE_OK);
  CHECK(n == 28);
  CHECK(capcycle_composition_count(40, 40, &n) == CAPCYCLE_ERR_OVERFLOW);
  CHECK(std::string(capcycle_last_error()).empty() == false);
  CHECK(capcycle_composition_count(6, 3, &n) == CAPCYCLE_OK);
  CHECK(std::string(capcycle_last_error()).empty());
}

TEST_CASE("enumerate and space limit") {
  int64_t* values = nullptr;
  size_t count = 0;
  REQUIRE(capcycle_enumerate(6, 3, 1, &values, &count) == CAPCYCLE_OK);
  CHECK(count == 7);
  CHECK(values[0] == 6);
  CHECK(values[3 * 6] == 2);
  capcycle_free(values);

  const uint64_t saved = capcycle_get_space_limit();
  CHECK(saved == 100000000ULL);
  capcycle_set_space_limit(10);
  CHECK(capcycle_enumerate(6, 3, 0, &values, &count) == CAPCYCLE_ERR_SPACE_TOO_LARGE);
  capcycle_graph* g = nullptr;
  CHECK(capcycle_graph_build(6, 3, &g) == CAPCYCLE_ERR_SPACE_TOO_LARGE);
  capcycle_set_space_limit(saved);
}

TEST_CASE("matchup through the C API") {
  auto* mtl = parse("1,1,4");
  auto* ny = parse("3,3,0");
  capcycle_matchup* m = nullptr;
  REQUIRE(capcycle_matchup_create(mtl, ny, &m) == CAPCYCLE_OK);
  uint64_t wa = 0, wb = 0, t = 0;
  capcycle_matchup_counts(m, &wa, &wb, &t);
  CHECK(wa == 5);
  CHECK(wb == 4);
  CHECK(t == 0);
  CHECK(capcycle_matchup_k(m) == 3);
  CHECK(capcycle_matchup_cell(m, 2, 0) == CAPCYCLE_CELL_A_WIN);
  CHECK(capcycle_matchup_cell(m, 0, 0) == CAPCYCLE_CELL_B_WIN);
  CHECK(capcycle_matchup_outcome(m) == CAPCYCLE_OUTCOME_A_WINS);
  uint64_t num = 0, den = 0;
  REQUIRE(capcycle_matchup_win_probability(m, CAPCYCLE_TIE_REROLL, &num, &den) == CAPCYCLE_OK);
  CHECK(num == 5);
  CHECK(den == 9);

  char* text = nullptr;
  REQUIRE(capcycle_matchup_render(m, CAPCYCLE_FORMAT_TEXT, "MTL", "NY", &text) == CAPCYCLE_OK);
  CHECK(take(text).find("MTL wins 5, NY wins 4, ties 0; outcome: MTL") != std::string::npos);
  REQUIRE(capcycle_matchup_render(m, CAPCYCLE_FORMAT_CSV, nullptr, nullptr, &text) == CAPCYCLE_OK);
  CHECK(take(text).rfind("A\\B,3,3,0\n", 0) == 0);
  CHECK(capcycle_matchup_render(m, CAPCYCLE_FORMAT_DOT, nullptr, nullptr, &text) == CAPCYCLE_ERR_INVALID_ARGUMENT);

  int dom = -1;
  REQUIRE(capcycle_dominates(mtl, ny, &dom) == CAPCYCLE_OK);
  CHECK(dom == 1);
  REQUIRE(capcycle_dominates(ny, mtl, &dom) == CAPCYCLE_OK);
  CHECK(dom == 0);

  auto* pair = parse("1,1");
  capcycle_matchup* bad = nullptr;
  CHECK(capcycle_matchup_create(pair, ny, &bad) == CAPCYCLE_ERR_DIMENSION_MISMATCH);

  auto* flat = parse("2,2");
  capcycle_matchup* ties = nullptr;
  REQUIRE(capcycle_matchup_create(flat, flat, &ties) == CAPCYCLE_OK);
  CHECK(capcycle_matchup_win_probability(ties, CAPCYCLE_TIE_REROLL, &num, &den) == CAPCYCLE_ERR_ALL_TIES);
  CHECK(capcycle_matchup_outcome(ties) == CAPCYCLE_OUTCOME_DRAW);

  capcycle_matchup_destroy(ties);
  capcycle_matchup_destroy(m);
  capcycle_allocation_destroy(flat);
  capcycle_allocation_destroy(pair);
  capcycle_allocation_destroy(ny);
  capcycle_allocation_destroy(mtl);
}

TEST_CASE("graph through the C API") {
  capcycle_graph* g = nullptr;
  REQUIRE(capcycle_graph_build(6, 3, &g) == CAPCYCLE_OK);
  CHECK(capcycle_graph_node_count(g) == 7);
  CHECK(capcycle_graph_edge_count(g) == 14);
  CHECK(capcycle_graph_draw_count(g) == 7);

  int64_t node[3];
  REQUIRE(capcycle_graph_node(g, 2, node, 3) == CAPCYCLE_OK);
  CHECK(std::vector<int64_t>(node, node + 3) == std::vector<int64_t>{4, 2, 0});
  CHECK(capcycle_graph_node(g, 7, node, 3) == CAPCYCLE_ERR_INVALID_ARGUMENT);
  CHECK(capcycle_graph_node(g, 0, node, 2) == CAPCYCLE_ERR_INVALID_ARGUMENT);

  size_t w = 0, l = 0;
  uint64_t margin = 0;
  REQUIRE(capcycle_graph_edge(g, 0, &w, &l, &margin) == CAPCYCLE_OK);
  CHECK(w == 1);
  CHECK(l == 0);
  CHECK(margin == 1);

  size_t* triples = nullptr;
  size_t n = 0;
  REQUIRE(capcycle_graph_three_cycles(g, &triples, &n) == CAPCYCLE_OK);
  REQUIRE(n == 2);
  CHECK(std::vector<size_t>(triples, triples + 6) == std::vector<size_t>{6, 3, 4, 5, 3, 4});
  capcycle_free(triples);

  size_t* comp = nullptr;
  size_t ncomp = 0;
  REQUIRE(capcycle_graph_scc(g, &comp, &ncomp) == CAPCYCLE_OK);
  CHECK(ncomp == 4);
  CHECK(comp[3] == comp[4]);
  CHECK(comp[4] == comp[5]);
  CHECK(comp[5] == comp[6]);
  CHECK(comp[2] != comp[3]);
  capcycle_free(comp);

  int holds = 1;
  size_t* und = nullptr;
  size_t nund = 0;
  REQUIRE(capcycle_graph_claim(g, &holds, &und, &nund) == CAPCYCLE_OK);
  CHECK(holds == 0);
  REQUIRE(nund == 1);
  CHECK(und[0] == 2);
  capcycle_free(und);

  char* text = nullptr;
  REQUIRE(capcycle_graph_render(g, CAPCYCLE_FORMAT_DOT, &text) == CAPCYCLE_OK);
  CHECK(take(text).rfind("digraph", 0) == 0);
  REQUIRE(capcycle_graph_render(g, CAPCYCLE_FORMAT_JSON, &text) == CAPCYCLE_OK);
  CHECK(take(text).find("\"undominated\":[[4,2,0]]") != std::string::npos);
  capcycle_graph_destroy(g);
}

TEST_CASE("counter, analyze and simulate through the C API") {
  auto* ny = parse("3,3,0");
  int found = 0;
  capcycle_allocation* counter = nullptr;
  uint64_t margin = 0;
  REQUIRE(capcycle_counter_strategy(ny, 6, &found, &counter, &margin) == CAPCYCLE_OK);
  CHECK(found == 1);
  CHECK(margin == 1);
  int64_t v[3];
  capcycle_allocation_values(counter, v, 3);
  CHECK(std::vector<int64_t>(v, v + 3) == std::vector<int64_t>{4, 1, 1});
  capcycle_allocation_destroy(counter);
  CHECK(capcycle_counter_strategy(ny, 5, &found, &counter, &margin) == CAPCYCLE_ERR_INVALID_ARGUMENT);

  auto* solid = parse("4,2,0");
  REQUIRE(capcycle_counter_strategy(solid, 6, &found, &counter, &margin) == CAPCYCLE_OK);
  CHECK(found == 0);
  CHECK(counter == nullptr);

  char* text = nullptr;
  REQUIRE(capcycle_analyze(6, 3, CAPCYCLE_FORMAT_TEXT, &text) == CAPCYCLE_OK);
  CHECK(take(text).find("universal counter claim: DOES NOT HOLD") != std::string::npos);
  REQUIRE(capcycle_analyze(6, 3, CAPCYCLE_FORMAT_JSON, &text) == CAPCYCLE_OK);
  CHECK(take(text).find("\"holds\":false") != std::string::npos);

  uint64_t state = 0;
  CHECK(capcycle_splitmix64_next(&state) == 0xE220A8397B1DCDAFULL);
  CHECK(capcycle_splitmix64_next(&state) == 0x6E789E6AA1B965F4ULL);

  auto* mtl = parse("1,1,4");
  capcycle_sim_config cfg{42, 90000, CAPCYCLE_TIE_REROLL, 0, 1};
  capcycle_sim_stats stats{};
  REQUIRE(capcycle_simulate_games(mtl, ny, &cfg, &stats) == CAPCYCLE_OK);
  CHECK(stats.games_played == 90000);
  CHECK(stats.a_game_wins == 50047);

  cfg = {7, 1, CAPCYCLE_TIE_REROLL, 301, 1000};
  REQUIRE(capcycle_simulate_best_of(mtl, ny, &cfg, &stats) == CAPCYCLE_OK);
  CHECK(stats.a_series_wins == 968);
  REQUIRE(capcycle_simulate_render(mtl, ny, &cfg, CAPCYCLE_FORMAT_JSON, &text) == CAPCYCLE_OK);
  CHECK(take(text).find("\"a_series_wins\": 968") != std::string::npos);

  cfg.best_of = 2;
  CHECK(capcycle_simulate_best_of(mtl, ny, &cfg, &stats) == CAPCYCLE_ERR_INVALID_ARGUMENT);
  cfg = {1, 10, CAPCYCLE_TIE_REROLL, 0, 1};
  auto* flat = parse("2,2,2");
  CHECK(capcycle_simulate_games(flat, flat, &cfg, &stats) == CAPCYCLE_ERR_ALL_TIES);

  capcycle_allocation_destroy(flat);
  capcycle_allocation_destroy(mtl);
  capcycle_allocation_destroy(solid);
  capcycle_allocation_destroy(ny);
}
