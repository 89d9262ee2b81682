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

#include "capcycle/capcycle.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "capcycle/alloc.hpp"
#include "capcycle/dominance.hpp"
#include "capcycle/error.hpp"
#include "capcycle/matchup.hpp"
#include "capcycle/report.hpp"
#include "capcycle/sim.hpp"

struct capcycle_allocation {
  capcycle::Allocation value;
};

struct capcycle_matchup {
  capcycle::MatchupTable table;
};

struct capcycle_graph {
  capcycle::DominanceGraph graph;
};

namespace {

using capcycle::Error;
using capcycle::ErrorCode;

thread_local std::string t_last_error;

capcycle_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyAllocation: return CAPCYCLE_ERR_EMPTY_ALLOCATION;
    case ErrorCode::kNegativeEntry: return CAPCYCLE_ERR_NEGATIVE_ENTRY;
    case ErrorCode::kParse: return CAPCYCLE_ERR_PARSE;
    case ErrorCode::kDimensionMismatch: return CAPCYCLE_ERR_DIMENSION_MISMATCH;
    case ErrorCode::kSpaceTooLarge: return CAPCYCLE_ERR_SPACE_TOO_LARGE;
    case ErrorCode::kOverflow: return CAPCYCLE_ERR_OVERFLOW;
    case ErrorCode::kAllTies: return CAPCYCLE_ERR_ALL_TIES;
    case ErrorCode::kInvalidArgument: return CAPCYCLE_ERR_INVALID_ARGUMENT;
  }
  return CAPCYCLE_ERR_INTERNAL;
}

capcycle_status fail(capcycle_status status, std::string message) {
  t_last_error = std::move(message);
  return status;
}

template <class Fn>
capcycle_status guarded(Fn&& fn) {
  try {
    fn();
    t_last_error.clear();
    return CAPCYCLE_OK;
  } catch (const Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(CAPCYCLE_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CAPCYCLE_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(CAPCYCLE_ERR_INTERNAL, "unknown error");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::kInvalidArgument, what);
}

char* dup_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

template <class T>
T* malloc_array(std::size_t n) {
  auto* out = static_cast<T*>(std::malloc(n == 0 ? 1 : n * sizeof(T)));
  if (!out) throw std::bad_alloc();
  return out;
}

capcycle::TiePolicy to_policy(capcycle_tie_policy p) {
  switch (p) {
    case CAPCYCLE_TIE_REROLL: return capcycle::TiePolicy::kReroll;
    case CAPCYCLE_TIE_NO_GAME: return capcycle::TiePolicy::kCountAsNoGame;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown tie policy");
}

capcycle::SimConfig to_config(const capcycle_sim_config& c) {
  capcycle::SimConfig config;
  config.seed = c.seed;
  config.n_games = c.n_games;
  config.tie_policy = to_policy(c.tie_policy);
  if (c.best_of != 0) config.best_of = c.best_of;
  config.n_series = c.n_series;
  return config;
}

void copy_stats(const capcycle::SeriesStats& s, capcycle_sim_stats* out) {
  out->games_played = s.games_played;
  out->a_game_wins = s.a_game_wins;
  out->b_game_wins = s.b_game_wins;
  out->tie_games = s.tie_games;
  out->a_series_wins = s.a_series_wins;
  out->b_series_wins = s.b_series_wins;
}

}  // namespace

extern "C" {

const char* capcycle_version(void) { return "0.1.0"; }

const char* capcycle_status_string(capcycle_status status) {
  switch (status) {
    case CAPCYCLE_OK: return "ok";
    case CAPCYCLE_ERR_EMPTY_ALLOCATION: return "empty allocation";
    case CAPCYCLE_ERR_NEGATIVE_ENTRY: return "negative allocation entry";
    case CAPCYCLE_ERR_PARSE: return "parse error";
    case CAPCYCLE_ERR_DIMENSION_MISMATCH: return "dimension mismatch";
    case CAPCYCLE_ERR_SPACE_TOO_LARGE: return "strategy space too large";
    case CAPCYCLE_ERR_OVERFLOW: return "integer overflow";
    case CAPCYCLE_ERR_ALL_TIES: return "matchup has no decisive cells";
    case CAPCYCLE_ERR_INVALID_ARGUMENT: return "invalid argument";
    case CAPCYCLE_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* capcycle_last_error(void) { return t_last_error.c_str(); }

void capcycle_free(void* ptr) { std::free(ptr); }

uint64_t capcycle_get_space_limit(void) { return capcycle::space_limit(); }

void capcycle_set_space_limit(uint64_t limit) { capcycle::set_space_limit(limit); }

capcycle_status capcycle_allocation_create(const int64_t* values, size_t k,
                                           capcycle_allocation** out) {
  return guarded([&] {
    require(out != nullptr, "out is null");
    require(values != nullptr || k == 0, "values is null");
    std::vector<capcycle::Value> v(values, values + k);
    *out = new capcycle_allocation{capcycle::Allocation::from_values(std::move(v))};
  });
}

capcycle_status capcycle_allocation_parse(const char* text, capcycle_allocation** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "null argument");
    *out = new capcycle_allocation{capcycle::Allocation::parse(text)};
  });
}

void capcycle_allocation_destroy(capcycle_allocation* a) { delete a; }

size_t capcycle_allocation_k(const capcycle_allocation* a) { return a ? a->value.k() : 0; }

int64_t capcycle_allocation_budget(const capcycle_allocation* a) { return a ? a->value.budget() : 0; }

size_t capcycle_allocation_values(const capcycle_allocation* a, int64_t* out, size_t capacity) {
  if (!a) return 0;
  const auto v = a->value.values();
  if (out) std::copy_n(v.begin(), std::min(capacity, v.size()), out);
  return v.size();
}

capcycle_status capcycle_allocation_canonicalize(const capcycle_allocation* a,
                                                 capcycle_allocation** out) {
  return guarded([&] {
    require(a != nullptr && out != nullptr, "null argument");
    *out = new capcycle_allocation{capcycle::canonicalize(a->value).allocation()};
  });
}

capcycle_status capcycle_composition_count(int64_t budget, size_t k, uint64_t* out) {
  return guarded([&] {
    require(out != nullptr, "out is null");
    *out = capcycle::composition_count(budget, k);
  });
}

capcycle_status capcycle_enumerate(int64_t budget, size_t k, int partitions, int64_t** values_out,
                                   size_t* count_out) {
  return guarded([&] {
    require(values_out != nullptr && count_out != nullptr, "null argument");
    std::vector<capcycle::Allocation> rows;
    if (partitions) {
      for (auto& p : capcycle::enumerate_partitions(budget, k)) rows.push_back(p.allocation());
    } else {
      rows = capcycle::enumerate_compositions(budget, k);
    }
    auto* flat = malloc_array<int64_t>(rows.size() * k);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::copy(rows[r].values().begin(), rows[r].values().end(), flat + r * k);
    }
    *values_out = flat;
    *count_out = rows.size();
  });
}

capcycle_status capcycle_matchup_create(const capcycle_allocation* a, const capcycle_allocation* b,
                                        capcycle_matchup** out) {
  return guarded([&] {
    require(a != nullptr && b != nullptr && out != nullptr, "null argument");
    *out = new capcycle_matchup{capcycle::matchup_table(a->value, b->value)};
  });
}

void capcycle_matchup_destroy(capcycle_matchup* m) { delete m; }

size_t capcycle_matchup_k(const capcycle_matchup* m) { return m ? m->table.k() : 0; }

void capcycle_matchup_counts(const capcycle_matchup* m, uint64_t* wins_a, uint64_t* wins_b,
                             uint64_t* ties) {
  if (!m) return;
  if (wins_a) *wins_a = m->table.wins_a();
  if (wins_b) *wins_b = m->table.wins_b();
  if (ties) *ties = m->table.ties();
}

capcycle_cell capcycle_matchup_cell(const capcycle_matchup* m, size_t i, size_t j) {
  if (!m || i >= m->table.k() || j >= m->table.k()) return CAPCYCLE_CELL_TIE;
  switch (m->table.cell(i, j)) {
    case capcycle::Cell::kAWin: return CAPCYCLE_CELL_A_WIN;
    case capcycle::Cell::kBWin: return CAPCYCLE_CELL_B_WIN;
    case capcycle::Cell::kTie: break;
  }
  return CAPCYCLE_CELL_TIE;
}

capcycle_outcome capcycle_matchup_outcome(const capcycle_matchup* m) {
  if (!m) return CAPCYCLE_OUTCOME_DRAW;
  switch (capcycle::series_outcome(m->table)) {
    case capcycle::SeriesOutcome::kAWins: return CAPCYCLE_OUTCOME_A_WINS;
    case capcycle::SeriesOutcome::kBWins: return CAPCYCLE_OUTCOME_B_WINS;
    case capcycle::SeriesOutcome::kDraw: break;
  }
  return CAPCYCLE_OUTCOME_DRAW;
}

capcycle_status capcycle_matchup_win_probability(const capcycle_matchup* m,
                                                 capcycle_tie_policy policy, uint64_t* num,
                                                 uint64_t* den) {
  return guarded([&] {
    require(m != nullptr && num != nullptr && den != nullptr, "null argument");
    const auto r = capcycle::win_probability(m->table, to_policy(policy));
    *num = r.num;
    *den = r.den;
  });
}

capcycle_status capcycle_matchup_render(const capcycle_matchup* m, capcycle_format format,
                                        const char* label_a, const char* label_b, char** out) {
  return guarded([&] {
    require(m != nullptr && out != nullptr, "null argument");
    capcycle::Labels labels;
    if (label_a) labels.a = label_a;
    if (label_b) labels.b = label_b;
    capcycle::MatchupFormat f = capcycle::MatchupFormat::kGrid;
    switch (format) {
      case CAPCYCLE_FORMAT_TEXT: break;
      case CAPCYCLE_FORMAT_JSON: f = capcycle::MatchupFormat::kJson; break;
      case CAPCYCLE_FORMAT_CSV: f = capcycle::MatchupFormat::kCsv; break;
      default: throw Error(ErrorCode::kInvalidArgument, "matchup format must be text, json or csv");
    }
    *out = dup_string(capcycle::emit_matchup(m->table, labels, f));
  });
}

capcycle_status capcycle_dominates(const capcycle_allocation* a, const capcycle_allocation* b,
                                   int* out) {
  return guarded([&] {
    require(a != nullptr && b != nullptr && out != nullptr, "null argument");
    *out = capcycle::dominates(a->value, b->value) ? 1 : 0;
  });
}

capcycle_status capcycle_graph_build(int64_t budget, size_t k, capcycle_graph** out) {
  return guarded([&] {
    require(out != nullptr, "out is null");
    *out = new capcycle_graph{capcycle::DominanceGraph::build(budget, k)};
  });
}

void capcycle_graph_destroy(capcycle_graph* g) { delete g; }

size_t capcycle_graph_node_count(const capcycle_graph* g) { return g ? g->graph.nodes().size() : 0; }

size_t capcycle_graph_edge_count(const capcycle_graph* g) { return g ? g->graph.edges().size() : 0; }

size_t capcycle_graph_draw_count(const capcycle_graph* g) { return g ? g->graph.draws().size() : 0; }

capcycle_status capcycle_graph_node(const capcycle_graph* g, size_t index, int64_t* values,
                                    size_t capacity) {
  return guarded([&] {
    require(g != nullptr && values != nullptr, "null argument");
    require(index < g->graph.nodes().size(), "node index out of range");
    const auto v = g->graph.nodes()[index].values();
    require(capacity >= v.size(), "capacity smaller than k");
    std::copy(v.begin(), v.end(), values);
  });
}

capcycle_status capcycle_graph_edge(const capcycle_graph* g, size_t index, size_t* winner,
                                    size_t* loser, uint64_t* margin) {
  return guarded([&] {
    require(g != nullptr, "graph is null");
    require(index < g->graph.edges().size(), "edge index out of range");
    const auto& e = g->graph.edges()[index];
    if (winner) *winner = e.winner;
    if (loser) *loser = e.loser;
    if (margin) *margin = e.margin;
  });
}

capcycle_status capcycle_graph_three_cycles(const capcycle_graph* g, size_t** triples_out,
                                            size_t* count_out) {
  return guarded([&] {
    require(g != nullptr && triples_out != nullptr && count_out != nullptr, "null argument");
    const auto cycles = capcycle::find_three_cycles(g->graph);
    auto* flat = malloc_array<size_t>(cycles.size() * 3);
    for (std::size_t c = 0; c < cycles.size(); ++c) std::copy_n(cycles[c].begin(), 3, flat + 3 * c);
    *triples_out = flat;
    *count_out = cycles.size();
  });
}

capcycle_status capcycle_graph_scc(const capcycle_graph* g, size_t** component_of,
                                   size_t* component_count) {
  return guarded([&] {
    require(g != nullptr && component_of != nullptr && component_count != nullptr, "null argument");
    const auto comps = capcycle::strongly_connected_components(g->graph);
    auto* ids = malloc_array<size_t>(g->graph.nodes().size());
    for (std::size_t c = 0; c < comps.size(); ++c) {
      for (std::size_t v : comps[c]) ids[v] = c;
    }
    *component_of = ids;
    *component_count = comps.size();
  });
}

capcycle_status capcycle_graph_claim(const capcycle_graph* g, int* holds, size_t** undominated_out,
                                     size_t* count_out) {
  return guarded([&] {
    require(g != nullptr && holds != nullptr, "null argument");
    std::vector<std::size_t> idx;
    for (std::size_t v = 0; v < g->graph.nodes().size(); ++v) {
      if (g->graph.in_degree(v) == 0) idx.push_back(v);
    }
    *holds = idx.empty() ? 1 : 0;
    if (undominated_out && count_out) {
      auto* flat = malloc_array<size_t>(idx.size());
      std::copy(idx.begin(), idx.end(), flat);
      *undominated_out = flat;
      *count_out = idx.size();
    }
  });
}

capcycle_status capcycle_graph_render(const capcycle_graph* g, capcycle_format format, char** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    switch (format) {
      case CAPCYCLE_FORMAT_DOT: *out = dup_string(capcycle::emit_dot(g->graph)); break;
      case CAPCYCLE_FORMAT_JSON: *out = dup_string(capcycle::emit_graph_json(g->graph)); break;
      default: throw Error(ErrorCode::kInvalidArgument, "graph format must be dot or json");
    }
  });
}

capcycle_status capcycle_counter_strategy(const capcycle_allocation* a, int64_t budget, int* found,
                                          capcycle_allocation** counter_out, uint64_t* margin) {
  return guarded([&] {
    require(a != nullptr && found != nullptr && counter_out != nullptr, "null argument");
    const auto c = capcycle::counter_strategy(a->value, budget);
    *found = c ? 1 : 0;
    *counter_out = c ? new capcycle_allocation{c->strategy.allocation()} : nullptr;
    if (margin) *margin = c ? c->margin : 0;
  });
}

capcycle_status capcycle_analyze(int64_t budget, size_t k, capcycle_format format, char** out) {
  return guarded([&] {
    require(out != nullptr, "out is null");
    capcycle::ReportFormat f = capcycle::ReportFormat::kText;
    switch (format) {
      case CAPCYCLE_FORMAT_TEXT: break;
      case CAPCYCLE_FORMAT_JSON: f = capcycle::ReportFormat::kJson; break;
      default: throw Error(ErrorCode::kInvalidArgument, "analysis format must be text or json");
    }
    *out = dup_string(capcycle::emit_analysis(budget, k, f));
  });
}

uint64_t capcycle_splitmix64_next(uint64_t* state) {
  const auto [next, output] = capcycle::prng_next(*state);
  *state = next;
  return output;
}

capcycle_status capcycle_simulate_games(const capcycle_allocation* a, const capcycle_allocation* b,
                                        const capcycle_sim_config* config,
                                        capcycle_sim_stats* stats) {
  return guarded([&] {
    require(a != nullptr && b != nullptr && config != nullptr && stats != nullptr, "null argument");
    copy_stats(capcycle::simulate_games(a->value, b->value, to_config(*config)), stats);
  });
}

capcycle_status capcycle_simulate_best_of(const capcycle_allocation* a, const capcycle_allocation* b,
                                          const capcycle_sim_config* config,
                                          capcycle_sim_stats* stats) {
  return guarded([&] {
    require(a != nullptr && b != nullptr && config != nullptr && stats != nullptr, "null argument");
    copy_stats(capcycle::simulate_best_of(a->value, b->value, to_config(*config)), stats);
  });
}

capcycle_status capcycle_simulate_render(const capcycle_allocation* a, const capcycle_allocation* b,
                                         const capcycle_sim_config* config, capcycle_format format,
                                         char** out) {
  return guarded([&] {
    require(a != nullptr && b != nullptr && config != nullptr && out != nullptr, "null argument");
    capcycle::ReportFormat f = capcycle::ReportFormat::kText;
    switch (format) {
      case CAPCYCLE_FORMAT_TEXT: break;
      case CAPCYCLE_FORMAT_JSON: f = capcycle::ReportFormat::kJson; break;
      default: throw Error(ErrorCode::kInvalidArgument, "simulation format must be text or json");
    }
    const auto report = capcycle::run_simulation(a->value, b->value, to_config(*config));
    *out = dup_string(capcycle::emit_simulation(report, f));
  });
}

}  // extern "C"
