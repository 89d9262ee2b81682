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
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "capcycle/alloc.hpp"
#include "capcycle/dominance.hpp"
#include "capcycle/matchup.hpp"
#include "capcycle/sim.hpp"

namespace capcycle {

// Display names for the two sides of a matchup.
struct Labels {
  std::string a = "A";
  std::string b = "B";
};

enum class MatchupFormat { kGrid, kJson, kCsv };
enum class ReportFormat { kText, kJson };

// (k+1) x (k+1) chart: b's values across the top, a's values down the side,
// each interior cell naming the winning side or "tie".
std::string emit_matchup_grid(const MatchupTable& t, const Labels& labels);
std::string emit_matchup_csv(const MatchupTable& t, const Labels& labels);
std::string emit_matchup_json(const MatchupTable& t, const Labels& labels);
// "A wins 5, B wins 4, ties 0; outcome: A"
std::string matchup_summary(const MatchupTable& t, const Labels& labels);
// Grid plus summary, exact probabilities and an unequal-budget note.
std::string emit_matchup(const MatchupTable& t, const Labels& labels, MatchupFormat format);

// One allocation per line, "6,0,0".
std::string emit_enumeration(Value budget, std::size_t k, bool partitions);

// Node lines, margin-labelled directed edges, dashed undirected draws.
std::string emit_dot(const DominanceGraph& g);

struct CounterRow {
  Partition target;
  std::optional<Counter> counter;

  friend bool operator==(const CounterRow&, const CounterRow&) = default;
};

struct TeamResult {
  std::string winner;
  std::string loser;
  std::uint64_t winner_wins = 0;
  std::uint64_t loser_wins = 0;

  friend bool operator==(const TeamResult&, const TeamResult&) = default;
};

// Named three-team check reported alongside the universal check when the
// space is the hockey example's (budget 6, k 3).
struct TeamsCheck {
  std::vector<std::pair<std::string, Allocation>> teams;
  std::vector<TeamResult> results;
  bool each_dominated = false;

  friend bool operator==(const TeamsCheck&, const TeamsCheck&) = default;
};

struct AnalysisReport {
  Value budget = 0;
  std::size_t k = 0;
  std::optional<std::uint64_t> composition_count;  // empty past 2^64
  std::uint64_t partition_count = 0;
  std::vector<Partition> nodes;
  std::vector<Edge> edges;
  std::vector<std::pair<std::size_t, std::size_t>> draws;
  std::vector<Triple> three_cycles;
  std::vector<std::vector<std::size_t>> scc;
  std::vector<std::size_t> scc_sizes;
  std::vector<Partition> undominated;
  ClaimVerdict claim;
  std::vector<CounterRow> counters;
  std::optional<TeamsCheck> teams;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

AnalysisReport analyze(Value budget, std::size_t k);
AnalysisReport analyze(const DominanceGraph& g);

// Graph export: budget, k, nodes, edges, draws, three_cycles, scc,
// undominated, claim.
std::string emit_graph_json(const DominanceGraph& g);

// Graph export fields plus counts, scc sizes, the counter table and the
// three-team check.
std::string to_json(const AnalysisReport& report);
std::string to_text(const AnalysisReport& report);
// Throws kParse on malformed input.
AnalysisReport report_from_json(std::string_view json);

std::string emit_analysis(Value budget, std::size_t k, ReportFormat format);

struct SimulationReport {
  Allocation a;
  Allocation b;
  SimConfig config;
  SeriesStats games;
  std::optional<SeriesStats> series;
  ExactRatio exact_p;  // under config.tie_policy
};

// simulate_games, plus simulate_best_of when config.best_of is set.
SimulationReport run_simulation(const Allocation& a, const Allocation& b, const SimConfig& config);
std::string emit_simulation(const SimulationReport& report, ReportFormat format);

}  // namespace capcycle
