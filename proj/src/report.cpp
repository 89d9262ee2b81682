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

#include "capcycle/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "capcycle/error.hpp"

namespace capcycle {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::size_t kTextListLimit = 20;

std::string paren(const Partition& p) { return "(" + p.to_string() + ")"; }

const std::string& cell_label(Cell c, const Labels& labels) {
  static const std::string kTie = "tie";
  switch (c) {
    case Cell::kAWin: return labels.a;
    case Cell::kBWin: return labels.b;
    case Cell::kTie: break;
  }
  return kTie;
}

std::string outcome_label(SeriesOutcome o, const Labels& labels) {
  switch (o) {
    case SeriesOutcome::kAWins: return labels.a;
    case SeriesOutcome::kBWins: return labels.b;
    case SeriesOutcome::kDraw: break;
  }
  return "draw";
}

std::string pad(const std::string& s, std::size_t width) {
  return s + std::string(width > s.size() ? width - s.size() : 0, ' ');
}

std::string rstrip(std::string s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

Json values_json(std::span<const Value> v) { return Json(std::vector<Value>(v.begin(), v.end())); }

Json ratio_json(const ExactRatio& r) { return Json{{"num", r.num}, {"den", r.den}}; }

Partition partition_from_json(const Json& j) {
  return Partition::from_sorted(j.get<std::vector<Value>>());
}

// The hockey example: goalie-heavy, balanced, offence/defence-heavy.
std::vector<std::pair<std::string, Allocation>> example_teams() {
  return {{"MTL", Allocation::from_values({1, 1, 4})},
          {"BOS", Allocation::from_values({2, 2, 2})},
          {"NY", Allocation::from_values({3, 3, 0})}};
}

TeamsCheck check_teams(std::vector<std::pair<std::string, Allocation>> teams) {
  TeamsCheck check;
  std::vector<bool> beaten(teams.size(), false);
  // Pairs in the order MTL-BOS, BOS-NY, NY-MTL so results read as a loop.
  for (std::size_t i = 0; i < teams.size(); ++i) {
    const std::size_t j = (i + 1) % teams.size();
    const MatchupCounts c = matchup_counts(teams[i].second.values(), teams[j].second.values());
    switch (series_outcome(c)) {
      case SeriesOutcome::kAWins:
        check.results.push_back({teams[i].first, teams[j].first, c.wins_a, c.wins_b});
        beaten[j] = true;
        break;
      case SeriesOutcome::kBWins:
        check.results.push_back({teams[j].first, teams[i].first, c.wins_b, c.wins_a});
        beaten[i] = true;
        break;
      case SeriesOutcome::kDraw:
        break;
    }
  }
  check.each_dominated = std::all_of(beaten.begin(), beaten.end(), [](bool b) { return b; });
  check.teams = std::move(teams);
  return check;
}

Json graph_json(const AnalysisReport& r) {
  Json j;
  j["budget"] = r.budget;
  j["k"] = r.k;
  Json nodes = Json::array();
  for (const auto& p : r.nodes) nodes.push_back(values_json(p.values()));
  j["nodes"] = std::move(nodes);
  Json edges = Json::array();
  for (const auto& e : r.edges) {
    edges.push_back(Json{{"winner", e.winner},
                         {"loser", e.loser},
                         {"margin", e.margin},
                         {"score", {e.winner_wins, e.loser_wins}}});
  }
  j["edges"] = std::move(edges);
  Json draws = Json::array();
  for (const auto& [x, y] : r.draws) draws.push_back({x, y});
  j["draws"] = std::move(draws);
  Json cycles = Json::array();
  for (const auto& t : r.three_cycles) cycles.push_back({t[0], t[1], t[2]});
  j["three_cycles"] = std::move(cycles);
  j["scc"] = r.scc;
  Json und = Json::array();
  for (const auto& p : r.undominated) und.push_back(values_json(p.values()));
  j["undominated"] = std::move(und);
  Json ce = Json::array();
  for (const auto& p : r.claim.counterexamples) ce.push_back(values_json(p.values()));
  j["claim"] = Json{{"holds", r.claim.holds}, {"counterexamples", std::move(ce)}};
  return j;
}

}  // namespace

std::string emit_matchup_grid(const MatchupTable& t, const Labels& labels) {
  const std::size_t k = t.k();
  const std::string corner = labels.a + "\\" + labels.b;
  std::size_t head_w = corner.size();
  for (Value v : t.a_values()) head_w = std::max(head_w, std::to_string(v).size());
  std::size_t cell_w = std::max({labels.a.size(), labels.b.size(), std::string("tie").size()});
  for (Value v : t.b_values()) cell_w = std::max(cell_w, std::to_string(v).size());

  std::string out;
  std::string line = pad(corner, head_w);
  for (Value v : t.b_values()) line += "  " + pad(std::to_string(v), cell_w);
  out += rstrip(line) + "\n";
  for (std::size_t i = 0; i < k; ++i) {
    line = pad(std::to_string(t.a_values()[i]), head_w);
    for (std::size_t j = 0; j < k; ++j) line += "  " + pad(cell_label(t.cell(i, j), labels), cell_w);
    out += rstrip(line) + "\n";
  }
  return out;
}

std::string emit_matchup_csv(const MatchupTable& t, const Labels& labels) {
  std::string out = labels.a + "\\" + labels.b;
  for (Value v : t.b_values()) out += "," + std::to_string(v);
  out += "\n";
  for (std::size_t i = 0; i < t.k(); ++i) {
    out += std::to_string(t.a_values()[i]);
    for (std::size_t j = 0; j < t.k(); ++j) out += "," + cell_label(t.cell(i, j), labels);
    out += "\n";
  }
  return out;
}

std::string emit_matchup_json(const MatchupTable& t, const Labels& labels) {
  Json j;
  j["a"] = values_json(t.a_values());
  j["b"] = values_json(t.b_values());
  j["labels"] = Json{{"a", labels.a}, {"b", labels.b}};
  Json cells = Json::array();
  for (std::size_t i = 0; i < t.k(); ++i) {
    Json row = Json::array();
    for (std::size_t jj = 0; jj < t.k(); ++jj) {
      const Cell c = t.cell(i, jj);
      row.push_back(c == Cell::kAWin ? "A" : c == Cell::kBWin ? "B" : "tie");
    }
    cells.push_back(std::move(row));
  }
  j["cells"] = std::move(cells);
  j["wins_a"] = t.wins_a();
  j["wins_b"] = t.wins_b();
  j["ties"] = t.ties();
  j["outcome"] = to_string(series_outcome(t));
  j["equal_budget"] = t.a_budget() == t.b_budget();
  if (t.wins_a() + t.wins_b() > 0) {
    j["p_reroll"] = ratio_json(win_probability(t, TiePolicy::kReroll));
  } else {
    j["p_reroll"] = nullptr;
  }
  j["p_nogame"] = ratio_json(win_probability(t, TiePolicy::kCountAsNoGame));
  return j.dump(2) + "\n";
}

std::string matchup_summary(const MatchupTable& t, const Labels& labels) {
  std::ostringstream os;
  os << labels.a << " wins " << t.wins_a() << ", " << labels.b << " wins " << t.wins_b()
     << ", ties " << t.ties() << "; outcome: " << outcome_label(series_outcome(t), labels);
  return os.str();
}

std::string emit_matchup(const MatchupTable& t, const Labels& labels, MatchupFormat format) {
  switch (format) {
    case MatchupFormat::kJson: return emit_matchup_json(t, labels);
    case MatchupFormat::kCsv: return emit_matchup_csv(t, labels);
    case MatchupFormat::kGrid: break;
  }
  std::string out = emit_matchup_grid(t, labels);
  out += matchup_summary(t, labels) + "\n";
  if (t.wins_a() + t.wins_b() > 0) {
    out += "P(" + labels.a + " wins a game), reroll ties: " +
           win_probability(t, TiePolicy::kReroll).to_string() + "\n";
  }
  out += "P(" + labels.a + " wins a roll), ties as no game: " +
         win_probability(t, TiePolicy::kCountAsNoGame).to_string() + "\n";
  if (t.a_budget() != t.b_budget()) {
    out += "note: unequal budgets (" + std::to_string(t.a_budget()) + " vs " +
           std::to_string(t.b_budget()) + ")\n";
  }
  return out;
}

std::string emit_enumeration(Value budget, std::size_t k, bool partitions) {
  std::string out;
  if (partitions) {
    for (const auto& p : enumerate_partitions(budget, k)) out += p.to_string() + "\n";
  } else {
    for (const auto& a : enumerate_compositions(budget, k)) out += a.to_string() + "\n";
  }
  return out;
}

std::string emit_dot(const DominanceGraph& g) {
  std::ostringstream os;
  os << "digraph dominance {\n";
  os << "  label=\"budget " << g.budget() << ", k " << g.k() << "\";\n";
  for (std::size_t i = 0; i < g.nodes().size(); ++i) {
    os << "  n" << i << " [label=\"" << paren(g.nodes()[i]) << "\"];\n";
  }
  for (const auto& e : g.edges()) {
    os << "  n" << e.winner << " -> n" << e.loser << " [label=\"" << e.winner_wins << "-"
       << e.loser_wins << "\"];\n";
  }
  for (const auto& [x, y] : g.draws()) {
    os << "  n" << x << " -> n" << y << " [dir=none, style=dashed];\n";
  }
  os << "}\n";
  return os.str();
}

AnalysisReport analyze(const DominanceGraph& g) {
  AnalysisReport r;
  r.budget = g.budget();
  r.k = g.k();
  try {
    r.composition_count = composition_count(g.budget(), g.k());
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kOverflow) throw;
  }
  r.partition_count = g.nodes().size();
  r.nodes = g.nodes();
  r.edges = g.edges();
  r.draws = g.draws();
  r.three_cycles = find_three_cycles(g);
  r.scc = strongly_connected_components(g);
  for (const auto& c : r.scc) r.scc_sizes.push_back(c.size());
  std::sort(r.scc_sizes.begin(), r.scc_sizes.end(), std::greater<>());
  r.undominated = undominated(g);
  r.claim = claim_verdict(g);
  r.counters.reserve(g.nodes().size());
  for (std::size_t v = 0; v < g.nodes().size(); ++v) {
    r.counters.push_back({g.nodes()[v], counter_in_graph(g, v)});
  }
  if (g.budget() == 6 && g.k() == 3) r.teams = check_teams(example_teams());
  return r;
}

AnalysisReport analyze(Value budget, std::size_t k) { return analyze(DominanceGraph::build(budget, k)); }

std::string emit_graph_json(const DominanceGraph& g) { return graph_json(analyze(g)).dump() + "\n"; }

std::string to_json(const AnalysisReport& r) {
  Json j;
  j["budget"] = r.budget;
  j["k"] = r.k;
  j["composition_count"] = r.composition_count ? Json(*r.composition_count) : Json(nullptr);
  j["partition_count"] = r.partition_count;
  j["edge_count"] = r.edges.size();
  j["draw_count"] = r.draws.size();
  j["three_cycle_count"] = r.three_cycles.size();
  Json graph = graph_json(r);
  for (auto it = graph.begin(); it != graph.end(); ++it) {
    if (it.key() != "budget" && it.key() != "k") j[it.key()] = std::move(it.value());
  }
  j["scc_sizes"] = r.scc_sizes;
  Json counters = Json::array();
  for (const auto& row : r.counters) {
    Json c;
    c["target"] = values_json(row.target.values());
    c["counter"] = row.counter ? values_json(row.counter->strategy.values()) : Json(nullptr);
    c["margin"] = row.counter ? Json(row.counter->margin) : Json(nullptr);
    counters.push_back(std::move(c));
  }
  j["counters"] = std::move(counters);
  if (r.teams) {
    Json teams = Json::array();
    for (const auto& [name, alloc] : r.teams->teams) {
      teams.push_back(Json{{"name", name}, {"allocation", values_json(alloc.values())}});
    }
    Json results = Json::array();
    for (const auto& res : r.teams->results) {
      results.push_back(Json{{"winner", res.winner},
                             {"loser", res.loser},
                             {"score", {res.winner_wins, res.loser_wins}}});
    }
    j["teams"] = Json{{"teams", std::move(teams)},
                      {"results", std::move(results)},
                      {"each_dominated", r.teams->each_dominated}};
  } else {
    j["teams"] = nullptr;
  }
  return j.dump() + "\n";
}

AnalysisReport report_from_json(std::string_view text) {
  try {
    const Json j = Json::parse(text);
    AnalysisReport r;
    r.budget = j.at("budget").get<Value>();
    r.k = j.at("k").get<std::size_t>();
    if (!j.at("composition_count").is_null()) {
      r.composition_count = j.at("composition_count").get<std::uint64_t>();
    }
    r.partition_count = j.at("partition_count").get<std::uint64_t>();
    for (const auto& n : j.at("nodes")) r.nodes.push_back(partition_from_json(n));
    for (const auto& e : j.at("edges")) {
      r.edges.push_back({e.at("winner").get<std::size_t>(), e.at("loser").get<std::size_t>(),
                         e.at("margin").get<std::uint64_t>(), e.at("score").at(0).get<std::uint64_t>(),
                         e.at("score").at(1).get<std::uint64_t>()});
    }
    for (const auto& d : j.at("draws")) {
      r.draws.emplace_back(d.at(0).get<std::size_t>(), d.at(1).get<std::size_t>());
    }
    for (const auto& t : j.at("three_cycles")) {
      r.three_cycles.push_back({t.at(0).get<std::size_t>(), t.at(1).get<std::size_t>(),
                                t.at(2).get<std::size_t>()});
    }
    r.scc = j.at("scc").get<std::vector<std::vector<std::size_t>>>();
    r.scc_sizes = j.at("scc_sizes").get<std::vector<std::size_t>>();
    for (const auto& p : j.at("undominated")) r.undominated.push_back(partition_from_json(p));
    r.claim.budget = r.budget;
    r.claim.k = r.k;
    r.claim.holds = j.at("claim").at("holds").get<bool>();
    for (const auto& p : j.at("claim").at("counterexamples")) {
      r.claim.counterexamples.push_back(partition_from_json(p));
    }
    for (const auto& c : j.at("counters")) {
      CounterRow row{partition_from_json(c.at("target")), std::nullopt};
      if (!c.at("counter").is_null()) {
        row.counter = Counter{partition_from_json(c.at("counter")), c.at("margin").get<std::uint64_t>()};
      }
      r.counters.push_back(std::move(row));
    }
    if (!j.at("teams").is_null()) {
      TeamsCheck check;
      const Json& t = j.at("teams");
      for (const auto& team : t.at("teams")) {
        check.teams.emplace_back(team.at("name").get<std::string>(),
                                 Allocation::from_values(team.at("allocation").get<std::vector<Value>>()));
      }
      for (const auto& res : t.at("results")) {
        check.results.push_back({res.at("winner").get<std::string>(), res.at("loser").get<std::string>(),
                                 res.at("score").at(0).get<std::uint64_t>(),
                                 res.at("score").at(1).get<std::uint64_t>()});
      }
      check.each_dominated = t.at("each_dominated").get<bool>();
      r.teams = std::move(check);
    }
    return r;
  } catch (const Error& e) {
    throw Error(ErrorCode::kParse, std::string("invalid analysis report: ") + e.what());
  } catch (const std::exception& e) {
    throw Error(ErrorCode::kParse, std::string("invalid analysis report: ") + e.what());
  }
}

std::string to_text(const AnalysisReport& r) {
  std::ostringstream os;
  auto cycle_str = [&](const Triple& t) {
    return paren(r.nodes[t[0]]) + " -> " + paren(r.nodes[t[1]]) + " -> " + paren(r.nodes[t[2]]) +
           " -> " + paren(r.nodes[t[0]]);
  };
  auto join = [&](const std::vector<Partition>& ps) {
    std::string s;
    for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? ", " : "") + paren(ps[i]);
    return s.empty() ? std::string("none") : s;
  };

  os << "strategy space: budget " << r.budget << ", k " << r.k << "\n";
  os << "compositions: "
     << (r.composition_count ? std::to_string(*r.composition_count) : std::string(">= 2^64")) << "\n";
  os << "partitions: " << r.partition_count << "\n";
  os << "strict edges: " << r.edges.size() << "\n";
  os << "draw pairs: " << r.draws.size() << "\n";

  os << "three-cycles: " << r.three_cycles.size() << "\n";
  for (std::size_t i = 0; i < std::min(r.three_cycles.size(), kTextListLimit); ++i) {
    os << "  " << cycle_str(r.three_cycles[i]) << "\n";
  }
  if (r.three_cycles.size() > kTextListLimit) {
    os << "  ... " << r.three_cycles.size() - kTextListLimit << " more\n";
  }

  os << "strongly connected components: " << r.scc.size() << ", sizes";
  for (std::size_t i = 0; i < r.scc_sizes.size(); ++i) os << (i ? "," : " ") << r.scc_sizes[i];
  os << "\n";
  std::size_t shown = 0;
  for (const auto& comp : r.scc) {
    if (comp.size() < 2) continue;
    if (shown++ == kTextListLimit) {
      os << "  ...\n";
      break;
    }
    os << "  {";
    for (std::size_t i = 0; i < comp.size(); ++i) os << (i ? "," : "") << paren(r.nodes[comp[i]]);
    os << "}\n";
  }

  os << "undominated: " << join(r.undominated) << "\n";
  if (r.claim.holds) {
    os << "universal counter claim: HOLDS; every strategy has a same-cap strict dominator\n";
  } else {
    os << "universal counter claim: DOES NOT HOLD; strategies with no same-cap strict dominator: "
       << join(r.claim.counterexamples) << "\n";
  }

  if (r.teams) {
    os << "three teams:";
    for (std::size_t i = 0; i < r.teams->results.size(); ++i) {
      const auto& res = r.teams->results[i];
      os << (i ? "; " : " ") << res.winner << " beats " << res.loser << " " << res.winner_wins << "-"
         << res.loser_wins;
    }
    os << "\n";
    os << "three-team counter claim: " << (r.teams->each_dominated ? "HOLDS" : "DOES NOT HOLD")
       << "; each team is beaten by another of the three\n";
  }

  os << "counter-strategies (target <- counter, margin):\n";
  for (const auto& row : r.counters) {
    os << "  " << paren(row.target) << " <- ";
    if (row.counter) {
      os << paren(row.counter->strategy) << " margin " << row.counter->margin << "\n";
    } else {
      os << "none\n";
    }
  }
  return os.str();
}

std::string emit_analysis(Value budget, std::size_t k, ReportFormat format) {
  const AnalysisReport r = analyze(budget, k);
  return format == ReportFormat::kJson ? to_json(r) : to_text(r);
}

SimulationReport run_simulation(const Allocation& a, const Allocation& b, const SimConfig& config) {
  const MatchupTable t = matchup_table(a, b);
  SimulationReport r{a, b, config, simulate_games(a, b, config), std::nullopt,
                     win_probability(t, config.tie_policy)};
  if (config.best_of) r.series = simulate_best_of(a, b, config);
  return r;
}

std::string emit_simulation(const SimulationReport& r, ReportFormat format) {
  const auto& c = r.config;
  if (format == ReportFormat::kJson) {
    Json s;
    s["seed"] = c.seed;
    s["n_games"] = c.n_games;
    s["tie_policy"] = to_string(c.tie_policy);
    s["best_of"] = c.best_of ? Json(*c.best_of) : Json(nullptr);
    s["n_series"] = c.n_series;
    s["games_played"] = r.games.games_played;
    s["a_game_wins"] = r.games.a_game_wins;
    s["b_game_wins"] = r.games.b_game_wins;
    s["tie_games"] = r.games.tie_games;
    s["a_series_wins"] = r.series ? Json(r.series->a_series_wins) : Json(nullptr);
    s["b_series_wins"] = r.series ? Json(r.series->b_series_wins) : Json(nullptr);
    s["exact_p"] = ratio_json(r.exact_p);
    const auto freq = r.games.empirical_a_frequency();
    s["empirical_a_frequency"] = freq ? Json(*freq) : Json(nullptr);
    Json j;
    j["a"] = values_json(r.a.values());
    j["b"] = values_json(r.b.values());
    j["simulation"] = std::move(s);
    return j.dump(2) + "\n";
  }

  std::ostringstream os;
  char buf[64];
  os << "simulate A=" << r.a.to_string() << " vs B=" << r.b.to_string() << ", seed " << c.seed
     << ", ties " << to_string(c.tie_policy) << "\n";
  os << "games: " << r.games.games_played << " played, A " << r.games.a_game_wins << ", B "
     << r.games.b_game_wins << ", "
     << (c.tie_policy == TiePolicy::kReroll ? "rerolled ties " : "tied ") << r.games.tie_games
     << "\n";
  if (const auto freq = r.games.empirical_a_frequency()) {
    std::snprintf(buf, sizeof buf, "%.4f", *freq);
    os << "empirical A frequency: " << buf << "; exact " << r.exact_p.to_string() << "\n";
  } else {
    os << "empirical A frequency: undefined (no decisive games); exact " << r.exact_p.to_string()
       << "\n";
  }
  if (r.series) {
    os << "series: best of " << *c.best_of << " x " << c.n_series << ", A " << r.series->a_series_wins
       << ", B " << r.series->b_series_wins << "\n";
  }
  return os.str();
}

}  // namespace capcycle
