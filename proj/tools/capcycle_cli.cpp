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

// capcycle: command-line front end over the C API.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "capcycle/capcycle.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBadAllocation = 2;
constexpr int kExitSpaceTooLarge = 3;

// Carries an exit code out of a subcommand.
struct CliFailure {
  int exit_code;
  std::string message;
};

struct AllocationDeleter {
  void operator()(capcycle_allocation* a) const { capcycle_allocation_destroy(a); }
};
using AllocationPtr = std::unique_ptr<capcycle_allocation, AllocationDeleter>;

struct MatchupDeleter {
  void operator()(capcycle_matchup* m) const { capcycle_matchup_destroy(m); }
};
using MatchupPtr = std::unique_ptr<capcycle_matchup, MatchupDeleter>;

struct GraphDeleter {
  void operator()(capcycle_graph* g) const { capcycle_graph_destroy(g); }
};
using GraphPtr = std::unique_ptr<capcycle_graph, GraphDeleter>;

struct CFree {
  void operator()(void* p) const { capcycle_free(p); }
};
using CString = std::unique_ptr<char, CFree>;

int exit_code_for(capcycle_status status) {
  switch (status) {
    case CAPCYCLE_OK: return kExitOk;
    case CAPCYCLE_ERR_SPACE_TOO_LARGE:
    case CAPCYCLE_ERR_OVERFLOW: return kExitSpaceTooLarge;
    case CAPCYCLE_ERR_EMPTY_ALLOCATION:
    case CAPCYCLE_ERR_NEGATIVE_ENTRY:
    case CAPCYCLE_ERR_PARSE: return kExitBadAllocation;
    default: return kExitUsage;
  }
}

void check(capcycle_status status) {
  if (status != CAPCYCLE_OK) {
    const std::string detail = capcycle_last_error();
    throw CliFailure{exit_code_for(status), detail.empty() ? capcycle_status_string(status) : detail};
  }
}

AllocationPtr parse_allocation(const std::string& flag, const std::string& text) {
  capcycle_allocation* raw = nullptr;
  const capcycle_status status = capcycle_allocation_parse(text.c_str(), &raw);
  if (status != CAPCYCLE_OK) {
    throw CliFailure{kExitBadAllocation, flag + ": " + capcycle_last_error()};
  }
  return AllocationPtr(raw);
}

std::string take(char* raw) {
  CString owned(raw);
  return owned ? std::string(owned.get()) : std::string();
}

void apply_space_limit_env() {
  const char* env = std::getenv("CAPCYCLE_MAX_SPACE");
  if (!env || !*env) return;
  std::uint64_t limit = 0;
  try {
    std::size_t used = 0;
    limit = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw CliFailure{kExitUsage, std::string("CAPCYCLE_MAX_SPACE is not a number: ") + env};
  }
  capcycle_set_space_limit(limit);
}

struct Options {
  std::string out_path;

  std::string a;
  std::string b;
  std::string label_a = "A";
  std::string label_b = "B";
  std::string format;

  std::int64_t budget = 6;
  std::size_t k = 3;
  bool partitions = false;
  std::optional<std::int64_t> counter_budget;

  std::uint64_t games = 0;
  std::uint64_t seed = 0;
  std::string tie_policy = "reroll";
  std::uint64_t best_of = 0;
  std::uint64_t series = 1;
};

std::string run_matchup(const Options& o) {
  const auto a = parse_allocation("--a", o.a);
  const auto b = parse_allocation("--b", o.b);
  capcycle_matchup* raw = nullptr;
  check(capcycle_matchup_create(a.get(), b.get(), &raw));
  const MatchupPtr m(raw);
  capcycle_format format = CAPCYCLE_FORMAT_TEXT;
  if (o.format == "json") format = CAPCYCLE_FORMAT_JSON;
  if (o.format == "csv") format = CAPCYCLE_FORMAT_CSV;
  char* text = nullptr;
  check(capcycle_matchup_render(m.get(), format, o.label_a.c_str(), o.label_b.c_str(), &text));
  return take(text);
}

std::string run_enumerate(const Options& o) {
  std::int64_t* values = nullptr;
  std::size_t count = 0;
  check(capcycle_enumerate(o.budget, o.k, o.partitions ? 1 : 0, &values, &count));
  const std::unique_ptr<std::int64_t, CFree> owned(values);
  std::string out;
  for (std::size_t r = 0; r < count; ++r) {
    for (std::size_t i = 0; i < o.k; ++i) {
      if (i) out += ',';
      out += std::to_string(values[r * o.k + i]);
    }
    out += '\n';
  }
  return out;
}

std::string run_graph(const Options& o) {
  capcycle_graph* raw = nullptr;
  check(capcycle_graph_build(o.budget, o.k, &raw));
  const GraphPtr g(raw);
  char* text = nullptr;
  check(capcycle_graph_render(g.get(), o.format == "json" ? CAPCYCLE_FORMAT_JSON : CAPCYCLE_FORMAT_DOT,
                              &text));
  return take(text);
}

std::string values_string(const capcycle_allocation* a) {
  std::vector<std::int64_t> v(capcycle_allocation_k(a));
  capcycle_allocation_values(a, v.data(), v.size());
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

std::string run_counter(const Options& o) {
  const auto a = parse_allocation("--a", o.a);
  const std::int64_t budget = o.counter_budget.value_or(capcycle_allocation_budget(a.get()));
  int found = 0;
  capcycle_allocation* raw = nullptr;
  std::uint64_t margin = 0;
  check(capcycle_counter_strategy(a.get(), budget, &found, &raw, &margin));
  const AllocationPtr counter(raw);
  if (!found) return "counter: none (no same-cap strict dominator of " + values_string(a.get()) + ")\n";
  return "counter: " + values_string(counter.get()) + " (margin " + std::to_string(margin) + ")\n";
}

std::string run_analyze(const Options& o) {
  char* text = nullptr;
  check(capcycle_analyze(o.budget, o.k, o.format == "json" ? CAPCYCLE_FORMAT_JSON : CAPCYCLE_FORMAT_TEXT,
                         &text));
  return take(text);
}

std::string run_simulate(const Options& o) {
  const auto a = parse_allocation("--a", o.a);
  const auto b = parse_allocation("--b", o.b);
  capcycle_sim_config config{};
  config.seed = o.seed;
  config.n_games = o.games;
  config.tie_policy = o.tie_policy == "nogame" ? CAPCYCLE_TIE_NO_GAME : CAPCYCLE_TIE_REROLL;
  config.best_of = o.best_of;
  config.n_series = o.series;
  if (o.best_of != 0 && o.best_of % 2 == 0) {
    throw CliFailure{kExitUsage, "--best-of must be odd"};
  }
  char* text = nullptr;
  check(capcycle_simulate_render(a.get(), b.get(), &config,
                                 o.format == "json" ? CAPCYCLE_FORMAT_JSON : CAPCYCLE_FORMAT_TEXT, &text));
  return take(text);
}

void add_space_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--budget", o.budget, "salary cap (default 6)")->check(CLI::NonNegativeNumber);
  cmd->add_option("--k", o.k, "number of categories (default 3)")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of budget-constrained intransitive allocation games", "capcycle"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--out", o.out_path, "write results to this file instead of stdout");

  auto* matchup = app.add_subcommand("matchup", "k x k matchup grid between two allocations");
  matchup->add_option("--a", o.a, "allocation A, e.g. 1,1,4")->required();
  matchup->add_option("--b", o.b, "allocation B, e.g. 3,3,0")->required();
  matchup->add_option("--format", o.format, "grid|json|csv")
      ->check(CLI::IsMember({"grid", "json", "csv"}));
  matchup->add_option("--label-a", o.label_a, "display name for A");
  matchup->add_option("--label-b", o.label_b, "display name for B");

  auto* enumerate = app.add_subcommand("enumerate", "list every allocation under the cap");
  add_space_options(enumerate, o);
  enumerate->add_flag("--partitions", o.partitions, "list canonical (non-increasing) forms only");

  auto* graph = app.add_subcommand("graph", "dominance digraph over all partitions");
  add_space_options(graph, o);
  graph->add_option("--format", o.format, "dot|json")->check(CLI::IsMember({"dot", "json"}));

  auto* counter = app.add_subcommand("counter", "best same-cap counter-strategy");
  counter->add_option("--a", o.a, "allocation to beat")->required();
  counter->add_option("--budget", o.counter_budget, "cap (defaults to the sum of --a)");

  auto* analyze = app.add_subcommand("analyze", "full strategy-space report");
  add_space_options(analyze, o);
  analyze->add_option("--format", o.format, "text|json")->check(CLI::IsMember({"text", "json"}));

  auto* simulate = app.add_subcommand("simulate", "seeded Monte Carlo games and series");
  simulate->add_option("--a", o.a, "allocation A")->required();
  simulate->add_option("--b", o.b, "allocation B")->required();
  simulate->add_option("--games", o.games, "number of games")->required()->check(CLI::PositiveNumber);
  simulate->add_option("--seed", o.seed, "64-bit seed")->required();
  simulate->add_option("--tie-policy", o.tie_policy, "reroll|nogame")
      ->check(CLI::IsMember({"reroll", "nogame"}));
  simulate->add_option("--best-of", o.best_of, "odd series length")->check(CLI::PositiveNumber);
  simulate->add_option("--series", o.series, "number of independent series")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--format", o.format, "text|json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "capcycle: error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    apply_space_limit_env();
    std::string output;
    if (*matchup) output = run_matchup(o);
    if (*enumerate) output = run_enumerate(o);
    if (*graph) output = run_graph(o);
    if (*counter) output = run_counter(o);
    if (*analyze) output = run_analyze(o);
    if (*simulate) output = run_simulate(o);

    if (o.out_path.empty()) {
      std::cout << output;
    } else {
      std::ofstream file(o.out_path, std::ios::binary);
      if (!file || !(file << output)) throw CliFailure{kExitUsage, "cannot write " + o.out_path};
    }
  } catch (const CliFailure& f) {
    std::cerr << "capcycle: error: " << f.message << "\n";
    return f.exit_code;
  }
  return kExitOk;
}
