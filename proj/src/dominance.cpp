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

#include "capcycle/dominance.hpp"

#include <algorithm>
#include <bit>

#include "capcycle/error.hpp"
#include "capcycle/matchup.hpp"

namespace capcycle {
namespace {

// Both inputs ascending. Two-pointer sweep counting, for each a value, how
// many b values lie strictly below it and how many equal it.
MatchupCounts sorted_counts(std::span<const Value> a, std::span<const Value> b) {
  const std::size_t k = a.size();
  MatchupCounts c;
  std::size_t below = 0;
  std::size_t upto = 0;
  for (Value x : a) {
    while (below < k && b[below] < x) ++below;
    if (upto < below) upto = below;
    while (upto < k && b[upto] == x) ++upto;
    c.wins_a += below;
    c.ties += upto - below;
    c.wins_b += k - upto;
  }
  return c;
}

// Lexicographically ascending partitions have descending node indices.
bool lex_less(std::size_t lhs, std::size_t rhs) { return lhs > rhs; }

}  // namespace

DominanceGraph DominanceGraph::build(Value budget, std::size_t k) {
  return build(budget, k, space_limit());
}

DominanceGraph DominanceGraph::build(Value budget, std::size_t k, std::uint64_t limit) {
  DominanceGraph g;
  g.budget_ = budget;
  g.k_ = k;
  g.nodes_ = enumerate_partitions(budget, k, limit);
  const std::size_t n = g.nodes_.size();
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (pairs > limit) {
    throw Error(ErrorCode::kSpaceTooLarge, std::to_string(n) + " partitions give " +
                                               std::to_string(pairs) + " pairs, limit is " +
                                               std::to_string(limit));
  }

  std::vector<std::vector<Value>> ascending;
  ascending.reserve(n);
  for (const auto& p : g.nodes_) ascending.emplace_back(p.values().rbegin(), p.values().rend());

  g.words_ = (n + 63) / 64;
  g.out_bits_.assign(n * g.words_, 0);
  g.in_bits_.assign(n * g.words_, 0);
  g.in_edges_.resize(n);
  g.succ_.resize(n);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const MatchupCounts c = sorted_counts(ascending[i], ascending[j]);
      if (c.wins_a > c.wins_b) {
        g.edges_.push_back({i, j, c.wins_a - c.wins_b, c.wins_a, c.wins_b});
      } else if (c.wins_b > c.wins_a) {
        g.edges_.push_back({j, i, c.wins_b - c.wins_a, c.wins_b, c.wins_a});
      } else {
        g.draws_.emplace_back(i, j);
      }
    }
  }
  std::sort(g.edges_.begin(), g.edges_.end(), [](const Edge& x, const Edge& y) {
    return std::pair(x.winner, x.loser) < std::pair(y.winner, y.loser);
  });
  for (std::size_t e = 0; e < g.edges_.size(); ++e) {
    const std::size_t w = g.edges_[e].winner;
    const std::size_t l = g.edges_[e].loser;
    g.out_bits_[w * g.words_ + l / 64] |= std::uint64_t{1} << (l % 64);
    g.in_bits_[l * g.words_ + w / 64] |= std::uint64_t{1} << (w % 64);
    g.in_edges_[l].push_back(e);
    g.succ_[w].push_back(l);
  }
  return g;
}

std::size_t DominanceGraph::find_node(const Partition& p) const {
  // nodes_ is strictly descending.
  const auto it = std::lower_bound(nodes_.begin(), nodes_.end(), p, std::greater<>());
  if (it == nodes_.end() || *it != p) return npos;
  return static_cast<std::size_t>(it - nodes_.begin());
}

DominanceGraph build_graph(Value budget, std::size_t k) { return DominanceGraph::build(budget, k); }

std::vector<Triple> find_three_cycles(const DominanceGraph& g) {
  const std::size_t n = g.nodes().size();
  const std::size_t words = g.words();
  std::vector<Triple> cycles;
  // Enumerate each cycle from its minimum index x: x -> y -> z -> x with
  // y, z > x.
  for (std::size_t x = 0; x < n; ++x) {
    const std::uint64_t* into_x = g.in_row(x);
    for (std::size_t y : g.successors(x)) {
      if (y < x) continue;
      const std::uint64_t* from_y = g.out_row(y);
      for (std::size_t w = x / 64; w < words; ++w) {
        std::uint64_t bits = from_y[w] & into_x[w];
        if (w == x / 64) bits &= (~std::uint64_t{0} << (x % 64)) << 1;  // z > x
        while (bits) {
          const std::size_t z = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
          bits &= bits - 1;
          // Rotate so the largest index (smallest partition) leads.
          if (y > z) {
            cycles.push_back({y, z, x});
          } else {
            cycles.push_back({z, x, y});
          }
        }
      }
    }
  }
  std::sort(cycles.begin(), cycles.end(), [](const Triple& lhs, const Triple& rhs) {
    return std::lexicographical_compare(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(), lex_less);
  });
  return cycles;
}

std::vector<std::vector<std::size_t>> strongly_connected_components(const DominanceGraph& g) {
  const std::size_t n = g.nodes().size();
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnvisited);
  std::vector<std::size_t> low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> components;
  std::size_t next_index = 0;

  // Iterative Tarjan; each frame is (node, position in its successor list).
  std::vector<std::pair<std::size_t, std::size_t>> frames;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    frames.emplace_back(root, 0);
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      const auto& succ = g.successors(v);
      if (pos < succ.size()) {
        const std::size_t w = succ[pos++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const std::size_t done = v;
      frames.pop_back();
      if (!frames.empty()) {
        const std::size_t parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        std::vector<std::size_t> comp;
        std::size_t w = 0;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != done);
        std::sort(comp.begin(), comp.end(), lex_less);
        components.push_back(std::move(comp));
      }
    }
  }
  std::sort(components.begin(), components.end(),
            [](const auto& lhs, const auto& rhs) { return lex_less(lhs.front(), rhs.front()); });
  return components;
}

std::vector<Partition> undominated(const DominanceGraph& g) {
  std::vector<Partition> out;
  for (std::size_t v = 0; v < g.nodes().size(); ++v) {
    if (g.in_degree(v) == 0) out.push_back(g.nodes()[v]);
  }
  return out;
}

std::optional<Counter> counter_strategy(const Allocation& a, Value budget) {
  if (budget != a.budget()) {
    throw Error(ErrorCode::kInvalidArgument,
                "counter budget " + std::to_string(budget) + " differs from allocation budget " +
                    std::to_string(a.budget()));
  }
  std::vector<Value> target(a.values().rbegin(), a.values().rend());
  std::sort(target.begin(), target.end());

  std::optional<Counter> best;
  for (auto& p : enumerate_partitions(budget, a.k())) {
    const std::vector<Value> mine(p.values().rbegin(), p.values().rend());
    const MatchupCounts c = sorted_counts(mine, target);
    if (c.wins_a <= c.wins_b) continue;
    const std::uint64_t margin = c.wins_a - c.wins_b;
    // Partitions arrive in descending order, so a later equal-margin beater
    // is lexicographically smaller.
    if (!best || margin >= best->margin) best = Counter{std::move(p), margin};
  }
  return best;
}

std::optional<Counter> counter_in_graph(const DominanceGraph& g, std::size_t target) {
  std::optional<std::size_t> best;
  for (std::size_t e : g.in_edges(target)) {
    if (!best || g.edges()[e].margin > g.edges()[*best].margin ||
        (g.edges()[e].margin == g.edges()[*best].margin &&
         lex_less(g.edges()[e].winner, g.edges()[*best].winner))) {
      best = e;
    }
  }
  if (!best) return std::nullopt;
  const Edge& edge = g.edges()[*best];
  return Counter{g.nodes()[edge.winner], edge.margin};
}

ClaimVerdict claim_verdict(const DominanceGraph& g) {
  ClaimVerdict v;
  v.budget = g.budget();
  v.k = g.k();
  v.counterexamples = undominated(g);
  v.holds = v.counterexamples.empty();
  return v;
}

ClaimVerdict verify_universal_counter_claim(Value budget, std::size_t k) {
  return claim_verdict(DominanceGraph::build(budget, k));
}

}  // namespace capcycle
