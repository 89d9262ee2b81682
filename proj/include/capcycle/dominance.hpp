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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "capcycle/alloc.hpp"

namespace capcycle {

struct Edge {
  std::size_t winner = 0;
  std::size_t loser = 0;
  std::uint64_t margin = 0;  // winner_wins - loser_wins, always > 0
  std::uint64_t winner_wins = 0;
  std::uint64_t loser_wins = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

using Triple = std::array<std::size_t, 3>;

// Strict series-dominance digraph over every partition of `budget` into k
// parts. Nodes are in lexicographically descending order, so a smaller index
// means a lexicographically larger partition. Immutable once built.
class DominanceGraph {
 public:
  // Throws kSpaceTooLarge if the partition count or the number of node pairs
  // exceeds `limit`.
  static DominanceGraph build(Value budget, std::size_t k);
  static DominanceGraph build(Value budget, std::size_t k, std::uint64_t limit);

  Value budget() const noexcept { return budget_; }
  std::size_t k() const noexcept { return k_; }
  const std::vector<Partition>& nodes() const noexcept { return nodes_; }
  // Sorted by (winner, loser).
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  // Unordered pairs stored as (i, j) with i < j, sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& draws() const noexcept { return draws_; }

  bool has_edge(std::size_t winner, std::size_t loser) const noexcept {
    return (out_bits_[winner * words_ + loser / 64] >> (loser % 64)) & 1U;
  }
  std::size_t in_degree(std::size_t v) const noexcept { return in_edges_[v].size(); }
  // Indices into edges() of every edge whose loser is v.
  const std::vector<std::size_t>& in_edges(std::size_t v) const noexcept { return in_edges_[v]; }
  const std::vector<std::size_t>& successors(std::size_t v) const noexcept { return succ_[v]; }

  std::size_t find_node(const Partition& p) const;  // npos if absent

  // Row views of the adjacency bitsets, `words()` 64-bit words per node.
  std::size_t words() const noexcept { return words_; }
  const std::uint64_t* out_row(std::size_t v) const noexcept { return &out_bits_[v * words_]; }
  const std::uint64_t* in_row(std::size_t v) const noexcept { return &in_bits_[v * words_]; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  DominanceGraph() = default;

  Value budget_ = 0;
  std::size_t k_ = 0;
  std::vector<Partition> nodes_;
  std::vector<Edge> edges_;
  std::vector<std::pair<std::size_t, std::size_t>> draws_;
  std::vector<std::vector<std::size_t>> in_edges_;
  std::vector<std::vector<std::size_t>> succ_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> out_bits_;
  std::vector<std::uint64_t> in_bits_;
};

DominanceGraph build_graph(Value budget, std::size_t k);

// Every directed 3-cycle x->y->z->x, once each, rotated so that the
// lexicographically smallest partition comes first, and sorted by the
// partition sequence.
std::vector<Triple> find_three_cycles(const DominanceGraph& g);

// Members of each component are listed lexicographically ascending;
// components are ordered by their smallest member.
std::vector<std::vector<std::size_t>> strongly_connected_components(const DominanceGraph& g);

// Nodes with no incoming strict edge, in node order.
std::vector<Partition> undominated(const DominanceGraph& g);

struct Counter {
  Partition strategy;
  std::uint64_t margin = 0;

  friend bool operator==(const Counter&, const Counter&) = default;
};

// Maximum-margin same-cap strict dominator of `a`; margin ties go to the
// lexicographically smallest partition. Throws kInvalidArgument when budget
// differs from a.budget().
std::optional<Counter> counter_strategy(const Allocation& a, Value budget);

// Same selection rule, read off a built graph.
std::optional<Counter> counter_in_graph(const DominanceGraph& g, std::size_t target);

struct ClaimVerdict {
  bool holds = false;
  std::vector<Partition> counterexamples;
  Value budget = 0;
  std::size_t k = 0;

  friend bool operator==(const ClaimVerdict&, const ClaimVerdict&) = default;
};

ClaimVerdict claim_verdict(const DominanceGraph& g);

// True iff every partition of the cap has a same-cap strict dominator.
ClaimVerdict verify_universal_counter_claim(Value budget, std::size_t k);

}  // namespace capcycle
