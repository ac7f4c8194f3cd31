// Copyright 2026 The Auction Authors.
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
#include <span>
#include <vector>

#include "auction/model.hpp"

namespace auction {

/// Largest graph the exact solver accepts by default.
inline constexpr std::size_t kDefaultMwisCap = 25;

/// A set of buyers (bit n for buyer n) and its total weight.
struct FeasibleSet {
  std::uint64_t members = 0;
  Rational weight = 0;

  bool contains(std::size_t buyer) const { return (members >> buyer) & 1U; }
  std::vector<std::size_t> buyers() const;
};

/// Tie-break order over buyer sets: `a` comes first when, at the lowest buyer
/// index where the two sets differ, `a` contains that buyer.
bool lexicographically_precedes(std::uint64_t a, std::uint64_t b);

/// Nodes are buyers; an edge joins buyers whose reported bundles intersect.
class ConflictGraph {
 public:
  ConflictGraph(std::vector<std::uint64_t> adjacency, std::vector<Rational> weights);

  std::size_t size() const { return weights_.size(); }
  const Rational& weight(std::size_t node) const { return weights_[node]; }
  std::span<const Rational> weights() const { return weights_; }
  std::uint64_t neighbours(std::size_t node) const { return adjacency_[node]; }
  bool adjacent(std::size_t a, std::size_t b) const { return (adjacency_[a] >> b) & 1U; }
  std::size_t edge_count() const;
  bool is_independent(std::uint64_t members) const;

 private:
  std::vector<std::uint64_t> adjacency_;
  std::vector<Rational> weights_;
};

/// Throws TooManyBuyers above 64 nodes or when the sizes differ.
ConflictGraph build_conflict_graph(std::span<const ItemSet> bundles,
                                   std::span<const Rational> weights);

/// True iff the members' bundles are pairwise disjoint.
bool is_feasible(std::uint64_t members, std::span<const ItemSet> bundles);

/// Exact maximum weight independent set over strictly positive-weight nodes,
/// the first optimum under `lexicographically_precedes`. Branch and bound with
/// a clique-cover upper bound. Throws TooManyBuyers above `cap` nodes.
FeasibleSet mwis(const ConflictGraph& graph, std::size_t cap = kDefaultMwisCap);

/// Admits positive-weight buyers in decreasing order of w / sqrt(|b|) (empty
/// bundles count as size 1, ties by lower index) while bundles stay disjoint.
FeasibleSet greedy_allocation(std::span<const ItemSet> bundles, std::span<const Rational> weights);

/// The `kappa` largest strictly positive weights, ties by lower index.
FeasibleSet kappa_allocation(std::span<const Rational> weights, std::size_t kappa);

}  // namespace auction
