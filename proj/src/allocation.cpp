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

#include "auction/allocation.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "auction/error.hpp"

namespace auction {

std::vector<std::size_t> FeasibleSet::buyers() const {
  std::vector<std::size_t> out;
  for (std::uint64_t rest = members; rest != 0; rest &= rest - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
  }
  return out;
}

bool lexicographically_precedes(std::uint64_t a, std::uint64_t b) {
  std::uint64_t diff = a ^ b;
  if (diff == 0) return false;
  return (a >> std::countr_zero(diff)) & 1U;
}

ConflictGraph::ConflictGraph(std::vector<std::uint64_t> adjacency, std::vector<Rational> weights)
    : adjacency_(std::move(adjacency)), weights_(std::move(weights)) {
  if (adjacency_.size() != weights_.size() || weights_.size() > 64) {
    throw AuctionError(ErrorKind::TooManyBuyers, "conflict graph supports at most 64 nodes");
  }
}

std::size_t ConflictGraph::edge_count() const {
  std::size_t twice = 0;
  for (auto row : adjacency_) twice += static_cast<std::size_t>(std::popcount(row));
  return twice / 2;
}

bool ConflictGraph::is_independent(std::uint64_t members) const {
  for (std::uint64_t rest = members; rest != 0; rest &= rest - 1) {
    if (adjacency_[std::countr_zero(rest)] & members) return false;
  }
  return true;
}

ConflictGraph build_conflict_graph(std::span<const ItemSet> bundles,
                                   std::span<const Rational> weights) {
  if (bundles.size() != weights.size() || bundles.size() > 64) {
    throw AuctionError(ErrorKind::TooManyBuyers, "bundles and weights must match, at most 64");
  }
  std::vector<std::uint64_t> adjacency(bundles.size(), 0);
  for (std::size_t a = 0; a < bundles.size(); ++a) {
    for (std::size_t b = a + 1; b < bundles.size(); ++b) {
      if (bundles[a].intersects(bundles[b])) {
        adjacency[a] |= std::uint64_t{1} << b;
        adjacency[b] |= std::uint64_t{1} << a;
      }
    }
  }
  return ConflictGraph(std::move(adjacency), std::vector<Rational>(weights.begin(), weights.end()));
}

bool is_feasible(std::uint64_t members, std::span<const ItemSet> bundles) {
  std::uint64_t used = 0;
  for (std::uint64_t rest = members; rest != 0; rest &= rest - 1) {
    const std::size_t n = static_cast<std::size_t>(std::countr_zero(rest));
    if (n >= bundles.size() || bundles[n].intersects(ItemSet(used))) return false;
    used |= bundles[n].bits();
  }
  return true;
}

namespace {

class BranchAndBound {
 public:
  explicit BranchAndBound(const ConflictGraph& graph) : graph_(graph) {
    for (std::size_t v = 0; v < graph.size(); ++v) {
      if (graph.weight(v) > 0) positive_ |= std::uint64_t{1} << v;
    }
    // Bound order: heavier first, then higher degree.
    for (std::uint64_t rest = positive_; rest != 0; rest &= rest - 1) {
      bound_order_.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
    }
    std::stable_sort(bound_order_.begin(), bound_order_.end(), [&](std::size_t a, std::size_t b) {
      if (graph.weight(a) != graph.weight(b)) return graph.weight(a) > graph.weight(b);
      return std::popcount(graph.neighbours(a)) > std::popcount(graph.neighbours(b));
    });
  }

  FeasibleSet solve() {
    search(positive_, 0, Rational(0));
    return best_;
  }

 private:
  // Sum over a greedy clique cover of `open` of each clique's heaviest node.
  Rational upper_bound(std::uint64_t open) const {
    Rational bound = 0;
    std::vector<std::uint64_t> cliques;
    for (std::size_t v : bound_order_) {
      if (!((open >> v) & 1U)) continue;
      bool placed = false;
      for (auto& clique : cliques) {
        if ((clique & ~graph_.neighbours(v)) == 0) {
          clique |= std::uint64_t{1} << v;
          placed = true;
          break;
        }
      }
      if (!placed) {
        cliques.push_back(std::uint64_t{1} << v);
        bound += graph_.weight(v);
      }
    }
    return bound;
  }

  // `open` holds undecided nodes compatible with `chosen`. Nodes are decided
  // in index order, include before exclude, so leaves arrive in tie-break
  // order and only strict improvements replace the incumbent.
  void search(std::uint64_t open, std::uint64_t chosen, const Rational& weight) {
    if (open == 0) {
      if (weight > best_.weight) best_ = FeasibleSet{chosen, weight};
      return;
    }
    if (weight + upper_bound(open) <= best_.weight) return;

    const std::size_t v = static_cast<std::size_t>(std::countr_zero(open));
    const std::uint64_t bit = std::uint64_t{1} << v;
    search(open & ~bit & ~graph_.neighbours(v), chosen | bit, weight + graph_.weight(v));
    search(open & ~bit, chosen, weight);
  }

  const ConflictGraph& graph_;
  std::uint64_t positive_ = 0;
  std::vector<std::size_t> bound_order_;
  FeasibleSet best_;
};

}  // namespace

FeasibleSet mwis(const ConflictGraph& graph, std::size_t cap) {
  if (graph.size() > cap) {
    throw AuctionError(ErrorKind::TooManyBuyers, std::to_string(graph.size()) +
                                                     " buyers exceed the exact solver cap of " +
                                                     std::to_string(cap));
  }
  return BranchAndBound(graph).solve();
}

FeasibleSet greedy_allocation(std::span<const ItemSet> bundles, std::span<const Rational> weights) {
  std::vector<std::size_t> order;
  for (std::size_t n = 0; n < weights.size(); ++n) {
    if (weights[n] > 0) order.push_back(n);
  }
  auto size_of = [&](std::size_t n) { return std::max<std::size_t>(bundles[n].size(), 1); };
  // w_a / sqrt(s_a) > w_b / sqrt(s_b)  <=>  w_a^2 s_b > w_b^2 s_a for positive weights.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    Rational lhs = weights[a] * weights[a] * static_cast<unsigned long>(size_of(b));
    Rational rhs = weights[b] * weights[b] * static_cast<unsigned long>(size_of(a));
    return lhs > rhs;
  });

  FeasibleSet result;
  std::uint64_t used = 0;
  for (std::size_t n : order) {
    if (bundles[n].intersects(ItemSet(used))) continue;
    used |= bundles[n].bits();
    result.members |= std::uint64_t{1} << n;
    result.weight += weights[n];
  }
  return result;
}

FeasibleSet kappa_allocation(std::span<const Rational> weights, std::size_t kappa) {
  std::vector<std::size_t> order;
  for (std::size_t n = 0; n < weights.size(); ++n) {
    if (weights[n] > 0) order.push_back(n);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return weights[a] > weights[b]; });
  FeasibleSet result;
  for (std::size_t k = 0; k < std::min(kappa, order.size()); ++k) {
    result.members |= std::uint64_t{1} << order[k];
    result.weight += weights[order[k]];
  }
  return result;
}

}  // namespace auction
