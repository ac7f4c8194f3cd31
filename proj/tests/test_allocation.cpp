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

#include <random>

#include "auction/allocation.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace auction;
using namespace auction::testing;

namespace {

std::uint64_t mask(std::initializer_list<std::size_t> members) {
  std::uint64_t m = 0;
  for (auto n : members) m |= std::uint64_t{1} << n;
  return m;
}

const std::vector<ItemSet> kPath{ItemSet::of({0}), ItemSet::of({0, 1}), ItemSet::of({1})};

}  // namespace

TEST_SUITE("allocation") {
  TEST_CASE("conflict graph edges follow shared items") {
    ConflictGraph path = build_conflict_graph(kPath, Q({"1", "1", "1"}));
    CHECK(path.edge_count() == 2);
    CHECK(path.adjacent(0, 1));
    CHECK(path.adjacent(1, 2));
    CHECK_FALSE(path.adjacent(0, 2));
    CHECK_FALSE(path.adjacent(0, 0));

    std::vector<ItemSet> shared{ItemSet::of({0}), ItemSet::of({0})};
    CHECK(build_conflict_graph(shared, Q({"1", "4"})).edge_count() == 1);

    std::vector<ItemSet> disjoint{ItemSet::of({0}), ItemSet::of({1}), ItemSet::of({2})};
    CHECK(build_conflict_graph(disjoint, Q({"1", "1", "1"})).edge_count() == 0);
  }

  TEST_CASE("feasibility") {
    CHECK(is_feasible(0, kPath));
    CHECK(is_feasible(mask({0, 2}), kPath));
    CHECK_FALSE(is_feasible(mask({0, 1}), kPath));
    std::vector<ItemSet> shared{ItemSet::of({0}), ItemSet::of({0, 1})};
    CHECK_FALSE(is_feasible(mask({0, 1}), shared));
  }

  TEST_CASE("maximum weight independent sets") {
    FeasibleSet path = mwis(build_conflict_graph(kPath, Q({"1", "3", "1"})));
    CHECK(path.members == mask({1}));
    CHECK(path.weight == 3);

    std::vector<ItemSet> disjoint{ItemSet::of({0}), ItemSet::of({1}), ItemSet::of({2}),
                                  ItemSet::of({3})};
    FeasibleSet edgeless = mwis(build_conflict_graph(disjoint, Q({"5", "-1", "0", "4"})));
    CHECK(edgeless.members == mask({0, 3}));
    CHECK(edgeless.weight == 9);
    CHECK(edgeless.buyers() == std::vector<std::size_t>{0, 3});

    std::vector<ItemSet> shared{ItemSet::of({0}), ItemSet::of({0})};
    CHECK(mwis(build_conflict_graph(shared, Q({"1", "4"}))).members == mask({1}));
  }

  TEST_CASE("ties go to the set containing the lower-index buyer") {
    std::vector<ItemSet> shared{ItemSet::of({0}), ItemSet::of({0})};
    CHECK(mwis(build_conflict_graph(shared, Q({"2", "2"}))).members == mask({0}));
    // {0,2} and {1} both weigh 2.
    CHECK(mwis(build_conflict_graph(kPath, Q({"1", "2", "1"}))).members == mask({0, 2}));
    CHECK(lexicographically_precedes(mask({0}), mask({1, 2})));
    CHECK_FALSE(lexicographically_precedes(mask({1, 2}), mask({0})));
    CHECK_FALSE(lexicographically_precedes(mask({0}), mask({0})));
  }

  TEST_CASE("non-positive weights are never selected") {
    std::vector<ItemSet> disjoint{ItemSet::of({0}), ItemSet::of({1})};
    FeasibleSet none = mwis(build_conflict_graph(disjoint, Q({"0", "-3"})));
    CHECK(none.members == 0);
    CHECK(none.weight == 0);
  }

  TEST_CASE("solver size cap") {
    std::vector<ItemSet> bundles(30, ItemSet::of({0}));
    std::vector<Rational> weights(30, Rational(1));
    auto error = capture_error([&] { mwis(build_conflict_graph(bundles, weights)); });
    REQUIRE(error);
    CHECK(error->kind() == ErrorKind::TooManyBuyers);
    CHECK(mwis(build_conflict_graph(bundles, weights), 30).members == 1);
  }

  TEST_CASE("greedy allocation") {
    std::vector<ItemSet> bundles{ItemSet::of({0}), ItemSet::of({0, 1})};
    auto weights = Q({"1", "6/5"});
    FeasibleSet greedy = greedy_allocation(bundles, weights);
    CHECK(greedy.members == mask({0}));
    CHECK(greedy.weight == 1);
    CHECK(mwis(build_conflict_graph(bundles, weights)).weight == Rational(6, 5));

    std::vector<ItemSet> disjoint{ItemSet::of({0}), ItemSet::of({1}), ItemSet::of({2})};
    auto spread = Q({"3", "1/2", "2"});
    CHECK(greedy_allocation(disjoint, spread).members ==
          mwis(build_conflict_graph(disjoint, spread)).members);

    CHECK(greedy_allocation(bundles, Q({"0", "-1"})).members == 0);
  }

  TEST_CASE("identical-items allocation") {
    auto weights = Q({"5", "3", "-1", "4"});
    CHECK(kappa_allocation(weights, 2).members == mask({0, 3}));
    CHECK(kappa_allocation(weights, 2).weight == 9);
    CHECK(kappa_allocation(weights, 0).members == 0);
    CHECK(kappa_allocation(Q({"2", "2"}), 1).members == mask({0}));
    CHECK(kappa_allocation(weights, 10).members == mask({0, 1, 3}));
  }

  TEST_CASE("randomized agreement with exhaustive search") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 400; ++trial) {
      const std::size_t n = 1 + pick(rng, 12);
      const std::size_t items = 1 + pick(rng, 6);
      auto bundles = random_bundles(rng, n, items);
      auto weights = random_weights(rng, n);
      CAPTURE(trial);
      ConflictGraph graph = build_conflict_graph(bundles, weights);
      FeasibleSet fast = mwis(graph);
      auto [members, weight] = brute_force_mwis(bundles, weights);
      CHECK(fast.weight == weight);
      CHECK(fast.members == members);
      CHECK(is_feasible(fast.members, bundles));

      // Raising a winner's weight keeps it a winner.
      for (std::size_t v = 0; v < n; ++v) {
        if (!fast.contains(v)) continue;
        auto raised = weights;
        raised[v] += Rational(1, 1 + static_cast<long>(pick(rng, 3)));
        CHECK(mwis(build_conflict_graph(bundles, raised)).contains(v));
      }

      // Greedy is feasible and within the square-root bound.
      FeasibleSet greedy = greedy_allocation(bundles, weights);
      CHECK(is_feasible(greedy.members, bundles));
      CHECK(greedy.weight * greedy.weight * static_cast<long>(items) >= weight * weight);

      // Identical items: exhaustive over subsets of bounded size.
      const std::size_t kappa = pick(rng, n + 1);
      Rational best = 0;
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        if (static_cast<std::size_t>(std::popcount(m)) > kappa) continue;
        Rational total = 0;
        bool positive = true;
        for (std::size_t v = 0; v < n; ++v) {
          if ((m >> v) & 1U) {
            positive = positive && weights[v] > 0;
            total += weights[v];
          }
        }
        if (positive && total > best) best = total;
      }
      CHECK(kappa_allocation(weights, kappa).weight == best);
    }
  }

  TEST_CASE("independent sets are exactly the feasible sets") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = 1 + pick(rng, 10);
      auto bundles = random_bundles(rng, n, 1 + pick(rng, 5));
      ConflictGraph graph = build_conflict_graph(bundles, std::vector<Rational>(n, Rational(1)));
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        CHECK(graph.is_independent(m) == pairwise_disjoint(m, bundles));
        CHECK(is_feasible(m, bundles) == pairwise_disjoint(m, bundles));
      }
    }
  }
}
