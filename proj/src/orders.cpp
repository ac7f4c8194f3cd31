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

#include "auction/orders.hpp"

#include "auction/error.hpp"

namespace auction {
namespace {

std::vector<Rational> tails(std::span<const Rational> pmf) {
  std::vector<Rational> tail(pmf.size() + 1);
  tail[pmf.size()] = 0;
  for (std::size_t k = pmf.size(); k-- > 0;) tail[k] = tail[k + 1] + pmf[k];
  return tail;
}

void same_support(std::span<const Rational> pmf1, std::span<const Rational> pmf2) {
  if (pmf1.size() != pmf2.size()) {
    throw AuctionError(ErrorKind::SupportMismatch,
                       "pmfs have " + std::to_string(pmf1.size()) + " and " +
                           std::to_string(pmf2.size()) + " points");
  }
}

}  // namespace

bool hazard_rate_leq(std::span<const Rational> pmf1, std::span<const Rational> pmf2) {
  same_support(pmf1, pmf2);
  auto t1 = tails(pmf1);
  auto t2 = tails(pmf2);
  for (std::size_t i = 0; i < pmf1.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (t1[i] * t2[j] > t2[i] * t1[j]) return false;
    }
  }
  return true;
}

bool fosd_leq(std::span<const Rational> pmf1, std::span<const Rational> pmf2) {
  same_support(pmf1, pmf2);
  auto t1 = tails(pmf1);
  auto t2 = tails(pmf2);
  for (std::size_t k = 1; k <= pmf1.size(); ++k) {
    if (t1[k] > t2[k]) return false;
  }
  return true;
}

std::vector<OrderViolation> check_nested_order(const AuctionInstance& instance) {
  std::vector<OrderViolation> violations;
  for (std::size_t n = 0; n < instance.buyers.size(); ++n) {
    const BuyerPrior& prior = instance.buyers[n];
    for (std::size_t s = 0; s < prior.bundles.size(); ++s) {
      for (std::size_t t = 0; t < prior.bundles.size(); ++t) {
        if (s == t || !prior.bundles[s].subset_of(prior.bundles[t])) continue;
        auto ts = tails(prior.value_pmf[s]);
        auto tt = tails(prior.value_pmf[t]);
        for (std::size_t i = 0; i < prior.grid.size(); ++i) {
          for (std::size_t j = 0; j <= i; ++j) {
            // Tails are positive, so cross-multiplying keeps the direction.
            if (ts[i] * tt[j] > tt[i] * ts[j]) {
              violations.push_back(OrderViolation{n, s, t, i, j, Rational(ts[i] / ts[j]),
                                                  Rational(tt[i] / tt[j])});
            }
          }
        }
      }
    }
  }
  return violations;
}

}  // namespace auction
