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

#include <span>
#include <vector>

#include "auction/model.hpp"

namespace auction {

// Both predicates compare two pmfs over one common grid and throw
// SupportMismatch when the lengths differ.

/// Z1 <=_h Z2: T1(i) T2(j) <= T2(i) T1(j) for all j <= i, with T the tail mass.
bool hazard_rate_leq(std::span<const Rational> pmf1, std::span<const Rational> pmf2);

/// First-order dominance: P(Z1 > z) <= P(Z2 > z) at every grid point.
bool fosd_leq(std::span<const Rational> pmf1, std::span<const Rational> pmf2);

/// One failed tail-ratio inequality for a nested pair s ⊆ t of one buyer:
/// T_s(i) / T_s(j) > T_t(i) / T_t(j) with j <= i (zero-based grid indices).
struct OrderViolation {
  std::size_t buyer = 0;
  std::size_t smaller_bundle = 0;
  std::size_t larger_bundle = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  Rational lhs;
  Rational rhs;
};

/// Scans every buyer and every support pair (s, t) with s ⊆ t, s != t.
/// Violations are reported by buyer, then (s, t) in declared order, then (i, j).
std::vector<OrderViolation> check_nested_order(const AuctionInstance& instance);

}  // namespace auction
