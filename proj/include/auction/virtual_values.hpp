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

// Grid indices are zero-based throughout: index i refers to grid[i], and the
// hull has K + 1 points numbered 0..K.

/// The (g, h) construction for one (buyer, bundle): g[i] is the probability
/// mass strictly below grid[i] and h[i] = -grid[i] * P(X >= grid[i]), with the
/// terminal point (1, 0). `h_ironed` holds the lower-convex-hull ordinates once
/// ironed and is empty on raw points.
struct HullPoints {
  std::vector<Rational> g;
  std::vector<Rational> h;
  std::vector<Rational> h_ironed;
};

struct Ironing {
  HullPoints points;
  /// Monotone virtual valuation: slopes of the hull, one per grid index.
  std::vector<Rational> ironed;
};

/// Discrete virtual valuation w(x_i) = x_i - (x_{i+1} - x_i) P(X > x_i) / p(x_i),
/// and w = x_K at the top of the grid.
std::vector<Rational> virtual_valuation(std::span<const Rational> grid,
                                        std::span<const Rational> pmf);
std::vector<Rational> virtual_valuation(const BuyerPrior& prior, ItemSet bundle);

HullPoints gh_points(std::span<const Rational> grid, std::span<const Rational> pmf);
HullPoints gh_points(const BuyerPrior& prior, ItemSet bundle);

/// Lower convex hull of the raw points by one monotone-chain pass; collinear
/// points stay on the hull.
Ironing iron(HullPoints raw);

bool is_regular(std::span<const Rational> w);

/// Largest grid value maximising v * P(X >= v).
Rational reserve_price(std::span<const Rational> grid, std::span<const Rational> pmf);
Rational reserve_price(const BuyerPrior& prior, ItemSet bundle);

/// Ironed value at grid index `index` computed without the hull: the largest
/// c < x_i minimising max_z (z - c) P(X >= z) / (x_i - c), searched over the
/// pairwise slopes of the raw points. Returns x_K at the last index. Throws
/// IndexOutOfRange past the grid.
Rational mvv_minimax_oracle(std::span<const Rational> grid, std::span<const Rational> pmf,
                            std::size_t index);
Rational mvv_minimax_oracle(const BuyerPrior& prior, ItemSet bundle, std::size_t index);

struct VirtualEntry {
  std::vector<Rational> w;
  std::vector<Rational> ironed;
  HullPoints points;
  bool regular = true;
  Rational reserve;
};

/// Virtual and ironed values for every (buyer, bundle) of an instance.
class VirtualTable {
 public:
  explicit VirtualTable(const AuctionInstance& instance);

  const VirtualEntry& entry(std::size_t buyer, std::size_t bundle) const {
    return entries_[buyer][bundle];
  }
  const Rational& virtual_value(std::size_t buyer, const Bid& bid) const {
    return entries_[buyer][bid.bundle].w[bid.value];
  }
  const Rational& ironed_value(std::size_t buyer, const Bid& bid) const {
    return entries_[buyer][bid.bundle].ironed[bid.value];
  }
  std::size_t buyer_count() const { return entries_.size(); }
  std::size_t bundle_count(std::size_t buyer) const { return entries_[buyer].size(); }

 private:
  std::vector<std::vector<VirtualEntry>> entries_;
};

}  // namespace auction
