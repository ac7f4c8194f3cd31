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

#include "auction/virtual_values.hpp"

#include <optional>
#include <stdexcept>

#include "auction/error.hpp"

namespace auction {
namespace {

void check_sizes(std::span<const Rational> grid, std::span<const Rational> pmf) {
  if (grid.empty() || grid.size() != pmf.size()) {
    throw AuctionError(ErrorKind::SupportMismatch, "grid and pmf sizes differ or are empty");
  }
}

std::vector<Rational> tails(std::span<const Rational> pmf) {
  std::vector<Rational> tail(pmf.size() + 1);
  tail[pmf.size()] = 0;
  for (std::size_t k = pmf.size(); k-- > 0;) tail[k] = tail[k + 1] + pmf[k];
  return tail;
}

// Sign of the turn O -> A -> B; positive for counter-clockwise.
int turn(const Rational& og, const Rational& oh, const Rational& ag, const Rational& ah,
         const Rational& bg, const Rational& bh) {
  Rational cross = (ag - og) * (bh - oh) - (ah - oh) * (bg - og);
  return sgn(cross);
}

}  // namespace

std::vector<Rational> virtual_valuation(std::span<const Rational> grid,
                                        std::span<const Rational> pmf) {
  check_sizes(grid, pmf);
  const std::size_t K = grid.size();
  auto tail = tails(pmf);
  std::vector<Rational> w(K);
  for (std::size_t i = 0; i + 1 < K; ++i) {
    w[i] = grid[i] - (grid[i + 1] - grid[i]) * tail[i + 1] / pmf[i];
  }
  w[K - 1] = grid[K - 1];
  return w;
}

std::vector<Rational> virtual_valuation(const BuyerPrior& prior, ItemSet bundle) {
  return virtual_valuation(prior.grid, prior.value_pmf[prior.bundle_index(bundle)]);
}

HullPoints gh_points(std::span<const Rational> grid, std::span<const Rational> pmf) {
  check_sizes(grid, pmf);
  const std::size_t K = grid.size();
  auto tail = tails(pmf);
  HullPoints points;
  points.g.resize(K + 1);
  points.h.resize(K + 1);
  points.g[0] = 0;
  for (std::size_t i = 0; i < K; ++i) {
    points.g[i + 1] = points.g[i] + pmf[i];
    points.h[i] = -grid[i] * tail[i];
  }
  points.h[K] = 0;
  return points;
}

HullPoints gh_points(const BuyerPrior& prior, ItemSet bundle) {
  return gh_points(prior.grid, prior.value_pmf[prior.bundle_index(bundle)]);
}

Ironing iron(HullPoints raw) {
  const auto& g = raw.g;
  const auto& h = raw.h;
  const std::size_t count = g.size();

  std::vector<std::size_t> hull;
  hull.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    while (hull.size() >= 2) {
      std::size_t o = hull[hull.size() - 2];
      std::size_t a = hull.back();
      if (turn(g[o], h[o], g[a], h[a], g[i], h[i]) >= 0) break;
      hull.pop_back();
    }
    hull.push_back(i);
  }

  raw.h_ironed.assign(count, Rational(0));
  for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
    const std::size_t a = hull[s];
    const std::size_t b = hull[s + 1];
    Rational slope = (h[b] - h[a]) / (g[b] - g[a]);
    raw.h_ironed[a] = h[a];
    for (std::size_t i = a + 1; i < b; ++i) raw.h_ironed[i] = h[a] + slope * (g[i] - g[a]);
  }
  raw.h_ironed[hull.back()] = h[hull.back()];

  Ironing result;
  result.ironed.resize(count - 1);
  for (std::size_t i = 1; i < count; ++i) {
    result.ironed[i - 1] = (raw.h_ironed[i] - raw.h_ironed[i - 1]) / (g[i] - g[i - 1]);
  }
  result.points = std::move(raw);
  return result;
}

bool is_regular(std::span<const Rational> w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] > w[i + 1]) return false;
  }
  return true;
}

Rational reserve_price(std::span<const Rational> grid, std::span<const Rational> pmf) {
  check_sizes(grid, pmf);
  auto tail = tails(pmf);
  std::size_t best = 0;
  Rational best_revenue = grid[0] * tail[0];
  for (std::size_t k = 1; k < grid.size(); ++k) {
    Rational revenue = grid[k] * tail[k];
    if (revenue >= best_revenue) {
      best = k;
      best_revenue = revenue;
    }
  }
  return grid[best];
}

Rational reserve_price(const BuyerPrior& prior, ItemSet bundle) {
  return reserve_price(prior.grid, prior.value_pmf[prior.bundle_index(bundle)]);
}

Rational mvv_minimax_oracle(std::span<const Rational> grid, std::span<const Rational> pmf,
                            std::size_t index) {
  check_sizes(grid, pmf);
  const std::size_t K = grid.size();
  if (index >= K) {
    throw AuctionError(ErrorKind::IndexOutOfRange,
                       "grid index " + std::to_string(index) + " is outside a grid of size " +
                           std::to_string(K));
  }
  if (index == K - 1) return grid[K - 1];

  auto tail = tails(pmf);
  const Rational& x = grid[index];

  // Phi(c) = max over grid z of (z - c) P(X >= z); the left-continuous CDF
  // makes the supremum over [x_1, x_K] land on grid points.
  auto phi = [&](const Rational& c) {
    Rational best = (grid[0] - c) * tail[0];
    for (std::size_t k = 1; k < K; ++k) {
      Rational v = (grid[k] - c) * tail[k];
      if (v > best) best = v;
    }
    return best;
  };

  // Breakpoints of max_z (z - c) P(X >= z) / (x - c) are where two of its
  // linear-fractional pieces cross, i.e. slopes between pairs of the points
  // (1 - P(X >= z), -z P(X >= z)).
  std::optional<Rational> best_c;
  Rational best_value;
  for (std::size_t j = 0; j < K; ++j) {
    for (std::size_t k = j + 1; k < K; ++k) {
      Rational c = (grid[k] * tail[k] - grid[j] * tail[j]) / (tail[k] - tail[j]);
      if (c >= x) continue;
      Rational value = phi(c) / (x - c);
      if (!best_c || value < best_value || (value == best_value && c > *best_c)) {
        best_c = c;
        best_value = value;
      }
    }
  }
  if (!best_c) throw std::logic_error("minimax oracle found no candidate slope");
  return *best_c;
}

Rational mvv_minimax_oracle(const BuyerPrior& prior, ItemSet bundle, std::size_t index) {
  return mvv_minimax_oracle(prior.grid, prior.value_pmf[prior.bundle_index(bundle)], index);
}

VirtualTable::VirtualTable(const AuctionInstance& instance) {
  entries_.reserve(instance.buyers.size());
  for (const auto& prior : instance.buyers) {
    std::vector<VirtualEntry> row;
    for (std::size_t b = 0; b < prior.bundles.size(); ++b) {
      const auto& pmf = prior.value_pmf[b];
      VirtualEntry entry;
      entry.w = virtual_valuation(prior.grid, pmf);
      Ironing ironing = iron(gh_points(prior.grid, pmf));
      entry.ironed = std::move(ironing.ironed);
      entry.points = std::move(ironing.points);
      entry.regular = is_regular(entry.w);
      entry.reserve = reserve_price(prior.grid, pmf);
      row.push_back(std::move(entry));
    }
    entries_.push_back(std::move(row));
  }
}

}  // namespace auction
