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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "auction/mechanism.hpp"
#include "auction/model.hpp"

namespace auction {

/// Type spaces at or below this size are evaluated exactly in automatic mode.
inline constexpr std::uint64_t kExactModeLimit = 100'000;

struct GeneratorConfig {
  std::size_t items = 3;
  std::size_t buyers = 3;
  std::size_t max_bundles = 2;
  std::size_t grid_size = 3;
  std::uint64_t seed = 1;
  /// Nested bundles get hazard-rate ordered value distributions.
  bool enforce_nested_order = false;
  /// No bundle of a buyer contains another.
  bool antichain = false;
  std::size_t rejection_budget = 1000;
};

/// Deterministic for a given config. Throws GenerationFailed when the
/// constraints cannot be met within the rejection budget.
AuctionInstance generate_instance(const GeneratorConfig& config);

/// Counter-based stream: a well-mixed 64-bit word for (seed, counter, lane).
std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t counter, std::uint64_t lane);

/// Exact inverse-CDF sampling of each buyer's type from counter_hash words.
class ProfileSampler {
 public:
  explicit ProfileSampler(const AuctionInstance& instance);

  /// Per-buyer indices into TypeSpace::types.
  std::vector<std::size_t> sample_types(std::uint64_t seed, std::uint64_t index) const;
  Profile sample(std::uint64_t seed, std::uint64_t index) const;

 private:
  // thresholds_[n][k] = ceil(P(type index <= k) * 2^64); the last type has none.
  std::vector<std::vector<std::uint64_t>> thresholds_;
  std::vector<std::vector<Bid>> bids_;
};

Profile sample_profile(const AuctionInstance& instance, std::uint64_t seed, std::uint64_t index);

struct SimReport {
  std::string mechanism;
  /// Present when the type space has at most kExactModeLimit profiles.
  std::optional<Rational> exact;
  double estimate = 0;
  double std_err = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

/// Monte-Carlo mean of the total payment. Samples are summed in fixed-size
/// blocks merged in order, so the result is bit-identical for any `workers`.
SimReport estimate_revenue(const Mechanism& mechanism, std::uint64_t samples, std::uint64_t seed,
                           unsigned workers = 1);

enum class CompareMode { Auto, Exact, Sampled };

struct CompareRow {
  std::string mechanism;
  bool exact_mode = false;
  std::optional<Rational> revenue_exact;
  std::optional<Rational> virtual_surplus;
  std::optional<Rational> ironed_surplus;
  double revenue_estimate = 0;
  double std_err = 0;
  std::uint64_t samples = 0;
  std::optional<bool> ic_ok;
  std::optional<bool> ir_ok;
};

/// One row per mechanism name. Exact mode throws TypeSpaceTooLarge when the
/// type space exceeds `kExactModeLimit`; Auto falls back to sampling there.
std::vector<CompareRow> compare(const AuctionInstance& instance,
                                std::span<const std::string> mechanisms, CompareMode mode,
                                std::uint64_t samples = 100'000, std::uint64_t seed = 1);

}  // namespace auction
