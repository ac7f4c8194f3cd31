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

#include <string>
#include <vector>

#include "auction/mechanism.hpp"
#include "auction/model.hpp"

namespace auction {

/// A report that beats truth-telling in interim expected payoff.
struct ICViolation {
  std::size_t buyer = 0;
  Bid true_type;
  Bid deviation;
  Rational truthful_payoff;
  Rational deviating_payoff;
};

/// A type whose truthful interim payoff is negative.
struct IRViolation {
  std::size_t buyer = 0;
  Bid type;
  Rational payoff;
};

/// q(bundle, grid[index]) > q(bundle, grid[index + 1]).
struct MonotonicityViolation {
  std::size_t buyer = 0;
  std::size_t bundle = 0;
  std::size_t index = 0;
  Rational lower;
  Rational upper;
};

/// w-bar(s, x_i) < w-bar(t, x_i) for nested bundles s ⊆ t.
struct MvvViolation {
  std::size_t buyer = 0;
  std::size_t smaller_bundle = 0;
  std::size_t larger_bundle = 0;
  std::size_t index = 0;
  Rational smaller_value;
  Rational larger_value;
};

/// Per-profile (dominant-strategy) violation.
struct ExPostViolation {
  std::size_t buyer = 0;
  std::uint64_t profile_index = 0;
  Bid true_type;
  Bid deviation;
  Rational truthful_payoff;
  Rational deviating_payoff;
};

struct MechanismAudit {
  std::vector<ICViolation> ic;
  std::vector<IRViolation> ir;
  std::vector<MonotonicityViolation> monotonicity;
  bool relaxed_ic_interval = true;

  bool ic_ok() const { return ic.empty(); }
  bool ir_ok() const { return ir.empty(); }
  bool monotone_ok() const { return monotonicity.empty(); }
};

/// Payoff of a buyer of true type `truth` who reports `report` and is
/// allocated with probability `q` while paying `m`: q 1{b* ⊆ t} v* - m.
Rational deviation_payoff(const BuyerPrior& prior, const Bid& truth, const Bid& report,
                          const Rational& q, const Rational& m);

/// Every (buyer, true type, deviation) in the buyer's report space whose
/// interim payoff strictly exceeds truth-telling, sorted by buyer, true type
/// and deviation. With `same_bundle_only`, deviations keep the true bundle.
std::vector<ICViolation> check_ic(const AuctionInstance& instance, const InterimQuantities& interim,
                                  bool same_bundle_only = false);
std::vector<ICViolation> check_ic(const Mechanism& mechanism, bool same_bundle_only = false,
                                  const EvaluationOptions& options = {});

std::vector<IRViolation> check_ir(const AuctionInstance& instance, const InterimQuantities& interim);
std::vector<IRViolation> check_ir(const Mechanism& mechanism, const EvaluationOptions& options = {});

std::vector<MonotonicityViolation> check_q_monotone(const AuctionInstance& instance,
                                                    const InterimQuantities& interim);

/// (q_{i+1} - q_i) x_i <= m_{i+1} - m_i <= (q_{i+1} - q_i) x_{i+1} everywhere.
bool check_relaxed_ic_interval(const AuctionInstance& instance, const InterimQuantities& interim);
bool check_relaxed_ic_interval(const Mechanism& mechanism, const EvaluationOptions& options = {});

/// True when every step meets the upper end of the interval.
bool relaxed_ic_upper_bound_binds(const AuctionInstance& instance,
                                  const InterimQuantities& interim);

std::vector<MvvViolation> check_mvv_bundle_monotone(const AuctionInstance& instance);

/// Stricter per-profile check: truth-telling is a best response to every
/// opponent profile, not just on average.
std::vector<ExPostViolation> check_ex_post_ic(const Mechanism& mechanism,
                                              std::uint64_t cap = kDefaultTypeSpaceCap);

MechanismAudit audit(const Mechanism& mechanism, const EvaluationOptions& options = {});

/// Two buyers, items {A, B}. Buyer 0 wants {A} at value 1. Buyer 1 wants {A}
/// or {A, B} with probability 1/2 each, values {2, 4} with conditional pmfs
/// (1/2, 1/2) and (9/10, 1/10). The hazard-rate condition fails and the MWA
/// is not incentive compatible.
AuctionInstance counterexample_instance();

struct CounterexampleReport {
  std::vector<std::string> lines;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// Recomputes the counterexample ledger (virtual values, outcomes and prices
/// for each report of buyer 1, the IC violation) and compares every number
/// with its known value.
CounterexampleReport reproduce_counterexample();

}  // namespace auction
