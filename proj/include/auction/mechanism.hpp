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

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "auction/allocation.hpp"
#include "auction/model.hpp"
#include "auction/virtual_values.hpp"

namespace auction {

/// Winners and payments for one reported profile. Losers pay zero.
struct Outcome {
  FeasibleSet winners;
  std::vector<Rational> payments;

  bool wins(std::size_t buyer) const { return winners.contains(buyer); }
  Rational total_payment() const;
};

/// A direct mechanism bound to one instance. Implementations are immutable
/// after construction and `run` may be called concurrently.
class Mechanism {
 public:
  explicit Mechanism(AuctionInstance instance) : instance_(std::move(instance)) {}
  virtual ~Mechanism() = default;

  virtual std::string name() const = 0;
  virtual Outcome run(const Profile& profile) const = 0;

  const AuctionInstance& instance() const { return instance_; }

 private:
  AuctionInstance instance_;
};

/// A deterministic winner rule that is monotone in each buyer's reported value,
/// paired with critical-value payments.
class CriticalValueMechanism : public Mechanism {
 public:
  using Mechanism::Mechanism;

  virtual FeasibleSet allocate(const Profile& profile) const = 0;

  Outcome run(const Profile& profile) const override;

  /// Least grid value at or below the bid at which `buyer` still wins, found
  /// by binary search. Throws NotAWinner.
  Rational critical_value(const Profile& profile, std::size_t buyer) const;

  /// sum over x_i <= v of (Q(x_i) - Q(x_{i-1})) x_i with Q(x_0) = 0, each Q
  /// recomputed by rerunning the allocation.
  Rational telescoping_payment(const Profile& profile, std::size_t buyer) const;
};

/// Maximum weight algorithm: maximum-weight independent set of the conflict
/// graph under ironed virtual values, deterministic tie-break.
class MwaMechanism : public CriticalValueMechanism {
 public:
  explicit MwaMechanism(AuctionInstance instance);
  std::string name() const override { return "mwa"; }
  FeasibleSet allocate(const Profile& profile) const override;
  const VirtualTable& table() const { return table_; }

 private:
  VirtualTable table_;
};

/// Greedy allocation by normalised ironed values.
class GreedyMechanism : public CriticalValueMechanism {
 public:
  explicit GreedyMechanism(AuctionInstance instance);
  std::string name() const override { return "greedy"; }
  FeasibleSet allocate(const Profile& profile) const override;

 private:
  VirtualTable table_;
};

/// Identical-items variant: at most `kappa` winners, bundles ignored.
class KappaMechanism : public CriticalValueMechanism {
 public:
  KappaMechanism(AuctionInstance instance, std::size_t kappa);
  std::string name() const override { return "kappa:" + std::to_string(kappa_); }
  FeasibleSet allocate(const Profile& profile) const override;

 private:
  VirtualTable table_;
  std::size_t kappa_;
};

/// Welfare-maximising allocation on reported values with Clarke payments.
class VcgMechanism : public Mechanism {
 public:
  using Mechanism::Mechanism;
  std::string name() const override { return "vcg"; }
  Outcome run(const Profile& profile) const override;
};

/// "mwa", "vcg", "greedy" or "kappa:<k>". Throws MalformedInput otherwise.
std::unique_ptr<Mechanism> make_mechanism(const AuctionInstance& instance, std::string_view name);

Outcome run_mwa(const AuctionInstance& instance, const Profile& profile);
Rational critical_payment(const AuctionInstance& instance, const Profile& profile,
                          std::size_t winner);
Outcome vcg(const AuctionInstance& instance, const Profile& profile);

/// Interim win probability q and expected payment m for each buyer and each
/// report, against truthful opponents. Indexed by TypeSpace::type_index.
struct InterimQuantities {
  std::vector<std::size_t> grid_sizes;
  std::vector<std::vector<Rational>> q;
  std::vector<std::vector<Rational>> m;

  const Rational& win_probability(std::size_t buyer, const Bid& bid) const {
    return q[buyer][bid.bundle * grid_sizes[buyer] + bid.value];
  }
  const Rational& expected_payment(std::size_t buyer, const Bid& bid) const {
    return m[buyer][bid.bundle * grid_sizes[buyer] + bid.value];
  }
};

struct Evaluation {
  InterimQuantities interim;
  Rational revenue = 0;
  /// E[sum Q w] and E[sum Q w-bar] over truthful profiles.
  Rational virtual_surplus = 0;
  Rational ironed_surplus = 0;
};

struct EvaluationOptions {
  std::uint64_t cap = kDefaultTypeSpaceCap;
  unsigned workers = 1;
};

/// One exact pass over the joint type space. The result does not depend on
/// the number of workers. Throws TypeSpaceTooLarge.
Evaluation evaluate(const Mechanism& mechanism, const EvaluationOptions& options = {});

InterimQuantities interim_quantities(const Mechanism& mechanism,
                                     const EvaluationOptions& options = {});
Rational expected_revenue(const Mechanism& mechanism, const EvaluationOptions& options = {});
/// (E[sum Q w], E[sum Q w-bar]).
std::pair<Rational, Rational> ironed_bound(const Mechanism& mechanism,
                                           const EvaluationOptions& options = {});

}  // namespace auction
