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

#include "auction/mechanism.hpp"

#include <charconv>
#include <exception>
#include <thread>

#include "auction/error.hpp"

namespace auction {

Rational Outcome::total_payment() const {
  Rational total = 0;
  for (const auto& p : payments) total += p;
  return total;
}

namespace {

bool wins_at(const CriticalValueMechanism& mechanism, Profile& profile, std::size_t buyer,
             std::size_t value) {
  const std::size_t saved = profile[buyer].value;
  profile[buyer].value = value;
  bool won = mechanism.allocate(profile).contains(buyer);
  profile[buyer].value = saved;
  return won;
}

struct ReportedBundles {
  std::vector<ItemSet> bundles;
  std::vector<Rational> weights;
};

ReportedBundles ironed_weights(const AuctionInstance& instance, const VirtualTable& table,
                               const Profile& profile) {
  ReportedBundles out;
  out.bundles.reserve(profile.size());
  out.weights.reserve(profile.size());
  for (std::size_t n = 0; n < profile.size(); ++n) {
    out.bundles.push_back(bid_bundle(instance, n, profile[n]));
    out.weights.push_back(table.ironed_value(n, profile[n]));
  }
  return out;
}

}  // namespace

Outcome CriticalValueMechanism::run(const Profile& profile) const {
  Outcome outcome;
  outcome.winners = allocate(profile);
  outcome.payments.assign(profile.size(), Rational(0));
  for (std::size_t n : outcome.winners.buyers()) outcome.payments[n] = critical_value(profile, n);
  return outcome;
}

Rational CriticalValueMechanism::critical_value(const Profile& profile, std::size_t buyer) const {
  Profile probe = profile;
  if (!wins_at(*this, probe, buyer, profile[buyer].value)) {
    throw AuctionError(ErrorKind::NotAWinner,
                       "buyer " + std::to_string(buyer) + " does not win at this profile");
  }
  std::size_t lo = 0;
  std::size_t hi = profile[buyer].value;
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (wins_at(*this, probe, buyer, mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return instance().buyers[buyer].grid[lo];
}

Rational CriticalValueMechanism::telescoping_payment(const Profile& profile,
                                                     std::size_t buyer) const {
  Profile probe = profile;
  const auto& grid = instance().buyers[buyer].grid;
  Rational payment = 0;
  int previous = 0;
  for (std::size_t i = 0; i <= profile[buyer].value; ++i) {
    int current = wins_at(*this, probe, buyer, i) ? 1 : 0;
    payment += (current - previous) * grid[i];
    previous = current;
  }
  return payment;
}

MwaMechanism::MwaMechanism(AuctionInstance instance)
    : CriticalValueMechanism(std::move(instance)), table_(this->instance()) {}

FeasibleSet MwaMechanism::allocate(const Profile& profile) const {
  auto reported = ironed_weights(instance(), table_, profile);
  return mwis(build_conflict_graph(reported.bundles, reported.weights));
}

GreedyMechanism::GreedyMechanism(AuctionInstance instance)
    : CriticalValueMechanism(std::move(instance)), table_(this->instance()) {}

FeasibleSet GreedyMechanism::allocate(const Profile& profile) const {
  auto reported = ironed_weights(instance(), table_, profile);
  return greedy_allocation(reported.bundles, reported.weights);
}

KappaMechanism::KappaMechanism(AuctionInstance instance, std::size_t kappa)
    : CriticalValueMechanism(std::move(instance)), table_(this->instance()), kappa_(kappa) {}

FeasibleSet KappaMechanism::allocate(const Profile& profile) const {
  auto reported = ironed_weights(instance(), table_, profile);
  return kappa_allocation(reported.weights, kappa_);
}

Outcome VcgMechanism::run(const Profile& profile) const {
  std::vector<ItemSet> bundles;
  std::vector<Rational> values;
  for (std::size_t n = 0; n < profile.size(); ++n) {
    bundles.push_back(bid_bundle(instance(), n, profile[n]));
    values.push_back(bid_value(instance(), n, profile[n]));
  }
  Outcome outcome;
  outcome.winners = mwis(build_conflict_graph(bundles, values));
  outcome.payments.assign(profile.size(), Rational(0));
  for (std::size_t n : outcome.winners.buyers()) {
    std::vector<Rational> without = values;
    without[n] = 0;
    Rational others_alone = mwis(build_conflict_graph(bundles, without)).weight;
    Rational others_with_n = outcome.winners.weight - values[n];
    outcome.payments[n] = others_alone - others_with_n;
  }
  return outcome;
}

std::unique_ptr<Mechanism> make_mechanism(const AuctionInstance& instance, std::string_view name) {
  if (name == "mwa") return std::make_unique<MwaMechanism>(instance);
  if (name == "vcg") return std::make_unique<VcgMechanism>(instance);
  if (name == "greedy") return std::make_unique<GreedyMechanism>(instance);
  if (name.starts_with("kappa:")) {
    std::string_view digits = name.substr(6);
    std::size_t kappa = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), kappa);
    if (ec == std::errc() && end == digits.data() + digits.size() && !digits.empty()) {
      return std::make_unique<KappaMechanism>(instance, kappa);
    }
  }
  throw AuctionError(ErrorKind::MalformedInput, "unknown mechanism \"" + std::string(name) + "\"");
}

Outcome run_mwa(const AuctionInstance& instance, const Profile& profile) {
  check_profile(instance, profile);
  return MwaMechanism(instance).run(profile);
}

Rational critical_payment(const AuctionInstance& instance, const Profile& profile,
                          std::size_t winner) {
  check_profile(instance, profile);
  if (winner >= profile.size()) {
    throw AuctionError(ErrorKind::NotAWinner, "no buyer " + std::to_string(winner));
  }
  return MwaMechanism(instance).critical_value(profile, winner);
}

Outcome vcg(const AuctionInstance& instance, const Profile& profile) {
  check_profile(instance, profile);
  return VcgMechanism(instance).run(profile);
}

namespace {

Evaluation empty_evaluation(const TypeSpace& space, const AuctionInstance& instance) {
  Evaluation eval;
  for (std::size_t n = 0; n < space.buyer_count(); ++n) {
    eval.interim.grid_sizes.push_back(instance.buyers[n].grid.size());
    eval.interim.q.emplace_back(space.types(n).size(), Rational(0));
    eval.interim.m.emplace_back(space.types(n).size(), Rational(0));
  }
  return eval;
}

void accumulate(const Mechanism& mechanism, const TypeSpace& space, const VirtualTable& table,
                std::uint64_t begin, std::uint64_t end, Evaluation& eval) {
  const std::size_t buyers = space.buyer_count();
  space.for_each(begin, end, [&](std::uint64_t, const Profile& profile, const Rational& prob) {
    Outcome outcome = mechanism.run(profile);
    for (std::size_t n = 0; n < buyers; ++n) {
      const std::size_t t = space.type_index(n, profile[n]);
      const bool won = outcome.wins(n);
      if (!won && outcome.payments[n] == 0) continue;
      Rational others = prob / space.types(n)[t].prob;
      if (won) {
        eval.interim.q[n][t] += others;
        eval.virtual_surplus += prob * table.virtual_value(n, profile[n]);
        eval.ironed_surplus += prob * table.ironed_value(n, profile[n]);
      }
      eval.interim.m[n][t] += others * outcome.payments[n];
      eval.revenue += prob * outcome.payments[n];
    }
  });
}

void merge(Evaluation& into, const Evaluation& part) {
  for (std::size_t n = 0; n < into.interim.q.size(); ++n) {
    for (std::size_t t = 0; t < into.interim.q[n].size(); ++t) {
      into.interim.q[n][t] += part.interim.q[n][t];
      into.interim.m[n][t] += part.interim.m[n][t];
    }
  }
  into.revenue += part.revenue;
  into.virtual_surplus += part.virtual_surplus;
  into.ironed_surplus += part.ironed_surplus;
}

}  // namespace

Evaluation evaluate(const Mechanism& mechanism, const EvaluationOptions& options) {
  const AuctionInstance& instance = mechanism.instance();
  TypeSpace space(instance, options.cap);
  VirtualTable table(instance);
  Evaluation total = empty_evaluation(space, instance);

  const std::uint64_t workers =
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(options.workers, space.size()));
  if (workers == 1) {
    accumulate(mechanism, space, table, 0, space.size(), total);
    return total;
  }

  std::vector<Evaluation> parts(workers, total);
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> threads;
    const std::uint64_t chunk = (space.size() + workers - 1) / workers;
    for (std::uint64_t w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        try {
          accumulate(mechanism, space, table, w * chunk, std::min(space.size(), (w + 1) * chunk),
                     parts[w]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
  for (const auto& part : parts) merge(total, part);
  return total;
}

InterimQuantities interim_quantities(const Mechanism& mechanism, const EvaluationOptions& options) {
  return evaluate(mechanism, options).interim;
}

Rational expected_revenue(const Mechanism& mechanism, const EvaluationOptions& options) {
  return evaluate(mechanism, options).revenue;
}

std::pair<Rational, Rational> ironed_bound(const Mechanism& mechanism,
                                           const EvaluationOptions& options) {
  Evaluation eval = evaluate(mechanism, options);
  return {eval.virtual_surplus, eval.ironed_surplus};
}

}  // namespace auction
