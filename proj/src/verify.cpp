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

#include "auction/verify.hpp"

#include <sstream>

#include "auction/orders.hpp"
#include "auction/virtual_values.hpp"

namespace auction {

Rational deviation_payoff(const BuyerPrior& prior, const Bid& truth, const Bid& report,
                          const Rational& q, const Rational& m) {
  const bool credited = prior.bundles[truth.bundle].subset_of(prior.bundles[report.bundle]);
  if (!credited) return -m;
  return q * prior.grid[truth.value] - m;
}

std::vector<ICViolation> check_ic(const AuctionInstance& instance, const InterimQuantities& interim,
                                  bool same_bundle_only) {
  std::vector<ICViolation> violations;
  for (std::size_t n = 0; n < instance.buyers.size(); ++n) {
    const BuyerPrior& prior = instance.buyers[n];
    for (std::size_t b = 0; b < prior.bundles.size(); ++b) {
      for (std::size_t i = 0; i < prior.grid.size(); ++i) {
        const Bid truth{b, i};
        Rational truthful = deviation_payoff(prior, truth, truth, interim.win_probability(n, truth),
                                             interim.expected_payment(n, truth));
        for (std::size_t t = 0; t < prior.bundles.size(); ++t) {
          if (same_bundle_only && t != b) continue;
          for (std::size_t j = 0; j < prior.grid.size(); ++j) {
            const Bid report{t, j};
            if (report == truth) continue;
            Rational deviating =
                deviation_payoff(prior, truth, report, interim.win_probability(n, report),
                                 interim.expected_payment(n, report));
            if (deviating > truthful) {
              violations.push_back(ICViolation{n, truth, report, truthful, deviating});
            }
          }
        }
      }
    }
  }
  return violations;
}

std::vector<ICViolation> check_ic(const Mechanism& mechanism, bool same_bundle_only,
                                  const EvaluationOptions& options) {
  return check_ic(mechanism.instance(), interim_quantities(mechanism, options), same_bundle_only);
}

std::vector<IRViolation> check_ir(const AuctionInstance& instance, const InterimQuantities& interim) {
  std::vector<IRViolation> violations;
  for (std::size_t n = 0; n < instance.buyers.size(); ++n) {
    const BuyerPrior& prior = instance.buyers[n];
    for (std::size_t b = 0; b < prior.bundles.size(); ++b) {
      for (std::size_t i = 0; i < prior.grid.size(); ++i) {
        const Bid type{b, i};
        Rational payoff =
            interim.win_probability(n, type) * prior.grid[i] - interim.expected_payment(n, type);
        if (payoff < 0) violations.push_back(IRViolation{n, type, payoff});
      }
    }
  }
  return violations;
}

std::vector<IRViolation> check_ir(const Mechanism& mechanism, const EvaluationOptions& options) {
  return check_ir(mechanism.instance(), interim_quantities(mechanism, options));
}

std::vector<MonotonicityViolation> check_q_monotone(const AuctionInstance& instance,
                                                    const InterimQuantities& interim) {
  std::vector<MonotonicityViolation> violations;
  for (std::size_t n = 0; n < instance.buyers.size(); ++n) {
    const BuyerPrior& prior = instance.buyers[n];
    for (std::size_t b = 0; b < prior.bundles.size(); ++b) {
      for (std::size_t i = 0; i + 1 < prior.grid.size(); ++i) {
        const Rational& lower = interim.win_probability(n, Bid{b, i});
        const Rational& upper = interim.win_probability(n, Bid{b, i + 1});
        if (lower > upper) violations.push_back(MonotonicityViolation{n, b, i, lower, upper});
      }
    }
  }
  return violations;
}

namespace {

// Calls `step(x_i, x_{i+1}, dq, dm)` for every consecutive grid pair.
template <typename Step>
bool all_steps(const AuctionInstance& instance, const InterimQuantities& interim, Step step) {
  for (std::size_t n = 0; n < instance.buyers.size(); ++n) {
    const BuyerPrior& prior = instance.buyers[n];
    for (std::size_t b = 0; b < prior.bundles.size(); ++b) {
      for (std::size_t i = 0; i + 1 < prior.grid.size(); ++i) {
        Rational dq = interim.win_probability(n, Bid{b, i + 1}) - interim.win_probability(n, Bid{b, i});
        Rational dm =
            interim.expected_payment(n, Bid{b, i + 1}) - interim.expected_payment(n, Bid{b, i});
        if (!step(prior.grid[i], prior.grid[i + 1], dq, dm)) return false;
      }
    }
  }
  return true;
}

}  // namespace

bool check_relaxed_ic_interval(const AuctionInstance& instance, const InterimQuantities& interim) {
  return all_steps(instance, interim,
                   [](const Rational& lo, const Rational& hi, const Rational& dq, const Rational& dm) {
                     return dq * lo <= dm && dm <= dq * hi;
                   });
}

bool check_relaxed_ic_interval(const Mechanism& mechanism, const EvaluationOptions& options) {
  return check_relaxed_ic_interval(mechanism.instance(), interim_quantities(mechanism, options));
}

bool relaxed_ic_upper_bound_binds(const AuctionInstance& instance,
                                  const InterimQuantities& interim) {
  return all_steps(instance, interim,
                   [](const Rational&, const Rational& hi, const Rational& dq, const Rational& dm) {
                     return dm == dq * hi;
                   });
}

std::vector<MvvViolation> check_mvv_bundle_monotone(const AuctionInstance& instance) {
  std::vector<MvvViolation> violations;
  VirtualTable table(instance);
  for (std::size_t n = 0; n < instance.buyers.size(); ++n) {
    const BuyerPrior& prior = instance.buyers[n];
    for (std::size_t s = 0; s < prior.bundles.size(); ++s) {
      for (std::size_t t = 0; t < prior.bundles.size(); ++t) {
        if (s == t || !prior.bundles[s].subset_of(prior.bundles[t])) continue;
        const auto& small = table.entry(n, s).ironed;
        const auto& large = table.entry(n, t).ironed;
        for (std::size_t i = 0; i < prior.grid.size(); ++i) {
          if (small[i] < large[i]) violations.push_back(MvvViolation{n, s, t, i, small[i], large[i]});
        }
      }
    }
  }
  return violations;
}

std::vector<ExPostViolation> check_ex_post_ic(const Mechanism& mechanism, std::uint64_t cap) {
  const AuctionInstance& instance = mechanism.instance();
  TypeSpace space(instance, cap);
  std::vector<ExPostViolation> violations;
  space.for_each([&](std::uint64_t index, const Profile& profile, const Rational&) {
    Outcome truthful = mechanism.run(profile);
    for (std::size_t n = 0; n < profile.size(); ++n) {
      const BuyerPrior& prior = instance.buyers[n];
      const Bid truth = profile[n];
      Rational truthful_payoff = deviation_payoff(prior, truth, truth, truthful.wins(n) ? 1 : 0,
                                                  truthful.payments[n]);
      Profile probe = profile;
      for (const BuyerType& type : space.types(n)) {
        if (type.bid == truth) continue;
        probe[n] = type.bid;
        Outcome outcome = mechanism.run(probe);
        Rational payoff = deviation_payoff(prior, truth, type.bid, outcome.wins(n) ? 1 : 0,
                                           outcome.payments[n]);
        if (payoff > truthful_payoff) {
          violations.push_back(ExPostViolation{n, index, truth, type.bid, truthful_payoff, payoff});
        }
      }
    }
  });
  return violations;
}

MechanismAudit audit(const Mechanism& mechanism, const EvaluationOptions& options) {
  const AuctionInstance& instance = mechanism.instance();
  InterimQuantities interim = interim_quantities(mechanism, options);
  MechanismAudit result;
  result.ic = check_ic(instance, interim);
  result.ir = check_ir(instance, interim);
  result.monotonicity = check_q_monotone(instance, interim);
  result.relaxed_ic_interval = check_relaxed_ic_interval(instance, interim);
  return result;
}

AuctionInstance counterexample_instance() {
  RawInstance raw;
  raw.items = {"A", "B"};
  raw.buyers.push_back(RawBuyer{{RawBundle{{"A"}, 1, {{1, 1}}}}});
  raw.buyers.push_back(RawBuyer{{
      RawBundle{{"A"}, Rational(1, 2), {{2, Rational(1, 2)}, {4, Rational(1, 2)}}},
      RawBundle{{"A", "B"}, Rational(1, 2), {{2, Rational(9, 10)}, {4, Rational(1, 10)}}},
  }});
  return validate_instance(raw);
}

namespace {

class Ledger {
 public:
  explicit Ledger(CounterexampleReport& report) : report_(report) {}

  void check(const std::string& label, const Rational& actual, const Rational& expected) {
    line(label + " = " + to_string(actual), actual == expected,
         label + ": expected " + to_string(expected) + ", got " + to_string(actual));
  }
  void check(const std::string& label, bool actual, bool expected) {
    line(label + " = " + (actual ? "yes" : "no"), actual == expected, label + ": mismatch");
  }

 private:
  void line(const std::string& text, bool ok, const std::string& mismatch) {
    report_.lines.push_back((ok ? "  ok    " : "  FAIL  ") + text);
    if (!ok) report_.mismatches.push_back(mismatch);
  }
  CounterexampleReport& report_;
};

}  // namespace

CounterexampleReport reproduce_counterexample() {
  const AuctionInstance instance = counterexample_instance();
  const ItemSet a = ItemSet::of({0});
  const ItemSet ab = ItemSet::of({0, 1});

  CounterexampleReport report;
  Ledger ledger(report);

  report.lines.push_back("virtual values");
  ledger.check("w1({A}, 1)", virtual_valuation(instance.buyers[0], a)[0], 1);
  auto w_a = virtual_valuation(instance.buyers[1], a);
  auto w_ab = virtual_valuation(instance.buyers[1], ab);
  ledger.check("w2({A}, 2)", w_a[0], 0);
  ledger.check("w2({A}, 4)", w_a[1], 4);
  ledger.check("w2({A,B}, 2)", w_ab[0], Rational(16, 9));
  ledger.check("w2({A,B}, 4)", w_ab[1], 4);

  report.lines.push_back("hazard-rate condition");
  ledger.check("buyer 2 violates the nested-bundle order", !check_nested_order(instance).empty(),
               true);

  report.lines.push_back("outcomes with buyer 1 bidding ({A}, 1)");
  struct Case {
    ItemSet bundle;
    int value;
    const char* label;
    bool buyer2_wins;
    Rational price;
  };
  const Case cases[] = {
      {a, 2, "({A}, 2)", false, 1},
      {a, 4, "({A}, 4)", true, 4},
      {ab, 2, "({A,B}, 2)", true, 2},
      {ab, 4, "({A,B}, 4)", true, 2},
  };
  const MwaMechanism mwa(instance);
  for (const Case& c : cases) {
    Profile profile{make_bid(instance, 0, a, 1), make_bid(instance, 1, c.bundle, c.value)};
    Outcome outcome = mwa.run(profile);
    const std::string who = std::string("buyer 2 bids ") + c.label;
    ledger.check(who + ": buyer 2 wins", outcome.wins(1), c.buyer2_wins);
    ledger.check(who + ": buyer 1 wins", outcome.wins(0), !c.buyer2_wins);
    ledger.check(who + ": price", c.buyer2_wins ? outcome.payments[1] : outcome.payments[0],
                 c.price);
  }

  report.lines.push_back("incentive compatibility");
  Evaluation eval = evaluate(mwa);
  auto violations = check_ic(instance, eval.interim);
  const Bid truth = make_bid(instance, 1, a, 4);
  bool only_from_truth = !violations.empty();
  for (const auto& v : violations) {
    only_from_truth = only_from_truth && v.buyer == 1 && v.true_type == truth;
  }
  ledger.check("every IC violation is buyer 2 with true type ({A}, 4)", only_from_truth, true);
  const Bid misreport = make_bid(instance, 1, ab, 2);
  bool found = false;
  for (const auto& v : violations) {
    if (v.deviation == misreport) {
      found = true;
      ledger.check("truthful payoff of ({A}, 4)", v.truthful_payoff, 0);
      ledger.check("payoff of misreport ({A,B}, 2)", v.deviating_payoff, 2);
    }
  }
  ledger.check("misreport ({A,B}, 2) detected", found, true);
  ledger.check("expected MWA revenue", eval.revenue, Rational(9, 4));
  return report;
}

}  // namespace auction
