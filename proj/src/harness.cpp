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

#include "auction/harness.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>
#include <unordered_map>

#include "auction/error.hpp"
#include "auction/orders.hpp"
#include "auction/verify.hpp"

namespace auction {

std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t counter, std::uint64_t lane) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(mix(seed) ^ counter) ^ (lane * 0xd1b54a32d192ed03ULL));
}

namespace {

constexpr std::uint64_t kGeneratorLane = 0x6a09e667f3bcc908ULL;

class Stream {
 public:
  explicit Stream(std::uint64_t seed) : seed_(seed) {}
  std::uint64_t next() { return counter_hash(seed_, counter_++, kGeneratorLane); }
  std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

std::vector<Rational> normalised(std::vector<Rational> weights) {
  Rational total = 0;
  for (const auto& w : weights) total += w;
  for (auto& w : weights) w /= total;
  return weights;
}

std::vector<Rational> random_pmf(Stream& rng, std::size_t size) {
  std::vector<Rational> weights;
  for (std::size_t k = 0; k < size; ++k) weights.emplace_back(1 + rng.below(9));
  return normalised(std::move(weights));
}

// Continuation ratios T(k+1) / T(k) in (0, 1).
std::vector<Rational> random_ratios(Stream& rng, std::size_t size) {
  std::vector<Rational> ratios;
  for (std::size_t k = 0; k + 1 < size; ++k) {
    auto keep = 1 + rng.below(6);
    auto stop = 1 + rng.below(6);
    ratios.push_back(fraction(static_cast<long>(keep), static_cast<long>(keep + stop)));
  }
  return ratios;
}

std::vector<Rational> pmf_from_ratios(const std::vector<Rational>& ratios) {
  const std::size_t size = ratios.size() + 1;
  std::vector<Rational> tail(size);
  tail[0] = 1;
  for (std::size_t k = 0; k + 1 < size; ++k) tail[k + 1] = tail[k] * ratios[k];
  std::vector<Rational> pmf(size);
  for (std::size_t k = 0; k + 1 < size; ++k) pmf[k] = tail[k] - tail[k + 1];
  pmf[size - 1] = tail[size - 1];
  return pmf;
}

std::string item_name(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('A' + i));
  return "I" + std::to_string(i);
}

}  // namespace

AuctionInstance generate_instance(const GeneratorConfig& config) {
  if (config.items == 0 || config.items > kMaxItems || config.buyers == 0 ||
      config.max_bundles == 0 || config.grid_size == 0) {
    throw AuctionError(ErrorKind::GenerationFailed, "generator bounds out of range");
  }
  Stream rng(config.seed);
  const std::uint64_t universe =
      config.items == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << config.items) - 1;

  RawInstance raw;
  for (std::size_t i = 0; i < config.items; ++i) raw.items.push_back(item_name(i));

  for (std::size_t n = 0; n < config.buyers; ++n) {
    const std::uint64_t wanted = std::min<std::uint64_t>(1 + rng.below(config.max_bundles), universe);
    std::vector<ItemSet> bundles;
    std::size_t attempts = 0;
    while (bundles.size() < wanted) {
      if (++attempts > config.rejection_budget) {
        // max_bundles is an upper bound; small antichains can saturate early.
        if (!bundles.empty()) break;
        throw AuctionError(ErrorKind::GenerationFailed,
                           "could not draw " + std::to_string(wanted) + " bundles for buyer " +
                               std::to_string(n));
      }
      ItemSet candidate(1 + rng.below(universe));
      if (!bundles.empty() && !config.antichain && rng.below(2) == 0) {
        // Grow an existing bundle by one item so nested pairs are common.
        ItemSet base = bundles[rng.below(bundles.size())];
        const std::uint64_t missing = universe & ~base.bits();
        if (missing != 0) {
          std::uint64_t pick = rng.below(static_cast<std::uint64_t>(std::popcount(missing)));
          std::uint64_t rest = missing;
          while (pick-- > 0) rest &= rest - 1;
          candidate = base | ItemSet(rest & (~rest + 1));
        }
      }
      bool rejected = std::find(bundles.begin(), bundles.end(), candidate) != bundles.end();
      if (config.antichain) {
        for (ItemSet b : bundles) {
          rejected = rejected || b.subset_of(candidate) || candidate.subset_of(b);
        }
      }
      if (!rejected) bundles.push_back(candidate);
    }

    std::vector<Rational> grid;
    Rational x(static_cast<unsigned long>(rng.below(3)));
    for (std::size_t k = 0; k < config.grid_size; ++k) {
      grid.push_back(x);
      x += fraction(static_cast<long>(1 + rng.below(8)), 2);
    }

    std::vector<std::vector<Rational>> pmfs(bundles.size());
    if (config.enforce_nested_order) {
      // Hazard-rate order on a grid is componentwise order of the
      // continuation ratios, so lift each bundle's ratios to dominate those
      // of every bundle it contains.
      std::vector<std::size_t> order(bundles.size());
      for (std::size_t b = 0; b < order.size(); ++b) order[b] = b;
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t a, std::size_t b) { return bundles[a].size() < bundles[b].size(); });
      std::vector<std::vector<Rational>> ratios(bundles.size());
      for (std::size_t t : order) {
        ratios[t] = random_ratios(rng, config.grid_size);
        for (std::size_t s = 0; s < bundles.size(); ++s) {
          if (s == t || ratios[s].empty() || !bundles[s].subset_of(bundles[t])) continue;
          for (std::size_t k = 0; k < ratios[t].size(); ++k) {
            if (ratios[s][k] > ratios[t][k]) ratios[t][k] = ratios[s][k];
          }
        }
      }
      for (std::size_t b = 0; b < bundles.size(); ++b) pmfs[b] = pmf_from_ratios(ratios[b]);
    } else {
      for (auto& pmf : pmfs) pmf = random_pmf(rng, config.grid_size);
    }

    std::vector<Rational> bundle_weights;
    for (std::size_t b = 0; b < bundles.size(); ++b) bundle_weights.emplace_back(1 + rng.below(5));
    auto bundle_prob = normalised(std::move(bundle_weights));

    RawBuyer buyer;
    for (std::size_t b = 0; b < bundles.size(); ++b) {
      RawBundle bundle;
      for (std::size_t i = 0; i < config.items; ++i) {
        if (bundles[b].contains(i)) bundle.items.push_back(raw.items[i]);
      }
      bundle.prob = bundle_prob[b];
      for (std::size_t k = 0; k < grid.size(); ++k) bundle.values.push_back({grid[k], pmfs[b][k]});
      buyer.bundles.push_back(std::move(bundle));
    }
    raw.buyers.push_back(std::move(buyer));
  }

  AuctionInstance instance = validate_instance(raw);
  if (config.enforce_nested_order && !check_nested_order(instance).empty()) {
    throw AuctionError(ErrorKind::GenerationFailed, "hazard-rate construction failed");
  }
  return instance;
}

ProfileSampler::ProfileSampler(const AuctionInstance& instance) {
  TypeSpace space(instance, ~std::uint64_t{0});
  const mpz_class scale = mpz_class(1) << 64;
  for (std::size_t n = 0; n < space.buyer_count(); ++n) {
    std::vector<std::uint64_t> thresholds;
    std::vector<Bid> bids;
    Rational cumulative = 0;
    auto types = space.types(n);
    for (std::size_t k = 0; k < types.size(); ++k) {
      bids.push_back(types[k].bid);
      if (k + 1 == types.size()) break;
      cumulative += types[k].prob;
      mpz_class scaled = cumulative.get_num() * scale;
      mpz_class ceiling;
      mpz_cdiv_q(ceiling.get_mpz_t(), scaled.get_mpz_t(), cumulative.get_den_mpz_t());
      thresholds.push_back(ceiling >= scale ? ~std::uint64_t{0}
                                            : static_cast<std::uint64_t>(ceiling.get_ui()));
    }
    thresholds_.push_back(std::move(thresholds));
    bids_.push_back(std::move(bids));
  }
}

std::vector<std::size_t> ProfileSampler::sample_types(std::uint64_t seed, std::uint64_t index) const {
  std::vector<std::size_t> out(bids_.size());
  for (std::size_t n = 0; n < bids_.size(); ++n) {
    const std::uint64_t u = counter_hash(seed, index, n);
    const auto& t = thresholds_[n];
    out[n] = static_cast<std::size_t>(std::upper_bound(t.begin(), t.end(), u) - t.begin());
  }
  return out;
}

Profile ProfileSampler::sample(std::uint64_t seed, std::uint64_t index) const {
  auto types = sample_types(seed, index);
  Profile profile(types.size());
  for (std::size_t n = 0; n < types.size(); ++n) profile[n] = bids_[n][types[n]];
  return profile;
}

Profile sample_profile(const AuctionInstance& instance, std::uint64_t seed, std::uint64_t index) {
  return ProfileSampler(instance).sample(seed, index);
}

namespace {

constexpr std::uint64_t kBlock = 4096;

struct BlockSum {
  double sum = 0;
  double sum_sq = 0;
};

}  // namespace

SimReport estimate_revenue(const Mechanism& mechanism, std::uint64_t samples, std::uint64_t seed,
                           unsigned workers) {
  if (samples == 0) {
    throw AuctionError(ErrorKind::IndexOutOfRange, "at least one sample is required");
  }
  const AuctionInstance& instance = mechanism.instance();
  ProfileSampler sampler(instance);
  std::vector<std::uint64_t> radix;
  for (const auto& prior : instance.buyers) radix.push_back(prior.type_count());

  const std::uint64_t blocks = (samples + kBlock - 1) / kBlock;
  std::vector<BlockSum> sums(blocks);

  auto run_blocks = [&](std::uint64_t first, std::uint64_t last) {
    // Profiles repeat often on small type spaces; cache each total payment.
    std::unordered_map<std::uint64_t, double> cache;
    for (std::uint64_t block = first; block < last; ++block) {
      BlockSum s;
      const std::uint64_t end = std::min(samples, (block + 1) * kBlock);
      for (std::uint64_t i = block * kBlock; i < end; ++i) {
        auto types = sampler.sample_types(seed, i);
        std::uint64_t key = 0;
        for (std::size_t n = 0; n < types.size(); ++n) key = key * radix[n] + types[n];
        auto it = cache.find(key);
        if (it == cache.end()) {
          Profile profile = sampler.sample(seed, i);
          it = cache.emplace(key, to_double(mechanism.run(profile).total_payment())).first;
        }
        s.sum += it->second;
        s.sum_sq += it->second * it->second;
      }
      sums[block] = s;
    }
  };

  const std::uint64_t threads_wanted = std::max<std::uint64_t>(1, std::min<std::uint64_t>(workers, blocks));
  if (threads_wanted == 1) {
    run_blocks(0, blocks);
  } else {
    std::vector<std::exception_ptr> errors(threads_wanted);
    {
      std::vector<std::jthread> threads;
      const std::uint64_t per = (blocks + threads_wanted - 1) / threads_wanted;
      for (std::uint64_t w = 0; w < threads_wanted; ++w) {
        threads.emplace_back([&, w] {
          try {
            run_blocks(w * per, std::min(blocks, (w + 1) * per));
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
    }
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  double sum = 0;
  double sum_sq = 0;
  for (const auto& s : sums) {
    sum += s.sum;
    sum_sq += s.sum_sq;
  }
  const double count = static_cast<double>(samples);
  SimReport report;
  report.mechanism = mechanism.name();
  report.samples = samples;
  report.seed = seed;
  report.estimate = sum / count;
  if (samples > 1) {
    double variance = (sum_sq - count * report.estimate * report.estimate) / (count - 1);
    report.std_err = std::sqrt(std::max(0.0, variance) / count);
  }
  std::uint64_t space = 1;
  for (auto r : radix) space = space > kExactModeLimit ? space : space * r;
  if (space <= kExactModeLimit) report.exact = expected_revenue(mechanism, {.workers = workers});
  return report;
}

std::vector<CompareRow> compare(const AuctionInstance& instance,
                                std::span<const std::string> mechanisms, CompareMode mode,
                                std::uint64_t samples, std::uint64_t seed) {
  std::vector<CompareRow> rows;
  if (mechanisms.empty()) return rows;

  bool exact = mode == CompareMode::Exact;
  const std::uint64_t cap = exact ? kDefaultTypeSpaceCap : kExactModeLimit;
  if (mode != CompareMode::Sampled) {
    try {
      TypeSpace space(instance, cap);
      exact = true;
    } catch (const AuctionError& e) {
      if (mode == CompareMode::Exact) throw;
      exact = false;
    }
  }

  for (const auto& name : mechanisms) {
    auto mechanism = make_mechanism(instance, name);
    CompareRow row;
    row.mechanism = mechanism->name();
    row.exact_mode = exact;
    if (exact) {
      Evaluation eval = evaluate(*mechanism, {cap, 1});
      row.revenue_exact = eval.revenue;
      row.virtual_surplus = eval.virtual_surplus;
      row.ironed_surplus = eval.ironed_surplus;
      row.revenue_estimate = to_double(eval.revenue);
      row.ic_ok = check_ic(instance, eval.interim).empty();
      row.ir_ok = check_ir(instance, eval.interim).empty();
    } else {
      SimReport sim = estimate_revenue(*mechanism, samples, seed);
      row.revenue_estimate = sim.estimate;
      row.std_err = sim.std_err;
      row.samples = samples;
      row.revenue_exact = sim.exact;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace auction
