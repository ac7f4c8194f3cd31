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

#include "auction/model.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "auction/error.hpp"

namespace auction {

std::optional<std::size_t> BuyerPrior::find_bundle(ItemSet bundle) const {
  auto it = std::find(bundles.begin(), bundles.end(), bundle);
  if (it == bundles.end()) return std::nullopt;
  return static_cast<std::size_t>(it - bundles.begin());
}

std::size_t BuyerPrior::bundle_index(ItemSet bundle) const {
  if (auto index = find_bundle(bundle)) return *index;
  throw AuctionError(ErrorKind::BundleNotInSupport,
                     "bundle mask " + std::to_string(bundle.bits()) + " is not in the support");
}

namespace {

std::string buyer_path(std::size_t n) { return "/buyers/" + std::to_string(n); }
std::string bundle_path(std::size_t n, std::size_t b) {
  return buyer_path(n) + "/bundles/" + std::to_string(b);
}
std::string where(std::size_t n, std::size_t b) {
  return "buyer " + std::to_string(n) + ", bundle " + std::to_string(b);
}

Rational sum(std::span<const Rational> values) {
  Rational total = 0;
  for (const auto& v : values) total += v;
  return total;
}

}  // namespace

AuctionInstance validate_instance(const RawInstance& raw) {
  if (raw.items.size() > kMaxItems) {
    throw AuctionError(ErrorKind::TooManyItems,
                       std::to_string(raw.items.size()) + " items exceed the limit of " +
                           std::to_string(kMaxItems),
                       "/items");
  }
  std::map<std::string, std::size_t> item_index;
  for (std::size_t i = 0; i < raw.items.size(); ++i) {
    if (!item_index.emplace(raw.items[i], i).second) {
      throw AuctionError(ErrorKind::MalformedInput, "duplicate item name \"" + raw.items[i] + "\"",
                         "/items/" + std::to_string(i));
    }
  }
  if (raw.buyers.empty()) {
    throw AuctionError(ErrorKind::MalformedInput, "instance has no buyers", "/buyers");
  }

  AuctionInstance instance;
  instance.items = raw.items;
  instance.buyers.reserve(raw.buyers.size());

  for (std::size_t n = 0; n < raw.buyers.size(); ++n) {
    const RawBuyer& rb = raw.buyers[n];
    if (rb.bundles.empty()) {
      throw AuctionError(ErrorKind::EmptySupport, "buyer " + std::to_string(n) + " has no bundles",
                         buyer_path(n) + "/bundles");
    }
    BuyerPrior prior;
    for (std::size_t b = 0; b < rb.bundles.size(); ++b) {
      const RawBundle& bundle = rb.bundles[b];
      const std::string path = bundle_path(n, b);

      std::uint64_t bits = 0;
      for (std::size_t k = 0; k < bundle.items.size(); ++k) {
        auto it = item_index.find(bundle.items[k]);
        if (it == item_index.end()) {
          throw AuctionError(ErrorKind::BundleOutsideUniverse,
                             where(n, b) + ": item \"" + bundle.items[k] + "\" is not in the universe",
                             path + "/items/" + std::to_string(k));
        }
        bits |= std::uint64_t{1} << it->second;
      }
      ItemSet set(bits);
      if (prior.find_bundle(set)) {
        throw AuctionError(ErrorKind::DuplicateBundle, where(n, b) + " repeats an earlier bundle",
                           path + "/items");
      }
      if (bundle.prob <= 0) {
        throw AuctionError(ErrorKind::NonPositiveProbability,
                           where(n, b) + ": bundle probability " + to_string(bundle.prob) +
                               " is not positive",
                           path + "/prob");
      }
      if (bundle.values.empty()) {
        throw AuctionError(ErrorKind::EmptySupport, where(n, b) + " has an empty value grid",
                           path + "/values");
      }

      std::vector<Rational> grid;
      std::vector<Rational> pmf;
      for (std::size_t i = 0; i < bundle.values.size(); ++i) {
        const RawValue& value = bundle.values[i];
        const std::string vpath = path + "/values/" + std::to_string(i);
        if (value.v < 0) {
          throw AuctionError(ErrorKind::NegativeValue,
                             where(n, b) + ", index " + std::to_string(i) + ": value " +
                                 to_string(value.v) + " is negative",
                             vpath + "/v");
        }
        if (i > 0 && value.v <= grid.back()) {
          throw AuctionError(ErrorKind::GridNotSorted,
                             where(n, b) + ", index " + std::to_string(i) + ": value " +
                                 to_string(value.v) + " does not exceed " + to_string(grid.back()),
                             vpath + "/v");
        }
        if (value.prob <= 0) {
          throw AuctionError(ErrorKind::NonPositiveProbability,
                             where(n, b) + ", index " + std::to_string(i) + ": probability " +
                                 to_string(value.prob) + " is not positive",
                             vpath + "/prob");
        }
        grid.push_back(value.v);
        pmf.push_back(value.prob);
      }
      if (Rational total = sum(pmf); total != 1) {
        throw AuctionError(ErrorKind::PmfNotNormalized,
                           where(n, b) + ": value probabilities sum to " + to_string(total),
                           path + "/values");
      }
      if (b == 0) {
        prior.grid = std::move(grid);
      } else if (grid != prior.grid) {
        throw AuctionError(ErrorKind::GridMismatch,
                           where(n, b) + ": value grid differs from the buyer's first bundle",
                           path + "/values");
      }
      prior.bundles.push_back(set);
      prior.bundle_prob.push_back(bundle.prob);
      prior.value_pmf.push_back(std::move(pmf));
    }
    if (Rational total = sum(prior.bundle_prob); total != 1) {
      throw AuctionError(ErrorKind::PmfNotNormalized,
                         "buyer " + std::to_string(n) + ": bundle probabilities sum to " +
                             to_string(total),
                         buyer_path(n) + "/bundles");
    }
    instance.buyers.push_back(std::move(prior));
  }
  return instance;
}

RawInstance to_raw(const AuctionInstance& instance) {
  RawInstance raw;
  raw.items = instance.items;
  for (const auto& prior : instance.buyers) {
    RawBuyer buyer;
    for (std::size_t b = 0; b < prior.bundles.size(); ++b) {
      RawBundle bundle;
      for (std::size_t i = 0; i < instance.items.size(); ++i) {
        if (prior.bundles[b].contains(i)) bundle.items.push_back(instance.items[i]);
      }
      bundle.prob = prior.bundle_prob[b];
      for (std::size_t i = 0; i < prior.grid.size(); ++i) {
        bundle.values.push_back({prior.grid[i], prior.value_pmf[b][i]});
      }
      buyer.bundles.push_back(std::move(bundle));
    }
    raw.buyers.push_back(std::move(buyer));
  }
  return raw;
}

Bid make_bid(const AuctionInstance& instance, std::size_t buyer, ItemSet bundle,
             const Rational& value) {
  if (buyer >= instance.buyers.size()) {
    throw AuctionError(ErrorKind::BidOutsideSupport, "no buyer " + std::to_string(buyer));
  }
  const BuyerPrior& prior = instance.buyers[buyer];
  auto b = prior.find_bundle(bundle);
  if (!b) {
    throw AuctionError(ErrorKind::BidOutsideSupport,
                       "buyer " + std::to_string(buyer) + " cannot report that bundle");
  }
  auto it = std::find(prior.grid.begin(), prior.grid.end(), value);
  if (it == prior.grid.end()) {
    throw AuctionError(ErrorKind::BidOutsideSupport, "buyer " + std::to_string(buyer) +
                                                         " cannot report value " + to_string(value));
  }
  return Bid{*b, static_cast<std::size_t>(it - prior.grid.begin())};
}

void check_profile(const AuctionInstance& instance, const Profile& profile) {
  if (profile.size() != instance.buyers.size()) {
    throw AuctionError(ErrorKind::BidOutsideSupport,
                       "profile has " + std::to_string(profile.size()) + " bids for " +
                           std::to_string(instance.buyers.size()) + " buyers");
  }
  for (std::size_t n = 0; n < profile.size(); ++n) {
    const auto& prior = instance.buyers[n];
    if (profile[n].bundle >= prior.bundles.size() || profile[n].value >= prior.grid.size()) {
      throw AuctionError(ErrorKind::BidOutsideSupport,
                         "bid of buyer " + std::to_string(n) + " is outside its support");
    }
  }
}

const Rational& bid_value(const AuctionInstance& instance, std::size_t buyer, const Bid& bid) {
  return instance.buyers[buyer].grid[bid.value];
}

ItemSet bid_bundle(const AuctionInstance& instance, std::size_t buyer, const Bid& bid) {
  return instance.buyers[buyer].bundles[bid.bundle];
}

Rational tail_mass(std::span<const Rational> pmf, std::size_t k) {
  Rational total = 0;
  for (std::size_t l = k; l < pmf.size(); ++l) total += pmf[l];
  return total;
}

Rational survival(const BuyerPrior& prior, ItemSet bundle, const Rational& threshold,
                  bool strict) {
  const auto& pmf = prior.value_pmf[prior.bundle_index(bundle)];
  Rational total = 0;
  for (std::size_t i = 0; i < prior.grid.size(); ++i) {
    if (strict ? prior.grid[i] > threshold : prior.grid[i] >= threshold) total += pmf[i];
  }
  return total;
}

TypeSpace::TypeSpace(const AuctionInstance& instance, std::uint64_t cap) {
  types_.reserve(instance.buyers.size());
  for (const auto& prior : instance.buyers) {
    std::vector<BuyerType> types;
    types.reserve(prior.type_count());
    for (std::size_t b = 0; b < prior.bundles.size(); ++b) {
      for (std::size_t i = 0; i < prior.grid.size(); ++i) {
        types.push_back({Bid{b, i}, Rational(prior.bundle_prob[b] * prior.value_pmf[b][i])});
      }
    }
    const auto count = static_cast<std::uint64_t>(types.size());
    if (count == 0 || size_ > cap / count) {
      throw AuctionError(ErrorKind::TypeSpaceTooLarge,
                         "joint type space exceeds the cap of " + std::to_string(cap) + " profiles");
    }
    size_ *= count;
    grid_sizes_.push_back(prior.grid.size());
    types_.push_back(std::move(types));
  }
}

Profile TypeSpace::profile(std::uint64_t index) const {
  Profile profile(types_.size());
  for (std::size_t n = types_.size(); n-- > 0;) {
    const auto count = types_[n].size();
    profile[n] = types_[n][index % count].bid;
    index /= count;
  }
  return profile;
}

Rational TypeSpace::probability(std::uint64_t index) const {
  Rational prob = 1;
  for (std::size_t n = types_.size(); n-- > 0;) {
    const auto count = types_[n].size();
    prob *= types_[n][index % count].prob;
    index /= count;
  }
  return prob;
}

void TypeSpace::for_each(std::uint64_t begin, std::uint64_t end, const Visitor& visit) const {
  end = std::min(end, size_);
  if (begin >= end) return;
  const std::size_t buyers = types_.size();

  // Odometer over per-buyer type indices, last buyer fastest.
  std::vector<std::size_t> digits(buyers);
  std::uint64_t rest = begin;
  for (std::size_t n = buyers; n-- > 0;) {
    digits[n] = rest % types_[n].size();
    rest /= types_[n].size();
  }
  Profile profile(buyers);
  for (std::size_t n = 0; n < buyers; ++n) profile[n] = types_[n][digits[n]].bid;

  for (std::uint64_t index = begin; index < end; ++index) {
    Rational prob = 1;
    for (std::size_t n = 0; n < buyers; ++n) prob *= types_[n][digits[n]].prob;
    visit(index, profile, prob);
    for (std::size_t n = buyers; n-- > 0;) {
      if (++digits[n] < types_[n].size()) {
        profile[n] = types_[n][digits[n]].bid;
        break;
      }
      digits[n] = 0;
      profile[n] = types_[n][0].bid;
    }
  }
}

std::vector<std::pair<Profile, Rational>> enumerate_type_space(const AuctionInstance& instance,
                                                               std::uint64_t cap) {
  TypeSpace space(instance, cap);
  std::vector<std::pair<Profile, Rational>> out;
  out.reserve(space.size());
  space.for_each([&](std::uint64_t, const Profile& p, const Rational& prob) {
    out.emplace_back(p, prob);
  });
  return out;
}

}  // namespace auction
