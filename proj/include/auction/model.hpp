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

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "auction/rational.hpp"

namespace auction {

/// Largest item universe the bitmask representation supports.
inline constexpr std::size_t kMaxItems = 63;

/// Default cap on the number of joint type profiles an exact scan may visit.
inline constexpr std::uint64_t kDefaultTypeSpaceCap = 10'000'000;

/// A bundle: a subset of the item universe, bit i set when item i is present.
class ItemSet {
 public:
  constexpr ItemSet() = default;
  constexpr explicit ItemSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr ItemSet of(std::initializer_list<std::size_t> items) {
    std::uint64_t bits = 0;
    for (auto i : items) bits |= std::uint64_t{1} << i;
    return ItemSet(bits);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t item) const { return (bits_ >> item) & 1U; }

  constexpr bool subset_of(ItemSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(ItemSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr ItemSet operator|(ItemSet o) const { return ItemSet(bits_ | o.bits_); }
  constexpr ItemSet operator&(ItemSet o) const { return ItemSet(bits_ & o.bits_); }
  constexpr bool operator==(const ItemSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Prior over one buyer's type (bundle, value). The value grid is shared by
/// every bundle in the support; `value_pmf[b][i]` is P(X = grid[i] | B = bundles[b]).
struct BuyerPrior {
  std::vector<Rational> grid;
  std::vector<ItemSet> bundles;
  std::vector<Rational> bundle_prob;
  std::vector<std::vector<Rational>> value_pmf;

  std::size_t grid_size() const { return grid.size(); }
  std::size_t support_size() const { return bundles.size(); }
  std::size_t type_count() const { return grid.size() * bundles.size(); }

  std::optional<std::size_t> find_bundle(ItemSet bundle) const;
  /// Throws BundleNotInSupport.
  std::size_t bundle_index(ItemSet bundle) const;

  bool operator==(const BuyerPrior&) const = default;
};

struct AuctionInstance {
  std::vector<std::string> items;
  std::vector<BuyerPrior> buyers;

  std::size_t item_count() const { return items.size(); }
  std::size_t buyer_count() const { return buyers.size(); }

  bool operator==(const AuctionInstance&) const = default;
};

/// Unvalidated instance description, as read from a file.
struct RawValue {
  Rational v;
  Rational prob;
};

struct RawBundle {
  std::vector<std::string> items;
  Rational prob;
  std::vector<RawValue> values;
};

struct RawBuyer {
  std::vector<RawBundle> bundles;
};

struct RawInstance {
  std::vector<std::string> items;
  std::vector<RawBuyer> buyers;
};

/// Checks every model assumption and builds an instance. Errors carry a JSON
/// pointer to the offending element.
AuctionInstance validate_instance(const RawInstance& raw);

RawInstance to_raw(const AuctionInstance& instance);

/// A reported type, as indices into the buyer's support and value grid.
struct Bid {
  std::size_t bundle = 0;
  std::size_t value = 0;

  bool operator==(const Bid&) const = default;
  auto operator<=>(const Bid&) const = default;
};

using Profile = std::vector<Bid>;

/// Resolves a (bundle, value) report. Throws BidOutsideSupport.
Bid make_bid(const AuctionInstance& instance, std::size_t buyer, ItemSet bundle,
             const Rational& value);

/// Throws BidOutsideSupport unless the profile has one in-range bid per buyer.
void check_profile(const AuctionInstance& instance, const Profile& profile);

const Rational& bid_value(const AuctionInstance& instance, std::size_t buyer, const Bid& bid);
ItemSet bid_bundle(const AuctionInstance& instance, std::size_t buyer, const Bid& bid);

/// Tail mass sum_{l >= k} pmf[l]; zero when k is past the end.
Rational tail_mass(std::span<const Rational> pmf, std::size_t k);

/// P(X >= t | b), or P(X > t | b) when `strict`. Throws BundleNotInSupport.
Rational survival(const BuyerPrior& prior, ItemSet bundle, const Rational& threshold,
                  bool strict);

struct BuyerType {
  Bid bid;
  Rational prob;
};

/// The joint type space. Profiles are ordered lexicographically with buyer 0
/// most significant; within a buyer, bundles in declared order and then values
/// ascending.
class TypeSpace {
 public:
  /// Throws TypeSpaceTooLarge when the product of type counts exceeds `cap`.
  explicit TypeSpace(const AuctionInstance& instance, std::uint64_t cap = kDefaultTypeSpaceCap);

  std::uint64_t size() const { return size_; }
  std::size_t buyer_count() const { return types_.size(); }
  std::span<const BuyerType> types(std::size_t buyer) const { return types_[buyer]; }

  /// Index of a bid in `types(buyer)`.
  std::size_t type_index(std::size_t buyer, const Bid& bid) const {
    return bid.bundle * grid_sizes_[buyer] + bid.value;
  }

  Profile profile(std::uint64_t index) const;
  Rational probability(std::uint64_t index) const;

  using Visitor = std::function<void(std::uint64_t index, const Profile&, const Rational& prob)>;
  void for_each(const Visitor& visit) const { for_each(0, size_, visit); }
  /// Visits profiles with index in [begin, end).
  void for_each(std::uint64_t begin, std::uint64_t end, const Visitor& visit) const;

 private:
  std::vector<std::vector<BuyerType>> types_;
  std::vector<std::size_t> grid_sizes_;
  std::uint64_t size_ = 1;
};

/// Materialised enumeration of (profile, probability) pairs.
std::vector<std::pair<Profile, Rational>> enumerate_type_space(
    const AuctionInstance& instance, std::uint64_t cap = kDefaultTypeSpaceCap);

}  // namespace auction
