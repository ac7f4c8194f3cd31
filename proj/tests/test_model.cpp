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

#include <set>

#include "auction/model.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace auction;
using namespace auction::testing;

TEST_SUITE("model") {
  TEST_CASE("item sets behave as exact sets") {
    ItemSet a = ItemSet::of({0, 2});
    ItemSet b = ItemSet::of({2, 3});
    CHECK((a | b) == ItemSet::of({0, 2, 3}));
    CHECK((a & b) == ItemSet::of({2}));
    CHECK(a.intersects(b));
    CHECK_FALSE(a.intersects(ItemSet::of({1})));
    CHECK(ItemSet::of({2}).subset_of(a));
    CHECK(ItemSet().subset_of(a));
    CHECK(ItemSet().empty());
    CHECK(a.size() == 2);
    CHECK(ItemSet::of({62}).contains(62));
  }

  TEST_CASE("two-buyer instance validates") {
    AuctionInstance instance = two_buyer_instance();
    REQUIRE(instance.buyers.size() == 2);
    CHECK(instance.items == std::vector<std::string>{"A", "B"});
    const auto& second = instance.buyers[1];
    CHECK(second.grid == Q({"2", "4"}));
    CHECK(second.bundles == std::vector<ItemSet>{ItemSet::of({0}), ItemSet::of({0, 1})});
    CHECK(second.value_pmf[1] == Q({"9/10", "1/10"}));
    CHECK(second.bundle_index(ItemSet::of({0, 1})) == 1);
    CHECK_FALSE(second.find_bundle(ItemSet::of({1})).has_value());
  }

  TEST_CASE("unnormalized value pmf is rejected with its location") {
    RawInstance raw = two_buyer_raw("1/2", "1/3");
    auto error = capture_error([&] { validate_instance(raw); });
    REQUIRE(error);
    CHECK(error->kind() == ErrorKind::PmfNotNormalized);
    CHECK(error->path() == "/buyers/1/bundles/1/values");
  }

  TEST_CASE("repeated grid value is rejected") {
    RawInstance raw;
    raw.items = {"A"};
    raw.buyers.push_back({{raw_bundle({"A"}, "1", {{"3", "1/2"}, {"3", "1/2"}})}});
    auto error = capture_error([&] { validate_instance(raw); });
    REQUIRE(error);
    CHECK(error->kind() == ErrorKind::GridNotSorted);
    CHECK(error->path() == "/buyers/0/bundles/0/values/1/v");
  }

  TEST_CASE("validation errors name the offending field") {
    SUBCASE("zero probability") {
      RawInstance raw = two_buyer_raw("1", "0");
      auto error = capture_error([&] { validate_instance(raw); });
      REQUIRE(error);
      CHECK(error->kind() == ErrorKind::NonPositiveProbability);
      CHECK(error->path() == "/buyers/1/bundles/1/values/1/prob");
    }
    SUBCASE("unknown item") {
      RawInstance raw = two_buyer_raw();
      raw.buyers[0].bundles[0].items = {"C"};
      auto error = capture_error([&] { validate_instance(raw); });
      REQUIRE(error);
      CHECK(error->kind() == ErrorKind::BundleOutsideUniverse);
      CHECK(error->path() == "/buyers/0/bundles/0/items/0");
    }
    SUBCASE("repeated bundle") {
      RawInstance raw = two_buyer_raw();
      raw.buyers[1].bundles[1].items = {"A"};
      auto error = capture_error([&] { validate_instance(raw); });
      REQUIRE(error);
      CHECK(error->kind() == ErrorKind::DuplicateBundle);
    }
    SUBCASE("bundle probabilities off") {
      RawInstance raw = two_buyer_raw();
      raw.buyers[1].bundles[1].prob = Rational(1, 4);
      auto error = capture_error([&] { validate_instance(raw); });
      REQUIRE(error);
      CHECK(error->kind() == ErrorKind::PmfNotNormalized);
      CHECK(error->path() == "/buyers/1/bundles");
    }
    SUBCASE("grids differ across bundles") {
      RawInstance raw = two_buyer_raw();
      raw.buyers[1].bundles[1].values[1].v = 5;
      auto error = capture_error([&] { validate_instance(raw); });
      REQUIRE(error);
      CHECK(error->kind() == ErrorKind::GridMismatch);
    }
    SUBCASE("negative value") {
      RawInstance raw = two_buyer_raw();
      raw.buyers[0].bundles[0].values[0].v = -1;
      auto error = capture_error([&] { validate_instance(raw); });
      REQUIRE(error);
      CHECK(error->kind() == ErrorKind::NegativeValue);
    }
    SUBCASE("no bundles") {
      RawInstance raw = two_buyer_raw();
      raw.buyers[0].bundles.clear();
      auto error = capture_error([&] { validate_instance(raw); });
      REQUIRE(error);
      CHECK(error->kind() == ErrorKind::EmptySupport);
    }
    SUBCASE("too many items") {
      RawInstance raw = two_buyer_raw();
      for (int k = 0; k < 62; ++k) raw.items.push_back("X" + std::to_string(k));
      auto error = capture_error([&] { validate_instance(raw); });
      REQUIRE(error);
      CHECK(error->kind() == ErrorKind::TooManyItems);
    }
  }

  TEST_CASE("validation is idempotent") {
    for (const auto& instance : {two_buyer_instance(), uniform_sole_buyer(),
                                 irregular_sole_buyer()}) {
      CHECK(validate_instance(to_raw(instance)) == instance);
    }
  }

  TEST_CASE("survival function") {
    AuctionInstance uniform = uniform_sole_buyer();
    const auto& prior = uniform.buyers[0];
    ItemSet a = ItemSet::of({0});
    CHECK(survival(prior, a, 3, false) == Rational(1, 2));
    CHECK(survival(prior, a, 3, true) == Rational(1, 4));
    CHECK(survival(prior, a, 1, false) == 1);
    CHECK(survival(prior, a, 4, true) == 0);
    CHECK(survival(prior, a, Rational(5, 2), false) == Rational(1, 2));

    AuctionInstance two = two_buyer_instance();
    CHECK(survival(two.buyers[1], ItemSet::of({0, 1}), 4, false) == Rational(1, 10));
    auto error = capture_error([&] { survival(two.buyers[1], ItemSet::of({1}), 4, false); });
    REQUIRE(error);
    CHECK(error->kind() == ErrorKind::BundleNotInSupport);
  }

  TEST_CASE("survival endpoints hold for every bundle") {
    for (const auto& instance : {two_buyer_instance(), uniform_sole_buyer()}) {
      for (const auto& prior : instance.buyers) {
        for (auto bundle : prior.bundles) {
          CHECK(survival(prior, bundle, prior.grid.front(), false) == 1);
          CHECK(survival(prior, bundle, prior.grid.back(), true) == 0);
        }
      }
    }
  }

  TEST_CASE("type space of the two-buyer instance") {
    auto profiles = enumerate_type_space(two_buyer_instance());
    REQUIRE(profiles.size() == 4);
    std::vector<Rational> probs;
    for (const auto& [profile, prob] : profiles) probs.push_back(prob);
    CHECK(probs == Q({"1/4", "1/4", "9/20", "1/20"}));
    CHECK(profiles[2].first == Profile{{0, 0}, {1, 0}});
    CHECK(profiles[3].first == Profile{{0, 0}, {1, 1}});
  }

  TEST_CASE("type space sizes and total mass") {
    CHECK(enumerate_type_space(uniform_sole_buyer()).size() == 4);

    RawInstance single;
    single.items = {"A"};
    single.buyers.push_back({{raw_bundle({"A"}, "1", {{"7", "1"}})}});
    auto one = enumerate_type_space(validate_instance(single));
    REQUIRE(one.size() == 1);
    CHECK(one[0].second == 1);

    RawInstance pair;
    pair.items = {"A", "B"};
    pair.buyers.push_back({{raw_bundle({"A"}, "1", {{"1", "1/2"}, {"2", "1/2"}})}});
    pair.buyers.push_back({{raw_bundle({"B"}, "1", {{"1", "1/3"}, {"2", "1/3"}, {"3", "1/3"}})}});
    auto six = enumerate_type_space(validate_instance(pair));
    CHECK(six.size() == 6);
    Rational total = 0;
    std::set<Profile> distinct;
    for (const auto& [profile, prob] : six) {
      total += prob;
      distinct.insert(profile);
    }
    CHECK(total == 1);
    CHECK(distinct.size() == 6);
  }

  TEST_CASE("type space cap") {
    auto error = capture_error([] { TypeSpace(two_buyer_instance(), 3); });
    REQUIRE(error);
    CHECK(error->kind() == ErrorKind::TypeSpaceTooLarge);
  }

  TEST_CASE("type space indexing agrees with the visitor") {
    AuctionInstance instance = two_buyer_instance();
    TypeSpace space(instance);
    space.for_each([&](std::uint64_t index, const Profile& profile, const Rational& prob) {
      CHECK(space.profile(index) == profile);
      CHECK(space.probability(index) == prob);
    });
  }

  TEST_CASE("bids outside the support are rejected") {
    AuctionInstance instance = two_buyer_instance();
    CHECK(make_bid(instance, 1, ItemSet::of({0, 1}), 4) == Bid{1, 1});
    auto bad_value = capture_error([&] { make_bid(instance, 1, ItemSet::of({0}), 3); });
    REQUIRE(bad_value);
    CHECK(bad_value->kind() == ErrorKind::BidOutsideSupport);
    auto bad_bundle = capture_error([&] { make_bid(instance, 0, ItemSet::of({0, 1}), 1); });
    REQUIRE(bad_bundle);
    CHECK(bad_bundle->kind() == ErrorKind::BidOutsideSupport);
    auto short_profile = capture_error([&] { check_profile(instance, Profile{{0, 0}}); });
    REQUIRE(short_profile);
    CHECK(short_profile->kind() == ErrorKind::BidOutsideSupport);
  }
}
