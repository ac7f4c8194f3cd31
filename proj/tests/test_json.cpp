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

#include <filesystem>
#include <fstream>

#include "auction/instance_json.hpp"
#include "auction/rational.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace auction;
using namespace auction::testing;

namespace {

const char* kTwoBuyerJson = R"({
  "items": ["A", "B"],
  "buyers": [
    {"bundles": [{"items": ["A"], "prob": 1, "values": [{"v": 1, "prob": "1"}]}]},
    {"bundles": [
      {"items": ["A"], "prob": "1/2", "values": [{"v": "2", "prob": 0.5}, {"v": 4, "prob": "1/2"}]},
      {"items": ["A", "B"], "prob": 0.5,
       "values": [{"v": 2.0, "prob": 0.9}, {"v": "4", "prob": "0.1"}]}
    ]}
  ]
})";

}  // namespace

TEST_SUITE("rational") {
  TEST_CASE("fractions, integers and decimals parse exactly") {
    CHECK(parse_rational("9/10") == Rational(9, 10));
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(parse_rational("42") == 42);
    CHECK(parse_rational("0.1") == Rational(1, 10));
    CHECK(parse_rational("-2.50") == Rational(-5, 2));
    CHECK(parse_rational("1e-3") == Rational(1, 1000));
    CHECK(parse_rational("2.5E2") == 250);
    CHECK(parse_rational(".5") == Rational(1, 2));
  }

  TEST_CASE("malformed numbers are rejected") {
    for (const char* text : {"", "1/0", "abc", "1/2/3", "1.2.3", "1e", "--1", "1/-2"}) {
      auto error = capture_error([&] { parse_rational(text); });
      REQUIRE_MESSAGE(error, text);
      CHECK(error->kind() == ErrorKind::MalformedInput);
    }
  }

  TEST_CASE("formatting") {
    CHECK(to_string(Rational(16, 9)) == "16/9");
    CHECK(to_string(Rational(4)) == "4");
    CHECK(to_decimal(Rational(9, 4)) == "2.25");
    CHECK(to_decimal(Rational(1, 3)) == "0.333333333333");
    CHECK(to_double(Rational(1, 8)) == 0.125);
    CHECK(sign(Rational(-1, 3)) == -1);
  }
}

TEST_SUITE("instance_json") {
  TEST_CASE("decimal literals become exact rationals") {
    AuctionInstance instance = read_instance(kTwoBuyerJson);
    CHECK(instance == two_buyer_instance());
    CHECK(instance.buyers[1].value_pmf[1][0] == Rational(9, 10));
  }

  TEST_CASE("round trip through JSON") {
    AuctionInstance instance = two_buyer_instance();
    CHECK(read_instance(instance_to_json(instance).dump()) == instance);
  }

  TEST_CASE("schema errors carry a JSON pointer") {
    SUBCASE("missing field") {
      auto error = capture_error([] {
        read_instance(R"({"items": ["A"], "buyers": [{"bundles": [{"items": ["A"], "values": []}]}]})");
      });
      REQUIRE(error);
      CHECK(error->kind() == ErrorKind::MalformedInput);
      CHECK(error->path() == "/buyers/0/bundles/0");
    }
    SUBCASE("bad number") {
      auto error = capture_error([] {
        read_instance(R"({"items": ["A"], "buyers": [{"bundles": [
          {"items": ["A"], "prob": "one", "values": [{"v": 1, "prob": 1}]}]}]})");
      });
      REQUIRE(error);
      CHECK(error->kind() == ErrorKind::MalformedInput);
      CHECK(error->path() == "/buyers/0/bundles/0/prob");
    }
    SUBCASE("wrong type") {
      auto error = capture_error([] { read_instance(R"({"items": "A", "buyers": []})"); });
      REQUIRE(error);
      CHECK(error->path() == "/items");
    }
    SUBCASE("not JSON") {
      auto error = capture_error([] { read_instance("{"); });
      REQUIRE(error);
      CHECK(error->kind() == ErrorKind::MalformedInput);
    }
    SUBCASE("validation errors keep their path") {
      auto error = capture_error([] {
        read_instance(R"({"items": ["A"], "buyers": [{"bundles": [
          {"items": ["A"], "prob": 1, "values": [{"v": 1, "prob": 0.5}, {"v": 2, "prob": "1/3"}]}]}]})");
      });
      REQUIRE(error);
      CHECK(error->kind() == ErrorKind::PmfNotNormalized);
      CHECK(error->path() == "/buyers/0/bundles/0/values");
    }
  }

  TEST_CASE("error JSON document") {
    AuctionError error(ErrorKind::GridNotSorted, "grid out of order", "/buyers/0");
    auto doc = error_to_json(error);
    CHECK(doc["error"] == "GridNotSorted");
    CHECK(doc["message"] == "grid out of order");
    CHECK(doc["path"] == "/buyers/0");
  }

  TEST_CASE("profiles") {
    AuctionInstance instance = two_buyer_instance();
    Profile profile =
        parse_profile_json(instance, R"([{"items": ["A"], "v": 1}, {"items": ["B", "A"], "v": "4"}])");
    CHECK(profile == Profile{{0, 0}, {1, 1}});

    auto unknown = capture_error(
        [&] { parse_profile_json(instance, R"([{"items": ["A"], "v": 1}, {"items": ["C"], "v": 4}])"); });
    REQUIRE(unknown);
    CHECK(unknown->kind() == ErrorKind::BidOutsideSupport);
    CHECK(unknown->path() == "/1/items/0");

    auto off_grid = capture_error(
        [&] { parse_profile_json(instance, R"([{"items": ["A"], "v": 1}, {"items": ["A"], "v": 3}])"); });
    REQUIRE(off_grid);
    CHECK(off_grid->kind() == ErrorKind::BidOutsideSupport);
    CHECK(off_grid->path() == "/1");

    auto short_profile =
        capture_error([&] { parse_profile_json(instance, R"([{"items": ["A"], "v": 1}])"); });
    REQUIRE(short_profile);
    CHECK(short_profile->kind() == ErrorKind::BidOutsideSupport);
  }

  TEST_CASE("bundled data file matches the fixture") {
    CHECK(load_instance(AUCTION_DATA_DIR "/counterexample.json") == two_buyer_instance());
    auto missing = capture_error([] { load_instance(AUCTION_DATA_DIR "/no-such-file.json"); });
    REQUIRE(missing);
    CHECK(missing->kind() == ErrorKind::MalformedInput);
  }
}
