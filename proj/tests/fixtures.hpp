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

#include <optional>
#include <string>
#include <vector>

#include "auction/error.hpp"
#include "auction/model.hpp"

namespace auction::testing {

inline RawBundle raw_bundle(std::vector<std::string> items, const char* prob,
                            std::vector<std::pair<const char*, const char*>> values) {
  RawBundle bundle{std::move(items), Rational(prob), {}};
  for (auto [v, p] : values) bundle.values.push_back({Rational(v), Rational(p)});
  return bundle;
}

/// Two items; buyer 0 wants {A} at 1; buyer 1 wants {A} or {A,B} with values
/// on {2,4}.
inline RawInstance two_buyer_raw(const char* nested_low = "9/10",
                                 const char* nested_high = "1/10") {
  RawInstance raw;
  raw.items = {"A", "B"};
  raw.buyers.push_back({{raw_bundle({"A"}, "1", {{"1", "1"}})}});
  raw.buyers.push_back({{raw_bundle({"A"}, "1/2", {{"2", "1/2"}, {"4", "1/2"}}),
                         raw_bundle({"A", "B"}, "1/2", {{"2", nested_low}, {"4", nested_high}})}});
  return raw;
}

inline AuctionInstance two_buyer_instance() { return validate_instance(two_buyer_raw()); }

/// One buyer, one item, uniform on {1,2,3,4}.
inline AuctionInstance uniform_sole_buyer() {
  RawInstance raw;
  raw.items = {"A"};
  raw.buyers.push_back(
      {{raw_bundle({"A"}, "1", {{"1", "1/4"}, {"2", "1/4"}, {"3", "1/4"}, {"4", "1/4"}})}});
  return validate_instance(raw);
}

/// One buyer, one item, grid {5,6,100} with a non-regular virtual valuation.
inline AuctionInstance irregular_sole_buyer() {
  RawInstance raw;
  raw.items = {"A"};
  raw.buyers.push_back({{raw_bundle({"A"}, "1", {{"5", "1/2"}, {"6", "2/5"}, {"100", "1/10"}})}});
  return validate_instance(raw);
}

inline std::vector<Rational> Q(std::initializer_list<const char*> values) {
  std::vector<Rational> out;
  for (const char* v : values) out.emplace_back(v);
  return out;
}

/// Runs `f` and returns the AuctionError it throws, if any.
template <class F>
std::optional<AuctionError> capture_error(F&& f) {
  try {
    f();
  } catch (const AuctionError& e) {
    return e;
  }
  return std::nullopt;
}

}  // namespace auction::testing
