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

#include <filesystem>
#include <string>
#include <string_view>

#include "auction/error.hpp"
#include "auction/model.hpp"
#include "json.hpp"

namespace auction {

/// Reads the instance document format:
///
///   {"items": ["A", "B"],
///    "buyers": [{"bundles": [{"items": ["A"], "prob": "1/2",
///                             "values": [{"v": "2", "prob": 0.5}, ...]}]}]}
///
/// Numbers may be rational strings ("9/10"), decimal strings, or JSON number
/// literals; decimal literals are converted from their source text, so 0.1 is
/// exactly 1/10. Syntax and schema errors throw MalformedInput with a JSON
/// pointer to the offending element.
RawInstance parse_instance_json(std::string_view text);

/// parse_instance_json followed by validate_instance.
AuctionInstance read_instance(std::string_view text);
AuctionInstance load_instance(const std::filesystem::path& file);

/// Writes an instance in the same format, numbers as exact rational strings.
nlohmann::json instance_to_json(const AuctionInstance& instance);

/// Reads a bid profile: a JSON array with one {"items": [...], "v": value}
/// entry per buyer. Throws MalformedInput or BidOutsideSupport.
Profile parse_profile_json(const AuctionInstance& instance, std::string_view text);

/// Machine-readable error document {"error", "message", "path"}.
nlohmann::json error_to_json(const AuctionError& error);

}  // namespace auction
