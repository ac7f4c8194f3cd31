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

#include "auction/error.hpp"

namespace auction {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::NonPositiveProbability: return "NonPositiveProbability";
    case ErrorKind::PmfNotNormalized: return "PmfNotNormalized";
    case ErrorKind::GridNotSorted: return "GridNotSorted";
    case ErrorKind::GridMismatch: return "GridMismatch";
    case ErrorKind::NegativeValue: return "NegativeValue";
    case ErrorKind::BundleOutsideUniverse: return "BundleOutsideUniverse";
    case ErrorKind::DuplicateBundle: return "DuplicateBundle";
    case ErrorKind::EmptySupport: return "EmptySupport";
    case ErrorKind::TooManyItems: return "TooManyItems";
    case ErrorKind::BundleNotInSupport: return "BundleNotInSupport";
    case ErrorKind::BidOutsideSupport: return "BidOutsideSupport";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::SupportMismatch: return "SupportMismatch";
    case ErrorKind::NotAWinner: return "NotAWinner";
    case ErrorKind::TypeSpaceTooLarge: return "TypeSpaceTooLarge";
    case ErrorKind::TooManyBuyers: return "TooManyBuyers";
    case ErrorKind::GenerationFailed: return "GenerationFailed";
  }
  return "Unknown";
}

AuctionError::AuctionError(ErrorKind kind, const std::string& message, std::string path)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message +
                         (path.empty() ? std::string() : " (at " + path + ")")),
      kind_(kind),
      path_(std::move(path)),
      detail_(message) {}

}  // namespace auction
