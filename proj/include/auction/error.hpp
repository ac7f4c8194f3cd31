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

#include <stdexcept>
#include <string>
#include <string_view>

namespace auction {

enum class ErrorKind {
  // Instance validation.
  MalformedInput,
  NonPositiveProbability,
  PmfNotNormalized,
  GridNotSorted,
  GridMismatch,
  NegativeValue,
  BundleOutsideUniverse,
  DuplicateBundle,
  EmptySupport,
  TooManyItems,
  // Lookups and ranges.
  BundleNotInSupport,
  BidOutsideSupport,
  IndexOutOfRange,
  SupportMismatch,
  NotAWinner,
  // Capacity.
  TypeSpaceTooLarge,
  TooManyBuyers,
  GenerationFailed,
};

std::string_view to_string(ErrorKind kind);

/// Error raised by every library operation. `path()` is a JSON pointer into
/// the instance document when the error concerns a specific input location,
/// and empty otherwise.
class AuctionError : public std::runtime_error {
 public:
  AuctionError(ErrorKind kind, const std::string& message, std::string path = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& path() const noexcept { return path_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string path_;
  std::string detail_;
};

}  // namespace auction
