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
#include <sstream>

#include "auction/instance_json.hpp"
#include "cli.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "json.hpp"

using namespace auction;
using namespace auction::testing;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kData = AUCTION_DATA_DIR "/counterexample.json";

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("table") {
    Run text = run({"table", kData});
    CHECK(text.code == 0);
    CHECK(text.out.find("16/9") != std::string::npos);
    Run json_run = run({"table", kData, "--format", "json"});
    REQUIRE(json_run.code == 0);
    auto doc = nlohmann::json::parse(json_run.out);
    CHECK(doc["buyers"][1]["bundles"][1]["w"][0] == "16/9");
    CHECK(doc["buyers"][1]["bundles"][0]["reserve"] == "4");
  }

  TEST_CASE("solve") {
    Run r = run({"solve", kData, "--profile",
                 R"([{"items": ["A"], "v": 1}, {"items": ["A"], "v": 4}])", "--format", "json"});
    REQUIRE(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["winners"] == nlohmann::json::array({2}));
    CHECK(doc["buyers"][1]["payment"] == "4");

    Run bad = run({"solve", kData, "--profile", R"([{"items": ["A"], "v": 1}, {"items": ["A"], "v": 3}])"});
    CHECK(bad.code == cli::kExitBadInput);
    auto error = nlohmann::json::parse(bad.err);
    CHECK(error["error"] == "BidOutsideSupport");
    CHECK(error["path"] == "/1");
  }

  TEST_CASE("revenue") {
    Run r = run({"revenue", kData, "--format", "json"});
    REQUIRE(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["revenue"] == "9/4");
    CHECK(doc["revenue_decimal"] == "2.25");
    Run vcg = run({"revenue", kData, "--mechanism", "vcg"});
    CHECK(vcg.code == 0);
    CHECK(vcg.out.find("expected revenue 1 (1)") != std::string::npos);
    Run unknown = run({"revenue", kData, "--mechanism", "auction"});
    CHECK(unknown.code == cli::kExitBadInput);
  }

  TEST_CASE("verify exit codes") {
    Run mwa = run({"verify", kData, "--report", "json"});
    CHECK(mwa.code == cli::kExitIcViolation);
    auto doc = nlohmann::json::parse(mwa.out);
    CHECK(doc["ic_ok"] == false);
    CHECK(doc["ic_violations"][0]["buyer"] == 2);
    CHECK(doc["ic_violations"][0]["deviation"]["v"] == "2");
    CHECK(run({"verify", kData, "--mechanism", "vcg"}).code == 0);
    Run ex_post = run({"verify", kData, "--mechanism", "vcg", "--ex-post", "--format", "json"});
    CHECK(ex_post.code == 0);
    CHECK(nlohmann::json::parse(ex_post.out)["ex_post_ok"] == true);
  }

  TEST_CASE("check-order") {
    Run r = run({"check-order", kData});
    CHECK(r.code == cli::kExitOrderViolation);
    CHECK(r.out.find("buyer 2") != std::string::npos);
  }

  TEST_CASE("simulate") {
    Run r = run({"simulate", kData, "--samples", "5000", "--seed", "3", "--format", "json"});
    REQUIRE(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["exact"] == "9/4");
    CHECK(doc["samples"] == 5000);
    Run again = run({"simulate", kData, "--samples", "5000", "--seed", "3", "--format", "json"});
    CHECK(again.out == r.out);
    CHECK(run({"simulate", kData, "--samples", "0"}).code == cli::kExitUsage);
  }

  TEST_CASE("generate") {
    Run r = run({"generate", "--items", "3", "--buyers", "2", "--seed", "8", "--hazard-order"});
    REQUIRE(r.code == 0);
    AuctionInstance instance = read_instance(r.out);
    CHECK(instance.buyers.size() == 2);
    CHECK(run({"generate", "--items", "3", "--buyers", "2", "--seed", "8", "--hazard-order"}).out ==
          r.out);

    auto path = std::filesystem::temp_directory_path() / "auction-cli-generate.json";
    CHECK(run({"generate", "--seed", "2", "-o", path.string()}).code == 0);
    CHECK(load_instance(path).buyers.size() == 3);
    std::filesystem::remove(path);
  }

  TEST_CASE("counterexample") {
    Run r = run({"counterexample"});
    CHECK(r.code == 0);
    CHECK(r.out.find("16/9") != std::string::npos);
  }

  TEST_CASE("compare csv") {
    Run r = run({"compare", kData, "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out ==
          "mechanism,revenue_exact,revenue_estimate,std_err,ic_ok,ir_ok\n"
          "mwa,9/4,2.25,0,false,true\n"
          "vcg,1,1,0,true,true\n"
          "greedy,9/4,2.25,0,false,true\n");
    Run kappa = run({"compare", kData, "--mechanisms", "kappa:1", "--format", "csv"});
    CHECK(kappa.out.find("kappa:1,9/4") != std::string::npos);
  }

  TEST_CASE("usage and input errors") {
    CHECK(run({}).code == cli::kExitUsage);
    CHECK(run({"frobnicate"}).code == cli::kExitUsage);
    CHECK(run({"table"}).code == cli::kExitUsage);
    CHECK(run({"table", kData, "--format", "xml"}).code == cli::kExitUsage);
    CHECK(run({"--help"}).code == 0);

    Run missing = run({"table", "/nonexistent/instance.json"});
    CHECK(missing.code == cli::kExitBadInput);
    CHECK(nlohmann::json::parse(missing.err)["error"] == "MalformedInput");
  }
}
