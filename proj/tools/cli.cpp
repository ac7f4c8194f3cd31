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

#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <map>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "auction/error.hpp"
#include "auction/harness.hpp"
#include "auction/instance_json.hpp"
#include "auction/mechanism.hpp"
#include "auction/orders.hpp"
#include "auction/verify.hpp"
#include "auction/virtual_values.hpp"
#include "json.hpp"

namespace auction::cli {
namespace {

using nlohmann::json;

enum class Format { Text, Json, Csv };

const std::map<std::string, Format> kFormats{
    {"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};

std::string bundle_name(const AuctionInstance& instance, ItemSet bundle) {
  std::string out = "{";
  bool first = true;
  for (std::size_t k = 0; k < instance.items.size(); ++k) {
    if (!bundle.contains(k)) continue;
    if (!first) out += ",";
    out += instance.items[k];
    first = false;
  }
  return out + "}";
}

json bundle_json(const AuctionInstance& instance, ItemSet bundle) {
  json items = json::array();
  for (std::size_t k = 0; k < instance.items.size(); ++k) {
    if (bundle.contains(k)) items.push_back(instance.items[k]);
  }
  return items;
}

std::string bid_name(const AuctionInstance& instance, std::size_t buyer, const Bid& bid) {
  return "(" + bundle_name(instance, bid_bundle(instance, buyer, bid)) + ", " +
         to_string(bid_value(instance, buyer, bid)) + ")";
}

json bid_json(const AuctionInstance& instance, std::size_t buyer, const Bid& bid) {
  return {{"items", bundle_json(instance, bid_bundle(instance, buyer, bid))},
          {"v", to_string(bid_value(instance, buyer, bid))}};
}

json rationals(std::span<const Rational> values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

std::string exact_and_decimal(const Rational& value) {
  return to_string(value) + " (" + to_decimal(value) + ")";
}

void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    widths.resize(std::max(widths.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(widths[c] - row[c].size() + 2, ' ');
    }
    out << "  " << line << "\n";
  }
}

std::string csv_field(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

// ---- table ------------------------------------------------------------------

int cmd_table(const AuctionInstance& instance, Format format, std::ostream& out) {
  VirtualTable table(instance);
  if (format == Format::Json) {
    json buyers = json::array();
    for (std::size_t n = 0; n < instance.buyers.size(); ++n) {
      const auto& prior = instance.buyers[n];
      json bundles = json::array();
      for (std::size_t b = 0; b < prior.bundles.size(); ++b) {
        const auto& e = table.entry(n, b);
        bundles.push_back({{"items", bundle_json(instance, prior.bundles[b])},
                           {"grid", rationals(prior.grid)},
                           {"pmf", rationals(prior.value_pmf[b])},
                           {"w", rationals(e.w)},
                           {"w_ironed", rationals(e.ironed)},
                           {"regular", e.regular},
                           {"reserve", to_string(e.reserve)}});
      }
      buyers.push_back({{"buyer", n + 1}, {"bundles", bundles}});
    }
    out << json{{"buyers", buyers}}.dump(2) << "\n";
    return kExitOk;
  }
  for (std::size_t n = 0; n < instance.buyers.size(); ++n) {
    const auto& prior = instance.buyers[n];
    for (std::size_t b = 0; b < prior.bundles.size(); ++b) {
      const auto& e = table.entry(n, b);
      out << "buyer " << n + 1 << "  bundle " << bundle_name(instance, prior.bundles[b])
          << "  prob " << to_string(prior.bundle_prob[b]) << "  reserve " << to_string(e.reserve)
          << "  regular " << (e.regular ? "yes" : "no") << "\n";
      std::vector<std::vector<std::string>> rows{{"value", "pmf", "w", "w_ironed"}};
      for (std::size_t i = 0; i < prior.grid.size(); ++i) {
        rows.push_back({to_string(prior.grid[i]), to_string(prior.value_pmf[b][i]),
                        to_string(e.w[i]), to_string(e.ironed[i])});
      }
      print_table(out, rows);
    }
  }
  return kExitOk;
}

// ---- solve ------------------------------------------------------------------

int cmd_solve(const Mechanism& mechanism, const std::string& profile_text, Format format,
              std::ostream& out) {
  const auto& instance = mechanism.instance();
  Profile profile = parse_profile_json(instance, profile_text);
  Outcome outcome = mechanism.run(profile);
  if (format == Format::Json) {
    json buyers = json::array();
    for (std::size_t n = 0; n < instance.buyers.size(); ++n) {
      buyers.push_back({{"buyer", n + 1},
                        {"bid", bid_json(instance, n, profile[n])},
                        {"wins", outcome.wins(n)},
                        {"payment", to_string(outcome.payments[n])}});
    }
    json winners = json::array();
    for (auto n : outcome.winners.buyers()) winners.push_back(n + 1);
    out << json{{"mechanism", mechanism.name()},
                {"winners", winners},
                {"total_payment", to_string(outcome.total_payment())},
                {"buyers", buyers}}
               .dump(2)
        << "\n";
    return kExitOk;
  }
  out << mechanism.name() << " outcome\n";
  std::vector<std::vector<std::string>> rows{{"buyer", "bid", "result", "payment"}};
  for (std::size_t n = 0; n < instance.buyers.size(); ++n) {
    rows.push_back({std::to_string(n + 1), bid_name(instance, n, profile[n]),
                    outcome.wins(n) ? "wins" : "loses", to_string(outcome.payments[n])});
  }
  print_table(out, rows);
  out << "total payment " << to_string(outcome.total_payment()) << "\n";
  return kExitOk;
}

// ---- revenue ----------------------------------------------------------------

int cmd_revenue(const Mechanism& mechanism, unsigned workers, Format format, std::ostream& out) {
  Evaluation eval = evaluate(mechanism, {.workers = workers});
  if (format == Format::Json) {
    out << json{{"mechanism", mechanism.name()},
                {"revenue", to_string(eval.revenue)},
                {"revenue_decimal", to_decimal(eval.revenue)},
                {"virtual_surplus", to_string(eval.virtual_surplus)},
                {"ironed_surplus", to_string(eval.ironed_surplus)}}
               .dump(2)
        << "\n";
  } else if (format == Format::Csv) {
    out << "mechanism,revenue_exact,revenue_decimal,virtual_surplus,ironed_surplus\n"
        << csv_field(mechanism.name()) << "," << to_string(eval.revenue) << ","
        << to_decimal(eval.revenue) << "," << to_string(eval.virtual_surplus) << ","
        << to_string(eval.ironed_surplus) << "\n";
  } else {
    out << "mechanism        " << mechanism.name() << "\n"
        << "expected revenue " << exact_and_decimal(eval.revenue) << "\n"
        << "E[sum Q w]       " << exact_and_decimal(eval.virtual_surplus) << "\n"
        << "E[sum Q w_bar]   " << exact_and_decimal(eval.ironed_surplus) << "\n";
  }
  return kExitOk;
}

// ---- verify -----------------------------------------------------------------

json audit_json(const AuctionInstance& instance, const MechanismAudit& audit,
                const std::vector<ExPostViolation>* ex_post) {
  json ic = json::array();
  for (const auto& v : audit.ic) {
    ic.push_back({{"buyer", v.buyer + 1},
                  {"true_type", bid_json(instance, v.buyer, v.true_type)},
                  {"deviation", bid_json(instance, v.buyer, v.deviation)},
                  {"truthful_payoff", to_string(v.truthful_payoff)},
                  {"deviating_payoff", to_string(v.deviating_payoff)}});
  }
  json ir = json::array();
  for (const auto& v : audit.ir) {
    ir.push_back({{"buyer", v.buyer + 1},
                  {"type", bid_json(instance, v.buyer, v.type)},
                  {"payoff", to_string(v.payoff)}});
  }
  json mono = json::array();
  for (const auto& v : audit.monotonicity) {
    const auto& prior = instance.buyers[v.buyer];
    mono.push_back({{"buyer", v.buyer + 1},
                    {"items", bundle_json(instance, prior.bundles[v.bundle])},
                    {"value", to_string(prior.grid[v.index])},
                    {"q_at_value", to_string(v.lower)},
                    {"q_at_next", to_string(v.upper)}});
  }
  json doc{{"ic_ok", audit.ic_ok()},
           {"ir_ok", audit.ir_ok()},
           {"q_monotone", audit.monotone_ok()},
           {"relaxed_ic_interval", audit.relaxed_ic_interval},
           {"ic_violations", ic},
           {"ir_violations", ir},
           {"monotonicity_violations", mono}};
  if (ex_post != nullptr) {
    json list = json::array();
    for (const auto& v : *ex_post) {
      list.push_back({{"buyer", v.buyer + 1},
                      {"profile_index", v.profile_index},
                      {"true_type", bid_json(instance, v.buyer, v.true_type)},
                      {"deviation", bid_json(instance, v.buyer, v.deviation)},
                      {"truthful_payoff", to_string(v.truthful_payoff)},
                      {"deviating_payoff", to_string(v.deviating_payoff)}});
    }
    doc["ex_post_ok"] = ex_post->empty();
    doc["ex_post_violations"] = list;
  }
  return doc;
}

int cmd_verify(const Mechanism& mechanism, bool ex_post_mode, unsigned workers, Format format,
               std::ostream& out) {
  const auto& instance = mechanism.instance();
  MechanismAudit result = audit(mechanism, {.workers = workers});
  std::vector<ExPostViolation> ex_post;
  if (ex_post_mode) ex_post = check_ex_post_ic(mechanism);

  if (format == Format::Json) {
    out << audit_json(instance, result, ex_post_mode ? &ex_post : nullptr).dump(2) << "\n";
  } else {
    auto row = [&](const char* label, const std::string& value) {
      out << std::left << std::setw(23) << label << value << "\n";
    };
    auto yes_no = [](bool flag) { return std::string(flag ? "yes" : "no"); };
    row("mechanism", mechanism.name());
    row("incentive compatible", yes_no(result.ic_ok()));
    row("individually rational", yes_no(result.ir_ok()));
    row("q monotone", yes_no(result.monotone_ok()));
    row("relaxed IC interval", yes_no(result.relaxed_ic_interval));
    if (ex_post_mode) row("ex-post IC", yes_no(ex_post.empty()));
    for (const auto& v : result.ic) {
      out << "IC violation: buyer " << v.buyer + 1 << " true "
          << bid_name(instance, v.buyer, v.true_type) << " reports "
          << bid_name(instance, v.buyer, v.deviation) << " payoff "
          << to_string(v.truthful_payoff) << " -> " << to_string(v.deviating_payoff) << "\n";
    }
    for (const auto& v : result.ir) {
      out << "IR violation: buyer " << v.buyer + 1 << " type "
          << bid_name(instance, v.buyer, v.type) << " payoff " << to_string(v.payoff) << "\n";
    }
    for (const auto& v : result.monotonicity) {
      const auto& prior = instance.buyers[v.buyer];
      out << "q not monotone: buyer " << v.buyer + 1 << " bundle "
          << bundle_name(instance, prior.bundles[v.bundle]) << " at value "
          << to_string(prior.grid[v.index]) << ": " << to_string(v.lower) << " > "
          << to_string(v.upper) << "\n";
    }
    for (const auto& v : ex_post) {
      out << "ex-post violation: buyer " << v.buyer + 1 << " profile " << v.profile_index
          << " true " << bid_name(instance, v.buyer, v.true_type) << " reports "
          << bid_name(instance, v.buyer, v.deviation) << " payoff "
          << to_string(v.truthful_payoff) << " -> " << to_string(v.deviating_payoff) << "\n";
    }
  }
  if (!result.ic_ok() || !ex_post.empty()) return kExitIcViolation;
  if (!result.ir_ok()) return kExitIrViolation;
  return kExitOk;
}

// ---- check-order ------------------------------------------------------------

int cmd_check_order(const AuctionInstance& instance, Format format, std::ostream& out) {
  auto violations = check_nested_order(instance);
  if (format == Format::Json) {
    json list = json::array();
    for (const auto& v : violations) {
      const auto& prior = instance.buyers[v.buyer];
      list.push_back({{"buyer", v.buyer + 1},
                      {"smaller_bundle", bundle_json(instance, prior.bundles[v.smaller_bundle])},
                      {"larger_bundle", bundle_json(instance, prior.bundles[v.larger_bundle])},
                      {"upper_value", to_string(prior.grid[v.i])},
                      {"lower_value", to_string(prior.grid[v.j])},
                      {"smaller_ratio", to_string(v.lhs)},
                      {"larger_ratio", to_string(v.rhs)}});
    }
    out << json{{"holds", violations.empty()}, {"violations", list}}.dump(2) << "\n";
  } else if (violations.empty()) {
    out << "hazard-rate order holds for every nested bundle pair\n";
  } else {
    for (const auto& v : violations) {
      const auto& prior = instance.buyers[v.buyer];
      out << "buyer " << v.buyer + 1 << " " << bundle_name(instance, prior.bundles[v.smaller_bundle])
          << " within " << bundle_name(instance, prior.bundles[v.larger_bundle]) << " at values ("
          << to_string(prior.grid[v.i]) << ", " << to_string(prior.grid[v.j])
          << "): " << to_string(v.lhs) << " > " << to_string(v.rhs) << "\n";
    }
  }
  return violations.empty() ? kExitOk : kExitOrderViolation;
}

// ---- simulate ---------------------------------------------------------------

int cmd_simulate(const Mechanism& mechanism, std::uint64_t samples, std::uint64_t seed,
                 unsigned workers, Format format, std::ostream& out) {
  SimReport report = estimate_revenue(mechanism, samples, seed, workers);
  if (format == Format::Json) {
    json doc{{"mechanism", report.mechanism},
             {"estimate", report.estimate},
             {"std_err", report.std_err},
             {"samples", report.samples},
             {"seed", report.seed}};
    doc["exact"] = report.exact ? json(to_string(*report.exact)) : json(nullptr);
    out << doc.dump(2) << "\n";
  } else if (format == Format::Csv) {
    out << "mechanism,revenue_exact,revenue_estimate,std_err,samples,seed\n"
        << csv_field(report.mechanism) << "," << (report.exact ? to_string(*report.exact) : "")
        << "," << format_double(report.estimate) << "," << format_double(report.std_err) << ","
        << report.samples << "," << report.seed << "\n";
  } else {
    out << "mechanism " << report.mechanism << "\n"
        << "samples   " << report.samples << " (seed " << report.seed << ")\n"
        << "estimate  " << format_double(report.estimate) << " +/- "
        << format_double(report.std_err) << "\n";
    if (report.exact) out << "exact     " << exact_and_decimal(*report.exact) << "\n";
  }
  return kExitOk;
}

// ---- compare ----------------------------------------------------------------

std::string optional_flag(const std::optional<bool>& flag) {
  if (!flag) return "";
  return *flag ? "true" : "false";
}

int cmd_compare(const AuctionInstance& instance, const std::vector<std::string>& names,
                CompareMode mode, std::uint64_t samples, std::uint64_t seed, Format format,
                std::ostream& out) {
  auto rows = compare(instance, names, mode, samples, seed);
  if (format == Format::Json) {
    json list = json::array();
    for (const auto& row : rows) {
      json item{{"mechanism", row.mechanism},
                {"mode", row.exact_mode ? "exact" : "sampled"},
                {"revenue_estimate", row.revenue_estimate},
                {"std_err", row.std_err},
                {"samples", row.samples}};
      auto opt = [](const std::optional<Rational>& v) { return v ? json(to_string(*v)) : json(); };
      auto flag = [](const std::optional<bool>& v) { return v ? json(*v) : json(); };
      item["revenue_exact"] = opt(row.revenue_exact);
      item["virtual_surplus"] = opt(row.virtual_surplus);
      item["ironed_surplus"] = opt(row.ironed_surplus);
      item["ic_ok"] = flag(row.ic_ok);
      item["ir_ok"] = flag(row.ir_ok);
      list.push_back(item);
    }
    out << list.dump(2) << "\n";
  } else if (format == Format::Csv) {
    out << "mechanism,revenue_exact,revenue_estimate,std_err,ic_ok,ir_ok\n";
    for (const auto& row : rows) {
      out << csv_field(row.mechanism) << ","
          << (row.revenue_exact ? to_string(*row.revenue_exact) : "") << ","
          << format_double(row.revenue_estimate) << "," << format_double(row.std_err) << ","
          << optional_flag(row.ic_ok) << "," << optional_flag(row.ir_ok) << "\n";
    }
  } else {
    std::vector<std::vector<std::string>> table{
        {"mechanism", "mode", "revenue", "E[sum Q w_bar]", "std_err", "ic_ok", "ir_ok"}};
    for (const auto& row : rows) {
      table.push_back({row.mechanism, row.exact_mode ? "exact" : "sampled",
                       row.revenue_exact ? exact_and_decimal(*row.revenue_exact)
                                         : format_double(row.revenue_estimate),
                       row.ironed_surplus ? to_string(*row.ironed_surplus) : "-",
                       format_double(row.std_err), optional_flag(row.ic_ok),
                       optional_flag(row.ir_ok)});
    }
    print_table(out, table);
  }
  return kExitOk;
}

// ---- counterexample ---------------------------------------------------------

int cmd_counterexample(Format format, std::ostream& out) {
  CounterexampleReport report = reproduce_counterexample();
  if (format == Format::Json) {
    out << json{{"ok", report.ok()}, {"lines", report.lines}, {"mismatches", report.mismatches}}
               .dump(2)
        << "\n";
  } else {
    for (const auto& line : report.lines) out << line << "\n";
    for (const auto& line : report.mismatches) out << "MISMATCH " << line << "\n";
    out << (report.ok() ? "all values reproduced" : "reproduction failed") << "\n";
  }
  return report.ok() ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Revenue-optimal auctions for single-minded buyers", "auction"};
  app.require_subcommand(1);

  Format format = Format::Text;
  std::string instance_path;
  std::string mechanism_name = "mwa";
  std::uint64_t seed = 1;
  std::uint64_t samples = 100'000;
  unsigned workers = 1;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  };
  auto add_instance = [&](CLI::App* sub) {
    sub->add_option("instance", instance_path, "Instance JSON file")->required();
  };
  auto add_mechanism = [&](CLI::App* sub) {
    sub->add_option("--mechanism,-m", mechanism_name, "mwa, vcg, greedy or kappa:<k>");
  };
  auto add_workers = [&](CLI::App* sub) {
    sub->add_option("--workers", workers, "Worker threads")->check(CLI::Range(1U, 256U));
  };

  auto* table = app.add_subcommand("table", "Virtual valuation table");
  add_instance(table);
  add_format(table);

  std::string profile_text;
  auto* solve = app.add_subcommand("solve", "Outcome for one reported profile");
  add_instance(solve);
  add_mechanism(solve);
  add_format(solve);
  solve->add_option("--profile", profile_text, "JSON array of {\"items\": [...], \"v\": value}")
      ->required();

  auto* revenue = app.add_subcommand("revenue", "Exact expected revenue");
  add_instance(revenue);
  add_mechanism(revenue);
  add_format(revenue);
  add_workers(revenue);

  std::string report_format;
  bool ex_post = false;
  auto* verify = app.add_subcommand("verify", "Exhaustive IC and IR audit");
  add_instance(verify);
  add_mechanism(verify);
  add_format(verify);
  add_workers(verify);
  verify->add_option("--report", report_format, "Dump the audit (json)")
      ->check(CLI::IsMember({"json"}));
  verify->add_flag("--ex-post", ex_post, "Also check truthfulness profile by profile");

  auto* check_order = app.add_subcommand("check-order", "Hazard-rate order of nested bundles");
  add_instance(check_order);
  add_format(check_order);

  auto* simulate = app.add_subcommand("simulate", "Monte-Carlo revenue estimate");
  add_instance(simulate);
  add_mechanism(simulate);
  add_format(simulate);
  add_workers(simulate);
  simulate->add_option("--samples", samples, "Sample count")->check(CLI::PositiveNumber);
  simulate->add_option("--seed", seed, "Random seed");

  GeneratorConfig config;
  std::string output_path;
  auto* generate = app.add_subcommand("generate", "Random instance");
  generate->add_option("--items", config.items, "Item count")->check(CLI::Range(1, 63));
  generate->add_option("--buyers", config.buyers, "Buyer count")->check(CLI::Range(1, 64));
  generate->add_option("--max-bundles", config.max_bundles, "Bundles per buyer (at most)")
      ->check(CLI::PositiveNumber);
  generate->add_option("--grid-size", config.grid_size, "Values per buyer")
      ->check(CLI::PositiveNumber);
  generate->add_option("--seed", config.seed, "Random seed");
  generate->add_flag("--hazard-order", config.enforce_nested_order,
                     "Nested bundles get hazard-rate ordered values");
  generate->add_flag("--antichain", config.antichain, "No bundle contains another");
  generate->add_option("--output,-o", output_path, "Write to a file instead of stdout");

  auto* counterexample =
      app.add_subcommand("counterexample", "Reproduce the hazard-rate counterexample");
  add_format(counterexample);

  std::vector<std::string> mechanism_list{"mwa", "vcg", "greedy"};
  std::string mode_name = "auto";
  auto* compare_cmd = app.add_subcommand("compare", "Compare mechanisms on one instance");
  add_instance(compare_cmd);
  add_format(compare_cmd);
  compare_cmd->add_option("--mechanisms", mechanism_list, "Mechanism names")->delimiter(',');
  compare_cmd->add_option("--mode", mode_name, "auto, exact or sampled")
      ->check(CLI::IsMember({"auto", "exact", "sampled"}));
  compare_cmd->add_option("--samples", samples, "Samples in sampled mode")
      ->check(CLI::PositiveNumber);
  compare_cmd->add_option("--seed", seed, "Random seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*counterexample) return cmd_counterexample(format, out);
    if (*generate) {
      AuctionInstance instance = generate_instance(config);
      std::string text = instance_to_json(instance).dump(2) + "\n";
      if (output_path.empty()) {
        out << text;
      } else {
        std::ofstream file(output_path);
        if (!file) throw AuctionError(ErrorKind::MalformedInput, "cannot write " + output_path);
        file << text;
      }
      return kExitOk;
    }

    AuctionInstance instance = load_instance(instance_path);
    if (*table) return cmd_table(instance, format, out);
    if (*check_order) return cmd_check_order(instance, format, out);
    if (*compare_cmd) {
      CompareMode mode = mode_name == "exact"     ? CompareMode::Exact
                         : mode_name == "sampled" ? CompareMode::Sampled
                                                  : CompareMode::Auto;
      return cmd_compare(instance, mechanism_list, mode, samples, seed, format, out);
    }

    auto mechanism = make_mechanism(instance, mechanism_name);
    if (*solve) return cmd_solve(*mechanism, profile_text, format, out);
    if (*revenue) return cmd_revenue(*mechanism, workers, format, out);
    if (*verify) {
      if (report_format == "json") format = Format::Json;
      return cmd_verify(*mechanism, ex_post, workers, format, out);
    }
    if (*simulate) return cmd_simulate(*mechanism, samples, seed, workers, format, out);
  } catch (const AuctionError& e) {
    err << error_to_json(e).dump() << "\n";
    return kExitBadInput;
  }
  return kExitUsage;
}

}  // namespace auction::cli
