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

#include "auction/instance_json.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "auction/error.hpp"

namespace auction {
namespace {

using nlohmann::json;

std::string escape_token(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') {
      out += "~0";
    } else if (c == '/') {
      out += "~1";
    } else {
      out += c;
    }
  }
  return out;
}

/// Builds a DOM while remembering the source text of every floating-point
/// literal, keyed by JSON pointer.
class LiteralPreservingSax {
 public:
  json root;
  std::map<std::string, std::string> literals;
  std::string error;

  bool null() { return put(json(nullptr)); }
  bool boolean(bool v) { return put(json(v)); }
  bool number_integer(json::number_integer_t v) { return put(json(v)); }
  bool number_unsigned(json::number_unsigned_t v) { return put(json(v)); }
  bool number_float(json::number_float_t v, const std::string& text) {
    literals[child_path()] = text;
    return put(json(v));
  }
  bool string(std::string& v) { return put(json(v)); }
  bool binary(json::binary_t&) { return put(json(nullptr)); }

  bool start_object(std::size_t) { return open(json::object(), true); }
  bool key(std::string& k) {
    stack_.back().key = k;
    return true;
  }
  bool end_object() { return close(); }
  bool start_array(std::size_t) { return open(json::array(), false); }
  bool end_array() { return close(); }

  bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception& ex) {
    error = ex.what();
    return false;
  }

 private:
  struct Frame {
    json value;
    bool is_object;
    std::string key;
    std::string path;
  };
  std::vector<Frame> stack_;

  std::string child_path() const {
    if (stack_.empty()) return "";
    const Frame& top = stack_.back();
    if (top.is_object) return top.path + "/" + escape_token(top.key);
    return top.path + "/" + std::to_string(top.value.size());
  }

  bool put(json v) {
    if (stack_.empty()) {
      root = std::move(v);
    } else if (stack_.back().is_object) {
      stack_.back().value[stack_.back().key] = std::move(v);
    } else {
      stack_.back().value.push_back(std::move(v));
    }
    return true;
  }

  bool open(json v, bool is_object) {
    std::string path = child_path();
    stack_.push_back(Frame{std::move(v), is_object, {}, std::move(path)});
    return true;
  }

  bool close() {
    json done = std::move(stack_.back().value);
    stack_.pop_back();
    return put(std::move(done));
  }
};

struct Document {
  json root;
  std::map<std::string, std::string> literals;
};

Document parse_document(std::string_view text) {
  LiteralPreservingSax sax;
  bool ok = json::sax_parse(text.begin(), text.end(), &sax);
  if (!ok) {
    throw AuctionError(ErrorKind::MalformedInput,
                       sax.error.empty() ? std::string("invalid JSON") : sax.error, "");
  }
  return Document{std::move(sax.root), std::move(sax.literals)};
}

[[noreturn]] void schema_error(const std::string& message, const std::string& path) {
  throw AuctionError(ErrorKind::MalformedInput, message, path.empty() ? "/" : path);
}

const json& member(const json& object, const char* name, const std::string& path) {
  if (!object.is_object()) schema_error("expected an object", path);
  auto it = object.find(name);
  if (it == object.end()) schema_error(std::string("missing field \"") + name + "\"", path);
  return *it;
}

const json& array_member(const json& object, const char* name, const std::string& path) {
  const json& value = member(object, name, path);
  if (!value.is_array()) schema_error(std::string("field \"") + name + "\" must be an array",
                                      path + "/" + name);
  return value;
}

Rational read_number(const Document& doc, const json& value, const std::string& path) {
  try {
    if (value.is_string()) return parse_rational(value.get<std::string>());
    if (value.is_number_integer()) return parse_rational(value.dump());
    if (value.is_number_float()) return parse_rational(doc.literals.at(path));
  } catch (const AuctionError& e) {
    throw AuctionError(ErrorKind::MalformedInput, e.detail(), path);
  }
  schema_error("expected a number or rational string", path);
}

std::vector<std::string> read_names(const json& array, const std::string& path) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < array.size(); ++i) {
    if (!array[i].is_string()) schema_error("item names must be strings", path + "/" + std::to_string(i));
    names.push_back(array[i].get<std::string>());
  }
  return names;
}

}  // namespace

RawInstance parse_instance_json(std::string_view text) {
  Document doc = parse_document(text);
  const json& root = doc.root;
  RawInstance raw;
  raw.items = read_names(array_member(root, "items", ""), "/items");

  const json& buyers = array_member(root, "buyers", "");
  for (std::size_t n = 0; n < buyers.size(); ++n) {
    const std::string bpath = "/buyers/" + std::to_string(n);
    const json& bundles = array_member(buyers[n], "bundles", bpath);
    RawBuyer buyer;
    for (std::size_t b = 0; b < bundles.size(); ++b) {
      const std::string path = bpath + "/bundles/" + std::to_string(b);
      RawBundle bundle;
      bundle.items = read_names(array_member(bundles[b], "items", path), path + "/items");
      bundle.prob = read_number(doc, member(bundles[b], "prob", path), path + "/prob");
      const json& values = array_member(bundles[b], "values", path);
      for (std::size_t i = 0; i < values.size(); ++i) {
        const std::string vpath = path + "/values/" + std::to_string(i);
        RawValue value;
        value.v = read_number(doc, member(values[i], "v", vpath), vpath + "/v");
        value.prob = read_number(doc, member(values[i], "prob", vpath), vpath + "/prob");
        bundle.values.push_back(std::move(value));
      }
      buyer.bundles.push_back(std::move(bundle));
    }
    raw.buyers.push_back(std::move(buyer));
  }
  return raw;
}

AuctionInstance read_instance(std::string_view text) {
  return validate_instance(parse_instance_json(text));
}

AuctionInstance load_instance(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) {
    throw AuctionError(ErrorKind::MalformedInput, "cannot open " + file.string());
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return read_instance(buffer.str());
}

json instance_to_json(const AuctionInstance& instance) {
  RawInstance raw = to_raw(instance);
  json doc;
  doc["items"] = raw.items;
  doc["buyers"] = json::array();
  for (const auto& buyer : raw.buyers) {
    json bundles = json::array();
    for (const auto& bundle : buyer.bundles) {
      json values = json::array();
      for (const auto& v : bundle.values) {
        values.push_back({{"v", to_string(v.v)}, {"prob", to_string(v.prob)}});
      }
      bundles.push_back({{"items", bundle.items}, {"prob", to_string(bundle.prob)}, {"values", values}});
    }
    doc["buyers"].push_back({{"bundles", bundles}});
  }
  return doc;
}

Profile parse_profile_json(const AuctionInstance& instance, std::string_view text) {
  Document doc = parse_document(text);
  if (!doc.root.is_array()) schema_error("profile must be an array of bids", "/");
  if (doc.root.size() != instance.buyers.size()) {
    throw AuctionError(ErrorKind::BidOutsideSupport,
                       "profile has " + std::to_string(doc.root.size()) + " bids for " +
                           std::to_string(instance.buyers.size()) + " buyers",
                       "/");
  }
  Profile profile;
  for (std::size_t n = 0; n < doc.root.size(); ++n) {
    const std::string path = "/" + std::to_string(n);
    auto names = read_names(array_member(doc.root[n], "items", path), path + "/items");
    std::uint64_t bits = 0;
    for (std::size_t k = 0; k < names.size(); ++k) {
      auto it = std::find(instance.items.begin(), instance.items.end(), names[k]);
      if (it == instance.items.end()) {
        throw AuctionError(ErrorKind::BidOutsideSupport, "unknown item \"" + names[k] + "\"",
                           path + "/items/" + std::to_string(k));
      }
      bits |= std::uint64_t{1} << (it - instance.items.begin());
    }
    Rational value = read_number(doc, member(doc.root[n], "v", path), path + "/v");
    try {
      profile.push_back(make_bid(instance, n, ItemSet(bits), value));
    } catch (const AuctionError& e) {
      throw AuctionError(e.kind(), e.detail(), path);
    }
  }
  return profile;
}

json error_to_json(const AuctionError& error) {
  return {{"error", std::string(to_string(error.kind()))},
          {"message", error.detail()},
          {"path", error.path()}};
}

}  // namespace auction
