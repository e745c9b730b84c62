// Copyright 2026 The Scripbid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "scripbid/game_io.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "scripbid/error.h"

namespace scripbid {
namespace {

using Json = nlohmann::ordered_json;

Rational UtilityFromJson(const Json& v) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_string()) return ParseRational(v.get<std::string>());
  throw GameError(ErrorCode::kParse, "utility must be an integer or a \"p/q\" string");
}

Json UtilityToJson(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1 &&
      boost::multiprecision::abs(r) < Rational(std::int64_t{1} << 53)) {
    return Json(boost::multiprecision::numerator(r).convert_to<std::int64_t>());
  }
  return Json(RationalToString(r));
}

std::int64_t IdFromKey(const std::string& key) {
  Rational v = ParseRational(key);
  if (boost::multiprecision::denominator(v) != 1) {
    throw GameError(ErrorCode::kParse, "bad node id " + key);
  }
  return boost::multiprecision::numerator(v).convert_to<std::int64_t>();
}

}  // namespace

BiddingGame ParseGameJson(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw GameError(ErrorCode::kParse, e.what());
  }
  try {
    if (!doc.is_object() || !doc.contains("root") || !doc.contains("nodes")) {
      throw GameError(ErrorCode::kParse, "game needs \"root\" and \"nodes\"");
    }
    std::set<std::int64_t> ids;
    std::map<std::int64_t, const Json*> node_entries;
    for (const Json& node : doc.at("nodes")) {
      std::int64_t id = node.at("id").get<std::int64_t>();
      if (!node_entries.emplace(id, &node).second) {
        throw GameError(ErrorCode::kInvalidSpec, "duplicate node id " + std::to_string(id));
      }
      ids.insert(id);
    }
    std::map<std::int64_t, const Json*> terminal_entries;
    if (doc.contains("terminals")) {
      for (const auto& [key, value] : doc.at("terminals").items()) {
        std::int64_t id = IdFromKey(key);
        terminal_entries[id] = &value;
        ids.insert(id);
      }
    }

    std::map<std::int64_t, int> index;
    for (std::int64_t id : ids) index.emplace(id, static_cast<int>(index.size()));

    BiddingGame game;
    for (std::int64_t id : ids) {
      auto term = terminal_entries.find(id);
      auto entry = node_entries.find(id);
      std::string label;
      if (entry != node_entries.end() && entry->second->contains("label")) {
        label = entry->second->at("label").get<std::string>();
      }
      int idx;
      if (term != terminal_entries.end()) {
        const Json& u = *term->second;
        if (!u.is_array() || u.size() != 2) {
          throw GameError(ErrorCode::kMissingUtility, "terminal " + std::to_string(id));
        }
        idx = game.AddTerminal(UtilityFromJson(u[0]), UtilityFromJson(u[1]), label);
        if (entry != node_entries.end() && entry->second->contains("children") &&
            !entry->second->at("children").empty()) {
          throw GameError(ErrorCode::kInvalidSpec,
                          "terminal " + std::to_string(id) + " has children");
        }
      } else {
        std::vector<int> children;
        if (entry->second->contains("children")) {
          for (const Json& c : entry->second->at("children")) {
            auto it = index.find(c.get<std::int64_t>());
            if (it == index.end()) {
              throw GameError(ErrorCode::kDanglingChild,
                              "node " + std::to_string(id) + " -> " + c.dump());
            }
            children.push_back(it->second);
          }
        }
        idx = game.AddInternal(std::move(children), label);
      }
      game.SetExternalId(idx, id);
    }
    auto root = index.find(doc.at("root").get<std::int64_t>());
    if (root == index.end()) throw GameError(ErrorCode::kDanglingChild, "root is not a node");
    game.SetRoot(root->second);
    game.Validate();
    return game;
  } catch (const nlohmann::json::exception& e) {
    throw GameError(ErrorCode::kParse, e.what());
  }
}

std::string DumpGameJson(const BiddingGame& game) {
  std::vector<int> order(game.num_nodes());
  for (int i = 0; i < game.num_nodes(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return game.external_id(a) < game.external_id(b); });
  Json doc;
  doc["root"] = game.external_id(game.root());
  Json nodes = Json::array();
  Json terminals = Json::object();
  for (int i : order) {
    Json node;
    node["id"] = game.external_id(i);
    Json children = Json::array();
    for (int c : game.children(i)) children.push_back(game.external_id(c));
    node["children"] = std::move(children);
    if (!game.label(i).empty()) node["label"] = game.label(i);
    nodes.push_back(std::move(node));
    if (game.is_terminal(i)) {
      const UtilityPair& u = game.utility(i);
      terminals[std::to_string(game.external_id(i))] =
          Json::array({UtilityToJson(u.u1), UtilityToJson(u.u2)});
    }
  }
  doc["nodes"] = std::move(nodes);
  doc["terminals"] = std::move(terminals);
  return doc.dump(1) + "\n";
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GameError(ErrorCode::kParse, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw GameError(ErrorCode::kParse, "cannot write " + path);
  out << contents;
}

}  // namespace scripbid
