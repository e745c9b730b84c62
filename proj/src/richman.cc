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

#include "scripbid/richman.h"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <unordered_map>

#include "json.hpp"
#include "scripbid/error.h"

namespace scripbid {
namespace {

using Json = nlohmann::ordered_json;

std::string NodeName(const ZeroSumGame& game, int node) {
  return std::to_string(game.external_id(node));
}

int LongestPath(const ZeroSumGame& game, const std::vector<int>& order) {
  std::vector<int> depth(game.num_nodes(), 0);
  for (int v : order) {
    for (int w : game.white_moves(v)) depth[v] = std::max(depth[v], depth[w] + 1);
    for (int w : game.black_moves(v)) depth[v] = std::max(depth[v], depth[w] + 1);
  }
  return depth[game.root()];
}

BigInt SpinnerCount(const ZeroSumGame& game, int node, int remaining) {
  if (game.is_terminal(node)) {
    return game.label(node) == WinLabel::kBlackWin ? BigInt(1) << remaining : BigInt(0);
  }
  BigInt low = -1, high = -1;
  for (int w : game.white_moves(node)) {
    BigInt c = SpinnerCount(game, w, remaining - 1);
    if (low < 0 || c < low) low = c;
  }
  for (int w : game.black_moves(node)) {
    BigInt c = SpinnerCount(game, w, remaining - 1);
    if (c > high) high = c;
  }
  return low + high;
}

bool IsFullBinary(const BiddingGame& game) {
  if (!game.is_tree() || !game.is_binary()) return false;
  int leaf_depth = -1;
  std::function<bool(int, int)> walk = [&](int v, int d) {
    if (game.is_terminal(v)) {
      if (leaf_depth < 0) leaf_depth = d;
      return leaf_depth == d;
    }
    if (game.children(v).size() != 2) return false;
    for (int c : game.children(v)) {
      if (!walk(c, d + 1)) return false;
    }
    return true;
  };
  return walk(game.root(), 0);
}

BigInt CeilTimes(const Rational& x, std::int64_t n) {
  Rational y = x * n;
  BigInt q = boost::multiprecision::numerator(y) / boost::multiprecision::denominator(y);
  if (Rational(q) < y) ++q;
  return q;
}

}  // namespace

int ZeroSumGame::AddNode(std::int64_t external_id) {
  Node node;
  node.external_id = external_id < 0 ? static_cast<std::int64_t>(nodes_.size()) : external_id;
  nodes_.push_back(std::move(node));
  return static_cast<int>(nodes_.size()) - 1;
}

void ZeroSumGame::SetMoves(int node, std::vector<int> white, std::vector<int> black) {
  nodes_[node].white = std::move(white);
  nodes_[node].black = std::move(black);
}

int ZeroSumGame::IndexOf(std::int64_t external_id) const {
  for (int i = 0; i < num_nodes(); ++i) {
    if (nodes_[i].external_id == external_id) return i;
  }
  return -1;
}

std::vector<int> ZeroSumGame::TopologicalOrder() const {
  std::vector<int> order;
  std::vector<int> state(nodes_.size(), 0);  // 0 new, 1 open, 2 done
  std::vector<std::pair<int, size_t>> stack{{root_, 0}};
  state[root_] = 1;
  auto next_of = [&](int v, size_t k) {
    const Node& n = nodes_[v];
    return k < n.white.size() ? n.white[k] : n.black[k - n.white.size()];
  };
  while (!stack.empty()) {
    auto& [v, k] = stack.back();
    const Node& n = nodes_[v];
    if (k == 0) {
      if (n.white.empty() != n.black.empty()) {
        throw GameError(ErrorCode::kEmptyMoveSet, "node " + NodeName(*this, v) +
                                                      " has moves for one player only");
      }
      if (n.white.empty() && n.label == WinLabel::kNone) {
        throw GameError(ErrorCode::kUnlabeledTerminal, "node " + NodeName(*this, v));
      }
    }
    if (k == n.white.size() + n.black.size()) {
      state[v] = 2;
      order.push_back(v);
      stack.pop_back();
      continue;
    }
    int w = next_of(v, k++);
    if (state[w] == 1) {
      throw GameError(ErrorCode::kCyclic, "cycle through node " + NodeName(*this, w));
    }
    if (state[w] == 0) {
      state[w] = 1;
      stack.push_back({w, 0});
    }
  }
  return order;
}

RichmanValues ComputeRichmanValues(const ZeroSumGame& game) {
  RichmanValues out;
  out.value.assign(game.num_nodes(), Rational(0));
  out.reachable.assign(game.num_nodes(), false);
  for (int v : game.TopologicalOrder()) {
    out.reachable[v] = true;
    if (game.is_terminal(v)) {
      out.value[v] = game.label(v) == WinLabel::kBlackWin ? 1 : 0;
      continue;
    }
    Rational low = out.value[game.white_moves(v)[0]];
    for (int w : game.white_moves(v)) low = std::min(low, out.value[w]);
    Rational high = out.value[game.black_moves(v)[0]];
    for (int w : game.black_moves(v)) high = std::max(high, out.value[w]);
    out.value[v] = (low + high) / 2;
  }
  return out;
}

Rational SpinnerLossProbability(const ZeroSumGame& game) {
  int length = LongestPath(game, game.TopologicalOrder());
  return Rational(SpinnerCount(game, game.root(), length), BigInt(1) << length);
}

ZeroSumGame ZeroSumFromBidding(const BiddingGame& game) {
  ZeroSumGame out;
  for (int v = 0; v < game.num_nodes(); ++v) out.AddNode(game.external_id(v));
  for (int v = 0; v < game.num_nodes(); ++v) {
    if (!game.is_terminal(v)) {
      out.SetMoves(v, game.children(v), game.children(v));
      continue;
    }
    const UtilityPair& u = game.utility(v);
    if (u.u1 > u.u2) {
      out.SetLabel(v, WinLabel::kWhiteWin);
    } else if (u.u2 > u.u1) {
      out.SetLabel(v, WinLabel::kBlackWin);
    }
  }
  out.SetRoot(game.root());
  return out;
}

int SatisfactionRank(const BiddingGame& game, int terminal, Player player) {
  const Rational& mine = game.utility(terminal).Get(player);
  int count = 0;
  for (int t : game.terminals()) {
    if (mine >= game.utility(t).Get(player)) ++count;
  }
  return count;
}

ZeroSumGame ToWinLose(const BiddingGame& game, Player player, int threshold_rank) {
  ZeroSumGame out;
  for (int v = 0; v < game.num_nodes(); ++v) out.AddNode(game.external_id(v));
  const WinLabel win = player == Player::kWhite ? WinLabel::kWhiteWin : WinLabel::kBlackWin;
  const WinLabel lose = player == Player::kWhite ? WinLabel::kBlackWin : WinLabel::kWhiteWin;
  for (int v = 0; v < game.num_nodes(); ++v) {
    if (game.is_terminal(v)) {
      out.SetLabel(v, SatisfactionRank(game, v, player) >= threshold_rank ? win : lose);
    } else {
      out.SetMoves(v, game.children(v), game.children(v));
    }
  }
  out.SetRoot(game.root());
  return out;
}

AuditReport MstCheck(const BiddingGame& game, const OutcomeMap& map) {
  if (!IsFullBinary(game)) {
    throw GameError(ErrorCode::kNotFullBinary, "satisfaction test needs a full binary tree");
  }
  AuditReport report{"satisfaction", {}, 0};
  const auto n = static_cast<std::int64_t>(game.terminals().size());
  const Rational total = map.total.ToRational();
  for (int j = 0; j < map.size(); ++j) {
    const int t = map.outcomes[j];
    // Requirements grow toward the ends of the interval, so check the
    // strictest budget each player can hold inside it.
    Rational white_share = map.UpperEnd(j).ToRational() / total;
    Rational black_share = 1 - map.cutoffs[j].ToRational() / total;
    BigInt need1 = CeilTimes(white_share, n), need2 = CeilTimes(black_share, n);
    int got1 = SatisfactionRank(game, t, Player::kWhite);
    int got2 = SatisfactionRank(game, t, Player::kBlack);
    if (BigInt(got1) < need1) {
      report.Add({"B1 in interval from " + map.cutoffs[j].ToString(),
                  "White rank >= " + need1.str(), "rank " + std::to_string(got1), {t}});
    }
    if (BigInt(got2) < need2) {
      report.Add({"B1 in interval from " + map.cutoffs[j].ToString(),
                  "Black rank >= " + need2.str(), "rank " + std::to_string(got2), {t}});
    }
  }
  return report;
}

ZeroSumGame TicTacToe() {
  static constexpr std::array<std::array<int, 3>, 8> kLines = {{{0, 1, 2},
                                                                 {3, 4, 5},
                                                                 {6, 7, 8},
                                                                 {0, 3, 6},
                                                                 {1, 4, 7},
                                                                 {2, 5, 8},
                                                                 {0, 4, 8},
                                                                 {2, 4, 6}}};
  ZeroSumGame game;
  std::unordered_map<int, int> index;  // board code -> node
  std::function<int(std::array<int, 9>&)> build = [&](std::array<int, 9>& board) {
    int code = 0;
    for (int cell : board) code = code * 3 + cell;
    if (auto it = index.find(code); it != index.end()) return it->second;
    int node = game.AddNode(code);
    index.emplace(code, node);
    for (const auto& line : kLines) {
      int a = board[line[0]];
      if (a != 0 && a == board[line[1]] && a == board[line[2]]) {
        game.SetLabel(node, a == 1 ? WinLabel::kWhiteWin : WinLabel::kBlackWin);
        return node;
      }
    }
    std::vector<int> white, black;
    for (int i = 0; i < 9; ++i) {
      if (board[i] != 0) continue;
      board[i] = 1;
      white.push_back(build(board));
      board[i] = 2;
      black.push_back(build(board));
      board[i] = 0;
    }
    if (white.empty()) {
      game.SetLabel(node, WinLabel::kBlackWin);  // draw
    } else {
      game.SetMoves(node, std::move(white), std::move(black));
    }
    return node;
  };
  std::array<int, 9> empty{};
  game.SetRoot(build(empty));
  return game;
}

ZeroSumGame RandomZeroSumGame(std::mt19937_64& rng, int num_nodes) {
  num_nodes = std::max(num_nodes, 3);
  ZeroSumGame game;
  for (int i = 0; i < num_nodes; ++i) game.AddNode(i);
  const int terminals = std::uniform_int_distribution<int>(2, std::max(2, num_nodes / 2))(rng);
  const int first_terminal = num_nodes - terminals;
  for (int i = 0; i < num_nodes; ++i) {
    if (i >= first_terminal) {
      game.SetLabel(i, rng() % 2 ? WinLabel::kWhiteWin : WinLabel::kBlackWin);
      continue;
    }
    auto moves = [&]() {
      std::uniform_int_distribution<int> pick(i + 1, num_nodes - 1);
      int count = std::uniform_int_distribution<int>(1, 3)(rng);
      std::vector<int> out;
      for (int k = 0; k < count; ++k) {
        int w = pick(rng);
        if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
      }
      return out;
    };
    std::vector<int> white = moves();
    game.SetMoves(i, std::move(white), moves());
  }
  game.SetRoot(0);
  return game;
}

ZeroSumGame ParseZeroSumJson(std::string_view text) {
  try {
    Json doc = Json::parse(text);
    if (!doc.is_object() || !doc.contains("root") || !doc.contains("nodes")) {
      throw GameError(ErrorCode::kParse, "game needs \"root\" and \"nodes\"");
    }
    std::map<std::int64_t, int> index;
    ZeroSumGame game;
    for (const Json& node : doc.at("nodes")) {
      std::int64_t id = node.at("id").get<std::int64_t>();
      if (!index.emplace(id, game.AddNode(id)).second) {
        throw GameError(ErrorCode::kInvalidSpec, "duplicate node id " + std::to_string(id));
      }
    }
    auto lookup = [&](const Json& id) {
      auto it = index.find(id.get<std::int64_t>());
      if (it == index.end()) throw GameError(ErrorCode::kDanglingChild, "unknown node " + id.dump());
      return it->second;
    };
    for (const Json& node : doc.at("nodes")) {
      int v = index.at(node.at("id").get<std::int64_t>());
      std::vector<int> white, black;
      if (node.contains("children")) {
        for (const Json& c : node.at("children")) white.push_back(lookup(c));
        black = white;
      }
      if (node.contains("white")) {
        for (const Json& c : node.at("white")) white.push_back(lookup(c));
      }
      if (node.contains("black")) {
        for (const Json& c : node.at("black")) black.push_back(lookup(c));
      }
      game.SetMoves(v, std::move(white), std::move(black));
      if (node.contains("winner")) {
        std::string w = node.at("winner").get<std::string>();
        if (w == "white") {
          game.SetLabel(v, WinLabel::kWhiteWin);
        } else if (w == "black") {
          game.SetLabel(v, WinLabel::kBlackWin);
        } else {
          throw GameError(ErrorCode::kParse, "winner must be \"white\" or \"black\"");
        }
      }
    }
    game.SetRoot(lookup(doc.at("root")));
    game.TopologicalOrder();
    return game;
  } catch (const nlohmann::json::exception& e) {
    throw GameError(ErrorCode::kParse, e.what());
  }
}

std::string DumpZeroSumJson(const ZeroSumGame& game) {
  std::vector<int> order(game.num_nodes());
  for (int i = 0; i < game.num_nodes(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return game.external_id(a) < game.external_id(b); });
  Json doc;
  doc["root"] = game.external_id(game.root());
  Json nodes = Json::array();
  for (int v : order) {
    Json node;
    node["id"] = game.external_id(v);
    if (game.is_terminal(v)) {
      if (game.label(v) != WinLabel::kNone) {
        node["winner"] = game.label(v) == WinLabel::kWhiteWin ? "white" : "black";
      }
    } else {
      Json white = Json::array(), black = Json::array();
      for (int w : game.white_moves(v)) white.push_back(game.external_id(w));
      for (int w : game.black_moves(v)) black.push_back(game.external_id(w));
      node["white"] = std::move(white);
      node["black"] = std::move(black);
    }
    nodes.push_back(std::move(node));
  }
  doc["nodes"] = std::move(nodes);
  return doc.dump(1) + "\n";
}

std::string RichmanValuesJson(const ZeroSumGame& game, const RichmanValues& values) {
  std::vector<int> order;
  for (int v = 0; v < game.num_nodes(); ++v) {
    if (values.reachable[v]) order.push_back(v);
  }
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return game.external_id(a) < game.external_id(b); });
  Json doc;
  doc["root"] = game.external_id(game.root());
  doc["root_value"] = RationalToString(values.value[game.root()]);
  Json map = Json::object();
  for (int v : order) map[std::to_string(game.external_id(v))] = RationalToString(values.value[v]);
  doc["values"] = std::move(map);
  return doc.dump(1) + "\n";
}

}  // namespace scripbid
