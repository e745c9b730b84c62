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

#include "scripbid/game.h"

#include <algorithm>
#include <map>
#include <utility>

#include "scripbid/error.h"

namespace scripbid {
namespace {

Ordering FromCompare(const Rational& a, const Rational& b) {
  if (a > b) return Ordering::kBetter;
  if (a < b) return Ordering::kWorse;
  return Ordering::kEqual;
}

}  // namespace

Ordering ComparePairs(Player p, const UtilityPair& a, const UtilityPair& b) {
  Ordering own = FromCompare(a.Get(p), b.Get(p));
  if (own != Ordering::kEqual) return own;
  return FromCompare(a.Get(Other(p)), b.Get(Other(p)));
}

int BiddingGame::AddInternal(std::vector<int> children, std::string label) {
  Node n;
  n.children = std::move(children);
  n.declared_internal = true;
  n.label = std::move(label);
  n.external_id = num_nodes();
  nodes_.push_back(std::move(n));
  validated_ = false;
  return num_nodes() - 1;
}

int BiddingGame::AddTerminal(Rational u1, Rational u2, std::string label) {
  Node n;
  n.terminal = true;
  n.utility = {std::move(u1), std::move(u2)};
  n.label = std::move(label);
  n.external_id = num_nodes();
  nodes_.push_back(std::move(n));
  validated_ = false;
  return num_nodes() - 1;
}

void BiddingGame::SetChildren(int node, std::vector<int> children) {
  nodes_[node].children = std::move(children);
  nodes_[node].declared_internal = true;
  validated_ = false;
}

const UtilityPair& BiddingGame::utility(int node) const {
  if (!nodes_[node].terminal) {
    throw GameError(ErrorCode::kNotATerminal,
                    "node " + std::to_string(external_id(node)) + " is not a terminal");
  }
  return nodes_[node].utility;
}

int BiddingGame::IndexOf(std::int64_t id) const {
  if (id >= 0 && id < num_nodes() && nodes_[id].external_id == id) return static_cast<int>(id);
  for (int i = 0; i < num_nodes(); ++i) {
    if (nodes_[i].external_id == id) return i;
  }
  return -1;
}

void BiddingGame::Validate() {
  const int n = num_nodes();
  if (n == 0) throw GameError(ErrorCode::kInvalidSpec, "game has no nodes");
  if (root_ < 0 || root_ >= n) throw GameError(ErrorCode::kInvalidSpec, "root is not a node");

  for (int i = 0; i < n; ++i) {
    const Node& node = nodes_[i];
    for (int c : node.children) {
      if (c < 0 || c >= n) {
        throw GameError(ErrorCode::kDanglingChild,
                        "node " + std::to_string(node.external_id) + " has an undeclared child");
      }
    }
    if (node.terminal && !node.children.empty()) {
      throw GameError(ErrorCode::kInvalidSpec,
                      "terminal " + std::to_string(node.external_id) + " has children");
    }
    if (!node.terminal && node.children.empty()) {
      throw GameError(node.declared_internal ? ErrorCode::kEmptyMoveSet : ErrorCode::kMissingUtility,
                      "node " + std::to_string(node.external_id));
    }
  }

  // Iterative DFS over every node: colors detect back edges, finishing order
  // gives heights.
  std::vector<int> color(n, 0);
  heights_.assign(n, 0);
  std::vector<int> finish;
  finish.reserve(n);
  for (int start = 0; start < n; ++start) {
    if (color[start] != 0) continue;
    std::vector<std::pair<int, size_t>> stack{{start, 0}};
    color[start] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < nodes_[v].children.size()) {
        int c = nodes_[v].children[next++];
        if (color[c] == 1) {
          std::string path;
          bool on = false;
          for (auto& [u, _] : stack) {
            if (u == c) on = true;
            if (on) path += std::to_string(nodes_[u].external_id) + " -> ";
          }
          path += std::to_string(nodes_[c].external_id);
          throw GameError(ErrorCode::kCycleDetected, path);
        }
        if (color[c] == 0) {
          color[c] = 1;
          stack.push_back({c, 0});
        }
      } else {
        color[v] = 2;
        int h = 0;
        for (int c : nodes_[v].children) h = std::max(h, heights_[c] + 1);
        heights_[v] = h;
        finish.push_back(v);
        stack.pop_back();
      }
    }
  }

  // Reachable post-order from the root.
  post_order_.clear();
  std::vector<char> seen(n, 0);
  std::vector<int> parents(n, 0);
  {
    std::vector<std::pair<int, size_t>> stack{{root_, 0}};
    seen[root_] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < nodes_[v].children.size()) {
        int c = nodes_[v].children[next++];
        ++parents[c];
        if (!seen[c]) {
          seen[c] = 1;
          stack.push_back({c, 0});
        }
      } else {
        post_order_.push_back(v);
        stack.pop_back();
      }
    }
  }
  is_binary_ = true;
  is_tree_ = true;
  terminals_.clear();
  for (int i = 0; i < n; ++i) {
    if (!seen[i]) continue;
    if (nodes_[i].children.size() > 2) is_binary_ = false;
    if (parents[i] > 1) is_tree_ = false;
    if (nodes_[i].terminal) terminals_.push_back(i);
  }

  // Dense ranks over distinct utility pairs, one order per player.
  rank1_.assign(n, -1);
  rank2_.assign(n, -1);
  for (Player p : {Player::kWhite, Player::kBlack}) {
    std::vector<int> order = terminals_;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return ComparePairs(p, nodes_[a].utility, nodes_[b].utility) == Ordering::kWorse;
    });
    std::vector<int>& rank = p == Player::kWhite ? rank1_ : rank2_;
    int r = -1;
    for (size_t k = 0; k < order.size(); ++k) {
      if (k == 0 || !(nodes_[order[k]].utility == nodes_[order[k - 1]].utility)) ++r;
      rank[order[k]] = r;
    }
    num_ranks_ = r + 1;
  }
  validated_ = true;
}

Ordering BiddingGame::Prefers(Player p, int t, int t_other) const {
  return ComparePairs(p, utility(t), utility(t_other));
}

std::vector<int> ParetoSet(const BiddingGame& game) {
  std::vector<int> order = game.terminals();
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    int ra = game.rank(Player::kWhite, a), rb = game.rank(Player::kWhite, b);
    return ra != rb ? ra > rb : a < b;
  });
  // Scanning by White's order, a pair survives iff its u2 beats every pair
  // already seen with a different utility pair.
  std::vector<int> result;
  bool have = false;
  Rational best_u2;
  size_t k = 0;
  while (k < order.size()) {
    size_t group_end = k;
    const UtilityPair& pair = game.utility(order[k]);
    while (group_end < order.size() && game.utility(order[group_end]) == pair) ++group_end;
    if (!have || pair.u2 > best_u2) {
      for (size_t j = k; j < group_end; ++j) result.push_back(order[j]);
      best_u2 = pair.u2;
      have = true;
    }
    k = group_end;
  }
  std::sort(result.begin(), result.end());
  return result;
}

Rational SocialWelfare(const BiddingGame& game, int terminal) {
  const UtilityPair& u = game.utility(terminal);
  return u.u1 + u.u2;
}

}  // namespace scripbid
