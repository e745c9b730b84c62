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

#ifndef SCRIPBID_GAME_H_
#define SCRIPBID_GAME_H_

#include <cstdint>
#include <string>
#include <vector>

#include "scripbid/dyadic.h"

namespace scripbid {

enum class Player { kWhite = 1, kBlack = 2 };

inline Player Other(Player p) {
  return p == Player::kWhite ? Player::kBlack : Player::kWhite;
}

enum class Ordering { kWorse = -1, kEqual = 0, kBetter = 1 };

struct UtilityPair {
  Rational u1;
  Rational u2;

  const Rational& Get(Player p) const { return p == Player::kWhite ? u1 : u2; }
  friend bool operator==(const UtilityPair&, const UtilityPair&) = default;
};

// Generic (strictified) preference of `p` between two utility pairs: own
// utility first, opponent's utility breaks ties.
Ordering ComparePairs(Player p, const UtilityPair& a, const UtilityPair& b);

// A two-player bidding game over a DAG. Nodes are addressed by dense index;
// each node also carries an external id used in files and reports.
//
// Build with AddInternal/AddTerminal/SetChildren/SetRoot, then call
// Validate(). Accessors that depend on derived data (heights, ranks, order)
// require a validated game.
class BiddingGame {
 public:
  int AddInternal(std::vector<int> children = {}, std::string label = "");
  int AddTerminal(Rational u1, Rational u2, std::string label = "");
  void SetChildren(int node, std::vector<int> children);
  void SetRoot(int node) { root_ = node; }
  void SetExternalId(int node, std::int64_t id) { nodes_[node].external_id = id; }
  void SetLabel(int node, std::string label) { nodes_[node].label = std::move(label); }

  // Checks structure and fills the derived caches. Throws GameError.
  void Validate();
  bool validated() const { return validated_; }

  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  int root() const { return root_; }
  const std::vector<int>& children(int node) const { return nodes_[node].children; }
  bool is_terminal(int node) const { return nodes_[node].terminal; }
  const UtilityPair& utility(int node) const;
  const std::string& label(int node) const { return nodes_[node].label; }
  std::int64_t external_id(int node) const { return nodes_[node].external_id; }
  // Dense index of an external id, or -1.
  int IndexOf(std::int64_t external_id) const;

  int height(int node) const { return heights_[node]; }
  int height() const { return heights_[root_]; }
  bool is_binary() const { return is_binary_; }
  // True when no reachable node has more than one parent.
  bool is_tree() const { return is_tree_; }

  // Reachable nodes, children before parents.
  const std::vector<int>& post_order() const { return post_order_; }
  // Reachable terminals in index order.
  const std::vector<int>& terminals() const { return terminals_; }

  // Dense rank of a terminal in p's generic order: equal pairs share a rank,
  // larger is better.
  int rank(Player p, int terminal) const {
    return p == Player::kWhite ? rank1_[terminal] : rank2_[terminal];
  }
  int num_ranks() const { return num_ranks_; }

  Ordering Prefers(Player p, int t, int t_other) const;

 private:
  struct Node {
    std::vector<int> children;
    bool terminal = false;
    bool declared_internal = false;
    UtilityPair utility;
    std::string label;
    std::int64_t external_id = 0;
  };

  std::vector<Node> nodes_;
  int root_ = 0;
  bool validated_ = false;
  bool is_binary_ = true;
  bool is_tree_ = true;
  int num_ranks_ = 0;
  std::vector<int> heights_;
  std::vector<int> post_order_;
  std::vector<int> terminals_;
  std::vector<int> rank1_;
  std::vector<int> rank2_;
};

// Terminals not weakly Pareto-dominated by a terminal with a different pair.
std::vector<int> ParetoSet(const BiddingGame& game);

Rational SocialWelfare(const BiddingGame& game, int terminal);

}  // namespace scripbid

#endif  // SCRIPBID_GAME_H_
