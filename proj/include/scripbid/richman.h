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

#ifndef SCRIPBID_RICHMAN_H_
#define SCRIPBID_RICHMAN_H_

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "scripbid/analysis.h"
#include "scripbid/dyadic.h"
#include "scripbid/game.h"
#include "scripbid/outcome_map.h"

namespace scripbid {

enum class WinLabel { kNone, kWhiteWin, kBlackWin };

// Win/lose game where each player has their own move list.
class ZeroSumGame {
 public:
  int AddNode(std::int64_t external_id = -1);
  void SetMoves(int node, std::vector<int> white, std::vector<int> black);
  void SetLabel(int node, WinLabel label) { nodes_[node].label = label; }
  void SetRoot(int node) { root_ = node; }

  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  int root() const { return root_; }
  const std::vector<int>& white_moves(int node) const { return nodes_[node].white; }
  const std::vector<int>& black_moves(int node) const { return nodes_[node].black; }
  WinLabel label(int node) const { return nodes_[node].label; }
  bool is_terminal(int node) const {
    return nodes_[node].white.empty() && nodes_[node].black.empty();
  }
  std::int64_t external_id(int node) const { return nodes_[node].external_id; }
  int IndexOf(std::int64_t external_id) const;

  // Reachable nodes, successors first. Throws Cyclic, UnlabeledTerminal or
  // EmptyMoveSet.
  std::vector<int> TopologicalOrder() const;

 private:
  struct Node {
    std::vector<int> white;
    std::vector<int> black;
    WinLabel label = WinLabel::kNone;
    std::int64_t external_id = -1;
  };
  std::vector<Node> nodes_;
  int root_ = 0;
};

// Fraction of the total budget White needs; indexed by node, empty Rational
// (zero) for unreachable nodes.
struct RichmanValues {
  std::vector<Rational> value;
  std::vector<bool> reachable;
};

RichmanValues ComputeRichmanValues(const ZeroSumGame& game);

// Probability that Black wins when a fair coin picks the mover each turn,
// counted over the unfolded tree with integer path weights.
Rational SpinnerLossProbability(const ZeroSumGame& game);

// Terminal wins for White iff u1 > u2, for Black iff u2 > u1.
ZeroSumGame ZeroSumFromBidding(const BiddingGame& game);

ZeroSumGame ToWinLose(const BiddingGame& game, Player player, int threshold_rank);

int SatisfactionRank(const BiddingGame& game, int terminal, Player player);

// Throws NotFullBinary unless the game is a tree with every internal node
// binary and all terminals at one depth.
AuditReport MstCheck(const BiddingGame& game, const OutcomeMap& map);

ZeroSumGame TicTacToe();

ZeroSumGame RandomZeroSumGame(std::mt19937_64& rng, int num_nodes);

ZeroSumGame ParseZeroSumJson(std::string_view text);
std::string DumpZeroSumJson(const ZeroSumGame& game);

std::string RichmanValuesJson(const ZeroSumGame& game, const RichmanValues& values);

}  // namespace scripbid

#endif  // SCRIPBID_RICHMAN_H_
