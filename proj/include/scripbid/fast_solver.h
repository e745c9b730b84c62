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

#ifndef SCRIPBID_FAST_SOLVER_H_
#define SCRIPBID_FAST_SOLVER_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "scripbid/dyadic.h"
#include "scripbid/game.h"
#include "scripbid/outcome_map.h"

namespace scripbid {

// A node's equilibrium as a step function of White's budget. Cutoffs are in
// grid units of the solution's epsilon; interval a covers
// [cutoffs[a], cutoffs[a+1]). Choices point at an interval of a child
// profile (0-based); leaves carry child -1.
struct IntervalProfile {
  struct Choice {
    int child = -1;
    int index = 0;
  };
  std::vector<std::int64_t> cutoffs;
  std::vector<int> terminals;
  std::vector<Choice> white;
  std::vector<Choice> black;

  int size() const { return static_cast<int>(cutoffs.size()); }
  // Last interval whose cutoff is <= x.
  int Find(std::int64_t x) const;
};

struct AuctionResult {
  IntervalProfile::Choice white;
  IntervalProfile::Choice black;
  int terminal = -1;
  Player winner = Player::kWhite;
  std::int64_t bid1 = 0;
  std::int64_t bid2 = 0;
};

class FastSolution {
 public:
  FastSolution() = default;
  FastSolution(const BiddingGame& game, unsigned scale);

  const BiddingGame& game() const { return *game_; }
  // Epsilon is 2^-scale; the total budget is 2^scale units.
  unsigned scale() const { return scale_; }
  std::int64_t total_units() const { return total_units_; }
  Dyadic epsilon() const { return Dyadic::Pow2(-static_cast<int>(scale_)); }

  bool has_profile(int node) const { return !profiles_[node].cutoffs.empty(); }
  const IntervalProfile& profile(int node) const { return profiles_[node]; }
  IntervalProfile& mutable_profile(int node) { return profiles_[node]; }

  // Terminal at the root for White budget B1 in [0,1].
  int Query(const Dyadic& budget1) const;
  // Terminal from `node` at grid budget c.
  int TerminalAt(int node, std::int64_t c) const;
  OutcomeMap outcome_map() const;

 private:
  const BiddingGame* game_ = nullptr;
  unsigned scale_ = 2;
  std::int64_t total_units_ = 4;
  std::vector<IntervalProfile> profiles_;
};

// Lower equilibrium of a binary game from interval profiles, solving each
// DAG node once. Raises NotBinary.
FastSolution FindPspeFast(const BiddingGame& game);

// Auction at `node` with White budget c (grid units) given the children's
// profiles. Raises ChildProfileMissing.
AuctionResult AscendingAuction(const FastSolution& partial, int node, std::int64_t c);

// Text dump: "# scale k", then per node "# node <id>" and rows
// a,F_num,F_scale,terminal,A1_child,A1_idx,A2_child,A2_idx (1-based a/idx).
std::string DumpFastSolution(const FastSolution& solution);
FastSolution LoadFastSolution(const BiddingGame& game, std::string_view text);

}  // namespace scripbid

#endif  // SCRIPBID_FAST_SOLVER_H_
