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

#ifndef SCRIPBID_GRID_SOLVER_H_
#define SCRIPBID_GRID_SOLVER_H_

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "scripbid/dyadic.h"
#include "scripbid/game.h"
#include "scripbid/outcome_map.h"

namespace scripbid {

struct GridConfig {
  // Continuous budgets use the grid {c * epsilon}; epsilon defaults to
  // 2^-(height+2). Discrete mode uses integer budgets 0..discrete_total.
  std::optional<Dyadic> epsilon;
  std::optional<std::int64_t> discrete_total;
  // Winner of a tied auction per node index; unlisted nodes go to White.
  std::map<int, Player> tie_breaks;
  // When false only the root row survives; child rows are dropped as soon as
  // every parent has been solved.
  bool keep_tables = true;
  int threads = 1;
  std::int64_t max_cells = std::int64_t{1} << 22;
};

// Equilibrium action at one (node, budget) cell. Budgets and bids are grid
// units; `c` always denotes White's budget.
struct GridCell {
  std::int64_t bid1 = 0;
  std::int64_t bid2 = 0;
  int terminal = -1;
  int child1 = -1;  // White's next state if she takes the turn
  int child2 = -1;  // Black's next state if he takes the turn
  Player winner = Player::kWhite;
};

class GridSolution {
 public:
  const BiddingGame& game() const { return *game_; }
  std::int64_t total_units() const { return total_units_; }
  bool discrete() const { return discrete_; }
  // Value of one grid unit.
  const Dyadic& unit() const { return unit_; }
  // Total budget: 1 for continuous grids, M for discrete ones.
  Dyadic total() const { return unit_ * total_units_; }

  bool has_row(int node) const { return !rows_[node].empty(); }
  const GridCell& cell(int node, std::int64_t c) const { return rows_[node][c]; }
  // For building hand-made profiles, e.g. alternative equilibria in tests.
  GridCell& mutable_cell(int node, std::int64_t c) { return rows_[node][c]; }
  // Equilibrium terminal from (node, c); terminals map to themselves.
  int Terminal(int node, std::int64_t c) const {
    return game_->is_terminal(node) ? node : rows_[node][c].terminal;
  }
  Player TieWinner(int node) const { return tie_winner_[node]; }
  // True iff White takes the turn with these bids at `node`.
  bool WhiteWins(int node, std::int64_t b1, std::int64_t b2) const {
    return tie_winner_[node] == Player::kWhite ? b1 >= b2 : b1 > b2;
  }

  Dyadic BudgetOf(std::int64_t c) const { return unit_ * c; }
  // Grid index of a budget or bid; raises OffGrid.
  std::int64_t UnitsOf(const Dyadic& value) const;

  std::vector<int> RootRow() const;
  OutcomeMap outcome_map() const;

 private:
  friend GridSolution FindLowerPspeGrid(const BiddingGame& game, const GridConfig& cfg);

  const BiddingGame* game_ = nullptr;
  std::int64_t total_units_ = 0;
  bool discrete_ = false;
  Dyadic unit_{1};
  std::vector<Player> tie_winner_;
  std::vector<std::vector<GridCell>> rows_;
};

// Lower equilibrium by ascending better-reply auctions at every node and
// grid budget. The game must outlive the returned solution.
GridSolution FindLowerPspeGrid(const BiddingGame& game, const GridConfig& cfg = {});

// Terminal reached from `node` when White holds `budget1` and the players
// bid b1, b2 (both on the grid).
int GetOutcome(const GridSolution& solution, int node, const Dyadic& budget1,
               const Dyadic& b1, const Dyadic& b2);

struct PlayStep {
  int node = -1;
  Rational budget1;
  Rational budget2;
  Rational bid1;
  Rational bid2;
  Player winner = Player::kWhite;
  int next = -1;
};

struct ScriptStep {
  Rational bid1;
  Rational bid2;
  int next = -1;  // node index chosen by the round's winner
};

// Replays a bid script with the payment rule and nothing else. Ties go to
// White unless `tie_breaks` says otherwise.
std::vector<PlayStep> Simulate(const BiddingGame& game, const Rational& budget1,
                               const Rational& budget2,
                               const std::vector<ScriptStep>& script,
                               const std::map<int, Player>& tie_breaks = {});

// Equilibrium path from the root; requires full tables.
std::vector<PlayStep> Play(const GridSolution& solution, const Dyadic& budget1);

}  // namespace scripbid

#endif  // SCRIPBID_GRID_SOLVER_H_
