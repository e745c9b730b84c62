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

#include "scripbid/grid_solver.h"

#include <algorithm>
#include <thread>

#include "scripbid/error.h"

namespace scripbid {
namespace {

struct Best {
  int child = -1;     // position in the child list
  int terminal = -1;
};

// Per-node view of the children's rows: the best child for each player at
// every White budget, plus prefix/suffix argmax tables over those.
class NodeContext {
 public:
  NodeContext(const BiddingGame& game, int node,
              const std::vector<std::vector<GridCell>>& rows, std::int64_t n)
      : game_(game) {
    const auto& ch = game.children(node);
    best1_.resize(n + 1);
    best2_.resize(n + 1);
    for (std::int64_t x = 0; x <= n; ++x) {
      for (int k = 0; k < static_cast<int>(ch.size()); ++k) {
        int t = game.is_terminal(ch[k]) ? ch[k] : rows[ch[k]][x].terminal;
        if (best1_[x].terminal < 0 ||
            game.rank(Player::kWhite, t) > game.rank(Player::kWhite, best1_[x].terminal)) {
          best1_[x] = {k, t};
        }
        if (best2_[x].terminal < 0 ||
            game.rank(Player::kBlack, t) > game.rank(Player::kBlack, best2_[x].terminal)) {
          best2_[x] = {k, t};
        }
      }
    }
    // prefix1_[r]: x in [0, r] with the best White rank, largest x on ties.
    prefix1_.resize(n + 1);
    for (std::int64_t x = 0; x <= n; ++x) {
      prefix1_[x] = x;
      if (x > 0 && Rank1(prefix1_[x - 1]) > Rank1(x)) prefix1_[x] = prefix1_[x - 1];
    }
    // suffix2_[l]: y in [l, n] with the best Black rank, smallest y on ties.
    suffix2_.resize(n + 1);
    for (std::int64_t y = n; y >= 0; --y) {
      suffix2_[y] = y;
      if (y < n && Rank2(suffix2_[y + 1]) > Rank2(y)) suffix2_[y] = suffix2_[y + 1];
    }
  }

  int Rank1(std::int64_t x) const { return game_.rank(Player::kWhite, best1_[x].terminal); }
  int Rank2(std::int64_t y) const { return game_.rank(Player::kBlack, best2_[y].terminal); }
  const Best& best1(std::int64_t x) const { return best1_[x]; }
  const Best& best2(std::int64_t y) const { return best2_[y]; }
  std::int64_t prefix1(std::int64_t r) const { return prefix1_[r]; }
  std::int64_t suffix2(std::int64_t l) const { return suffix2_[l]; }

 private:
  const BiddingGame& game_;
  std::vector<Best> best1_;
  std::vector<Best> best2_;
  std::vector<std::int64_t> prefix1_;
  std::vector<std::int64_t> suffix2_;
};

// Ascending better-reply dynamics from (0,0) at White budget c. Each step
// lets the loser overbid, then the winner re-bid or drop; every move goes to
// the lowest bid reaching the mover's best attainable outcome.
GridCell SolveCell(const NodeContext& ctx, const BiddingGame& game, int node,
                   std::int64_t c, std::int64_t n, bool white_ties) {
  std::int64_t b1 = 0, b2 = 0;
  const std::int64_t cap = 4 * (n + 2) + 16;
  const auto& ch = game.children(node);
  for (std::int64_t iter = 0;; ++iter) {
    if (iter > cap) {
      throw GameError(ErrorCode::kNonConvergence,
                      "auction at node " + std::to_string(game.external_id(node)));
    }
    const bool white_wins = white_ties ? b1 >= b2 : b1 > b2;
    // Smallest winning bid for each player against the other's current bid.
    const std::int64_t win1 = white_ties ? b2 : b2 + 1;
    const std::int64_t win2 = white_ties ? b1 + 1 : b1;
    if (white_wins) {
      const int t = ctx.best1(c - b1).terminal;
      const int r1 = game.rank(Player::kWhite, t), r2 = game.rank(Player::kBlack, t);
      if (win2 <= n - c) {
        std::int64_t y = ctx.suffix2(c + win2);
        if (ctx.Rank2(y) > r2) {
          b2 = y - c;
          continue;
        }
      }
      if (win1 <= c) {
        std::int64_t x = ctx.prefix1(c - win1);
        if (ctx.Rank1(x) > r1) {
          b1 = c - x;
          continue;
        }
      }
      const bool can_drop = white_ties ? b2 > 0 : true;
      if (can_drop && game.rank(Player::kWhite, ctx.best2(c + b2).terminal) > r1) {
        b1 = 0;
        continue;
      }
      GridCell cell;
      cell.bid1 = b1;
      cell.bid2 = b2;
      cell.terminal = t;
      cell.winner = Player::kWhite;
      cell.child1 = ch[ctx.best1(c - b1).child];
      cell.child2 = ch[ctx.best2(c + b2).child];
      return cell;
    }
    const int t = ctx.best2(c + b2).terminal;
    const int r1 = game.rank(Player::kWhite, t), r2 = game.rank(Player::kBlack, t);
    if (win1 <= c) {
      std::int64_t x = ctx.prefix1(c - win1);
      if (ctx.Rank1(x) > r1) {
        b1 = c - x;
        continue;
      }
    }
    if (win2 <= n - c) {
      std::int64_t y = ctx.suffix2(c + win2);
      if (ctx.Rank2(y) > r2) {
        b2 = y - c;
        continue;
      }
    }
    const bool can_drop = white_ties ? true : b1 > 0;
    if (can_drop && game.rank(Player::kBlack, ctx.best1(c - b1).terminal) > r2) {
      b2 = 0;
      continue;
    }
    GridCell cell;
    cell.bid1 = b1;
    cell.bid2 = b2;
    cell.terminal = t;
    cell.winner = Player::kBlack;
    cell.child1 = ch[ctx.best1(c - b1).child];
    cell.child2 = ch[ctx.best2(c + b2).child];
    return cell;
  }
}

}  // namespace

std::int64_t GridSolution::UnitsOf(const Dyadic& value) const {
  if (value < Dyadic(0) || value > total()) {
    throw GameError(ErrorCode::kBudgetOutOfRange, value.ToString());
  }
  const unsigned scale = discrete_ ? 0 : unit_.scale();
  if (value.scale() > scale) {
    throw GameError(ErrorCode::kOffGrid, value.ToString() + " is not on the budget grid");
  }
  return value.Units64At(scale);
}

std::vector<int> GridSolution::RootRow() const {
  std::vector<int> row(total_units_ + 1);
  for (std::int64_t c = 0; c <= total_units_; ++c) row[c] = Terminal(game_->root(), c);
  return row;
}

OutcomeMap GridSolution::outcome_map() const { return CompressRow(RootRow(), unit_, total()); }

GridSolution FindLowerPspeGrid(const BiddingGame& game, const GridConfig& cfg) {
  if (!game.validated()) throw GameError(ErrorCode::kInvalidSpec, "game is not validated");
  GridSolution sol;
  sol.game_ = &game;
  if (cfg.discrete_total) {
    if (*cfg.discrete_total < 0) throw GameError(ErrorCode::kInvalidSpec, "M must be >= 0");
    sol.discrete_ = true;
    sol.unit_ = Dyadic(1);
    sol.total_units_ = *cfg.discrete_total;
  } else {
    Dyadic eps = cfg.epsilon.value_or(Dyadic::Pow2(-(game.height() + 2)));
    if (eps.numerator() != 1 || eps.scale() == 0) {
      throw GameError(ErrorCode::kInvalidSpec, "epsilon must be 2^-k with k >= 1");
    }
    if (eps.scale() > 40) throw GameError(ErrorCode::kGridTooLarge, "epsilon below 2^-40");
    sol.unit_ = eps;
    sol.total_units_ = std::int64_t{1} << eps.scale();
  }
  const std::int64_t n = sol.total_units_;
  std::int64_t internal = 0;
  for (int v : game.post_order()) internal += game.is_terminal(v) ? 0 : 1;
  if (n + 1 > cfg.max_cells || (cfg.keep_tables && internal * (n + 1) > cfg.max_cells)) {
    throw GameError(ErrorCode::kGridTooLarge,
                    std::to_string(internal) + " nodes x " + std::to_string(n + 1) + " budgets");
  }

  sol.tie_winner_.assign(game.num_nodes(), Player::kWhite);
  for (const auto& [node, p] : cfg.tie_breaks) {
    if (node >= 0 && node < game.num_nodes()) sol.tie_winner_[node] = p;
  }
  sol.rows_.assign(game.num_nodes(), {});

  std::vector<int> pending_parents(game.num_nodes(), 0);
  for (int v : game.post_order()) {
    for (int c : game.children(v)) ++pending_parents[c];
  }

  for (int v : game.post_order()) {
    if (game.is_terminal(v)) continue;
    NodeContext ctx(game, v, sol.rows_, n);
    const bool white_ties = sol.tie_winner_[v] == Player::kWhite;
    std::vector<GridCell> row(n + 1);
    auto work = [&](std::int64_t lo, std::int64_t hi) {
      for (std::int64_t c = lo; c < hi; ++c) row[c] = SolveCell(ctx, game, v, c, n, white_ties);
    };
    const int threads = std::max(1, cfg.threads);
    if (threads == 1 || n < 256) {
      work(0, n + 1);
    } else {
      std::vector<std::thread> pool;
      std::vector<std::exception_ptr> errors(threads);
      const std::int64_t chunk = (n + threads) / threads;
      for (int k = 0; k < threads; ++k) {
        std::int64_t lo = k * chunk, hi = std::min<std::int64_t>(n + 1, lo + chunk);
        pool.emplace_back([&, k, lo, hi] {
          try {
            if (lo < hi) work(lo, hi);
          } catch (...) {
            errors[k] = std::current_exception();
          }
        });
      }
      for (auto& t : pool) t.join();
      for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
      }
    }
    sol.rows_[v] = std::move(row);
    if (!cfg.keep_tables) {
      for (int c : game.children(v)) {
        if (--pending_parents[c] == 0 && c != game.root()) {
          std::vector<GridCell>().swap(sol.rows_[c]);
        }
      }
    }
  }
  return sol;
}

int GetOutcome(const GridSolution& sol, int node, const Dyadic& budget1, const Dyadic& b1,
               const Dyadic& b2) {
  const BiddingGame& game = sol.game();
  if (game.is_terminal(node)) return node;
  const std::int64_t n = sol.total_units();
  const std::int64_t c = sol.UnitsOf(budget1);
  const std::int64_t x1 = sol.UnitsOf(b1), x2 = sol.UnitsOf(b2);
  if (x1 > c || x2 > n - c) throw GameError(ErrorCode::kInfeasibleBid, "bid exceeds budget");
  const bool white = sol.WhiteWins(node, x1, x2);
  const Player p = white ? Player::kWhite : Player::kBlack;
  const std::int64_t post = white ? c - x1 : c + x2;
  int best = -1;
  for (int child : game.children(node)) {
    if (!game.is_terminal(child) && !sol.has_row(child)) {
      throw GameError(ErrorCode::kIncompleteTables, "child row was released");
    }
    int t = sol.Terminal(child, post);
    if (best < 0 || game.rank(p, t) > game.rank(p, best)) best = t;
  }
  return best;
}

std::vector<PlayStep> Simulate(const BiddingGame& game, const Rational& budget1,
                               const Rational& budget2, const std::vector<ScriptStep>& script,
                               const std::map<int, Player>& tie_breaks) {
  std::vector<PlayStep> trace;
  int node = game.root();
  Rational w = budget1, b = budget2;
  for (const ScriptStep& step : script) {
    if (game.is_terminal(node)) {
      throw GameError(ErrorCode::kWrongLength, "script continues past a terminal");
    }
    if (step.bid1 < 0 || step.bid2 < 0 || step.bid1 > w || step.bid2 > b) {
      throw GameError(ErrorCode::kInfeasibleBid, "bid outside [0, budget]");
    }
    const auto& ch = game.children(node);
    if (std::find(ch.begin(), ch.end(), step.next) == ch.end()) {
      throw GameError(ErrorCode::kInfeasibleBid, "next state is not a move");
    }
    auto tie = tie_breaks.find(node);
    const bool white_ties = tie == tie_breaks.end() || tie->second == Player::kWhite;
    const bool white = white_ties ? step.bid1 >= step.bid2 : step.bid1 > step.bid2;
    PlayStep out{node, w, b, step.bid1, step.bid2, white ? Player::kWhite : Player::kBlack,
                 step.next};
    if (white) {
      w -= step.bid1;
      b += step.bid1;
    } else {
      b -= step.bid2;
      w += step.bid2;
    }
    trace.push_back(out);
    node = step.next;
  }
  if (!game.is_terminal(node)) throw GameError(ErrorCode::kWrongLength, "script ends early");
  return trace;
}

std::vector<PlayStep> Play(const GridSolution& sol, const Dyadic& budget1) {
  const BiddingGame& game = sol.game();
  std::int64_t c = sol.UnitsOf(budget1);
  const std::int64_t n = sol.total_units();
  std::vector<PlayStep> trace;
  int node = game.root();
  while (!game.is_terminal(node)) {
    if (!sol.has_row(node)) throw GameError(ErrorCode::kIncompleteTables, "tables were released");
    const GridCell& cell = sol.cell(node, c);
    PlayStep step;
    step.node = node;
    step.budget1 = sol.BudgetOf(c).ToRational();
    step.budget2 = sol.BudgetOf(n - c).ToRational();
    step.bid1 = sol.BudgetOf(cell.bid1).ToRational();
    step.bid2 = sol.BudgetOf(cell.bid2).ToRational();
    step.winner = cell.winner;
    step.next = cell.winner == Player::kWhite ? cell.child1 : cell.child2;
    c = cell.winner == Player::kWhite ? c - cell.bid1 : c + cell.bid2;
    trace.push_back(step);
    node = step.next;
  }
  return trace;
}

}  // namespace scripbid
