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

#include <random>

#include "doctest.h"
#include "scripbid/fixtures.h"
#include "scripbid/grid_solver.h"
#include "scripbid/random_games.h"
#include "test_util.h"

using namespace scripbid;
using scripbid::testing::D;
using scripbid::testing::ErrorOf;
using scripbid::testing::P;
using scripbid::testing::PairOf;

namespace {

Rational R(const char* text) { return ParseRational(text); }

int FindLabel(const BiddingGame& g, const std::string& label) {
  for (int v = 0; v < g.num_nodes(); ++v) {
    if (g.label(v) == label) return v;
  }
  return -1;
}

// Every stored cell agrees with the cell its winner moves to.
void CheckTables(const GridSolution& sol) {
  const BiddingGame& g = sol.game();
  const std::int64_t n = sol.total_units();
  for (int v = 0; v < g.num_nodes(); ++v) {
    if (g.is_terminal(v) || !sol.has_row(v)) continue;
    for (std::int64_t c = 0; c <= n; ++c) {
      const GridCell& cell = sol.cell(v, c);
      REQUIRE(cell.bid1 <= c);
      REQUIRE(cell.bid2 <= n - c);
      bool white = sol.WhiteWins(v, cell.bid1, cell.bid2);
      REQUIRE((white ? Player::kWhite : Player::kBlack) == cell.winner);
      int next = white ? cell.child1 : cell.child2;
      std::int64_t post = white ? c - cell.bid1 : c + cell.bid2;
      REQUIRE(sol.Terminal(next, post) == cell.terminal);
    }
  }
}

}  // namespace

TEST_CASE("bad-monotonicity game") {
  BiddingGame g = GBad();
  GridSolution sol = FindLowerPspeGrid(g);
  CHECK(sol.unit() == D("1/32"));
  CHECK(PairOf(g, sol.outcome_map().At(D("13/16"))) == P(2, 1));
  std::vector<PlayStep> trace = Play(sol, D("13/16"));
  CHECK(trace.front().winner == Player::kWhite);
  CHECK(trace.front().bid1 >= R("3/16"));
  CHECK(PairOf(g, sol.outcome_map().At(Dyadic(1))) == P(10, 7));
  CheckTables(sol);
}

TEST_CASE("fixture outcomes at equal budgets") {
  BiddingGame two = GTwo();
  CHECK(PairOf(two, FindLowerPspeGrid(two).outcome_map().At(D("1/2"))) == P(5, 5));

  BiddingGame maj = GMaj();
  GridSolution sol = FindLowerPspeGrid(maj);
  CHECK(maj.utility(sol.outcome_map().At(D("1/2"))).u1 == 1);
  CHECK(maj.utility(sol.outcome_map().At(D("7/16"))).u1 == 0);
}

TEST_CASE("outcome of one auction") {
  BiddingGame g;
  int a = g.AddTerminal(3, 0), b = g.AddTerminal(0, 5);
  g.SetRoot(g.AddInternal({a, b}));
  g.Validate();
  GridSolution sol = FindLowerPspeGrid(g);
  CHECK(GetOutcome(sol, g.root(), D("1/2"), D("1/2"), D("1/2")) == a);
  CHECK(GetOutcome(sol, g.root(), D("1/2"), Dyadic(0), D("1/4")) == b);
  CHECK(ErrorOf([&] { GetOutcome(sol, g.root(), D("1/2"), D("1/32"), Dyadic(0)); }) ==
        ErrorCode::kOffGrid);
  CHECK(ErrorOf([&] { GetOutcome(sol, g.root(), D("1/4"), D("1/2"), Dyadic(0)); }) ==
        ErrorCode::kInfeasibleBid);

  // White pays 3/16 and moves to (1,0) holding 5/16.
  BiddingGame maj = GMaj();
  GridSolution ms = FindLowerPspeGrid(maj);
  int ten = FindLabel(maj, "(1,0)");
  CHECK(GetOutcome(ms, maj.root(), D("1/2"), D("3/16"), D("1/8")) ==
        ms.Terminal(ten, ms.UnitsOf(D("5/16"))));
}

TEST_CASE("scripted play of the majority game") {
  BiddingGame g = GMaj();
  std::vector<ScriptStep> script{
      {R("1/5"), R("3/20"), FindLabel(g, "(1,0)")},
      {R("7/50"), R("13/50"), FindLabel(g, "(1,1)")},
      {R("14/25"), R("11/25"), FindLabel(g, "(2,1)")},
  };
  std::vector<PlayStep> trace = Simulate(g, R("1/2"), R("1/2"), script);
  REQUIRE(trace.size() == 3);
  CHECK(trace[1].budget1 == R("3/10"));
  CHECK(trace[2].budget1 == R("14/25"));
  CHECK(trace[2].budget2 == R("11/25"));
  CHECK(trace[2].winner == Player::kWhite);
  CHECK(trace.back().next == FindLabel(g, "(2,1)"));
  CHECK(trace.back().budget1 - trace.back().bid1 == 0);
  CHECK(trace.back().budget2 + trace.back().bid1 == 1);

  std::vector<ScriptStep> greedy = script;
  greedy[0].bid1 = R("3/5");
  CHECK(ErrorOf([&] { Simulate(g, R("1/2"), R("1/2"), greedy); }) == ErrorCode::kInfeasibleBid);
  std::vector<ScriptStep> wrong_move = script;
  wrong_move[0].next = FindLabel(g, "(1,1)");
  CHECK(ErrorOf([&] { Simulate(g, R("1/2"), R("1/2"), wrong_move); }) ==
        ErrorCode::kInfeasibleBid);
  std::vector<ScriptStep> short_script(script.begin(), script.begin() + 2);
  CHECK(ErrorOf([&] { Simulate(g, R("1/2"), R("1/2"), short_script); }) ==
        ErrorCode::kWrongLength);
  std::vector<ScriptStep> long_script = script;
  long_script.push_back(script.back());
  CHECK(ErrorOf([&] { Simulate(g, R("1/2"), R("1/2"), long_script); }) ==
        ErrorCode::kWrongLength);
}

TEST_CASE("configuration errors") {
  BiddingGame g = GTwo();
  GridConfig odd;
  odd.epsilon = D("3/8");
  CHECK(ErrorOf([&] { FindLowerPspeGrid(g, odd); }) == ErrorCode::kInvalidSpec);
  GridConfig tiny;
  tiny.max_cells = 10;
  CHECK(ErrorOf([&] { FindLowerPspeGrid(g, tiny); }) == ErrorCode::kGridTooLarge);
  GridConfig negative;
  negative.discrete_total = -1;
  CHECK(ErrorOf([&] { FindLowerPspeGrid(g, negative); }) == ErrorCode::kInvalidSpec);
  GridSolution sol = FindLowerPspeGrid(g);
  CHECK(ErrorOf([&] { sol.UnitsOf(D("3/2")); }) == ErrorCode::kBudgetOutOfRange);
  CHECK(ErrorOf([&] { sol.UnitsOf(D("1/64")); }) == ErrorCode::kOffGrid);
  CHECK(ErrorOf([&] { Play(sol, D("1/64")); }) == ErrorCode::kOffGrid);
}

TEST_CASE("released tables cannot be replayed") {
  BiddingGame g = GTwo();
  GridConfig cfg;
  cfg.keep_tables = false;
  GridSolution sol = FindLowerPspeGrid(g, cfg);
  CHECK(sol.has_row(g.root()));
  CHECK(sol.outcome_map().cutoffs == FindLowerPspeGrid(g).outcome_map().cutoffs);
  CHECK(ErrorOf([&] { Play(sol, D("1/2")); }) == ErrorCode::kIncompleteTables);
}

TEST_CASE("play follows the tables") {
  std::mt19937_64 rng(5);
  RandomTreeOptions opts;
  opts.max_height = 4;
  opts.max_children = 3;
  for (int i = 0; i < 20; ++i) {
    BiddingGame g = RandomTree(rng, opts);
    GridSolution sol = FindLowerPspeGrid(g);
    CheckTables(sol);
    OutcomeMap map = sol.outcome_map();
    std::uniform_int_distribution<std::int64_t> pick(0, sol.total_units());
    for (int j = 0; j < 5; ++j) {
      Dyadic b = sol.BudgetOf(pick(rng));
      std::vector<PlayStep> trace = Play(sol, b);
      int end = trace.empty() ? g.root() : trace.back().next;
      CHECK(end == map.At(b));
      for (const PlayStep& s : trace) {
        CHECK(s.budget1 + s.budget2 == 1);
        CHECK(s.bid1 <= s.budget1);
        CHECK(s.bid2 <= s.budget2);
      }
    }
  }
}

TEST_CASE("map cutoffs sit on the coarse grid") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 30; ++i) {
    BiddingGame g = RandomTree(rng, {});
    OutcomeMap map = FindLowerPspeGrid(g).outcome_map();
    CHECK(map.cutoffs.front() == Dyadic(0));
    for (int j = 0; j < map.size(); ++j) {
      CHECK(map.cutoffs[j].scale() <= static_cast<unsigned>(g.height()));
      if (j > 0) CHECK(map.cutoffs[j - 1] < map.cutoffs[j]);
    }
  }
}

TEST_CASE("discrete budgets") {
  BiddingGame g = GTwo();
  GridConfig cfg;
  cfg.discrete_total = 8;
  GridSolution sol = FindLowerPspeGrid(g, cfg);
  CHECK(sol.discrete());
  CHECK(sol.total() == Dyadic(8));
  CHECK(sol.unit() == Dyadic(1));
  CheckTables(sol);
  OutcomeMap map = sol.outcome_map();
  CHECK(map.total == Dyadic(8));
  CHECK(PairOf(g, map.At(Dyadic(4))) == P(5, 5));
  CHECK(ErrorOf([&] { sol.UnitsOf(D("1/2")); }) == ErrorCode::kOffGrid);
}

TEST_CASE("thread count does not change the tables") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 8; ++i) {
    BiddingGame g = RandomDag(rng, 5, 4, 3);
    GridConfig one, many;
    many.threads = 4;
    GridSolution a = FindLowerPspeGrid(g, one), b = FindLowerPspeGrid(g, many);
    for (int v = 0; v < g.num_nodes(); ++v) {
      if (g.is_terminal(v)) continue;
      REQUIRE(a.has_row(v) == b.has_row(v));
      if (!a.has_row(v)) continue;
      for (std::int64_t c = 0; c <= a.total_units(); ++c) {
        const GridCell& x = a.cell(v, c);
        const GridCell& y = b.cell(v, c);
        CHECK(x.bid1 == y.bid1);
        CHECK(x.bid2 == y.bid2);
        CHECK(x.terminal == y.terminal);
      }
    }
  }
}

TEST_CASE("stair game with small integer budgets ends deep") {
  // Regression: with 15 chips the lower equilibrium reaches a deep leaf from
  // every split, the loser never getting enough to force a side exit.
  BiddingGame g = GK(4);
  GridConfig cfg;
  cfg.discrete_total = 15;
  GridSolution sol = FindLowerPspeGrid(g, cfg);
  CheckTables(sol);
  for (std::int64_t c = 0; c <= 15; ++c) {
    auto p = PairOf(g, sol.Terminal(g.root(), c));
    CHECK((p == P(7, 9) || p == P(9, 7)));
  }
}

TEST_CASE("tie map hands the contested round to Black") {
  BiddingGame g;
  int a = g.AddTerminal(3, 0), b = g.AddTerminal(0, 5);
  g.SetRoot(g.AddInternal({a, b}));
  g.Validate();
  GridConfig cfg;
  cfg.tie_breaks[g.root()] = Player::kBlack;
  GridSolution sol = FindLowerPspeGrid(g, cfg);
  CHECK(sol.outcome_map().At(D("1/2")) == b);
  CHECK(sol.outcome_map().At(D("5/8")) == a);
  CHECK(FindLowerPspeGrid(g).outcome_map().At(D("1/2")) == a);
}
