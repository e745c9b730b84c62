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

#include <algorithm>
#include <random>

#include "doctest.h"
#include "scripbid/analysis.h"
#include "scripbid/compilers.h"
#include "scripbid/fast_solver.h"
#include "scripbid/fixtures.h"
#include "scripbid/game_io.h"
#include "scripbid/grid_solver.h"
#include "scripbid/random_games.h"
#include "test_util.h"

using namespace scripbid;
using scripbid::testing::D;
using scripbid::testing::ErrorOf;
using scripbid::testing::P;
using scripbid::testing::PairOf;

namespace {

std::vector<std::int64_t> Ids(const BiddingGame& g, const std::vector<int>& nodes) {
  std::vector<std::int64_t> out;
  for (int v : nodes) out.push_back(g.external_id(v));
  return out;
}

BiddingGame ThreeWay() {
  BiddingGame g;
  int a = g.AddTerminal(1, 3), b = g.AddTerminal(2, 2), c = g.AddTerminal(3, 1);
  g.SetRoot(g.AddInternal({a, b, c}));
  g.Validate();
  return g;
}

BiddingGame SingleTerminal() {
  BiddingGame g;
  g.SetRoot(g.AddTerminal(3, 3));
  g.Validate();
  return g;
}

// Found by random search: a richer Black can end up worse off than any
// equilibrium allows at a poorer budget.
constexpr const char* kMonotoneCounterexample =
    R"({"root":0,"nodes":[{"id":0,"children":[1,2]},{"id":1,"children":[]},)"
    R"({"id":2,"children":[3,6]},{"id":3,"children":[4,5]},{"id":4,"children":[]},)"
    R"({"id":5,"children":[]},{"id":6,"children":[7,8]},{"id":7,"children":[]},)"
    R"({"id":8,"children":[]}],"terminals":{"1":[48,69],"4":[51,92],"5":[59,27],)"
    R"("7":[53,88],"8":[22,39]}})";

}  // namespace

TEST_CASE("equilibrium audit of the two-outcome game") {
  BiddingGame g = GTwo();
  GridSolution sol = FindLowerPspeGrid(g);
  CHECK(VerifyPspe(sol).pass());

  // White spends everything at equal budgets and settles for (2,2).
  GridSolution alt = sol;
  const std::int64_t half = alt.total_units() / 2;
  int t22 = g.IndexOf(1);
  GridCell& cell = alt.mutable_cell(g.root(), half);
  cell.bid1 = half;
  cell.bid2 = half;
  cell.winner = Player::kWhite;
  cell.child1 = t22;
  cell.child2 = t22;
  cell.terminal = t22;
  CHECK(VerifyPspe(alt).pass());
  CHECK(PairOf(g, alt.Terminal(g.root(), half)) == P(2, 2));

  // White moves to her worse leaf at y.
  GridSolution bad = sol;
  int y = g.IndexOf(3), t19 = g.IndexOf(5);
  GridCell& wrong = bad.mutable_cell(y, bad.total_units());
  REQUIRE(wrong.winner == Player::kWhite);
  wrong.child1 = t19;
  wrong.terminal = t19;
  AuditReport report = VerifyPspe(bad);
  CHECK_FALSE(report.pass());
  bool argmax = false;
  for (const Violation& v : report.violations) argmax |= v.expected == "argmax";
  CHECK(argmax);

  GridConfig cfg;
  cfg.keep_tables = false;
  GridSolution released = FindLowerPspeGrid(g, cfg);
  CHECK(ErrorOf([&] { VerifyPspe(released); }) == ErrorCode::kIncompleteTables);
}

TEST_CASE("equilibrium audit of every fixture") {
  for (const std::string& name : DefaultFixtureNames()) {
    if (name == "hgame") continue;
    BiddingGame g = Fixture(name);
    INFO(name);
    CHECK(VerifyPspe(FindLowerPspeGrid(g)).pass());
  }
}

TEST_CASE("equilibrium audit of random games") {
  std::mt19937_64 rng(101);
  RandomTreeOptions binary;
  binary.max_height = 5;
  for (int i = 0; i < 100; ++i) CHECK(VerifyPspe(FindLowerPspeGrid(RandomTree(rng, binary))).pass());
  RandomTreeOptions ternary;
  ternary.max_height = 4;
  ternary.max_children = 3;
  for (int i = 0; i < 50; ++i) {
    CHECK(VerifyPspe(FindLowerPspeGrid(RandomTree(rng, ternary))).pass());
  }
  GridConfig cfg;
  cfg.discrete_total = 9;
  for (int i = 0; i < 20; ++i) {
    CHECK(VerifyPspe(FindLowerPspeGrid(RandomTree(rng, binary), cfg)).pass());
  }
}

TEST_CASE("pareto audit") {
  BiddingGame bad = GBad();
  AuditReport report = CheckParetoOptimal(bad, FindLowerPspeGrid(bad).outcome_map());
  CHECK_FALSE(report.pass());
  bool found = false;
  for (const Violation& v : report.violations) {
    if (PairOf(bad, v.witnesses[0]) == P(2, 1) && PairOf(bad, v.witnesses[1]) == P(10, 7)) {
      found = true;
      CHECK(v.at == "B1=1/2^1");
    }
  }
  CHECK(found);

  BiddingGame one = SingleTerminal();
  CHECK(CheckParetoOptimal(one, FindLowerPspeGrid(one).outcome_map()).pass());
  for (const char* name : {"gtwo", "gmaj", "gk4", "centipede6"}) {
    BiddingGame g = Fixture(name);
    CHECK(CheckParetoOptimal(g, FindPspeFast(g).outcome_map()).pass());
  }
}

TEST_CASE("monotonicity audit") {
  BiddingGame bad = GBad();
  AuditReport report = CheckMonotone(bad, FindLowerPspeGrid(bad).outcome_map());
  CHECK_FALSE(report.pass());
  bool found = false;
  for (const Violation& v : report.violations) found |= v.found == "u2 7 -> 1 as B2 increases";
  CHECK(found);

  BiddingGame one = SingleTerminal();
  CHECK(CheckMonotone(one, FindLowerPspeGrid(one).outcome_map()).pass());
}

TEST_CASE("surjectivity audit") {
  BiddingGame three = ThreeWay();
  AuditReport report = CheckSurjective(three, FindLowerPspeGrid(three).outcome_map());
  CHECK(report.violation_count == 1);
  CHECK(PairOf(three, report.violations[0].witnesses[0]) == P(2, 2));

  BiddingGame one = SingleTerminal();
  CHECK(CheckSurjective(one, FindLowerPspeGrid(one).outcome_map()).pass());
}

TEST_CASE("fast-solver maps pass the structural audits") {
  std::mt19937_64 rng(55);
  RandomTreeOptions opts;
  opts.max_height = 6;
  for (int i = 0; i < 50; ++i) {
    BiddingGame g = RandomTree(rng, opts);
    OutcomeMap map = FindPspeFast(g).outcome_map();
    CHECK(CheckParetoOptimal(g, map).pass());
    CHECK(CheckMonotone(g, map).pass());
    CHECK(CheckSurjective(g, map).pass());
  }
}

TEST_CASE("budget interval audit") {
  for (const std::string& name : DefaultFixtureNames()) {
    if (name == "hgame") continue;
    BiddingGame g = Fixture(name);
    GridConfig fine, coarse;
    fine.epsilon = Dyadic::Pow2(-(g.height() + 3));
    coarse.epsilon = Dyadic::Pow2(-(g.height() + 2));
    INFO(name);
    CHECK(CheckBudgetIntervals(g, FindLowerPspeGrid(g, fine).outcome_map(),
                               FindLowerPspeGrid(g, coarse).outcome_map())
              .pass());
  }

  BiddingGame g;
  int a = g.AddTerminal(3, 0), b = g.AddTerminal(0, 5);
  g.SetRoot(g.AddInternal({a, b}));
  g.Validate();
  OutcomeMap map = FindLowerPspeGrid(g).outcome_map();
  CHECK(map.cutoffs == std::vector<Dyadic>{Dyadic(0), D("1/2")});
  CHECK(map.outcomes == std::vector<int>{b, a});

  OutcomeMap jittered = map;
  jittered.cutoffs[1] = D("9/16");
  CHECK_FALSE(CheckBudgetIntervals(g, jittered, map).pass());
}

TEST_CASE("prices along the equal-budget path") {
  SsaSpec spec;
  spec.k = 6;
  spec.valuation = AdditiveValuation{std::vector<std::int64_t>(6, 1),
                                     std::vector<std::int64_t>(6, 1)};
  BiddingGame g = CompileAdditive(spec);
  GridSolution sol = FindLowerPspeGrid(g);
  // Frozen: the middle prices fall before the last ones rise.
  std::vector<Dyadic> prices = PriceTrajectory(sol, D("1/2"));
  CHECK(prices == std::vector<Dyadic>{D("1/256"), D("23/128"), D("11/64"), D("3/32"),
                                      D("1/16"), D("1/8")});
  CHECK_FALSE(std::is_sorted(prices.begin(), prices.end()));

  BiddingGame one;
  int a = one.AddTerminal(3, 0), b = one.AddTerminal(0, 5);
  one.SetRoot(one.AddInternal({a, b}));
  one.Validate();
  GridSolution s1 = FindLowerPspeGrid(one);
  CHECK(PriceTrajectory(s1, D("1/2")).size() == 1);
  CHECK(ErrorOf([&] { PriceTrajectory(s1, D("1/1024")); }) == ErrorCode::kOffGrid);
}

TEST_CASE("welfare-maximal interval") {
  BiddingGame g = GBad();
  OutcomeMap map = FindLowerPspeGrid(g).outcome_map();
  CHECK(PairOf(g, map.outcomes[MaxWelfareInterval(g, map)]) == P(10, 7));
  // Equal welfare keeps the first interval.
  BiddingGame two = GTwo();
  OutcomeMap flat = FindLowerPspeGrid(two).outcome_map();
  CHECK(MaxWelfareInterval(two, flat) == 0);
}

TEST_CASE("all equilibrium outcomes of the two-outcome game") {
  BiddingGame g = GTwo();
  PspeOutcomeSets sets = EnumeratePspeOutcomes(g, 8);
  CHECK(sets.total == 8);
  REQUIRE(sets.outcomes.size() == 9);
  CHECK(Ids(g, sets.outcomes[4]) == std::vector<std::int64_t>{1, 4});
  CHECK(Ids(g, sets.outcomes[0]) == std::vector<std::int64_t>{5});
  CHECK(Ids(g, sets.outcomes[8]) == std::vector<std::int64_t>{6});
  // The lower equilibrium is one of the enumerated rows.
  GridConfig cfg;
  cfg.discrete_total = 8;
  GridSolution sol = FindLowerPspeGrid(g, cfg);
  std::vector<int> lower;
  for (std::int64_t c = 0; c <= 8; ++c) lower.push_back(sol.Terminal(g.root(), c));
  CHECK(std::find(sets.rows.begin(), sets.rows.end(), lower) != sets.rows.end());
  CHECK(CheckGameMonotone(g, sets).pass());
}

TEST_CASE("equilibrium set can shrink for the richer player") {
  BiddingGame g = ParseGameJson(kMonotoneCounterexample);
  PspeOutcomeSets sets = EnumeratePspeOutcomes(g, 8);
  CHECK(Ids(g, sets.outcomes[2]) == std::vector<std::int64_t>{7});
  CHECK(Ids(g, sets.outcomes[3]) == std::vector<std::int64_t>{4, 7});
  AuditReport report = CheckGameMonotone(g, sets);
  CHECK(report.violation_count == 2);
  bool found = false;
  for (const Violation& v : report.violations) {
    found |= v.at == "budgets 3 < 2" && v.found == "(51,92) beats (53,88)";
  }
  CHECK(found);
}

TEST_CASE("enumeration cap") {
  BiddingGame g = GTwo();
  CHECK(EnumeratePspeOutcomes(g, 16).root_rows == 16);
  CHECK(ErrorOf([&] { EnumeratePspeOutcomes(g, 16, 8); }) == ErrorCode::kEnumerationTooLarge);
}

TEST_CASE("stair game audits with integer budgets") {
  BiddingGame g = GK(4);
  GridConfig cfg;
  cfg.discrete_total = 64;
  GridSolution sol = FindLowerPspeGrid(g, cfg);
  CHECK(CheckParetoOptimal(g, sol.outcome_map()).pass());
  CHECK(VerifyPspe(sol).pass());
}

TEST_CASE("report json") {
  BiddingGame bad = GBad();
  OutcomeMap map = FindLowerPspeGrid(bad).outcome_map();
  std::string json = ReportsToJson(bad, {CheckParetoOptimal(bad, map), CheckSurjective(bad, map)});
  CHECK(json.rfind("{\n  \"pass\": false,\n  \"reports\": [", 0) == 0);
  CHECK(json.find("\"property\": \"pareto\"") != std::string::npos);
  CHECK(json.find("\"violation_count\"") != std::string::npos);
  CHECK(json.find("\"witnesses\"") != std::string::npos);
  CHECK(json.find("\"expected\": \"Pareto-efficient outcome\"") != std::string::npos);
}
