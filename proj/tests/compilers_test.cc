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

#include <functional>
#include <map>
#include <numeric>
#include <random>

#include "doctest.h"
#include "scripbid/compilers.h"
#include "scripbid/error.h"
#include "scripbid/fast_solver.h"
#include "scripbid/fixtures.h"
#include "scripbid/game_io.h"
#include "scripbid/grid_solver.h"
#include "test_util.h"

using namespace scripbid;
using scripbid::testing::P;
using scripbid::testing::PairOf;
using scripbid::testing::PairSet;
using scripbid::testing::UtilityRows;

namespace {

SsaSpec Additive(std::vector<std::int64_t> w, std::vector<std::int64_t> b) {
  SsaSpec spec;
  spec.k = static_cast<int>(w.size());
  spec.valuation = AdditiveValuation{std::move(w), std::move(b)};
  return spec;
}

// Node count per depth; every path to a node has the same length here.
std::map<int, int> LevelSizes(const BiddingGame& g) {
  std::vector<int> depth(g.num_nodes(), -1);
  depth[g.root()] = 0;
  std::vector<int> order(g.post_order().rbegin(), g.post_order().rend());
  for (int v : order) {
    for (int c : g.children(v)) depth[c] = depth[v] + 1;
  }
  std::map<int, int> sizes;
  for (int v : g.post_order()) ++sizes[depth[v]];
  return sizes;
}

std::multiset<scripbid::testing::Pair> LeafPairs(const BiddingGame& g) {
  std::multiset<scripbid::testing::Pair> out;
  std::function<void(int)> walk = [&](int v) {
    if (g.is_terminal(v)) {
      out.insert(PairOf(g, v));
      return;
    }
    for (int c : g.children(v)) walk(c);
  };
  walk(g.root());
  return out;
}

}  // namespace

TEST_CASE("naive compiler on tiny auctions") {
  SUBCASE("no items") {
    BiddingGame g = CompileNaive(Additive({}, {}));
    CHECK(g.height() == 0);
    CHECK(PairOf(g, g.root()) == P(0, 0));
  }
  SUBCASE("one item") {
    BiddingGame g = CompileNaive(Additive({3}, {5}));
    CHECK(g.height() == 1);
    CHECK(PairOf(g, g.children(g.root())[0]) == P(3, 0));
    CHECK(PairOf(g, g.children(g.root())[1]) == P(0, 5));
  }
  SUBCASE("three items, majority wins") {
    SsaSpec spec;
    spec.k = 3;
    TableValuation t;
    for (int mask = 0; mask < 8; ++mask) {
      // Each table is indexed by the holder's own bundle.
      int own = __builtin_popcount(mask);
      t.white.push_back(own >= 2 ? 1 : 0);
      t.black.push_back(own >= 2 ? 1 : 0);
    }
    spec.valuation = t;
    BiddingGame g = CompileNaive(spec);
    CHECK(g.terminals().size() == 8);
    CHECK(g.is_tree());
    // Same equilibrium map as the merged-state drawing.
    BiddingGame maj = GMaj();
    CHECK(UtilityRows(g, FindLowerPspeGrid(g).outcome_map()) ==
          UtilityRows(maj, FindLowerPspeGrid(maj).outcome_map()));
  }
  CHECK_THROWS_AS(CompileNaive(Additive(std::vector<std::int64_t>(21, 1),
                                        std::vector<std::int64_t>(21, 1))),
                  GameError);
}

TEST_CASE("additive compiler merges equal totals") {
  SUBCASE("five identical items") {
    BiddingGame g = CompileAdditive(Additive({1, 1, 1, 1, 1}, {1, 1, 1, 1, 1}));
    CHECK(g.num_nodes() == 21);
    for (auto [level, count] : LevelSizes(g)) CHECK(count == level + 1);
  }
  SUBCASE("no items") {
    BiddingGame g = CompileAdditive(Additive({}, {}));
    CHECK(g.num_nodes() == 1);
    CHECK(PairOf(g, g.root()) == P(0, 0));
  }
  SUBCASE("different partial allocations share a state") {
    // After two items, White holding {1,2} is worth 4 to her; so is holding
    // item 3 alone after three items.
    BiddingGame g = CompileAdditive(Additive({2, 2, 4, 3}, {1, 1, 1, 1}));
    BiddingGame naive = CompileNaive(Additive({2, 2, 4, 3}, {1, 1, 1, 1}));
    CHECK(g.num_nodes() < naive.num_nodes());
  }
  CHECK_THROWS_AS(CompileAdditive(Additive({-1}, {1})), GameError);
}

TEST_CASE("additive state count stays within the value-grid bound") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::int64_t> v(0, 6);
  for (int i = 0; i < 60; ++i) {
    int k = 1 + i % 9;
    std::vector<std::int64_t> w, b;
    for (int j = 0; j < k; ++j) {
      w.push_back(v(rng));
      b.push_back(v(rng));
    }
    std::int64_t vw = 0, vb = 0;
    for (int j = 0; j < k; ++j) {
      vw += w[j];
      vb += b[j];
    }
    BiddingGame g = CompileAdditive(Additive(w, b));
    for (auto [level, count] : LevelSizes(g)) CHECK(count <= (vw + 1) * (vb + 1));
  }
}

TEST_CASE("naive and additive compilers agree after solving") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<std::int64_t> v(0, 5);
  for (int i = 0; i < 40; ++i) {
    int k = 1 + i % 6;
    std::vector<std::int64_t> w, b;
    for (int j = 0; j < k; ++j) {
      w.push_back(v(rng));
      b.push_back(v(rng));
    }
    SsaSpec spec = Additive(w, b);
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    spec.order = order;
    BiddingGame naive = CompileNaive(spec);
    BiddingGame merged = CompileAdditive(spec);
    CHECK(UtilityRows(naive, FindLowerPspeGrid(naive).outcome_map()) ==
          UtilityRows(merged, FindLowerPspeGrid(merged).outcome_map()));
  }
}

TEST_CASE("multi-weight compiler") {
  SUBCASE("two dimensions reading one coordinate each match additive") {
    std::vector<std::int64_t> w{2, 0, 3}, b{1, 4, 1};
    MultiWeightValuation mw;
    for (int j = 0; j < 3; ++j) mw.weights.push_back({w[j], b[j]});
    for (std::int64_t x = 0; x <= 5; ++x) {
      for (std::int64_t y = 0; y <= 6; ++y) {
        mw.f_white[{x, y}] = x;
        mw.f_black[{x, y}] = y;
      }
    }
    SsaSpec spec;
    spec.k = 3;
    spec.valuation = mw;
    BiddingGame multi = CompileMultiWeight(spec);
    BiddingGame add = CompileAdditive(Additive(w, b));
    CHECK(UtilityRows(multi, FindLowerPspeGrid(multi).outcome_map()) ==
          UtilityRows(add, FindLowerPspeGrid(add).outcome_map()));
  }
  SUBCASE("zero weights collapse to a chain") {
    MultiWeightValuation mw;
    mw.weights = {{0}, {0}, {0}};
    mw.f_white[{0}] = 1;
    mw.f_black[{0}] = 1;
    SsaSpec spec;
    spec.k = 3;
    spec.valuation = mw;
    BiddingGame g = CompileMultiWeight(spec);
    CHECK(g.num_nodes() == 4);
    CHECK(g.terminals().size() == 1);
  }
  SUBCASE("weights 1 and 2 on own sums") {
    MultiWeightValuation mw;
    mw.weights = {{1}, {2}};
    for (std::int64_t s = 0; s <= 3; ++s) {
      mw.f_white[{s}] = s;
      mw.f_black[{s}] = s;
    }
    SsaSpec spec;
    spec.k = 2;
    spec.valuation = mw;
    BiddingGame g = CompileMultiWeight(spec);
    CHECK(PairSet(g, g.terminals()) == std::set{P(3, 0), P(1, 2), P(2, 1), P(0, 3)});
  }
  SUBCASE("missing table entry") {
    MultiWeightValuation mw;
    mw.weights = {{1}};
    mw.f_white[{0}] = 0;
    mw.f_black[{0}] = 0;
    SsaSpec spec;
    spec.k = 1;
    spec.valuation = mw;
    CHECK_THROWS_AS(CompileMultiWeight(spec), GameError);
  }
}

TEST_CASE("single-peaked voting keeps contested coordinates") {
  SinglePeakedResult same = CompileSinglePeaked({1, 0, 1}, {1, 0, 1}, {1, 1, 1}, {1, 1, 1});
  CHECK(same.spec.k == 0);
  CHECK(same.fixed == std::vector<int>{1, 0, 1});

  SinglePeakedResult one = CompileSinglePeaked({1, 0, 1}, {0, 0, 1}, {1, 1, 1}, {1, 1, 1});
  CHECK(one.spec.k == 1);
  CHECK(one.coordinates == std::vector<int>{0});

  SinglePeakedResult three = CompileSinglePeaked({1, 1, 0}, {0, 0, 1}, {5, 6, 7}, {1, 2, 3});
  CHECK(three.spec.k == 3);
  const auto& add = std::get<AdditiveValuation>(three.spec.valuation);
  CHECK(add.white == std::vector<std::int64_t>{5, 6, 7});
  CHECK(add.black == std::vector<std::int64_t>{1, 2, 3});
}

TEST_CASE("bargaining compiler walks the lattice") {
  BiddingGame g = CompileBargaining({{{0, 3}, {1, 2}, {2, 1}, {3, 0}}});
  CHECK(g.height() == 3);
  CHECK(g.is_binary());
  CHECK(PairSet(g, g.terminals()) == std::set{P(0, 3), P(1, 2), P(2, 1), P(3, 0)});

  BiddingGame round = CompileBargaining({{{1, 0}, {0, 1}}});
  CHECK(round.height() == 1);
  CHECK(round.children(round.root()).size() == 2);

  CHECK_THROWS_AS(CompileBargaining({}), GameError);
}

TEST_CASE("equal budgets split a linear frontier evenly") {
  for (int n = 1; n <= 16; ++n) {
    BiddingGame g = CompileBargaining(LinearFrontier(n));
    FastSolution sol = FindPspeFast(g);
    int t = sol.Query(Dyadic(1, 1));
    Rational gap = g.utility(t).u1 - g.utility(t).u2;
    CHECK(boost::multiprecision::abs(gap) <= 1);
  }
}

TEST_CASE("binary expansion") {
  BiddingGame two = GTwo();
  CHECK(DumpGameJson(ExpandToBinary(two)) == DumpGameJson(two));

  BiddingGame wide;
  int a = wide.AddTerminal(1, 3), b = wide.AddTerminal(2, 2), c = wide.AddTerminal(3, 1);
  wide.SetRoot(wide.AddInternal({a, b, c}));
  wide.Validate();
  BiddingGame bin = ExpandToBinary(wide);
  CHECK(bin.is_binary());
  CHECK(bin.num_nodes() == wide.num_nodes() + 1);
  CHECK(bin.height() == 2);

  BiddingGame bad = GBad();
  BiddingGame bad2 = ExpandToBinary(bad);
  CHECK(bad2.is_binary());
  CHECK(LeafPairs(bad2) == LeafPairs(bad));
}

TEST_CASE("balanced padding") {
  BiddingGame maj = PadToBalanced(GMaj());
  CHECK(maj.height() == 3);
  CHECK(maj.terminals().size() == 8);
  CHECK(maj.is_tree());

  BiddingGame leaf;
  leaf.SetRoot(leaf.AddTerminal(4, 4));
  leaf.Validate();
  CHECK(DumpGameJson(PadToBalanced(leaf)) == DumpGameJson(leaf));

  BiddingGame full = CompileNaive(Additive({1, 2}, {2, 1}));
  CHECK(LeafPairs(PadToBalanced(full)) == LeafPairs(full));

  for (const char* name : {"gmaj", "gtwo", "gk4", "centipede4"}) {
    BiddingGame g = Fixture(name);
    BiddingGame padded = PadToBalanced(g);
    CHECK(UtilityRows(g, FindLowerPspeGrid(g).outcome_map()) ==
          UtilityRows(padded, FindLowerPspeGrid(padded).outcome_map()));
  }
  CHECK_THROWS_AS(PadToBalanced(GBad()), GameError);
}

TEST_CASE("ssa json") {
  SsaSpec spec = ParseSsaJson(
      R"({"k": 2, "order": [2, 1], "valuation": {"type": "additive", "values": [[1, 2], [3, 4]]}})");
  CHECK(spec.order == std::vector<int>{1, 0});
  CHECK(BundleValue(spec, Player::kWhite, 0b11) == 3);
  CHECK(BundleValue(spec, Player::kBlack, 0b10) == 3);
  CHECK_THROWS_AS(ParseSsaJson(R"({"k": 1})"), GameError);
}
