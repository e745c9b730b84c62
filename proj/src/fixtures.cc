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

#include "scripbid/fixtures.h"

#include <map>

#include "scripbid/error.h"

namespace scripbid {

BiddingGame GMaj() {
  BiddingGame game;
  std::map<std::pair<int, int>, int> index;
  // Decided states first so internal nodes can reference them.
  for (int a = 0; a <= 2; ++a) {
    for (int b = 0; b <= 2; ++b) {
      if (a == 2 && b == 2) continue;
      std::string label = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
      if (a == 2) {
        index[{a, b}] = game.AddTerminal(1, 0, label);
      } else if (b == 2) {
        index[{a, b}] = game.AddTerminal(0, 1, label);
      } else {
        index[{a, b}] = game.AddInternal({}, label);
      }
    }
  }
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      game.SetChildren(index[{a, b}], {index[{a + 1, b}], index[{a, b + 1}]});
    }
  }
  game.SetRoot(index[{0, 0}]);
  game.Validate();
  return game;
}

BiddingGame GBad() {
  BiddingGame game;
  int s0 = game.AddInternal({}, "s0");
  int t18 = game.AddTerminal(1, 8);
  int t21 = game.AddTerminal(2, 1);
  int x = game.AddInternal({}, "x");
  int y = game.AddInternal({}, "y");
  int t09a = game.AddTerminal(0, 9);
  int t09b = game.AddTerminal(0, 9);
  int t107 = game.AddTerminal(10, 7);
  game.SetChildren(s0, {t18, t21, x});
  game.SetChildren(x, {y, t09a});
  game.SetChildren(y, {t09b, t107});
  game.SetRoot(s0);
  game.Validate();
  return game;
}

BiddingGame GTwo() {
  BiddingGame game;
  int s0 = game.AddInternal({}, "s0");
  int t22 = game.AddTerminal(2, 2);
  int x = game.AddInternal({}, "x");
  int y = game.AddInternal({}, "y");
  int t55 = game.AddTerminal(5, 5);
  int t19 = game.AddTerminal(1, 9);
  int t91 = game.AddTerminal(9, 1);
  game.SetChildren(s0, {t22, x});
  game.SetChildren(x, {y, t55});
  game.SetChildren(y, {t19, t91});
  game.SetRoot(s0);
  game.Validate();
  return game;
}

BiddingGame GK(int k) {
  if (k < 2) throw GameError(ErrorCode::kUnknownFixture, "gk needs k >= 2");
  BiddingGame game;
  int s0 = game.AddInternal({}, "s0");
  std::vector<int> xs, ys;
  for (int j = 1; j < k; ++j) xs.push_back(game.AddInternal({}, "x" + std::to_string(j)));
  for (int j = 1; j < k; ++j) ys.push_back(game.AddInternal({}, "y" + std::to_string(j)));
  int deep_x = game.AddTerminal(7, 9);
  int deep_y = game.AddTerminal(9, 7);
  int side_x = game.AddTerminal(8, 1);
  int side_y = game.AddTerminal(1, 8);
  for (int j = 0; j + 1 < k; ++j) {
    game.SetChildren(xs[j], {j + 2 < k ? xs[j + 1] : deep_x, side_x});
    game.SetChildren(ys[j], {j + 2 < k ? ys[j + 1] : deep_y, side_y});
  }
  game.SetChildren(s0, {xs[0], ys[0]});
  game.SetRoot(s0);
  game.Validate();
  return game;
}

BiddingGame HGame() {
  BiddingGame game;
  int s0 = game.AddInternal({}, "s0");
  int x = game.AddInternal({}, "x");
  int y = game.AddInternal({}, "y");
  int xp = game.AddInternal({}, "x'");
  int yp = game.AddInternal({}, "y'");
  int x_win = game.AddTerminal(1, -1);
  int xp_win = game.AddTerminal(1, -1);
  int xp_lose = game.AddTerminal(-1, 1);
  int y_lose = game.AddTerminal(-1, 1);
  int yp_win = game.AddTerminal(1, -1);
  int yp_lose = game.AddTerminal(-1, 1);
  game.SetChildren(s0, {x, y});
  game.SetChildren(x, {xp, x_win});
  game.SetChildren(xp, {xp_win, xp_lose});
  game.SetChildren(y, {yp, y_lose});
  game.SetChildren(yp, {yp_win, yp_lose});
  game.SetRoot(s0);
  game.Validate();
  return game;
}

std::map<int, Player> HGameTieBreaks() {
  // Indices follow HGame(): s0, x, y, x', y'.
  return {{0, Player::kBlack}, {1, Player::kWhite}, {2, Player::kBlack},
          {3, Player::kWhite}, {4, Player::kBlack}};
}

BiddingGame Centipede(int n) {
  if (n < 1) throw GameError(ErrorCode::kUnknownFixture, "centipede needs n >= 1");
  if (n > 120) throw GameError(ErrorCode::kUnknownFixture, "centipede payoffs overflow");
  BiddingGame game;
  std::vector<int> decisions;
  for (int j = 0; j < n; ++j) decisions.push_back(game.AddInternal({}, "d" + std::to_string(j)));
  std::vector<int> leaves;
  for (int j = 0; j <= n; ++j) {
    BigInt small = BigInt(1) << (j / 2);
    BigInt big = BigInt(1) << (j / 2 + 2);
    leaves.push_back(j % 2 == 0 ? game.AddTerminal(Rational(big), Rational(small))
                                : game.AddTerminal(Rational(small), Rational(big)));
  }
  for (int j = 0; j < n; ++j) {
    game.SetChildren(decisions[j], {leaves[j], j + 1 < n ? decisions[j + 1] : leaves[n]});
  }
  game.SetRoot(decisions[0]);
  game.Validate();
  return game;
}

namespace {

// Parses "name(k)" and "namek"; returns -1 if no number follows.
int TrailingNumber(std::string_view name, std::string_view prefix) {
  std::string_view rest = name.substr(prefix.size());
  if (!rest.empty() && rest.front() == '(' && rest.back() == ')') {
    rest = rest.substr(1, rest.size() - 2);
  }
  if (rest.empty() || rest.size() > 4) return -1;
  int v = 0;
  for (char c : rest) {
    if (c < '0' || c > '9') return -1;
    v = v * 10 + (c - '0');
  }
  return v;
}

}  // namespace

BiddingGame Fixture(std::string_view name) {
  if (name == "gmaj") return GMaj();
  if (name == "gbad") return GBad();
  if (name == "gtwo") return GTwo();
  if (name == "hgame") return HGame();
  if (name.rfind("gk", 0) == 0) {
    int k = TrailingNumber(name, "gk");
    if (k >= 2) return GK(k);
  }
  if (name.rfind("centipede", 0) == 0) {
    int n = TrailingNumber(name, "centipede");
    if (n >= 1) return Centipede(n);
  }
  throw GameError(ErrorCode::kUnknownFixture, std::string(name));
}

std::vector<std::string> DefaultFixtureNames() {
  return {"gmaj", "gbad", "gtwo", "gk4", "hgame", "centipede6"};
}

}  // namespace scripbid
