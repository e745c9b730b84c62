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

#ifndef SCRIPBID_TESTS_TEST_UTIL_H_
#define SCRIPBID_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "scripbid/error.h"
#include "scripbid/game.h"
#include "scripbid/outcome_map.h"

namespace scripbid::testing {

using Pair = std::pair<Rational, Rational>;

inline Pair PairOf(const BiddingGame& g, int t) { return {g.utility(t).u1, g.utility(t).u2}; }

inline Pair P(std::int64_t a, std::int64_t b) { return {Rational(a), Rational(b)}; }

// Quadratic dominance filter over utility pairs.
inline std::set<Pair> BruteForcePareto(const BiddingGame& g) {
  std::set<Pair> out;
  for (int t : g.terminals()) {
    Pair a = PairOf(g, t);
    bool dominated = false;
    for (int s : g.terminals()) {
      Pair b = PairOf(g, s);
      if (b.first >= a.first && b.second >= a.second && b != a) dominated = true;
    }
    if (!dominated) out.insert(a);
  }
  return out;
}

inline std::set<Pair> PairSet(const BiddingGame& g, const std::vector<int>& terminals) {
  std::set<Pair> out;
  for (int t : terminals) out.insert(PairOf(g, t));
  return out;
}

// Interval list as (cutoff, utility pair) after merging equal pairs, so maps
// of different games over the same utilities can be compared.
inline std::vector<std::pair<Dyadic, Pair>> UtilityRows(const BiddingGame& g,
                                                        const OutcomeMap& map) {
  std::vector<std::pair<Dyadic, Pair>> rows;
  for (int j = 0; j < map.size(); ++j) {
    Pair p = PairOf(g, map.outcomes[j]);
    if (!rows.empty() && rows.back().second == p) continue;
    rows.push_back({map.cutoffs[j], p});
  }
  return rows;
}

inline Dyadic D(const char* text) { return Dyadic::Parse(text); }

// Code of the GameError thrown by `fn`, or nothing if it returns normally.
template <typename Fn>
std::optional<ErrorCode> ErrorOf(Fn&& fn) {
  try {
    fn();
  } catch (const GameError& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace scripbid::testing

#endif  // SCRIPBID_TESTS_TEST_UTIL_H_
