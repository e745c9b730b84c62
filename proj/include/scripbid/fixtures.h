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

#ifndef SCRIPBID_FIXTURES_H_
#define SCRIPBID_FIXTURES_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "scripbid/game.h"

namespace scripbid {

// Majority of three rounds over (a,b) play counts, shared state (1,1).
BiddingGame GMaj();
// Ternary root where the non-binary structure breaks monotonicity.
BiddingGame GBad();
// Game with two distinct equilibria at equal budgets.
BiddingGame GTwo();
// Two chains of k wins ending in (7,9) and (9,7); each chain node also leads
// to one shared side leaf.
BiddingGame GK(int k);
// Zero-sum game whose equilibrium depends on per-state tie rules.
BiddingGame HGame();
// n decision nodes; leaf j: (2^(j/2+2), 2^(j/2)) for even j and
// (2^((j-1)/2), 2^((j-1)/2+2)) for odd j.
BiddingGame Centipede(int n);

// Tie winner per node index for HGame().
std::map<int, Player> HGameTieBreaks();

// Accepts gmaj, gbad, gtwo, hgame, gk(k) and centipede(n).
BiddingGame Fixture(std::string_view name);

// Names materialized by the CLI fixtures verb.
std::vector<std::string> DefaultFixtureNames();

}  // namespace scripbid

#endif  // SCRIPBID_FIXTURES_H_
