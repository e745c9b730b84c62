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

#ifndef SCRIPBID_COMPILERS_H_
#define SCRIPBID_COMPILERS_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "scripbid/game.h"

namespace scripbid {

// Explicit bundle values. Index is a bitmask over items (bit j = item j).
struct TableValuation {
  std::vector<Rational> white;
  std::vector<Rational> black;
};

struct AdditiveValuation {
  std::vector<std::int64_t> white;
  std::vector<std::int64_t> black;
};

// Each item carries a weight vector; a player's value is f applied to the
// per-dimension sums over the items she owns.
struct MultiWeightValuation {
  std::vector<std::vector<std::int64_t>> weights;
  std::map<std::vector<std::int64_t>, Rational> f_white;
  std::map<std::vector<std::int64_t>, Rational> f_black;
};

using Valuation = std::variant<TableValuation, AdditiveValuation, MultiWeightValuation>;

struct SsaSpec {
  int k = 0;
  // Sale order as 0-based item indices; empty means identity.
  std::vector<int> order;
  Valuation valuation;
};

// Value to `player` when White holds the items in `mask` and Black the rest.
Rational BundleValue(const SsaSpec& spec, Player player, std::uint64_t mask);

// File format: {"k", "order" (1-based), "valuation": {"type", ...}}.
SsaSpec ParseSsaJson(std::string_view text);

// One node per partition of the items sold so far; child 0 gives the next
// item to White.
BiddingGame CompileNaive(const SsaSpec& spec, int max_items = 20);

// States keyed by (level, m1, m2) of accumulated values.
BiddingGame CompileAdditive(const SsaSpec& spec);

// States keyed by (level, per-dimension sums for both players).
BiddingGame CompileMultiWeight(const SsaSpec& spec);

struct SinglePeakedResult {
  SsaSpec spec;
  // Coordinates the voters disagree on; item j of `spec` is coordinate[j].
  std::vector<int> coordinates;
  // Common value on agreed coordinates, -1 on contested ones.
  std::vector<int> fixed;
};

SinglePeakedResult CompileSinglePeaked(const std::vector<int>& ideal_white,
                                       const std::vector<int>& ideal_black,
                                       const std::vector<std::int64_t>& weight_white,
                                       const std::vector<std::int64_t>& weight_black);

struct BargainingSpec {
  std::vector<std::pair<std::int64_t, std::int64_t>> frontier;
};

// Lattice walk from (0,0); child 0 goes right (+1 to White), child 1 up.
BiddingGame CompileBargaining(const BargainingSpec& spec);

// Frontier {(0,n), (1,n-1), ..., (n,0)}.
BargainingSpec LinearFrontier(int n);

// Replaces every node with more than two children by a right-leaning chain.
BiddingGame ExpandToBinary(const BiddingGame& game);

// Unfolds shared nodes and pads shallow terminals with copies so that every
// leaf sits at depth height(game).
BiddingGame PadToBalanced(const BiddingGame& game);

}  // namespace scripbid

#endif  // SCRIPBID_COMPILERS_H_
