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

#ifndef SCRIPBID_OUTCOME_MAP_H_
#define SCRIPBID_OUTCOME_MAP_H_

#include <cstdint>
#include <vector>

#include "scripbid/dyadic.h"
#include "scripbid/game.h"

namespace scripbid {

// Step function from White's initial budget to a terminal. Interval j is
// [cutoffs[j], cutoffs[j+1]); the last interval also contains `total`.
struct OutcomeMap {
  Dyadic total{1};
  std::vector<Dyadic> cutoffs;
  std::vector<int> outcomes;

  int size() const { return static_cast<int>(cutoffs.size()); }
  int IntervalOf(const Dyadic& budget) const;
  int At(const Dyadic& budget) const { return outcomes[IntervalOf(budget)]; }
  // Right end of interval j (exclusive except for the last one).
  Dyadic UpperEnd(int j) const { return j + 1 < size() ? cutoffs[j + 1] : total; }
};

// Run-length compresses a per-grid-point row of terminals.
OutcomeMap CompressRow(const std::vector<int>& row, const Dyadic& unit, const Dyadic& total);

// Merges adjacent intervals whose terminals carry the same utility pair.
OutcomeMap MergeEqualUtilities(const BiddingGame& game, const OutcomeMap& map);

}  // namespace scripbid

#endif  // SCRIPBID_OUTCOME_MAP_H_
