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

#include "scripbid/outcome_map.h"

#include <algorithm>

#include "scripbid/error.h"

namespace scripbid {

int OutcomeMap::IntervalOf(const Dyadic& budget) const {
  if (budget < Dyadic(0) || budget > total) {
    throw GameError(ErrorCode::kBudgetOutOfRange, budget.ToString());
  }
  auto it = std::upper_bound(cutoffs.begin(), cutoffs.end(), budget);
  return static_cast<int>(it - cutoffs.begin()) - 1;
}

OutcomeMap CompressRow(const std::vector<int>& row, const Dyadic& unit, const Dyadic& total) {
  OutcomeMap map;
  map.total = total;
  for (size_t c = 0; c < row.size(); ++c) {
    if (c == 0 || row[c] != row[c - 1]) {
      map.cutoffs.push_back(unit * static_cast<std::int64_t>(c));
      map.outcomes.push_back(row[c]);
    }
  }
  return map;
}

OutcomeMap MergeEqualUtilities(const BiddingGame& game, const OutcomeMap& map) {
  OutcomeMap out;
  out.total = map.total;
  for (int j = 0; j < map.size(); ++j) {
    if (j > 0 && game.utility(map.outcomes[j]) == game.utility(out.outcomes.back())) continue;
    out.cutoffs.push_back(map.cutoffs[j]);
    out.outcomes.push_back(map.outcomes[j]);
  }
  return out;
}

}  // namespace scripbid
