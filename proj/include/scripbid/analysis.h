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

#ifndef SCRIPBID_ANALYSIS_H_
#define SCRIPBID_ANALYSIS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "scripbid/dyadic.h"
#include "scripbid/game.h"
#include "scripbid/grid_solver.h"
#include "scripbid/outcome_map.h"

namespace scripbid {

struct Violation {
  std::string at;        // budget, or node and budget
  std::string expected;
  std::string found;
  std::vector<int> witnesses;  // terminal indices
};

struct AuditReport {
  std::string property;
  std::vector<Violation> violations;  // first kMaxStored only
  std::int64_t violation_count = 0;

  static constexpr size_t kMaxStored = 64;
  bool pass() const { return violation_count == 0; }
  void Add(Violation v);
};

// Checks every equilibrium clause at every (node, budget) cell by brute force
// over all grid deviations.
AuditReport VerifyPspe(const GridSolution& solution);

AuditReport CheckParetoOptimal(const BiddingGame& game, const OutcomeMap& map);
// White's outcome weakly improves and Black's weakly worsens as B1 grows.
AuditReport CheckMonotone(const BiddingGame& game, const OutcomeMap& map);
AuditReport CheckSurjective(const BiddingGame& game, const OutcomeMap& map);
// `fine` must be constant on every interval of width 2^-height and agree
// with `coarse` everywhere.
AuditReport CheckBudgetIntervals(const BiddingGame& game, const OutcomeMap& fine,
                                 const OutcomeMap& coarse);

// Winning bid of every round along the equilibrium path.
std::vector<Dyadic> PriceTrajectory(const GridSolution& solution, const Dyadic& budget1);

// Interval with the largest u1 + u2 (first one on ties).
int MaxWelfareInterval(const BiddingGame& game, const OutcomeMap& map);

// All equilibrium outcomes at each discrete budget 0..M, collected by
// composing every equilibrium of every subgame. Raises EnumerationTooLarge
// once a node has more than `cap` distinct outcome rows.
struct PspeOutcomeSets {
  std::int64_t total = 0;
  std::vector<std::vector<int>> outcomes;  // per White budget, sorted
  std::int64_t root_rows = 0;               // distinct equilibrium rows at the root
  std::vector<std::vector<int>> rows;       // the root rows themselves
};

PspeOutcomeSets EnumeratePspeOutcomes(const BiddingGame& game, std::int64_t discrete_total,
                                      size_t cap = 4096);

// For every pair of budgets, the best outcome over all equilibria at the
// richer budget is at least as good for that player as any at the poorer one.
AuditReport CheckGameMonotone(const BiddingGame& game, const PspeOutcomeSets& sets);

std::string ReportsToJson(const BiddingGame& game, const std::vector<AuditReport>& reports);

}  // namespace scripbid

#endif  // SCRIPBID_ANALYSIS_H_
