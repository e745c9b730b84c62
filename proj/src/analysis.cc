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

#include "scripbid/analysis.h"

#include <algorithm>
#include <map>
#include <set>

#include "json.hpp"
#include "scripbid/error.h"

namespace scripbid {
namespace {

std::string PairText(const BiddingGame& game, int t) {
  const UtilityPair& u = game.utility(t);
  return "(" + RationalToString(u.u1) + "," + RationalToString(u.u2) + ")";
}

std::string CellText(const BiddingGame& game, int node, std::int64_t c) {
  return "node " + std::to_string(game.external_id(node)) + " c=" + std::to_string(c);
}

struct CellView {
  std::int64_t b1 = 0;
  std::int64_t b2 = 0;
  Player winner = Player::kWhite;
  int child1 = -1;
  int child2 = -1;
  int terminal = -1;
};

// Every clause of the equilibrium definition at one cell. `term(child, x)`
// gives the subgame outcome at White budget x.
template <typename TermFn>
void CheckCell(const BiddingGame& game, int node, std::int64_t c, std::int64_t n,
               bool white_ties, const CellView& cell, TermFn term, AuditReport* report) {
  auto white_wins = [&](std::int64_t x1, std::int64_t x2) {
    return white_ties ? x1 >= x2 : x1 > x2;
  };
  auto fail = [&](const std::string& clause, const std::string& detail,
                  std::vector<int> witnesses) {
    report->Add({CellText(game, node, c), clause, detail, std::move(witnesses)});
  };
  const Player i = cell.winner;
  if ((i == Player::kWhite) != white_wins(cell.b1, cell.b2)) {
    fail("winner", "winner does not match the bids", {});
    return;
  }
  if (cell.b1 < 0 || cell.b1 > c || cell.b2 < 0 || cell.b2 > n - c) {
    fail("feasible bids", "bid outside the budget", {});
    return;
  }
  const auto& ch = game.children(node);
  const int chosen = i == Player::kWhite ? cell.child1 : cell.child2;
  if (std::find(ch.begin(), ch.end(), chosen) == ch.end()) {
    fail("argmax", "chosen state is not a move", {});
    return;
  }
  const std::int64_t post = i == Player::kWhite ? c - cell.b1 : c + cell.b2;
  const int t = cell.terminal;
  for (int s : ch) {
    int alt = term(s, post);
    if (game.rank(i, alt) > game.rank(i, term(chosen, post))) {
      fail("argmax", "winner prefers another state", {term(chosen, post), alt});
      break;
    }
  }
  if (term(chosen, post) != t) {
    fail("consistency", "terminal differs from the chosen subgame", {t, term(chosen, post)});
  }
  // Winner re-bids and still takes the turn.
  if (i == Player::kWhite) {
    for (std::int64_t x = 0; x <= c; ++x) {
      if (!white_wins(x, cell.b2)) continue;
      for (int s : ch) {
        int alt = term(s, c - x);
        if (game.rank(Player::kWhite, alt) > game.rank(Player::kWhite, t)) {
          fail("winner re-bid", "White gains with bid " + std::to_string(x), {t, alt});
          x = c + 1;
          break;
        }
      }
    }
  } else {
    for (std::int64_t y = 0; y <= n - c; ++y) {
      if (white_wins(cell.b1, y)) continue;
      for (int s : ch) {
        int alt = term(s, c + y);
        if (game.rank(Player::kBlack, alt) > game.rank(Player::kBlack, t)) {
          fail("winner re-bid", "Black gains with bid " + std::to_string(y), {t, alt});
          y = n - c + 1;
          break;
        }
      }
    }
  }
  // Winner lowers her bid and lets the loser move.
  if (i == Player::kWhite) {
    bool can_drop = white_ties ? cell.b2 > 0 : true;
    if (can_drop) {
      int alt = term(cell.child2, c + cell.b2);
      if (game.rank(Player::kWhite, alt) > game.rank(Player::kWhite, t)) {
        fail("winner drop", "White gains by losing the turn", {t, alt});
      }
    }
  } else {
    bool can_drop = white_ties ? true : cell.b1 > 0;
    if (can_drop) {
      int alt = term(cell.child1, c - cell.b1);
      if (game.rank(Player::kBlack, alt) > game.rank(Player::kBlack, t)) {
        fail("winner drop", "Black gains by losing the turn", {t, alt});
      }
    }
  }
  // Loser overbids and moves anywhere.
  if (i == Player::kWhite) {
    for (std::int64_t y = 0; y <= n - c; ++y) {
      if (white_wins(cell.b1, y)) continue;
      for (int s : ch) {
        int alt = term(s, c + y);
        if (game.rank(Player::kBlack, alt) > game.rank(Player::kBlack, t)) {
          fail("loser overbid", "Black gains with bid " + std::to_string(y), {t, alt});
          y = n - c + 1;
          break;
        }
      }
    }
  } else {
    for (std::int64_t x = 0; x <= c; ++x) {
      if (!white_wins(x, cell.b2)) continue;
      for (int s : ch) {
        int alt = term(s, c - x);
        if (game.rank(Player::kWhite, alt) > game.rank(Player::kWhite, t)) {
          fail("loser overbid", "White gains with bid " + std::to_string(x), {t, alt});
          x = c + 1;
          break;
        }
      }
    }
  }
}

std::vector<std::pair<Rational, Rational>> ParetoPairs(const BiddingGame& game) {
  std::vector<std::pair<Rational, Rational>> pairs;
  for (int t : ParetoSet(game)) pairs.push_back({game.utility(t).u1, game.utility(t).u2});
  return pairs;
}

}  // namespace

void AuditReport::Add(Violation v) {
  ++violation_count;
  if (violations.size() < kMaxStored) violations.push_back(std::move(v));
}

AuditReport VerifyPspe(const GridSolution& sol) {
  const BiddingGame& game = sol.game();
  AuditReport report{"pspe", {}, 0};
  const std::int64_t n = sol.total_units();
  for (int v : game.post_order()) {
    if (game.is_terminal(v)) continue;
    if (!sol.has_row(v)) throw GameError(ErrorCode::kIncompleteTables, "missing row");
    for (int s : game.children(v)) {
      if (!game.is_terminal(s) && !sol.has_row(s)) {
        throw GameError(ErrorCode::kIncompleteTables, "missing row");
      }
    }
    auto term = [&](int s, std::int64_t x) { return sol.Terminal(s, x); };
    const bool white_ties = sol.TieWinner(v) == Player::kWhite;
    for (std::int64_t c = 0; c <= n; ++c) {
      const GridCell& g = sol.cell(v, c);
      CellView cell{g.bid1, g.bid2, g.winner, g.child1, g.child2, g.terminal};
      CheckCell(game, v, c, n, white_ties, cell, term, &report);
    }
  }
  return report;
}

AuditReport CheckParetoOptimal(const BiddingGame& game, const OutcomeMap& map) {
  AuditReport report{"pareto", {}, 0};
  const auto pareto = ParetoPairs(game);
  for (int j = 0; j < map.size(); ++j) {
    const UtilityPair& u = game.utility(map.outcomes[j]);
    if (std::find(pareto.begin(), pareto.end(), std::make_pair(u.u1, u.u2)) != pareto.end()) {
      continue;
    }
    int dominator = -1;
    for (int t : game.terminals()) {
      const UtilityPair& w = game.utility(t);
      if (w.u1 >= u.u1 && w.u2 >= u.u2 && !(w == u)) {
        dominator = t;
        break;
      }
    }
    report.Add({"B1=" + map.cutoffs[j].ToString(), "Pareto-efficient outcome",
                PairText(game, map.outcomes[j]) + " dominated by " + PairText(game, dominator),
                {map.outcomes[j], dominator}});
  }
  return report;
}

AuditReport CheckMonotone(const BiddingGame& game, const OutcomeMap& map) {
  AuditReport report{"monotone", {}, 0};
  for (int j = 0; j + 1 < map.size(); ++j) {
    int lo = map.outcomes[j], hi = map.outcomes[j + 1];
    if (game.Prefers(Player::kWhite, hi, lo) == Ordering::kWorse) {
      report.Add({"B1=" + map.cutoffs[j + 1].ToString(), "White weakly better with more budget",
                  "u1 " + RationalToString(game.utility(lo).u1) + " -> " +
                      RationalToString(game.utility(hi).u1) + " as B1 increases",
                  {lo, hi}});
    }
    if (game.Prefers(Player::kBlack, lo, hi) == Ordering::kWorse) {
      report.Add({"B1=" + map.cutoffs[j + 1].ToString(), "Black weakly better with more budget",
                  "u2 " + RationalToString(game.utility(hi).u2) + " -> " +
                      RationalToString(game.utility(lo).u2) + " as B2 increases",
                  {hi, lo}});
    }
  }
  return report;
}

AuditReport CheckSurjective(const BiddingGame& game, const OutcomeMap& map) {
  AuditReport report{"surjective", {}, 0};
  std::set<std::pair<Rational, Rational>> reached;
  for (int t : map.outcomes) reached.insert({game.utility(t).u1, game.utility(t).u2});
  for (int t : ParetoSet(game)) {
    const UtilityPair& u = game.utility(t);
    if (reached.count({u.u1, u.u2})) continue;
    report.Add({"all budgets", "every efficient pair reached",
                PairText(game, t) + " never reached", {t}});
    reached.insert({u.u1, u.u2});
  }
  return report;
}

AuditReport CheckBudgetIntervals(const BiddingGame& game, const OutcomeMap& fine,
                                 const OutcomeMap& coarse) {
  AuditReport report{"intervals", {}, 0};
  const unsigned h = static_cast<unsigned>(game.height());
  for (int j = 0; j < fine.size(); ++j) {
    if (fine.cutoffs[j].scale() > h) {
      report.Add({"B1=" + fine.cutoffs[j].ToString(), "cutoff on the 2^-height grid",
                  "outcome changes inside an interval", {fine.outcomes[j]}});
    }
  }
  std::set<Dyadic> probes;
  for (const Dyadic& d : fine.cutoffs) probes.insert(d);
  for (const Dyadic& d : coarse.cutoffs) probes.insert(d);
  if (h <= 20) {
    for (std::int64_t j = 0; j <= (std::int64_t{1} << h); ++j) {
      probes.insert(Dyadic(BigInt(j), h) * 1);
    }
  }
  for (const Dyadic& b : probes) {
    if (b > fine.total || b > coarse.total) continue;
    int a = fine.At(b), c = coarse.At(b);
    if (a != c) {
      report.Add({"B1=" + b.ToString(), "same outcome at both resolutions",
                  PairText(game, a) + " vs " + PairText(game, c), {a, c}});
    }
  }
  return report;
}

std::vector<Dyadic> PriceTrajectory(const GridSolution& sol, const Dyadic& budget1) {
  std::vector<Dyadic> prices;
  for (const PlayStep& step : Play(sol, budget1)) {
    const Rational& bid = step.winner == Player::kWhite ? step.bid1 : step.bid2;
    prices.push_back(Dyadic(boost::multiprecision::numerator(bid),
                            boost::multiprecision::msb(boost::multiprecision::denominator(bid))));
  }
  return prices;
}

int MaxWelfareInterval(const BiddingGame& game, const OutcomeMap& map) {
  int best = 0;
  for (int j = 1; j < map.size(); ++j) {
    if (SocialWelfare(game, map.outcomes[j]) > SocialWelfare(game, map.outcomes[best])) best = j;
  }
  return best;
}

PspeOutcomeSets EnumeratePspeOutcomes(const BiddingGame& game, std::int64_t m, size_t cap) {
  using Row = std::vector<int>;
  std::vector<std::vector<Row>> rows(game.num_nodes());
  for (int v : game.post_order()) {
    if (game.is_terminal(v)) {
      rows[v] = {Row(m + 1, v)};
      continue;
    }
    const auto& ch = game.children(v);
    std::set<Row> found;
    // Every combination of one equilibrium row per child.
    std::vector<size_t> pick(ch.size(), 0);
    while (true) {
      auto term = [&](int s, std::int64_t x) {
        auto it = std::find(ch.begin(), ch.end(), s);
        return rows[s][pick[it - ch.begin()]][x];
      };
      auto best = [&](Player p, std::int64_t x) {
        int b = ch[0];
        for (int s : ch) {
          if (game.rank(p, term(s, x)) > game.rank(p, term(b, x))) b = s;
        }
        return b;
      };
      std::vector<std::set<int>> per_budget(m + 1);
      for (std::int64_t c = 0; c <= m; ++c) {
        for (std::int64_t b1 = 0; b1 <= c; ++b1) {
          for (std::int64_t b2 = 0; b2 <= m - c; ++b2) {
            CellView cell;
            cell.b1 = b1;
            cell.b2 = b2;
            cell.winner = b1 >= b2 ? Player::kWhite : Player::kBlack;
            cell.child1 = best(Player::kWhite, c - b1);
            cell.child2 = best(Player::kBlack, c + b2);
            cell.terminal = cell.winner == Player::kWhite ? term(cell.child1, c - b1)
                                                          : term(cell.child2, c + b2);
            AuditReport scratch;
            CheckCell(game, v, c, m, true, cell, term, &scratch);
            if (scratch.pass()) per_budget[c].insert(cell.terminal);
          }
        }
        if (per_budget[c].empty()) {
          throw GameError(ErrorCode::kNonConvergence,
                          "no equilibrium at " + CellText(game, v, c));
        }
      }
      // Given the subgame rows, budgets are independent of each other.
      std::vector<Row> partial{Row()};
      for (std::int64_t c = 0; c <= m; ++c) {
        std::vector<Row> next;
        for (const Row& r : partial) {
          for (int t : per_budget[c]) {
            Row grown = r;
            grown.push_back(t);
            next.push_back(std::move(grown));
          }
        }
        if (next.size() > cap) {
          throw GameError(ErrorCode::kEnumerationTooLarge,
                          "more than " + std::to_string(cap) + " rows at node " +
                              std::to_string(game.external_id(v)));
        }
        partial = std::move(next);
      }
      found.insert(partial.begin(), partial.end());
      if (found.size() > cap) {
        throw GameError(ErrorCode::kEnumerationTooLarge,
                        "more than " + std::to_string(cap) + " rows at node " +
                            std::to_string(game.external_id(v)));
      }
      size_t k = 0;
      while (k < ch.size() && ++pick[k] == rows[ch[k]].size()) pick[k++] = 0;
      if (k == ch.size()) break;
    }
    std::vector<Row> out(found.begin(), found.end());
    rows[v] = std::move(out);
  }
  PspeOutcomeSets sets;
  sets.total = m;
  sets.outcomes.resize(m + 1);
  const auto& root_rows = rows[game.root()];
  sets.root_rows = static_cast<std::int64_t>(root_rows.size());
  sets.rows = root_rows;
  for (std::int64_t c = 0; c <= m; ++c) {
    std::set<int> all;
    for (const Row& r : root_rows) all.insert(r[c]);
    sets.outcomes[c].assign(all.begin(), all.end());
  }
  return sets;
}

AuditReport CheckGameMonotone(const BiddingGame& game, const PspeOutcomeSets& sets) {
  AuditReport report{"game monotone", {}, 0};
  const std::int64_t m = sets.total;
  auto best = [&](Player p, std::int64_t c) {
    int b = sets.outcomes[c][0];
    for (int t : sets.outcomes[c]) {
      if (game.rank(p, t) > game.rank(p, b)) b = t;
    }
    return b;
  };
  auto worst_gap = [&](Player p, std::int64_t rich, std::int64_t poor) {
    int top = best(p, rich);
    for (int t : sets.outcomes[poor]) {
      if (game.rank(p, t) > game.rank(p, top)) {
        report.Add({"budgets " + std::to_string(poor) + " < " + std::to_string(rich),
                    std::string(p == Player::kWhite ? "White" : "Black") +
                        " weakly better with more budget",
                    PairText(game, t) + " beats " + PairText(game, top), {t, top}});
        return;
      }
    }
  };
  for (std::int64_t c = 0; c <= m; ++c) {
    for (std::int64_t d = c + 1; d <= m; ++d) {
      worst_gap(Player::kWhite, d, c);  // White richer at d
      worst_gap(Player::kBlack, c, d);  // Black richer at c
    }
  }
  return report;
}

std::string ReportsToJson(const BiddingGame& game, const std::vector<AuditReport>& reports) {
  nlohmann::ordered_json doc;
  bool all = true;
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const AuditReport& r : reports) {
    all = all && r.pass();
    nlohmann::ordered_json entry;
    entry["property"] = r.property;
    entry["pass"] = r.pass();
    entry["violation_count"] = r.violation_count;
    nlohmann::ordered_json vs = nlohmann::ordered_json::array();
    for (const Violation& v : r.violations) {
      nlohmann::ordered_json e;
      e["at"] = v.at;
      e["expected"] = v.expected;
      e["found"] = v.found;
      nlohmann::ordered_json w = nlohmann::ordered_json::array();
      for (int t : v.witnesses) w.push_back(t < 0 ? -1 : game.external_id(t));
      e["witnesses"] = std::move(w);
      vs.push_back(std::move(e));
    }
    entry["violations"] = std::move(vs);
    list.push_back(std::move(entry));
  }
  doc["pass"] = all;
  doc["reports"] = std::move(list);
  return doc.dump(2) + "\n";
}

}  // namespace scripbid
