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

#include "scripbid/fast_solver.h"

#include <algorithm>
#include <sstream>

#include "scripbid/error.h"

namespace scripbid {
namespace {

constexpr int kMaxHeight = 60;

struct Side {
  int child_pos = -1;
  int terminal = -1;
  int child_index = 0;  // interval inside that child's profile
};

// The children's profiles merged onto one cutoff list, with each player's
// preferred child on every merged interval.
class NodeView {
 public:
  NodeView(const FastSolution& sol, int node) : sol_(sol), game_(sol.game()) {
    children_ = game_.children(node);
    for (int ch : children_) {
      if (!sol.has_profile(ch)) {
        throw GameError(ErrorCode::kChildProfileMissing,
                        "child " + std::to_string(game_.external_id(ch)));
      }
      const auto& f = sol.profile(ch).cutoffs;
      merged_.insert(merged_.end(), f.begin(), f.end());
    }
    std::sort(merged_.begin(), merged_.end());
    merged_.erase(std::unique(merged_.begin(), merged_.end()), merged_.end());
    best1_.resize(merged_.size());
    best2_.resize(merged_.size());
    for (size_t k = 0; k < merged_.size(); ++k) {
      for (int pos = 0; pos < static_cast<int>(children_.size()); ++pos) {
        const IntervalProfile& p = sol.profile(children_[pos]);
        int idx = p.Find(merged_[k]);
        Side side{pos, p.terminals[idx], idx};
        if (best1_[k].terminal < 0 || game_.rank(Player::kWhite, side.terminal) >
                                          game_.rank(Player::kWhite, best1_[k].terminal)) {
          best1_[k] = side;
        }
        if (best2_[k].terminal < 0 || game_.rank(Player::kBlack, side.terminal) >
                                          game_.rank(Player::kBlack, best2_[k].terminal)) {
          best2_[k] = side;
        }
      }
    }
  }

  const std::vector<std::int64_t>& merged() const { return merged_; }

  int Idx(std::int64_t x) const {
    return static_cast<int>(std::upper_bound(merged_.begin(), merged_.end(), x) - merged_.begin()) - 1;
  }

  // Lowest ascending auction at White budget c: walk the alternating chain of
  // minimal overbids, skipping runs of steps where no merged cutoff is
  // crossed.
  AuctionResult Evaluate(std::int64_t c) const {
    const std::int64_t n = sol_.total_units();
    const int k_count = static_cast<int>(merged_.size());
    std::int64_t j = 0;
    while (true) {
      const int a = Idx(c - j);
      const bool feasible_black = j + 1 <= n - c;
      int bk = -1;
      bool black_raises = false;
      if (feasible_black) {
        bk = Idx(c + j + 1);
        black_raises = Rank(Player::kBlack, best2_[bk]) > Rank(Player::kBlack, best1_[a]);
      }
      if (!black_raises) return WhiteStop(c, j, a);
      const bool feasible_white = j + 1 <= c;
      int a2 = -1;
      bool white_raises = false;
      if (feasible_white) {
        a2 = Idx(c - j - 1);
        white_raises = Rank(Player::kWhite, best1_[a2]) > Rank(Player::kWhite, best2_[bk]);
      }
      if (!white_raises) return BlackStop(c, j, a, bk);
      std::int64_t last = std::min({c - merged_[a], c - 1 - merged_[a2], n - c - 1, c - 1});
      if (bk + 1 < k_count) last = std::min(last, merged_[bk + 1] - c - 2);
      j = last + 1;
    }
  }

 private:
  int Rank(Player p, const Side& s) const { return game_.rank(p, s.terminal); }

  IntervalProfile::Choice ChoiceOf(const Side& s) const {
    return {children_[s.child_pos], s.child_index};
  }

  AuctionResult WhiteStop(std::int64_t c, std::int64_t j, int a) const {
    AuctionResult r;
    r.winner = Player::kWhite;
    r.bid1 = r.bid2 = j;
    r.terminal = best1_[a].terminal;
    r.white = ChoiceOf(best1_[a]);
    r.black = ChoiceOf(best2_[Idx(c + j)]);
    return r;
  }

  AuctionResult BlackStop(std::int64_t, std::int64_t j, int a, int bk) const {
    AuctionResult r;
    r.winner = Player::kBlack;
    r.bid1 = j;
    r.bid2 = j + 1;
    r.terminal = best2_[bk].terminal;
    r.black = ChoiceOf(best2_[bk]);
    r.white = ChoiceOf(best1_[a]);
    return r;
  }

  const FastSolution& sol_;
  const BiddingGame& game_;
  std::vector<int> children_;
  std::vector<std::int64_t> merged_;
  std::vector<Side> best1_;
  std::vector<Side> best2_;
};

// Budgets at which the auction's structure can change: around the midpoint
// of every pair of merged cutoffs (the total plus one stands for the
// feasibility bound).
std::vector<std::int64_t> CriticalBudgets(const std::vector<std::int64_t>& merged, std::int64_t n) {
  std::vector<std::int64_t> points = merged;
  points.push_back(n + 1);
  std::vector<std::int64_t> out{0};
  out.reserve(points.size() * points.size() * 3);
  for (size_t p = 0; p < points.size(); ++p) {
    for (size_t q = p; q < points.size(); ++q) {
      __int128 mid = (static_cast<__int128>(points[p]) + points[q]) / 2;
      for (int delta = -2; delta <= 2; ++delta) {
        __int128 c = mid + delta;
        if (c >= 0 && c <= n) out.push_back(static_cast<std::int64_t>(c));
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

int IntervalProfile::Find(std::int64_t x) const {
  return static_cast<int>(std::upper_bound(cutoffs.begin(), cutoffs.end(), x) - cutoffs.begin()) - 1;
}

FastSolution::FastSolution(const BiddingGame& game, unsigned scale)
    : game_(&game), scale_(scale), total_units_(std::int64_t{1} << scale),
      profiles_(game.num_nodes()) {}

int FastSolution::TerminalAt(int node, std::int64_t c) const {
  const IntervalProfile& p = profiles_[node];
  return p.terminals[p.Find(c)];
}

int FastSolution::Query(const Dyadic& budget1) const {
  if (budget1 < Dyadic(0) || budget1 > Dyadic(1)) {
    throw GameError(ErrorCode::kBudgetOutOfRange, budget1.ToString());
  }
  // floor(B1 * 2^scale): every cutoff is an integer number of units.
  BigInt scaled = budget1.numerator() << scale_;
  std::int64_t units = (scaled >> budget1.scale()).convert_to<std::int64_t>();
  return TerminalAt(game_->root(), units);
}

OutcomeMap FastSolution::outcome_map() const {
  const IntervalProfile& p = profiles_[game_->root()];
  OutcomeMap map;
  map.total = Dyadic(1);
  for (int a = 0; a < p.size(); ++a) {
    if (p.cutoffs[a] > total_units_) break;
    if (a > 0 && p.terminals[a] == map.outcomes.back()) continue;
    map.cutoffs.push_back(Dyadic(BigInt(p.cutoffs[a]), scale_));
    map.outcomes.push_back(p.terminals[a]);
  }
  return map;
}

AuctionResult AscendingAuction(const FastSolution& partial, int node, std::int64_t c) {
  if (partial.game().is_terminal(node)) {
    AuctionResult r;
    r.terminal = node;
    return r;
  }
  if (c < 0 || c > partial.total_units()) {
    throw GameError(ErrorCode::kBudgetOutOfRange, std::to_string(c) + " units");
  }
  return NodeView(partial, node).Evaluate(c);
}

FastSolution FindPspeFast(const BiddingGame& game) {
  if (!game.validated()) throw GameError(ErrorCode::kInvalidSpec, "game is not validated");
  if (!game.is_binary()) throw GameError(ErrorCode::kNotBinary, "expand the game to binary first");
  if (game.height() > kMaxHeight) {
    throw GameError(ErrorCode::kGridTooLarge, "height above " + std::to_string(kMaxHeight));
  }
  FastSolution sol(game, static_cast<unsigned>(game.height() + 2));
  const std::int64_t n = sol.total_units();
  for (int v : game.post_order()) {
    IntervalProfile& prof = sol.mutable_profile(v);
    if (game.is_terminal(v)) {
      prof.cutoffs = {0, n};
      prof.terminals = {v, v};
      prof.white = prof.black = {IntervalProfile::Choice{}, IntervalProfile::Choice{}};
      continue;
    }
    NodeView view(sol, v);
    IntervalProfile out;
    for (std::int64_t c : CriticalBudgets(view.merged(), n)) {
      AuctionResult r = view.Evaluate(c);
      if (!out.terminals.empty() && out.terminals.back() == r.terminal) continue;
      out.cutoffs.push_back(c);
      out.terminals.push_back(r.terminal);
      out.white.push_back(r.white);
      out.black.push_back(r.black);
    }
    prof = std::move(out);
  }
  return sol;
}

std::string DumpFastSolution(const FastSolution& sol) {
  const BiddingGame& game = sol.game();
  std::ostringstream os;
  os << "# scale " << sol.scale() << "\n";
  std::vector<int> order = game.post_order();
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return game.external_id(a) < game.external_id(b); });
  auto child_id = [&](const IntervalProfile::Choice& ch) -> std::int64_t {
    return ch.child < 0 ? -1 : game.external_id(ch.child);
  };
  for (int v : order) {
    const IntervalProfile& p = sol.profile(v);
    os << "# node " << game.external_id(v) << "\n";
    for (int a = 0; a < p.size(); ++a) {
      Dyadic f(BigInt(p.cutoffs[a]), sol.scale());
      os << a + 1 << ',' << f.numerator() << ',' << f.scale() << ','
         << game.external_id(p.terminals[a]) << ',' << child_id(p.white[a]) << ','
         << p.white[a].index + 1 << ',' << child_id(p.black[a]) << ',' << p.black[a].index + 1
         << "\n";
    }
  }
  return os.str();
}

FastSolution LoadFastSolution(const BiddingGame& game, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  FastSolution sol;
  bool have_scale = false;
  int node = -1;
  auto parse_fail = [](const std::string& why) { throw GameError(ErrorCode::kParse, why); };
  auto index_of = [&](std::int64_t id) {
    int idx = game.IndexOf(id);
    if (idx < 0) parse_fail("unknown node id " + std::to_string(id));
    return idx;
  };
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      if (line.rfind("# scale ", 0) == 0) {
        sol = FastSolution(game, static_cast<unsigned>(std::stoul(line.substr(8))));
        have_scale = true;
        continue;
      }
      if (!have_scale) parse_fail("missing scale header");
      if (line.rfind("# node ", 0) == 0) {
        node = index_of(std::stoll(line.substr(7)));
        continue;
      }
      if (node < 0) parse_fail("row before node header");
      std::vector<std::string> fields;
      std::stringstream ss(line);
      std::string field;
      while (std::getline(ss, field, ',')) fields.push_back(field);
      if (fields.size() != 8) parse_fail("expected 8 fields: " + line);
      Dyadic f(BigInt(fields[1]), static_cast<unsigned>(std::stoul(fields[2])));
      IntervalProfile& p = sol.mutable_profile(node);
      p.cutoffs.push_back(f.Units64At(sol.scale()));
      p.terminals.push_back(index_of(std::stoll(fields[3])));
      auto choice = [&](const std::string& id, const std::string& idx) {
        std::int64_t v = std::stoll(id);
        return IntervalProfile::Choice{v < 0 ? -1 : index_of(v), std::stoi(idx) - 1};
      };
      p.white.push_back(choice(fields[4], fields[5]));
      p.black.push_back(choice(fields[6], fields[7]));
    } catch (const GameError&) {
      throw;
    } catch (const std::exception&) {
      parse_fail("bad number in: " + line);
    }
  }
  if (!have_scale || !sol.has_profile(game.root())) parse_fail("solution has no root profile");
  for (int v = 0; v < game.num_nodes(); ++v) {
    const IntervalProfile& p = sol.profile(v);
    for (int a = 0; a < p.size(); ++a) {
      if (a == 0 ? p.cutoffs[a] != 0 : p.cutoffs[a] <= p.cutoffs[a - 1]) {
        parse_fail("cutoffs must start at 0 and increase");
      }
      for (const auto& choice : {p.white[a], p.black[a]}) {
        if (choice.child < 0) continue;
        const auto& kids = game.children(v);
        if (std::find(kids.begin(), kids.end(), choice.child) == kids.end() ||
            choice.index < 0 || choice.index >= sol.profile(choice.child).size()) {
          parse_fail("choice points outside a child profile");
        }
      }
    }
  }
  return sol;
}

}  // namespace scripbid
