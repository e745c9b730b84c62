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

#include "scripbid/compilers.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "scripbid/error.h"

namespace scripbid {
namespace {

using Json = nlohmann::ordered_json;

std::vector<int> SaleOrder(const SsaSpec& spec) {
  if (spec.order.empty()) {
    std::vector<int> order(spec.k);
    std::iota(order.begin(), order.end(), 0);
    return order;
  }
  if (static_cast<int>(spec.order.size()) != spec.k) {
    throw GameError(ErrorCode::kInvalidSpec, "order length differs from k");
  }
  std::vector<char> seen(spec.k, 0);
  for (int j : spec.order) {
    if (j < 0 || j >= spec.k || seen[j]) {
      throw GameError(ErrorCode::kInvalidSpec, "order is not a permutation");
    }
    seen[j] = 1;
  }
  return spec.order;
}

Rational JsonRational(const Json& v) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_string()) return ParseRational(v.get<std::string>());
  throw GameError(ErrorCode::kParse, "value must be an integer or \"p/q\"");
}

std::vector<std::int64_t> ParseTupleKey(const std::string& key) {
  std::vector<std::int64_t> out;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, ',')) {
    Rational r = ParseRational(part);
    if (boost::multiprecision::denominator(r) != 1) {
      throw GameError(ErrorCode::kParse, "bad tuple key " + key);
    }
    out.push_back(boost::multiprecision::numerator(r).convert_to<std::int64_t>());
  }
  return out;
}

const Rational& LookupF(const std::map<std::vector<std::int64_t>, Rational>& f,
                        const std::vector<std::int64_t>& key) {
  auto it = f.find(key);
  if (it == f.end()) {
    std::string text;
    for (size_t i = 0; i < key.size(); ++i) text += (i ? "," : "") + std::to_string(key[i]);
    throw GameError(ErrorCode::kMissingTableEntry, "f undefined at (" + text + ")");
  }
  return it->second;
}

std::string PairLabel(std::int64_t a, std::int64_t b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

Rational BundleValue(const SsaSpec& spec, Player player, std::uint64_t mask) {
  const std::uint64_t all = spec.k >= 64 ? ~0ULL : ((1ULL << spec.k) - 1);
  std::uint64_t own = player == Player::kWhite ? mask : (all & ~mask);
  return std::visit(
      [&](const auto& v) -> Rational {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, TableValuation>) {
          const auto& table = player == Player::kWhite ? v.white : v.black;
          if (own >= table.size()) {
            throw GameError(ErrorCode::kMissingTableEntry, "bundle outside the value table");
          }
          return table[own];
        } else if constexpr (std::is_same_v<V, AdditiveValuation>) {
          const auto& values = player == Player::kWhite ? v.white : v.black;
          Rational sum = 0;
          for (int j = 0; j < spec.k; ++j) {
            if (own >> j & 1) sum += values.at(j);
          }
          return sum;
        } else {
          size_t q = v.weights.empty() ? 0 : v.weights[0].size();
          std::vector<std::int64_t> sums(q, 0);
          for (int j = 0; j < spec.k; ++j) {
            if (!(own >> j & 1)) continue;
            for (size_t r = 0; r < q; ++r) sums[r] += v.weights.at(j).at(r);
          }
          return LookupF(player == Player::kWhite ? v.f_white : v.f_black, sums);
        }
      },
      spec.valuation);
}

SsaSpec ParseSsaJson(std::string_view text) {
  try {
    Json doc = Json::parse(text);
    SsaSpec spec;
    spec.k = doc.at("k").get<int>();
    if (spec.k < 0) throw GameError(ErrorCode::kInvalidSpec, "k must be non-negative");
    if (doc.contains("order")) {
      for (const Json& j : doc.at("order")) spec.order.push_back(j.get<int>() - 1);
    }
    const Json& val = doc.at("valuation");
    std::string type = val.at("type").get<std::string>();
    if (type == "table") {
      TableValuation t;
      for (const Json& x : val.at("values").at(0)) t.white.push_back(JsonRational(x));
      for (const Json& x : val.at("values").at(1)) t.black.push_back(JsonRational(x));
      if (spec.k > 30) throw GameError(ErrorCode::kTooManyItems, "table valuations need k <= 30");
      size_t need = size_t{1} << spec.k;
      if (t.white.size() != need || t.black.size() != need) {
        throw GameError(ErrorCode::kMissingTableEntry, "table must list all 2^k bundles");
      }
      spec.valuation = std::move(t);
    } else if (type == "additive") {
      AdditiveValuation a;
      a.white = val.at("values").at(0).get<std::vector<std::int64_t>>();
      a.black = val.at("values").at(1).get<std::vector<std::int64_t>>();
      if (static_cast<int>(a.white.size()) != spec.k || static_cast<int>(a.black.size()) != spec.k) {
        throw GameError(ErrorCode::kLengthMismatch, "additive values must have k entries");
      }
      spec.valuation = std::move(a);
    } else if (type == "multiweight") {
      MultiWeightValuation m;
      m.weights = val.at("weights").get<std::vector<std::vector<std::int64_t>>>();
      if (static_cast<int>(m.weights.size()) != spec.k) {
        throw GameError(ErrorCode::kLengthMismatch, "one weight vector per item");
      }
      for (const auto& [key, value] : val.at("f").at(0).items()) {
        m.f_white[ParseTupleKey(key)] = JsonRational(value);
      }
      for (const auto& [key, value] : val.at("f").at(1).items()) {
        m.f_black[ParseTupleKey(key)] = JsonRational(value);
      }
      spec.valuation = std::move(m);
    } else {
      throw GameError(ErrorCode::kInvalidSpec, "unknown valuation type " + type);
    }
    SaleOrder(spec);
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw GameError(ErrorCode::kParse, e.what());
  }
}

BiddingGame CompileNaive(const SsaSpec& spec, int max_items) {
  if (spec.k > max_items || spec.k > 30) {
    throw GameError(ErrorCode::kTooManyItems,
                    std::to_string(spec.k) + " items exceed the cap of " +
                        std::to_string(std::min(max_items, 30)));
  }
  std::vector<int> order = SaleOrder(spec);
  BiddingGame game;
  // Heap layout: node (d, p) where p encodes who won each of the first d
  // sales (bit set = Black). Leaves are added first so ids stay contiguous.
  std::function<int(int, std::uint64_t)> build = [&](int d, std::uint64_t white_mask) -> int {
    if (d == spec.k) {
      return game.AddTerminal(BundleValue(spec, Player::kWhite, white_mask),
                              BundleValue(spec, Player::kBlack, white_mask));
    }
    int self = game.AddInternal();
    int item = order[d];
    int left = build(d + 1, white_mask | (1ULL << item));
    int right = build(d + 1, white_mask);
    game.SetChildren(self, {left, right});
    return self;
  };
  game.SetRoot(build(0, 0));
  game.Validate();
  return game;
}

BiddingGame CompileAdditive(const SsaSpec& spec) {
  const auto* add = std::get_if<AdditiveValuation>(&spec.valuation);
  if (!add) throw GameError(ErrorCode::kInvalidSpec, "additive valuation required");
  for (int j = 0; j < spec.k; ++j) {
    if (add->white.at(j) < 0 || add->black.at(j) < 0) {
      throw GameError(ErrorCode::kNegativeValue, "item " + std::to_string(j + 1));
    }
  }
  std::vector<int> order = SaleOrder(spec);
  BiddingGame game;
  // Build level by level; map (m1,m2) -> node index within the level.
  std::vector<std::map<std::pair<std::int64_t, std::int64_t>, int>> levels(spec.k + 1);
  levels[0][{0, 0}] = -1;
  for (int d = 0; d < spec.k; ++d) {
    int item = order[d];
    for (auto& [state, idx] : levels[d]) {
      levels[d + 1][{state.first + add->white[item], state.second}] = -1;
      levels[d + 1][{state.first, state.second + add->black[item]}] = -1;
    }
  }
  for (int d = 0; d <= spec.k; ++d) {
    for (auto& [state, idx] : levels[d]) {
      idx = d == spec.k ? game.AddTerminal(state.first, state.second, PairLabel(state.first, state.second))
                        : game.AddInternal({}, PairLabel(state.first, state.second));
    }
  }
  for (int d = 0; d < spec.k; ++d) {
    int item = order[d];
    for (auto& [state, idx] : levels[d]) {
      int left = levels[d + 1].at({state.first + add->white[item], state.second});
      int right = levels[d + 1].at({state.first, state.second + add->black[item]});
      game.SetChildren(idx, left == right ? std::vector<int>{left} : std::vector<int>{left, right});
    }
  }
  game.SetRoot(levels[0].begin()->second);
  game.Validate();
  return game;
}

BiddingGame CompileMultiWeight(const SsaSpec& spec) {
  const auto* mw = std::get_if<MultiWeightValuation>(&spec.valuation);
  if (!mw) throw GameError(ErrorCode::kInvalidSpec, "multi-weight valuation required");
  if (static_cast<int>(mw->weights.size()) != spec.k) {
    throw GameError(ErrorCode::kLengthMismatch, "one weight vector per item");
  }
  const size_t q = spec.k == 0 ? (mw->f_white.empty() ? 1 : mw->f_white.begin()->first.size())
                               : mw->weights[0].size();
  if (q == 0) throw GameError(ErrorCode::kInvalidSpec, "weight dimension must be at least 1");
  for (const auto& w : mw->weights) {
    if (w.size() != q) throw GameError(ErrorCode::kLengthMismatch, "weight vectors differ in length");
    for (std::int64_t x : w) {
      if (x < 0) throw GameError(ErrorCode::kNegativeValue, "negative weight");
    }
  }
  std::vector<int> order = SaleOrder(spec);
  using State = std::vector<std::int64_t>;  // [m^1_1, m^1_2, ..., m^q_1, m^q_2]
  auto give = [&](const State& s, int item, int player) {
    State out = s;
    for (size_t r = 0; r < q; ++r) out[2 * r + player] += mw->weights[item][r];
    return out;
  };
  std::vector<std::map<State, int>> levels(spec.k + 1);
  levels[0][State(2 * q, 0)] = -1;
  for (int d = 0; d < spec.k; ++d) {
    for (auto& [s, idx] : levels[d]) {
      levels[d + 1][give(s, order[d], 0)] = -1;
      levels[d + 1][give(s, order[d], 1)] = -1;
    }
  }
  BiddingGame game;
  for (int d = 0; d <= spec.k; ++d) {
    for (auto& [s, idx] : levels[d]) {
      if (d < spec.k) {
        idx = game.AddInternal();
        continue;
      }
      State own1(q), own2(q);
      for (size_t r = 0; r < q; ++r) {
        own1[r] = s[2 * r];
        own2[r] = s[2 * r + 1];
      }
      idx = game.AddTerminal(LookupF(mw->f_white, own1), LookupF(mw->f_black, own2));
    }
  }
  for (int d = 0; d < spec.k; ++d) {
    for (auto& [s, idx] : levels[d]) {
      int left = levels[d + 1].at(give(s, order[d], 0));
      int right = levels[d + 1].at(give(s, order[d], 1));
      game.SetChildren(idx, left == right ? std::vector<int>{left} : std::vector<int>{left, right});
    }
  }
  game.SetRoot(levels[0].begin()->second);
  game.Validate();
  return game;
}

SinglePeakedResult CompileSinglePeaked(const std::vector<int>& ideal_white,
                                       const std::vector<int>& ideal_black,
                                       const std::vector<std::int64_t>& weight_white,
                                       const std::vector<std::int64_t>& weight_black) {
  const size_t n = ideal_white.size();
  if (ideal_black.size() != n || weight_white.size() != n || weight_black.size() != n) {
    throw GameError(ErrorCode::kLengthMismatch, "ideal points and weights must have equal length");
  }
  SinglePeakedResult result;
  AdditiveValuation add;
  result.fixed.assign(n, -1);
  for (size_t j = 0; j < n; ++j) {
    if (ideal_white[j] == ideal_black[j]) {
      result.fixed[j] = ideal_white[j];
      continue;
    }
    result.coordinates.push_back(static_cast<int>(j));
    add.white.push_back(weight_white[j]);
    add.black.push_back(weight_black[j]);
  }
  result.spec.k = static_cast<int>(result.coordinates.size());
  result.spec.valuation = std::move(add);
  return result;
}

BiddingGame CompileBargaining(const BargainingSpec& spec) {
  if (spec.frontier.empty()) throw GameError(ErrorCode::kEmptyFrontier, "frontier has no points");
  auto points = spec.frontier;
  std::sort(points.begin(), points.end());
  for (size_t i = 0; i < points.size(); ++i) {
    if (points[i].first < 0 || points[i].second < 0) {
      throw GameError(ErrorCode::kInvalidSpec, "frontier points must be non-negative");
    }
    if (i > 0 && !(points[i].first > points[i - 1].first && points[i].second < points[i - 1].second)) {
      throw GameError(ErrorCode::kInvalidSpec, "frontier must be strictly decreasing");
    }
  }
  auto on_frontier = [&](std::int64_t x, std::int64_t y) {
    return std::binary_search(points.begin(), points.end(), std::make_pair(x, y));
  };
  auto inside = [&](std::int64_t x, std::int64_t y) {
    for (const auto& p : points) {
      if (x <= p.first && y <= p.second) return true;
    }
    return false;
  };
  BiddingGame game;
  std::map<std::pair<std::int64_t, std::int64_t>, int> index;
  std::function<int(std::int64_t, std::int64_t)> visit = [&](std::int64_t x, std::int64_t y) -> int {
    auto it = index.find({x, y});
    if (it != index.end()) return it->second;
    int self;
    if (on_frontier(x, y)) {
      self = game.AddTerminal(x, y, PairLabel(x, y));
    } else {
      self = game.AddInternal({}, PairLabel(x, y));
      std::vector<int> children;
      if (inside(x + 1, y)) children.push_back(visit(x + 1, y));
      if (inside(x, y + 1)) children.push_back(visit(x, y + 1));
      game.SetChildren(self, std::move(children));
    }
    index[{x, y}] = self;
    return self;
  };
  game.SetRoot(visit(0, 0));
  game.Validate();
  return game;
}

BargainingSpec LinearFrontier(int n) {
  BargainingSpec spec;
  for (int x = 0; x <= n; ++x) spec.frontier.push_back({x, n - x});
  return spec;
}

BiddingGame ExpandToBinary(const BiddingGame& game) {
  BiddingGame out;
  std::int64_t next_id = 0;
  for (int i = 0; i < game.num_nodes(); ++i) next_id = std::max(next_id, game.external_id(i) + 1);
  for (int i = 0; i < game.num_nodes(); ++i) {
    int idx = game.is_terminal(i)
                  ? out.AddTerminal(game.utility(i).u1, game.utility(i).u2, game.label(i))
                  : out.AddInternal({}, game.label(i));
    out.SetExternalId(idx, game.external_id(i));
  }
  for (int i = 0; i < game.num_nodes(); ++i) {
    if (game.is_terminal(i)) continue;
    const auto& ch = game.children(i);
    if (ch.size() <= 2) {
      out.SetChildren(i, ch);
      continue;
    }
    int current = i;
    for (size_t j = 0; j + 2 < ch.size(); ++j) {
      int aux = out.AddInternal();
      out.SetExternalId(aux, next_id++);
      out.SetChildren(current, {ch[j], aux});
      current = aux;
    }
    out.SetChildren(current, {ch[ch.size() - 2], ch.back()});
  }
  out.SetRoot(game.root());
  out.Validate();
  return out;
}

BiddingGame PadToBalanced(const BiddingGame& game) {
  if (!game.is_binary()) throw GameError(ErrorCode::kNotBinary, "padding needs a binary game");
  const int h = game.height();
  BiddingGame out;
  std::function<int(int, const UtilityPair&)> pad = [&](int remaining, const UtilityPair& u) -> int {
    if (remaining == 0) return out.AddTerminal(u.u1, u.u2);
    int self = out.AddInternal();
    int a = pad(remaining - 1, u);
    int b = pad(remaining - 1, u);
    out.SetChildren(self, {a, b});
    return self;
  };
  std::function<int(int, int)> unfold = [&](int node, int depth) -> int {
    if (game.is_terminal(node)) return pad(h - depth, game.utility(node));
    int self = out.AddInternal({}, game.label(node));
    const auto& ch = game.children(node);
    int a = unfold(ch[0], depth + 1);
    int b = unfold(ch.size() > 1 ? ch[1] : ch[0], depth + 1);
    out.SetChildren(self, {a, b});
    return self;
  };
  out.SetRoot(unfold(game.root(), 0));
  out.Validate();
  return out;
}

}  // namespace scripbid
