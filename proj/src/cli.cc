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

#include "scripbid/cli.h"

#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "scripbid/analysis.h"
#include "scripbid/compilers.h"
#include "scripbid/error.h"
#include "scripbid/fast_solver.h"
#include "scripbid/fixtures.h"
#include "scripbid/game_io.h"
#include "scripbid/grid_solver.h"
#include "scripbid/random_games.h"
#include "scripbid/richman.h"

namespace scripbid {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AuditFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string game;
  std::string in;
  std::string out;
  std::string method = "grid";
  std::string budget;
  std::string epsilon;
  std::int64_t discrete = 0;
  std::string tie_breaks;
  std::string checks = "pareto,monotone,surjective,pspe,intervals";
  std::string solution;
  std::string dump_solution;
  std::uint64_t seed = 1;
  std::string format;
  int threads = 1;
  std::string fixture;
  std::string compiler = "auto";
  bool sweep = false;
  bool binary = false;
  bool balanced = false;
};

std::vector<std::string> Split(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

BiddingGame LoadGame(const Options& opt) {
  if (!opt.fixture.empty() && !opt.game.empty()) {
    throw UsageError("give either --game or --fixture");
  }
  if (opt.fixture == "random") {
    std::mt19937_64 rng(opt.seed);
    return RandomTree(rng, RandomTreeOptions{});
  }
  if (!opt.fixture.empty()) return Fixture(opt.fixture);
  if (opt.game.empty()) throw UsageError("--game or --fixture is required");
  return ParseGameJson(ReadFile(opt.game));
}

std::map<int, Player> LoadTieBreaks(const Options& opt, const BiddingGame& game) {
  std::map<int, Player> ties;
  if (opt.tie_breaks.empty()) {
    if (opt.fixture == "hgame") ties = HGameTieBreaks();
    return ties;
  }
  Json doc;
  try {
    doc = Json::parse(ReadFile(opt.tie_breaks));
  } catch (const nlohmann::json::exception& e) {
    throw GameError(ErrorCode::kParse, e.what());
  }
  if (!doc.is_object()) throw GameError(ErrorCode::kParse, "tie-breaks must be an object");
  for (const auto& [key, value] : doc.items()) {
    int node = game.IndexOf(std::stoll(key));
    if (node < 0) throw GameError(ErrorCode::kDanglingChild, "tie-break for unknown node " + key);
    std::string who = value.is_string() ? value.get<std::string>() : "";
    if (who == "white") {
      ties[node] = Player::kWhite;
    } else if (who == "black") {
      ties[node] = Player::kBlack;
    } else {
      throw GameError(ErrorCode::kParse, "tie-break must be \"white\" or \"black\"");
    }
  }
  return ties;
}

GridConfig MakeGridConfig(const Options& opt, const BiddingGame& game) {
  GridConfig cfg;
  if (!opt.epsilon.empty() && opt.discrete > 0) {
    throw UsageError("--epsilon and --discrete are exclusive");
  }
  if (!opt.epsilon.empty()) cfg.epsilon = Dyadic::Parse(opt.epsilon);
  if (opt.discrete > 0) cfg.discrete_total = opt.discrete;
  cfg.tie_breaks = LoadTieBreaks(opt, game);
  cfg.threads = opt.threads;
  return cfg;
}

FastSolution SolveFast(const Options& opt, const BiddingGame& game) {
  if (!opt.epsilon.empty() || opt.discrete > 0 || !opt.tie_breaks.empty()) {
    throw UsageError("the fast method has a fixed grid and ties to White");
  }
  FastSolution sol = opt.solution.empty() ? FindPspeFast(game)
                                          : LoadFastSolution(game, ReadFile(opt.solution));
  if (!opt.dump_solution.empty()) WriteFile(opt.dump_solution, DumpFastSolution(sol));
  return sol;
}

OutcomeMap SolveMap(const Options& opt, const BiddingGame& game) {
  if (opt.method == "fast") return SolveFast(opt, game).outcome_map();
  if (opt.method != "grid") throw UsageError("--method must be grid or fast");
  return FindLowerPspeGrid(game, MakeGridConfig(opt, game)).outcome_map();
}

Dyadic ParseBudget(const std::string& text, const Dyadic& total) {
  Dyadic b;
  try {
    b = Dyadic::Parse(text);
  } catch (const GameError& e) {
    throw UsageError(std::string("bad --budget: ") + e.what());
  }
  if (b < Dyadic(0) || b > total) {
    throw UsageError("budget " + text + " out of [0," + total.ToString() + "]");
  }
  return b;
}

std::string Format(const Options& opt, const std::string& fallback) {
  std::string f = opt.format.empty() ? fallback : opt.format;
  if (f != "csv" && f != "json") throw UsageError("--format must be csv or json");
  return f;
}

std::string MapText(const BiddingGame& game, const OutcomeMap& map, bool ranks,
                    const std::string& format) {
  std::ostringstream os;
  if (format == "json") {
    Json doc;
    doc["total"] = map.total.ToString();
    Json rows = Json::array();
    for (int j = 0; j < map.size(); ++j) {
      int t = map.outcomes[j];
      Json row;
      row["cutoff"] = map.cutoffs[j].ToString();
      row["terminal"] = game.external_id(t);
      row["u1"] = RationalToString(game.utility(t).u1);
      row["u2"] = RationalToString(game.utility(t).u2);
      if (ranks) {
        row["rank1"] = SatisfactionRank(game, t, Player::kWhite);
        row["rank2"] = SatisfactionRank(game, t, Player::kBlack);
      }
      rows.push_back(std::move(row));
    }
    doc["intervals"] = std::move(rows);
    return doc.dump(1) + "\n";
  }
  os << "cutoff_num,cutoff_scale,terminal_id,u1,u2" << (ranks ? ",rank1,rank2" : "") << "\n";
  for (int j = 0; j < map.size(); ++j) {
    int t = map.outcomes[j];
    os << map.cutoffs[j].numerator() << "," << map.cutoffs[j].scale() << ","
       << game.external_id(t) << "," << RationalToString(game.utility(t).u1) << ","
       << RationalToString(game.utility(t).u2);
    if (ranks) {
      os << "," << SatisfactionRank(game, t, Player::kWhite) << ","
         << SatisfactionRank(game, t, Player::kBlack);
    }
    os << "\n";
  }
  return os.str();
}

void Emit(const Options& opt, std::ostream& out, const std::string& text) {
  if (opt.out.empty()) {
    out << text;
  } else {
    WriteFile(opt.out, text);
  }
}

int RunCompile(const Options& opt, std::ostream& out) {
  if (opt.in.empty()) throw UsageError("compile needs --in");
  std::string text = ReadFile(opt.in);
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw GameError(ErrorCode::kParse, e.what());
  }
  BiddingGame game;
  if (doc.is_object() && doc.contains("frontier")) {
    BargainingSpec spec;
    try {
      for (const Json& p : doc.at("frontier")) {
        spec.frontier.push_back({p.at(0).get<std::int64_t>(), p.at(1).get<std::int64_t>()});
      }
    } catch (const nlohmann::json::exception& e) {
      throw GameError(ErrorCode::kParse, e.what());
    }
    game = CompileBargaining(spec);
  } else {
    SsaSpec spec = ParseSsaJson(text);
    std::string c = opt.compiler;
    if (c == "auto") {
      c = std::holds_alternative<AdditiveValuation>(spec.valuation)      ? "additive"
          : std::holds_alternative<MultiWeightValuation>(spec.valuation) ? "multiweight"
                                                                         : "naive";
    }
    if (c == "naive") {
      game = CompileNaive(spec);
    } else if (c == "additive") {
      game = CompileAdditive(spec);
    } else if (c == "multiweight") {
      game = CompileMultiWeight(spec);
    } else {
      throw UsageError("--compiler must be auto, naive, additive or multiweight");
    }
  }
  if (opt.binary) game = ExpandToBinary(game);
  if (opt.balanced) game = PadToBalanced(game);
  Emit(opt, out, DumpGameJson(game));
  return kExitOk;
}

int RunSolve(const Options& opt, std::ostream& out, bool ranks) {
  BiddingGame game = LoadGame(opt);
  OutcomeMap map = SolveMap(opt, game);
  if (ranks || opt.sweep || opt.budget.empty()) {
    Emit(opt, out, MapText(game, map, ranks, Format(opt, "csv")));
    return kExitOk;
  }
  Dyadic b = ParseBudget(opt.budget, map.total);
  int t = map.At(b);
  std::string u1 = RationalToString(game.utility(t).u1);
  std::string u2 = RationalToString(game.utility(t).u2);
  if (Format(opt, "csv") == "json") {
    Json doc;
    doc["budget"] = b.ToString();
    doc["terminal"] = game.external_id(t);
    doc["u1"] = u1;
    doc["u2"] = u2;
    Emit(opt, out, doc.dump(1) + "\n");
  } else {
    Emit(opt, out,
         "budget,terminal_id,u1,u2\n" + b.ToString() + "," + std::to_string(game.external_id(t)) +
             "," + u1 + "," + u2 + "\n");
  }
  return kExitOk;
}

int RunVerify(const Options& opt, std::ostream& out) {
  BiddingGame game = LoadGame(opt);
  std::vector<std::string> checks = Split(opt.checks);
  std::optional<GridSolution> grid;
  auto grid_solution = [&]() -> const GridSolution& {
    if (!grid) grid = FindLowerPspeGrid(game, MakeGridConfig(opt, game));
    return *grid;
  };
  std::optional<OutcomeMap> map_cache;
  auto map = [&]() -> const OutcomeMap& {
    if (!map_cache) {
      map_cache = opt.method == "fast" ? SolveFast(opt, game).outcome_map()
                                       : grid_solution().outcome_map();
    }
    return *map_cache;
  };
  if (opt.method != "grid" && opt.method != "fast") {
    throw UsageError("--method must be grid or fast");
  }
  std::vector<AuditReport> reports;
  for (const std::string& check : checks) {
    if (check == "pareto") {
      reports.push_back(CheckParetoOptimal(game, map()));
    } else if (check == "monotone") {
      reports.push_back(CheckMonotone(game, map()));
    } else if (check == "surjective") {
      reports.push_back(CheckSurjective(game, map()));
    } else if (check == "pspe") {
      reports.push_back(VerifyPspe(grid_solution()));
    } else if (check == "intervals") {
      if (opt.discrete > 0) throw UsageError("intervals needs continuous budgets");
      Options fine_opt = opt;
      Dyadic eps = opt.epsilon.empty() ? Dyadic::Pow2(-(game.height() + 2))
                                       : Dyadic::Parse(opt.epsilon);
      fine_opt.epsilon = eps.Half().ToString();
      GridSolution fine = FindLowerPspeGrid(game, MakeGridConfig(fine_opt, game));
      reports.push_back(CheckBudgetIntervals(game, fine.outcome_map(), map()));
    } else if (check == "satisfaction") {
      reports.push_back(MstCheck(game, map()));
    } else if (check == "game-monotone") {
      if (opt.discrete <= 0) throw UsageError("game-monotone needs --discrete M");
      reports.push_back(CheckGameMonotone(game, EnumeratePspeOutcomes(game, opt.discrete)));
    } else {
      throw UsageError("unknown check " + check);
    }
  }
  Emit(opt, out, ReportsToJson(game, reports));
  for (const AuditReport& r : reports) {
    if (!r.pass()) throw AuditFailed(r.property + " failed");
  }
  return kExitOk;
}

int RunRichman(const Options& opt, std::ostream& out) {
  ZeroSumGame zs;
  if (opt.fixture == "tictactoe") {
    zs = TicTacToe();
  } else if (!opt.fixture.empty()) {
    zs = ZeroSumFromBidding(Fixture(opt.fixture));
  } else if (!opt.game.empty()) {
    std::string text = ReadFile(opt.game);
    bool bidding = false;
    try {
      bidding = Json::parse(text).contains("terminals");
    } catch (const nlohmann::json::exception& e) {
      throw GameError(ErrorCode::kParse, e.what());
    }
    zs = bidding ? ZeroSumFromBidding(ParseGameJson(text)) : ParseZeroSumJson(text);
  } else {
    throw UsageError("--game or --fixture is required");
  }
  RichmanValues values = ComputeRichmanValues(zs);
  if (Format(opt, "json") == "json") {
    Emit(opt, out, RichmanValuesJson(zs, values));
    return kExitOk;
  }
  std::vector<int> order;
  for (int v = 0; v < zs.num_nodes(); ++v) {
    if (values.reachable[v]) order.push_back(v);
  }
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return zs.external_id(a) < zs.external_id(b); });
  std::ostringstream os;
  os << "node_id,value\n";
  for (int v : order) os << zs.external_id(v) << "," << RationalToString(values.value[v]) << "\n";
  Emit(opt, out, os.str());
  return kExitOk;
}

int RunPrices(const Options& opt, std::ostream& out) {
  BiddingGame game = LoadGame(opt);
  if (opt.method != "grid") throw UsageError("prices uses the grid method");
  GridSolution sol = FindLowerPspeGrid(game, MakeGridConfig(opt, game));
  Dyadic b = ParseBudget(opt.budget.empty() ? "1/2" : opt.budget, sol.total());
  if (opt.budget.empty() && sol.discrete()) b = sol.BudgetOf(sol.total_units() / 2);
  std::vector<Dyadic> prices = PriceTrajectory(sol, b);
  std::ostringstream os;
  if (Format(opt, "csv") == "json") {
    Json rows = Json::array();
    for (const Dyadic& p : prices) rows.push_back(p.ToString());
    os << rows.dump() << "\n";
  } else {
    os << "round,bid_num,bid_scale\n";
    for (size_t r = 0; r < prices.size(); ++r) {
      os << r + 1 << "," << prices[r].numerator() << "," << prices[r].scale() << "\n";
    }
  }
  Emit(opt, out, os.str());
  return kExitOk;
}

int RunFixtures(const Options& opt, std::ostream& out) {
  if (!opt.fixture.empty()) {
    if (opt.fixture == "tictactoe") {
      Emit(opt, out, DumpZeroSumJson(TicTacToe()));
    } else {
      Emit(opt, out, DumpGameJson(LoadGame(opt)));
    }
    return kExitOk;
  }
  std::filesystem::path dir = opt.out.empty() ? "." : opt.out;
  std::filesystem::create_directories(dir);
  for (const std::string& name : DefaultFixtureNames()) {
    std::filesystem::path p = dir / (name + ".json");
    WriteFile(p.string(), DumpGameJson(Fixture(name)));
    out << p.string() << "\n";
  }
  std::filesystem::path p = dir / "tictactoe.json";
  WriteFile(p.string(), DumpZeroSumJson(TicTacToe()));
  out << p.string() << "\n";
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact equilibria of two-player bidding games", "scripbid"};
  app.require_subcommand(1);
  auto common = [&](CLI::App* sub) {
    sub->add_option("--game", opt.game, "Game file (JSON)");
    sub->add_option("--fixture", opt.fixture, "Built-in game instead of --game");
    sub->add_option("--out", opt.out, "Output file (default stdout)");
    sub->add_option("--format", opt.format, "csv or json");
  };
  auto solving = [&](CLI::App* sub) {
    sub->add_option("--method", opt.method, "grid or fast");
    sub->add_option("--epsilon", opt.epsilon, "Grid step 2^-k (grid method)");
    sub->add_option("--discrete", opt.discrete, "Integer budgets summing to M")
        ->check(CLI::PositiveNumber);
    sub->add_option("--tie-breaks", opt.tie_breaks, "JSON map node id -> white|black");
    sub->add_option("--threads", opt.threads, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--seed", opt.seed, "Seed for --fixture random");
    sub->add_option("--solution", opt.solution, "Load a fast-solver dump");
    sub->add_option("--dump-solution", opt.dump_solution, "Write the fast-solver tables");
  };

  CLI::App* compile = app.add_subcommand("compile", "Compile an auction or bargaining spec");
  compile->add_option("--in", opt.in, "Spec file (JSON)")->required();
  compile->add_option("--out", opt.out, "Output game file (default stdout)");
  compile->add_option("--compiler", opt.compiler, "auto, naive, additive or multiweight");
  compile->add_flag("--binary", opt.binary, "Expand wide nodes into binary chains");
  compile->add_flag("--balanced", opt.balanced, "Pad to a balanced tree");

  CLI::App* solve = app.add_subcommand("solve", "Outcome at a budget, or the full map");
  common(solve);
  solving(solve);
  solve->add_option("--budget", opt.budget, "White budget, e.g. 3/2^2");
  solve->add_flag("--sweep", opt.sweep, "Print every budget interval");

  CLI::App* sweep = app.add_subcommand("sweep", "Full outcome map with satisfaction ranks");
  common(sweep);
  solving(sweep);

  CLI::App* verify = app.add_subcommand("verify", "Audit an equilibrium");
  common(verify);
  solving(verify);
  verify->add_option("--checks", opt.checks,
                     "pareto,monotone,surjective,pspe,intervals,satisfaction,game-monotone");

  CLI::App* richman = app.add_subcommand("richman", "Richman values of a win/lose game");
  common(richman);

  CLI::App* prices = app.add_subcommand("prices", "Winning bids along equilibrium play");
  common(prices);
  solving(prices);
  prices->add_option("--budget", opt.budget, "White budget, default half");

  CLI::App* fixtures = app.add_subcommand("fixtures", "Write the built-in games");
  fixtures->add_option("--out", opt.out, "Directory, or file with --fixture");
  fixtures->add_option("--fixture", opt.fixture, "Print one fixture");
  fixtures->add_option("--seed", opt.seed, "Seed for --fixture random");

  std::vector<std::string> argv_store{"scripbid"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& s : argv_store) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (compile->parsed()) return RunCompile(opt, out);
    if (solve->parsed()) return RunSolve(opt, out, false);
    if (sweep->parsed()) return RunSolve(opt, out, true);
    if (verify->parsed()) return RunVerify(opt, out);
    if (richman->parsed()) return RunRichman(opt, out);
    if (prices->parsed()) return RunPrices(opt, out);
    if (fixtures->parsed()) return RunFixtures(opt, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const AuditFailed& e) {
    err << "audit: " << e.what() << "\n";
    return kExitAuditFailed;
  } catch (const GameError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitUsage;
}

}  // namespace scripbid
