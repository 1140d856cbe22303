// Command-line front end: matches, series, sweeps, overhead measurement,
// standalone proof-number solving and perft.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pnmcts/csv.h"
#include "pnmcts/games.h"
#include "pnmcts/harness.h"
#include "pnmcts/pns.h"
#include "pnmcts/search.h"
#include "pnmcts/search_config.h"

namespace {

using namespace pnmcts;

struct GameOptions {
  std::string game = "loa8";
  int max_plies = 0;

  AnyGame Make() const {
    return MakeGame(game, max_plies > 0 ? std::optional<int>(max_plies)
                                        : std::nullopt);
  }
};

struct AgentOptions {
  std::string agent_a = "FSU";
  std::string agent_b = "uct";
  std::string budget;
  std::uint64_t seed = 1;
  std::string out;
  int jobs = 1;
  bool quiet = false;

  SearchConfig Agent(const std::string& spec) const {
    SearchConfig config = ParseAgentSpec(spec).search;
    if (!budget.empty()) config.budget = Budget::Parse(budget);
    config.Validate();
    return config;
  }
};

void AddGameOptions(CLI::App* cmd, GameOptions& g) {
  cmd->add_option("--game", g.game,
                  "loa7 | loa8 | awari | knightthrough | tree:<file>")
      ->capture_default_str();
  cmd->add_option("--max-plies", g.max_plies,
                  "override the game's ply cap (0 = default)");
}

void AddAgentOptions(CLI::App* cmd, AgentOptions& a, bool with_n) {
  cmd->add_option("--agent-a", a.agent_a,
                  "config file or inline spec, e.g. FSU,c_pn=2,layers=double")
      ->capture_default_str();
  cmd->add_option("--agent-b", a.agent_b, "config file or inline spec")
      ->capture_default_str();
  cmd->add_option("--budget", a.budget,
                  "per-move budget for both agents: iters:<k> | ms:<k>");
  cmd->add_option("--seed", a.seed, "base seed")->capture_default_str();
  cmd->add_option("--out", a.out, "CSV output path");
  cmd->add_flag("-q,--quiet", a.quiet, "no per-game progress on stderr");
  if (with_n) {
    cmd->add_option("--jobs", a.jobs, "matches played in parallel")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
  }
}

MatchCallback Progress(const AgentOptions& a, int total) {
  if (a.quiet) return {};
  return [total](const MatchRecord& r, std::size_t done) {
    std::fprintf(stderr, "[%zu/%d] a_first=%d %s plies=%d\n", done, total,
                 r.a_first ? 1 : 0, std::string(ToString(r.result)).c_str(),
                 r.plies);
  };
}

void PrintStats(const SeriesStats& s) {
  std::printf("%s: n=%d wins=%d draws=%d losses=%d score=%.1f%% +- %.2f\n",
              s.label.c_str(), s.n, s.wins, s.draws, s.losses, 100.0 * s.p,
              100.0 * s.margin);
}

int RunMatchCommand(const GameOptions& g, const AgentOptions& a, bool b_first) {
  const AnyGame game = g.Make();
  const SearchConfig ca = a.Agent(a.agent_a);
  const SearchConfig cb = a.Agent(a.agent_b);
  const MatchRecord r = std::visit(
      [&](const auto& gm) { return RunMatch(gm, ca, cb, !b_first, a.seed); },
      game);
  std::ostringstream csv;
  WriteMatchCsv(csv, std::span<const MatchRecord>(&r, 1));
  if (!a.out.empty()) WriteFile(a.out, csv.str());
  std::cout << csv.str();
  return 0;
}

int RunSeriesCommand(const GameOptions& g, const AgentOptions& a, int n,
                     const std::string& summary) {
  const AnyGame game = g.Make();
  const SearchConfig ca = a.Agent(a.agent_a);
  const SearchConfig cb = a.Agent(a.agent_b);
  const SeriesResult result = std::visit(
      [&](const auto& gm) {
        return RunSeries(gm, ca, cb, n, a.seed, a.jobs, Progress(a, n));
      },
      game);
  if (!a.out.empty()) {
    std::ostringstream csv;
    WriteMatchCsv(csv, result.records);
    WriteFile(a.out, csv.str());
  }
  if (!summary.empty()) {
    std::ostringstream csv;
    WriteSeriesCsv(csv, std::span<const SeriesStats>(&result.stats, 1));
    WriteFile(summary, csv.str());
  }
  PrintStats(result.stats);
  return 0;
}

int RunSweepCommand(const GameOptions& g, const AgentOptions& a, int n,
                    const std::string& parameter,
                    const std::vector<std::string>& values) {
  const AnyGame game = g.Make();
  const SearchConfig ca = a.Agent(a.agent_a);
  const SearchConfig cb = a.Agent(a.agent_b);
  const SweepParameter p = ParseSweepParameter(parameter);
  const auto rows = std::visit(
      [&](const auto& gm) {
        return RunSweep(gm, p, values, ca, cb, n, a.seed, a.jobs,
                        Progress(a, n));
      },
      game);
  std::ostringstream csv;
  WriteSeriesCsv(csv, rows);
  if (!a.out.empty()) WriteFile(a.out, csv.str());
  for (const auto& s : rows) PrintStats(s);
  return 0;
}

int RunOverheadCommand(const GameOptions& g, const AgentOptions& a, int n) {
  const AnyGame game = g.Make();
  const SearchConfig ca = a.Agent(a.agent_a);
  const SearchConfig cb = a.Agent(a.agent_b);
  const Budget budget = Budget::Parse(a.budget.empty() ? "ms:125" : a.budget);
  const OverheadResult r = std::visit(
      [&](const auto& gm) {
        return MeasureOverhead(gm, ca, cb, n, budget, a.seed, a.jobs,
                               Progress(a, n));
      },
      game);
  const std::string csv = FormatOverheadCsv({r});
  if (!a.out.empty()) WriteFile(a.out, csv);
  std::cout << csv;
  return 0;
}

int RunSolveCommand(const GameOptions& g, const std::string& position,
                    int layer, std::uint64_t budget) {
  const AnyGame game = g.Make();
  return std::visit(
      [&](const auto& gm) {
        const auto pos =
            position.empty() ? gm.InitialPosition() : gm.Parse(position);
        const auto start = std::chrono::steady_clock::now();
        const SolveResult r = Solve(gm, pos, layer, budget);
        const double secs = std::chrono::duration<double>(
                                std::chrono::steady_clock::now() - start)
                                .count();
        std::printf("status: %s\n", std::string(ToString(r.status)).c_str());
        std::printf("nodes_expanded: %llu\n",
                    static_cast<unsigned long long>(r.nodes_expanded));
        std::printf("proven_move: %s\n",
                    r.proven_move.empty() ? "-" : r.proven_move.c_str());
        std::printf("seconds: %.3f\n", secs);
        return 0;
      },
      game);
}

int RunPerftCommand(const GameOptions& g, const std::string& position,
                    int depth) {
  const AnyGame game = g.Make();
  return std::visit(
      [&](const auto& gm) {
        const auto pos =
            position.empty() ? gm.InitialPosition() : gm.Parse(position);
        for (int d = 0; d <= depth; ++d) {
          std::printf("perft(%d) = %llu\n", d,
                      static_cast<unsigned long long>(Perft(gm, pos, d)));
        }
        return 0;
      },
      game);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"PN-MCTS search engine and experiment harness"};
  app.require_subcommand(1);

  GameOptions game;
  AgentOptions agents;
  int n = 100;
  bool b_first = false;
  std::string summary;
  std::string parameter;
  std::vector<std::string> values;
  std::string position;
  int layer = 1;
  std::uint64_t node_budget = 1'000'000;
  int depth = 3;

  auto* match = app.add_subcommand("match", "play one game, print its record");
  AddGameOptions(match, game);
  AddAgentOptions(match, agents, false);
  match->add_flag("--b-first", b_first, "agent B moves first");

  auto* series = app.add_subcommand("series", "side-swapped match series");
  AddGameOptions(series, game);
  AddAgentOptions(series, agents, true);
  series->add_option("--n", n, "games (even)")->capture_default_str();
  series->add_option("--summary", summary, "series CSV output path");

  auto* sweep = app.add_subcommand("sweep", "one series per parameter value");
  AddGameOptions(sweep, game);
  AddAgentOptions(sweep, agents, true);
  sweep->add_option("--n", n, "games per value (even)")->capture_default_str();
  sweep->add_option("--param", parameter, "c_pn | contempt | time")
      ->required();
  sweep->add_option("--values", values,
                    "values; time in milliseconds, contempt accepts -inf")
      ->required()
      ->delimiter(',');

  auto* overhead =
      app.add_subcommand("overhead", "PN-MCTS / MCTS first-half sims ratio");
  AddGameOptions(overhead, game);
  AddAgentOptions(overhead, agents, true);
  overhead->add_option("--n", n, "games (even)")->capture_default_str();

  auto* solve = app.add_subcommand("solve", "standalone proof-number search");
  AddGameOptions(solve, game);
  solve->add_option("--position", position,
                    "serialized position (default: initial)");
  solve->add_option("--layer", layer, "1: win, 2: not lose")
      ->capture_default_str()
      ->check(CLI::IsMember({1, 2}));
  solve->add_option("--budget", node_budget, "node expansions")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  auto* perft = app.add_subcommand("perft", "count move-tree leaves");
  AddGameOptions(perft, game);
  perft->add_option("--position", position, "serialized position");
  perft->add_option("--depth", depth, "max depth")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*match) return RunMatchCommand(game, agents, b_first);
    if (*series) return RunSeriesCommand(game, agents, n, summary);
    if (*sweep) return RunSweepCommand(game, agents, n, parameter, values);
    if (*overhead) return RunOverheadCommand(game, agents, n);
    if (*solve) return RunSolveCommand(game, position, layer, node_budget);
    if (*perft) return RunPerftCommand(game, position, depth);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
