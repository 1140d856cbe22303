#ifndef PNMCTS_HARNESS_H_
#define PNMCTS_HARNESS_H_

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "pnmcts/game.h"
#include "pnmcts/rng.h"
#include "pnmcts/search.h"
#include "pnmcts/search_config.h"
#include "pnmcts/stats.h"

namespace pnmcts {

// Called after each finished match with the number completed so far.
using MatchCallback = std::function<void(const MatchRecord&, std::size_t)>;

// Plays one game. The agent to move searches a fresh tree seeded from
// (seed, move number), so a match is reproducible under iteration budgets.
template <Game G>
MatchRecord RunMatch(const G& game, const SearchConfig& config_a,
                     const SearchConfig& config_b, bool a_first,
                     std::uint64_t seed) {
  config_a.Validate();
  config_b.Validate();
  MatchRecord record;
  record.game = game.name();
  record.agent_a = config_a.Label();
  record.agent_b = config_b.Label();
  record.a_first = a_first;
  record.seed = seed;

  const Player a_player = a_first ? Player::kP1 : Player::kP2;
  struct MoveSims {
    bool by_a;
    std::uint64_t sims;
  };
  std::vector<MoveSims> history;
  std::vector<typename G::Move> moves;

  auto pos = game.InitialPosition();
  Outcome outcome = game.GetOutcome(pos);
  for (std::uint64_t move_number = 1; !IsTerminal(outcome); ++move_number) {
    const bool a_to_move = game.ToMove(pos) == a_player;
    SearchConfig config = a_to_move ? config_a : config_b;
    config.seed = DeriveSeed(seed, move_number);
    const SearchReport report = Search(game, pos, config);
    history.push_back({a_to_move, report.simulations});
    game.GenerateMoves(pos, moves);
    pos = game.ApplyUnchecked(pos, moves.at(report.chosen_index));
    outcome = game.GetOutcome(pos);
  }

  record.plies = static_cast<int>(history.size());
  const std::size_t half = history.size() / 2;
  for (std::size_t i = 0; i < half; ++i) {
    (history[i].by_a ? record.sims_a_h1 : record.sims_b_h1) +=
        history[i].sims;
  }
  if (IsWinFor(outcome, a_player)) {
    record.result = MatchResult::kAWin;
  } else if (IsLossFor(outcome, a_player)) {
    record.result = MatchResult::kBWin;
  } else {
    record.result = MatchResult::kDraw;
  }
  return record;
}

struct SeriesResult {
  SeriesStats stats;
  std::vector<MatchRecord> records;  // in game-index order
};

// Side-swapped series of `n` (even) games: game i has A moving first iff i
// is even and is seeded with DeriveSeed(base_seed, i). Matches run on
// `jobs` threads; records come back in game order regardless.
template <Game G>
SeriesResult RunSeries(const G& game, const SearchConfig& config_a,
                       const SearchConfig& config_b, int n,
                       std::uint64_t base_seed, int jobs = 1,
                       const MatchCallback& on_match = {}) {
  if (n <= 0 || n % 2 != 0) {
    throw std::invalid_argument("series length must be positive and even");
  }
  SeriesResult result;
  result.records.resize(static_cast<std::size_t>(n));
  std::atomic<int> next{0};
  std::atomic<std::size_t> done{0};
  std::mutex callback_mutex;
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= n) return;
      try {
        MatchRecord r = RunMatch(game, config_a, config_b, i % 2 == 0,
                                 DeriveSeed(base_seed, static_cast<std::uint64_t>(i)));
        result.records[static_cast<std::size_t>(i)] = r;
        const std::size_t count = done.fetch_add(1) + 1;
        if (on_match) {
          std::lock_guard<std::mutex> lock(callback_mutex);
          on_match(r, count);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(n);
        return;
      }
    }
  };

  const int threads = std::clamp(jobs, 1, n);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  result.stats = Aggregate(result.records, config_a.Label());
  return result;
}

struct OverheadResult {
  std::string game;
  int n = 0;
  Budget budget;
  std::string pnmcts_label;
  std::string mcts_label;
  double mean_sims_pnmcts = 0.0;
  double mean_sims_mcts = 0.0;
  double ratio = 0.0;
};

inline constexpr std::string_view kOverheadCsvHeader =
    "game,n,budget,pnmcts,mcts,mean_sims_pnmcts_h1,mean_sims_mcts_h1,ratio";

// Average first-half simulation count of PN-MCTS divided by that of the
// baseline over a side-swapped series at a wall-clock budget.
template <Game G>
OverheadResult MeasureOverhead(const G& game, SearchConfig pnmcts,
                               SearchConfig mcts, int n, const Budget& budget,
                               std::uint64_t base_seed, int jobs = 1,
                               const MatchCallback& on_match = {}) {
  if (budget.kind != Budget::Kind::kWallClock) {
    throw std::invalid_argument("overhead ratio needs a wall-clock budget");
  }
  pnmcts.budget = budget;
  mcts.budget = budget;
  const SeriesResult series =
      RunSeries(game, pnmcts, mcts, n, base_seed, jobs, on_match);
  OverheadResult out;
  out.game = game.name();
  out.n = n;
  out.budget = budget;
  out.pnmcts_label = pnmcts.Label();
  out.mcts_label = mcts.Label();
  double a = 0.0, b = 0.0;
  for (const auto& r : series.records) {
    a += static_cast<double>(r.sims_a_h1);
    b += static_cast<double>(r.sims_b_h1);
  }
  out.mean_sims_pnmcts = a / n;
  out.mean_sims_mcts = b / n;
  out.ratio = b > 0.0 ? a / b : 0.0;
  return out;
}

std::string FormatOverheadCsv(const std::vector<OverheadResult>& rows);

enum class SweepParameter { kCpn, kContempt, kTime };

SweepParameter ParseSweepParameter(std::string_view name);

// Sets the swept parameter: C_pn or contempt on agent A, or the per-move
// wall-clock budget (milliseconds) on both agents.
void ApplySweepValue(SweepParameter parameter, std::string_view value,
                     SearchConfig& config_a, SearchConfig& config_b);

// One series per value, each labelled with the value as written.
template <Game G>
std::vector<SeriesStats> RunSweep(const G& game, SweepParameter parameter,
                                  const std::vector<std::string>& values,
                                  const SearchConfig& config_a,
                                  const SearchConfig& config_b, int n,
                                  std::uint64_t base_seed, int jobs = 1,
                                  const MatchCallback& on_match = {}) {
  if (values.empty()) throw std::invalid_argument("sweep needs values");
  std::vector<SeriesStats> rows;
  for (const auto& value : values) {
    SearchConfig a = config_a;
    SearchConfig b = config_b;
    ApplySweepValue(parameter, value, a, b);
    SeriesStats stats =
        RunSeries(game, a, b, n, base_seed, jobs, on_match).stats;
    stats.label = value;
    rows.push_back(std::move(stats));
  }
  return rows;
}

}  // namespace pnmcts

#endif  // PNMCTS_HARNESS_H_
