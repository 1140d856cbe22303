#ifndef PNMCTS_STATS_H_
#define PNMCTS_STATS_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace pnmcts {

enum class MatchResult { kAWin, kBWin, kDraw };

std::string_view ToString(MatchResult r);
MatchResult ParseMatchResult(std::string_view text);

struct MatchRecord {
  std::string game;
  std::string agent_a;
  std::string agent_b;
  bool a_first = true;
  MatchResult result = MatchResult::kDraw;
  int plies = 0;
  // Simulations each agent ran on moves numbered 1..plies/2.
  std::uint64_t sims_a_h1 = 0;
  std::uint64_t sims_b_h1 = 0;
  std::uint64_t seed = 0;

  bool operator==(const MatchRecord&) const = default;
};

// Agent A's score over a series; draws count half.
struct SeriesStats {
  std::string label;
  int n = 0;
  int wins = 0;
  int draws = 0;
  int losses = 0;
  double p = 0.0;
  double margin = 0.0;
};

// 95% normal-approximation half-width 1.96 * sqrt(p (1 - p) / n).
double ConfidenceMargin(double p, int n);

SeriesStats MakeSeriesStats(std::string label, int wins, int draws,
                            int losses);
SeriesStats Aggregate(std::span<const MatchRecord> records, std::string label);

}  // namespace pnmcts

#endif  // PNMCTS_STATS_H_
