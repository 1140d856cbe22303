#include "pnmcts/stats.h"

#include <cmath>
#include <stdexcept>

namespace pnmcts {

std::string_view ToString(MatchResult r) {
  switch (r) {
    case MatchResult::kAWin:
      return "a_win";
    case MatchResult::kBWin:
      return "b_win";
    case MatchResult::kDraw:
      return "draw";
  }
  return "?";
}

MatchResult ParseMatchResult(std::string_view text) {
  if (text == "a_win") return MatchResult::kAWin;
  if (text == "b_win") return MatchResult::kBWin;
  if (text == "draw") return MatchResult::kDraw;
  throw std::invalid_argument("unknown match result '" + std::string(text) +
                              "'");
}

double ConfidenceMargin(double p, int n) {
  if (n < 1) throw std::invalid_argument("confidence margin needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("score must lie in [0, 1]");
  }
  return 1.96 * std::sqrt(p * (1.0 - p) / n);
}

SeriesStats MakeSeriesStats(std::string label, int wins, int draws,
                            int losses) {
  SeriesStats s;
  s.label = std::move(label);
  s.wins = wins;
  s.draws = draws;
  s.losses = losses;
  s.n = wins + draws + losses;
  if (s.n > 0) {
    s.p = (wins + 0.5 * draws) / s.n;
    s.margin = ConfidenceMargin(s.p, s.n);
  }
  return s;
}

SeriesStats Aggregate(std::span<const MatchRecord> records, std::string label) {
  int wins = 0, draws = 0, losses = 0;
  for (const auto& r : records) {
    switch (r.result) {
      case MatchResult::kAWin:
        ++wins;
        break;
      case MatchResult::kBWin:
        ++losses;
        break;
      case MatchResult::kDraw:
        ++draws;
        break;
    }
  }
  return MakeSeriesStats(std::move(label), wins, draws, losses);
}

}  // namespace pnmcts
