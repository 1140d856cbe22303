#ifndef PNMCTS_SEARCH_CONFIG_H_
#define PNMCTS_SEARCH_CONFIG_H_

#include <chrono>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>

namespace pnmcts {

enum class Algorithm { kUct, kPnMcts };
enum class LayerMode { kSingle, kDouble };

// PN-MCTS enhancement switches, written as a three-letter code such as
// "FSU" or "xSx" (final move selection, solver, UCT-PN; 'x' = off).
struct Enhancements {
  bool final_move = true;
  bool solver = true;
  bool uct_pn = true;

  std::string Code() const;
  static Enhancements Parse(std::string_view code);
  bool operator==(const Enhancements&) const = default;
};

struct Budget {
  enum class Kind { kIterations, kWallClock };

  Kind kind = Kind::kIterations;
  std::uint64_t iterations = 1000;
  std::chrono::microseconds wall_clock{0};

  static Budget Iterations(std::uint64_t n);
  static Budget WallClock(std::chrono::microseconds d);
  // "iters:<k>" or "ms:<k>" (milliseconds, may be fractional).
  static Budget Parse(std::string_view text);
  std::string ToString() const;
  bool operator==(const Budget&) const = default;
};

struct SearchConfig {
  Algorithm algorithm = Algorithm::kPnMcts;
  double c = std::numbers::sqrt2;
  double c_pn = 1.0;
  Enhancements flags;
  int solver_threshold = 5;
  LayerMode layers = LayerMode::kSingle;
  // -infinity disables the proven-draw preference entirely.
  double contempt = 0.0;
  Budget budget;
  std::uint64_t seed = 0;
  // Display name; empty means use CanonicalLabel().
  std::string label;

  bool maintains_proofs() const { return algorithm == Algorithm::kPnMcts; }
  bool final_move() const { return maintains_proofs() && flags.final_move; }
  bool solver() const { return maintains_proofs() && flags.solver; }
  bool uct_pn() const { return maintains_proofs() && flags.uct_pn; }

  // Throws std::invalid_argument on out-of-range parameters.
  void Validate() const;

  std::string Label() const { return label.empty() ? CanonicalLabel() : label; }
  // "uct" or the flag code, followed by every non-default parameter.
  std::string CanonicalLabel() const;
  // Flat `key = value` text accepted by ParseConfigText.
  std::string ToText() const;

  bool operator==(const SearchConfig&) const = default;
};

// A config file may also pin the game it was written for.
struct ExperimentConfig {
  std::optional<std::string> game;
  std::optional<int> board_size;
  SearchConfig search;
};

// Flat `key = value` lines; '#' starts a comment. Keys: game, board_size,
// algorithm, c, c_pn, flags, t_threshold, layers, contempt, budget_mode,
// budget_value, seed, label. Throws std::invalid_argument naming the line.
ExperimentConfig ParseConfigText(std::string_view text);
ExperimentConfig LoadConfigFile(const std::string& path);

// Applies one key/value pair; throws std::invalid_argument for unknown keys
// or malformed values.
void SetConfigValue(ExperimentConfig& config, std::string_view key,
                    std::string_view value);

// An agent given on the command line: a path to a config file, or an inline
// spec "<uct|flag-code>[,key=value...]" e.g. "FSU,c_pn=2,layers=double".
ExperimentConfig ParseAgentSpec(std::string_view spec);

// Accepts "-inf" or the "<-1" sentinel for a disabled contempt factor.
double ParseContempt(std::string_view text);
std::string FormatNumber(double value);

}  // namespace pnmcts

#endif  // PNMCTS_SEARCH_CONFIG_H_
