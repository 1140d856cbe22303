#include "pnmcts/search_config.h"

#include <cctype>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace pnmcts {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

double ParseDouble(std::string_view key, std::string_view text) {
  std::string buf(Trim(text));
  char* end = nullptr;
  double value = std::strtod(buf.c_str(), &end);
  if (buf.empty() || end != buf.c_str() + buf.size()) {
    throw std::invalid_argument(std::string(key) + ": expected a number, got '" +
                                buf + "'");
  }
  return value;
}

std::uint64_t ParseUnsigned(std::string_view key, std::string_view text) {
  text = Trim(text);
  std::uint64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument(std::string(key) +
                                ": expected a non-negative integer, got '" +
                                std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::string FormatNumber(double value) {
  if (std::isinf(value)) return value < 0 ? "-inf" : "inf";
  std::ostringstream os;
  os.precision(10);
  os << value;
  return os.str();
}

double ParseContempt(std::string_view text) {
  text = Trim(text);
  if (text == "-inf" || text == "<-1" || text == "off") {
    return -std::numeric_limits<double>::infinity();
  }
  return ParseDouble("contempt", text);
}

std::string Enhancements::Code() const {
  std::string code = "xxx";
  if (final_move) code[0] = 'F';
  if (solver) code[1] = 'S';
  if (uct_pn) code[2] = 'U';
  return code;
}

Enhancements Enhancements::Parse(std::string_view code) {
  code = Trim(code);
  if (code.size() != 3 || (code[0] != 'F' && code[0] != 'x') ||
      (code[1] != 'S' && code[1] != 'x') ||
      (code[2] != 'U' && code[2] != 'x')) {
    throw std::invalid_argument("flags must look like FSU / xSx, got '" +
                                std::string(code) + "'");
  }
  return Enhancements{code[0] == 'F', code[1] == 'S', code[2] == 'U'};
}

Budget Budget::Iterations(std::uint64_t n) {
  Budget b;
  b.kind = Kind::kIterations;
  b.iterations = n;
  return b;
}

Budget Budget::WallClock(std::chrono::microseconds d) {
  Budget b;
  b.kind = Kind::kWallClock;
  b.iterations = 0;
  b.wall_clock = d;
  return b;
}

Budget Budget::Parse(std::string_view text) {
  text = Trim(text);
  if (text.starts_with("iters:")) {
    return Iterations(ParseUnsigned("budget", text.substr(6)));
  }
  if (text.starts_with("ms:")) {
    const double ms = ParseDouble("budget", text.substr(3));
    return WallClock(std::chrono::microseconds(
        static_cast<std::int64_t>(std::llround(ms * 1000.0))));
  }
  throw std::invalid_argument("budget must be iters:<k> or ms:<k>, got '" +
                              std::string(text) + "'");
}

std::string Budget::ToString() const {
  if (kind == Kind::kIterations) return "iters:" + std::to_string(iterations);
  return "ms:" + FormatNumber(static_cast<double>(wall_clock.count()) / 1000.0);
}

void SearchConfig::Validate() const {
  auto fail = [](const std::string& what) {
    throw std::invalid_argument("search config: " + what);
  };
  if (!(c >= 0.0) || std::isinf(c)) fail("C must be finite and >= 0");
  if (!(c_pn >= 0.0) || std::isinf(c_pn)) fail("C_pn must be finite and >= 0");
  if (solver_threshold < 0) fail("T must be >= 0");
  if (std::isnan(contempt) || contempt > 1.0) fail("contempt must be <= 1");
  if (budget.kind == Budget::Kind::kIterations && budget.iterations == 0) {
    fail("iteration budget must be positive");
  }
  if (budget.kind == Budget::Kind::kWallClock &&
      budget.wall_clock.count() <= 0) {
    fail("wall-clock budget must be positive");
  }
}

std::string SearchConfig::CanonicalLabel() const {
  const SearchConfig defaults;
  std::string out = algorithm == Algorithm::kUct ? "uct" : flags.Code();
  auto add = [&out](const std::string& kv) { out += "," + kv; };
  if (c != defaults.c) add("c=" + FormatNumber(c));
  if (maintains_proofs()) {
    if (c_pn != defaults.c_pn) add("c_pn=" + FormatNumber(c_pn));
    if (solver_threshold != defaults.solver_threshold) {
      add("t_threshold=" + std::to_string(solver_threshold));
    }
    if (layers == LayerMode::kDouble) add("layers=double");
    if (layers == LayerMode::kDouble && contempt != defaults.contempt) {
      add("contempt=" + FormatNumber(contempt));
    }
  }
  return out;
}

std::string SearchConfig::ToText() const {
  std::ostringstream os;
  os << "algorithm = " << (algorithm == Algorithm::kUct ? "uct" : "pnmcts")
     << "\n";
  os << "c = " << FormatNumber(c) << "\n";
  os << "c_pn = " << FormatNumber(c_pn) << "\n";
  os << "flags = " << flags.Code() << "\n";
  os << "t_threshold = " << solver_threshold << "\n";
  os << "layers = " << (layers == LayerMode::kSingle ? "single" : "double")
     << "\n";
  os << "contempt = " << FormatNumber(contempt) << "\n";
  os << "budget_mode = "
     << (budget.kind == Budget::Kind::kIterations ? "iterations" : "wallclock")
     << "\n";
  os << "budget_value = "
     << (budget.kind == Budget::Kind::kIterations
             ? std::to_string(budget.iterations)
             : FormatNumber(static_cast<double>(budget.wall_clock.count()) /
                            1000.0))
     << "\n";
  os << "seed = " << seed << "\n";
  if (!label.empty()) os << "label = " << label << "\n";
  return os.str();
}

void SetConfigValue(ExperimentConfig& config, std::string_view key,
                    std::string_view value) {
  key = Trim(key);
  value = Trim(value);
  SearchConfig& s = config.search;
  if (key == "game") {
    config.game = std::string(value);
  } else if (key == "board_size") {
    config.board_size = static_cast<int>(ParseUnsigned(key, value));
  } else if (key == "algorithm") {
    if (value == "uct") {
      s.algorithm = Algorithm::kUct;
    } else if (value == "pnmcts" || value == "pn-mcts") {
      s.algorithm = Algorithm::kPnMcts;
    } else {
      throw std::invalid_argument("algorithm must be uct or pnmcts");
    }
  } else if (key == "c") {
    s.c = ParseDouble(key, value);
  } else if (key == "c_pn") {
    s.c_pn = ParseDouble(key, value);
  } else if (key == "flags") {
    if (value == "uct") {
      s.algorithm = Algorithm::kUct;
    } else {
      s.flags = Enhancements::Parse(value);
      s.algorithm = Algorithm::kPnMcts;
    }
  } else if (key == "t_threshold" || key == "t") {
    s.solver_threshold = static_cast<int>(ParseUnsigned(key, value));
  } else if (key == "layers") {
    if (value == "single" || value == "1") {
      s.layers = LayerMode::kSingle;
    } else if (value == "double" || value == "2") {
      s.layers = LayerMode::kDouble;
    } else {
      throw std::invalid_argument("layers must be single or double");
    }
  } else if (key == "contempt") {
    s.contempt = ParseContempt(value);
  } else if (key == "budget_mode") {
    if (value == "iterations" || value == "iters") {
      s.budget.kind = Budget::Kind::kIterations;
    } else if (value == "wallclock" || value == "ms") {
      s.budget.kind = Budget::Kind::kWallClock;
    } else {
      throw std::invalid_argument("budget_mode must be iterations or wallclock");
    }
  } else if (key == "budget_value") {
    // Interpreted according to budget_mode; milliseconds for wall clock.
    const double v = ParseDouble(key, value);
    if (v < 0) throw std::invalid_argument("budget_value must be >= 0");
    s.budget.iterations = static_cast<std::uint64_t>(v);
    s.budget.wall_clock =
        std::chrono::microseconds(static_cast<std::int64_t>(v * 1000.0));
  } else if (key == "budget") {
    s.budget = Budget::Parse(value);
  } else if (key == "seed") {
    s.seed = ParseUnsigned(key, value);
  } else if (key == "label") {
    s.label = std::string(value);
  } else {
    throw std::invalid_argument("unknown config key '" + std::string(key) + "'");
  }
}

ExperimentConfig ParseConfigText(std::string_view text) {
  ExperimentConfig config;
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": expected key = value");
    }
    try {
      SetConfigValue(config, line.substr(0, eq), line.substr(eq + 1));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": " + e.what());
    }
  }
  // budget_value may precede budget_mode; re-derive the active field.
  auto& b = config.search.budget;
  if (b.kind == Budget::Kind::kIterations) b.wall_clock = {};
  else b.iterations = 0;
  config.search.Validate();
  return config;
}

ExperimentConfig LoadConfigFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return ParseConfigText(buf.str());
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

ExperimentConfig ParseAgentSpec(std::string_view spec) {
  spec = Trim(spec);
  std::error_code ec;
  if (std::filesystem::is_regular_file(std::string(spec), ec)) {
    return LoadConfigFile(std::string(spec));
  }
  ExperimentConfig config;
  std::size_t start = 0;
  bool first = true;
  while (start <= spec.size()) {
    std::size_t end = spec.find(',', start);
    if (end == std::string_view::npos) end = spec.size();
    std::string_view token = Trim(spec.substr(start, end - start));
    start = end + 1;
    if (token.empty()) continue;
    const std::size_t eq = token.find('=');
    if (eq == std::string_view::npos) {
      if (!first) {
        throw std::invalid_argument("agent spec: expected key=value, got '" +
                                    std::string(token) + "'");
      }
      SetConfigValue(config, "flags", token);
    } else {
      SetConfigValue(config, token.substr(0, eq), token.substr(eq + 1));
    }
    first = false;
  }
  auto& b = config.search.budget;
  if (b.kind == Budget::Kind::kIterations) b.wall_clock = {};
  else b.iterations = 0;
  config.search.Validate();
  return config;
}

}  // namespace pnmcts
