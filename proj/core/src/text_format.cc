#include "text_format.h"

#include <charconv>

namespace pnmcts {

std::string_view ToString(Player p) { return p == Player::kP1 ? "P1" : "P2"; }

std::string_view ToString(Outcome o) {
  switch (o) {
    case Outcome::kOngoing:
      return "ongoing";
    case Outcome::kWinP1:
      return "win-p1";
    case Outcome::kWinP2:
      return "win-p2";
    case Outcome::kDraw:
      return "draw";
  }
  return "?";
}

ParseError::ParseError(const std::string& what, int line, int column)
    : std::runtime_error(what + " (line " + std::to_string(line) +
                         ", column " + std::to_string(column) + ")"),
      line_(line),
      column_(column) {}

namespace internal {

PositionFields SplitPositionFields(std::string_view text,
                                   const std::string& expected_name) {
  PositionFields f;
  std::size_t start = 0;
  for (int i = 0; i < 5; ++i) {
    std::size_t end = i < 4 ? text.find(':', start) : text.size();
    if (end == std::string_view::npos) {
      throw ParseError("expected 5 ':'-separated fields", 1,
                       static_cast<int>(text.size()) + 1);
    }
    f.field[i] = text.substr(start, end - start);
    f.column[i] = static_cast<int>(start) + 1;
    start = end + 1;
  }
  if (f.field[kPly].find(':') != std::string_view::npos) {
    throw ParseError("too many fields", 1, f.column[kPly]);
  }
  if (f.field[kName] != expected_name) {
    throw ParseError("expected game '" + expected_name + "', got '" +
                         std::string(f.field[kName]) + "'",
                     1, 1);
  }
  return f;
}

int ParseInt(std::string_view text, int column) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                   value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 0) {
    throw ParseError("expected non-negative integer, got '" +
                         std::string(text) + "'",
                     1, column);
  }
  return value;
}

Player ParsePlayerField(const PositionFields& f) {
  if (f.field[kToMove] == "1") return Player::kP1;
  if (f.field[kToMove] == "2") return Player::kP2;
  throw ParseError("player to move must be 1 or 2", 1, f.column[kToMove]);
}

int ParsePlyField(const PositionFields& f) {
  return ParseInt(f.field[kPly], f.column[kPly]);
}

char PlayerChar(Player p) { return p == Player::kP1 ? '1' : '2'; }

}  // namespace internal
}  // namespace pnmcts
