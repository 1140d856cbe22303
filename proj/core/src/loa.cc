#include "pnmcts/loa.h"

#include <bit>
#include <stdexcept>

#include "text_format.h"

namespace pnmcts {
namespace {

constexpr int kRowDelta[8] = {1, 1, 0, -1, -1, -1, 0, 1};
constexpr int kFileDelta[8] = {0, 1, 1, 1, 0, -1, -1, -1};
// Line orientation of each direction: rank, file, diagonal, anti-diagonal.
constexpr int kLineOf[8] = {1, 2, 0, 3, 1, 2, 0, 3};

constexpr std::uint64_t kNotFileA = 0xfefefefefefefefeULL;
constexpr std::uint64_t kNotFileH = 0x7f7f7f7f7f7f7f7fULL;

std::uint64_t Neighbours(std::uint64_t b) {
  std::uint64_t east = (b << 1) & kNotFileA;
  std::uint64_t west = (b >> 1) & kNotFileH;
  std::uint64_t row = b | east | west;
  return east | west | (row << 8) | (row >> 8);
}

}  // namespace

Loa::Loa(int size, int max_plies, SimultaneousConnection rule)
    : size_(size), max_plies_(max_plies), rule_(rule), board_mask_(0) {
  if (size != 7 && size != 8) {
    throw std::invalid_argument("LOA board size must be 7 or 8");
  }
  if (max_plies < 1) throw std::invalid_argument("max_plies must be >= 1");
  for (int r = 0; r < size_; ++r) {
    for (int f = 0; f < size_; ++f) board_mask_ |= 1ULL << (r * 8 + f);
  }
  for (int r = 0; r < size_; ++r) {
    for (int f = 0; f < size_; ++f) {
      auto& masks = line_masks_[r * 8 + f];
      for (int r2 = 0; r2 < size_; ++r2) {
        for (int f2 = 0; f2 < size_; ++f2) {
          std::uint64_t bit = 1ULL << (r2 * 8 + f2);
          if (r2 == r) masks[0] |= bit;
          if (f2 == f) masks[1] |= bit;
          if (r2 - r == f2 - f) masks[2] |= bit;
          if (r2 - r == f - f2) masks[3] |= bit;
        }
      }
    }
  }
}

LoaPosition Loa::InitialPosition() const {
  Position pos;
  const int last = size_ - 1;
  for (int i = 1; i < last; ++i) {
    pos.black |= 1ULL << i;
    pos.black |= 1ULL << (last * 8 + i);
    pos.white |= 1ULL << (i * 8);
    pos.white |= 1ULL << (i * 8 + last);
  }
  return pos;
}

bool Loa::Connected(std::uint64_t pieces) {
  if (pieces == 0) return true;
  std::uint64_t reached = pieces & (~pieces + 1);
  for (;;) {
    std::uint64_t next = (reached | Neighbours(reached)) & pieces;
    if (next == reached) break;
    reached = next;
  }
  return reached == pieces;
}

Outcome Loa::ConnectionOutcome(std::uint64_t black, std::uint64_t white,
                               Player mover) const {
  bool mover_done = Connected(mover == Player::kP1 ? black : white);
  bool other_done = Connected(mover == Player::kP1 ? white : black);
  if (mover_done && other_done) {
    switch (rule_) {
      case SimultaneousConnection::kMoverWins:
        return WinFor(mover);
      case SimultaneousConnection::kOpponentWins:
        return WinFor(Opponent(mover));
      case SimultaneousConnection::kDraw:
        return Outcome::kDraw;
    }
  }
  if (mover_done) return WinFor(mover);
  if (other_done) return WinFor(Opponent(mover));
  return Outcome::kOngoing;
}

bool Loa::Generate(const Position& pos, std::vector<Move>* out) const {
  const std::uint64_t own = pos.pieces(pos.to_move);
  const std::uint64_t opp = pos.pieces(Opponent(pos.to_move));
  const std::uint64_t occupied = own | opp;
  bool found = false;
  for (std::uint64_t rest = own; rest != 0; rest &= rest - 1) {
    const int from = std::countr_zero(rest);
    const int row = from / 8;
    const int file = from % 8;
    const auto& masks = line_masks_[from];
    const int counts[4] = {std::popcount(occupied & masks[0]),
                           std::popcount(occupied & masks[1]),
                           std::popcount(occupied & masks[2]),
                           std::popcount(occupied & masks[3])};
    for (int dir = 0; dir < 8; ++dir) {
      const int distance = counts[kLineOf[dir]];
      const int tr = row + kRowDelta[dir] * distance;
      const int tf = file + kFileDelta[dir] * distance;
      if (tr < 0 || tr >= size_ || tf < 0 || tf >= size_) continue;
      const int to = tr * 8 + tf;
      if (own & (1ULL << to)) continue;
      bool blocked = false;
      for (int step = 1; step < distance; ++step) {
        int sq = (row + kRowDelta[dir] * step) * 8 + file +
                 kFileDelta[dir] * step;
        if (opp & (1ULL << sq)) {
          blocked = true;
          break;
        }
      }
      if (blocked) continue;
      if (out == nullptr) return true;
      out->push_back(Move{static_cast<std::uint8_t>(from),
                          static_cast<std::uint8_t>(to)});
      found = true;
    }
  }
  return found;
}

void Loa::GenerateMoves(const Position& pos, std::vector<Move>& out) const {
  out.clear();
  if (pos.connection != Outcome::kOngoing || pos.ply >= max_plies_) return;
  Generate(pos, &out);
}

LoaPosition Loa::ApplyUnchecked(const Position& pos, const Move& move) const {
  Position next = pos;
  const std::uint64_t from = 1ULL << move.from;
  const std::uint64_t to = 1ULL << move.to;
  if (pos.to_move == Player::kP1) {
    next.black = (next.black & ~from) | to;
    next.white &= ~to;
  } else {
    next.white = (next.white & ~from) | to;
    next.black &= ~to;
  }
  next.to_move = Opponent(pos.to_move);
  next.ply = static_cast<std::uint16_t>(pos.ply + 1);
  next.connection = ConnectionOutcome(next.black, next.white, pos.to_move);
  return next;
}

Outcome Loa::GetOutcome(const Position& pos) const {
  if (pos.connection != Outcome::kOngoing) return pos.connection;
  if (pos.ply >= max_plies_) return Outcome::kDraw;
  // A side left without a legal move loses.
  if (!Generate(pos, nullptr)) return WinFor(Opponent(pos.to_move));
  return Outcome::kOngoing;
}

std::string Loa::Serialize(const Position& pos) const {
  std::string cells;
  for (int r = 0; r < size_; ++r) {
    if (r > 0) cells += '/';
    for (int f = 0; f < size_; ++f) {
      std::uint64_t bit = 1ULL << (r * 8 + f);
      cells += (pos.black & bit) ? 'b' : (pos.white & bit) ? 'w' : '.';
    }
  }
  return name() + ":" + cells + ":" + internal::PlayerChar(pos.to_move) +
         ":-:" + std::to_string(pos.ply);
}

LoaPosition Loa::Parse(std::string_view text) const {
  using namespace internal;
  PositionFields f = SplitPositionFields(text, name());
  Position pos;
  std::string_view cells = f.field[kCells];
  const std::size_t expected = static_cast<std::size_t>(size_ * (size_ + 1) - 1);
  if (cells.size() != expected) {
    throw ParseError("expected " + std::to_string(expected) + " board chars",
                     1, f.column[kCells]);
  }
  for (int r = 0; r < size_; ++r) {
    for (int f2 = 0; f2 <= size_; ++f2) {
      const std::size_t i = static_cast<std::size_t>(r * (size_ + 1) + f2);
      if (i >= cells.size()) break;
      const int column = f.column[kCells] + static_cast<int>(i);
      const char c = cells[i];
      if (f2 == size_) {
        if (c != '/') throw ParseError("expected '/'", 1, column);
        continue;
      }
      const std::uint64_t bit = 1ULL << (r * 8 + f2);
      if (c == 'b') {
        pos.black |= bit;
      } else if (c == 'w') {
        pos.white |= bit;
      } else if (c != '.') {
        throw ParseError(std::string("bad cell '") + c + "'", 1, column);
      }
    }
  }
  pos.to_move = ParsePlayerField(f);
  if (f.field[kCaptures] != "-") {
    throw ParseError("LOA has no capture counters, expected '-'", 1,
                     f.column[kCaptures]);
  }
  pos.ply = static_cast<std::uint16_t>(ParsePlyField(f));
  if (pos.ply > 0) {
    pos.connection =
        ConnectionOutcome(pos.black, pos.white, Opponent(pos.to_move));
  }
  return pos;
}

std::string Loa::MoveToString(const Position&, const Move& move) const {
  auto square = [](int sq) {
    std::string s;
    s += static_cast<char>('a' + sq % 8);
    s += std::to_string(sq / 8 + 1);
    return s;
  };
  return square(move.from) + "-" + square(move.to);
}

}  // namespace pnmcts
