#include "pnmcts/knightthrough.h"

#include <bit>
#include <stdexcept>

#include "text_format.h"

namespace pnmcts {
namespace {

constexpr std::uint64_t kRow0 = 0xffULL;
constexpr std::uint64_t kRow7 = 0xffULL << 56;

// P1 jumps in canonical order; P2 uses the same list with rows negated.
constexpr int kJumpRow[4] = {1, 1, 2, 2};
constexpr int kJumpFile[4] = {-2, 2, -1, 1};

}  // namespace

Knightthrough::Knightthrough(int max_plies) : max_plies_(max_plies) {
  if (max_plies < 1) throw std::invalid_argument("max_plies must be >= 1");
  for (int p = 0; p < 2; ++p) {
    const int forward = p == 0 ? 1 : -1;
    for (int sq = 0; sq < 64; ++sq) {
      const int r = sq / 8;
      const int f = sq % 8;
      for (int j = 0; j < 4; ++j) {
        const int tr = r + forward * kJumpRow[j];
        const int tf = f + kJumpFile[j];
        if (tr < 0 || tr > 7 || tf < 0 || tf > 7) continue;
        jumps_[p][sq] |= 1ULL << (tr * 8 + tf);
      }
    }
  }
}

KnightthroughPosition Knightthrough::InitialPosition() const {
  Position pos;
  pos.knights[0] = 0xffffULL;
  pos.knights[1] = 0xffffULL << 48;
  return pos;
}

Outcome Knightthrough::RaceOutcome(const Position& pos) const {
  if (pos.knights[0] & kRow7) return Outcome::kWinP1;
  if (pos.knights[1] & kRow0) return Outcome::kWinP2;
  if (pos.knights[1] == 0) return Outcome::kWinP1;
  if (pos.knights[0] == 0) return Outcome::kWinP2;
  return Outcome::kOngoing;
}

bool Knightthrough::Generate(const Position& pos,
                             std::vector<Move>* out) const {
  const int me = PlayerIndex(pos.to_move);
  const std::uint64_t own = pos.knights[me];
  bool found = false;
  for (std::uint64_t rest = own; rest != 0; rest &= rest - 1) {
    const int from = std::countr_zero(rest);
    std::uint64_t targets = jumps_[me][from] & ~own;
    if (targets == 0) continue;
    if (out == nullptr) return true;
    found = true;
    // Emit in the fixed jump order rather than bit order.
    const int forward = me == 0 ? 1 : -1;
    for (int j = 0; j < 4; ++j) {
      const int tr = from / 8 + forward * kJumpRow[j];
      const int tf = from % 8 + kJumpFile[j];
      if (tr < 0 || tr > 7 || tf < 0 || tf > 7) continue;
      const int to = tr * 8 + tf;
      if (targets & (1ULL << to)) {
        out->push_back(Move{static_cast<std::uint8_t>(from),
                            static_cast<std::uint8_t>(to)});
      }
    }
  }
  return found;
}

void Knightthrough::GenerateMoves(const Position& pos,
                                  std::vector<Move>& out) const {
  out.clear();
  if (pos.ply >= max_plies_ || RaceOutcome(pos) != Outcome::kOngoing) return;
  Generate(pos, &out);
}

KnightthroughPosition Knightthrough::ApplyUnchecked(const Position& pos,
                                                    const Move& move) const {
  Position next = pos;
  const int me = PlayerIndex(pos.to_move);
  const std::uint64_t to = 1ULL << move.to;
  next.knights[me] = (next.knights[me] & ~(1ULL << move.from)) | to;
  next.knights[1 - me] &= ~to;
  next.to_move = Opponent(pos.to_move);
  next.ply = static_cast<std::uint16_t>(pos.ply + 1);
  return next;
}

Outcome Knightthrough::GetOutcome(const Position& pos) const {
  Outcome race = RaceOutcome(pos);
  if (race != Outcome::kOngoing) return race;
  if (pos.ply >= max_plies_) return Outcome::kDraw;
  // Every knight blocked by its own pieces: the side to move loses.
  if (!Generate(pos, nullptr)) return WinFor(Opponent(pos.to_move));
  return Outcome::kOngoing;
}

std::string Knightthrough::Serialize(const Position& pos) const {
  std::string cells;
  for (int r = 0; r < 8; ++r) {
    if (r > 0) cells += '/';
    for (int f = 0; f < 8; ++f) {
      const std::uint64_t bit = 1ULL << (r * 8 + f);
      cells += (pos.knights[0] & bit) ? 'n' : (pos.knights[1] & bit) ? 'N' : '.';
    }
  }
  return name() + ":" + cells + ":" + internal::PlayerChar(pos.to_move) +
         ":-:" + std::to_string(pos.ply);
}

KnightthroughPosition Knightthrough::Parse(std::string_view text) const {
  using namespace internal;
  PositionFields f = SplitPositionFields(text, name());
  std::string_view cells = f.field[kCells];
  if (cells.size() != 71) {
    throw ParseError("expected 71 board chars", 1, f.column[kCells]);
  }
  Position pos;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const int column = f.column[kCells] + static_cast<int>(i);
    const char c = cells[i];
    if (i % 9 == 8) {
      if (c != '/') throw ParseError("expected '/'", 1, column);
      continue;
    }
    const int sq = static_cast<int>(i / 9) * 8 + static_cast<int>(i % 9);
    if (c == 'n') {
      pos.knights[0] |= 1ULL << sq;
    } else if (c == 'N') {
      pos.knights[1] |= 1ULL << sq;
    } else if (c != '.') {
      throw ParseError(std::string("bad cell '") + c + "'", 1, column);
    }
  }
  if (std::popcount(pos.knights[0]) > 16 ||
      std::popcount(pos.knights[1]) > 16) {
    throw ParseError("more than 16 knights per side", 1, f.column[kCells]);
  }
  pos.to_move = ParsePlayerField(f);
  if (f.field[kCaptures] != "-") {
    throw ParseError("expected '-' captures field", 1, f.column[kCaptures]);
  }
  pos.ply = static_cast<std::uint16_t>(ParsePlyField(f));
  return pos;
}

std::string Knightthrough::MoveToString(const Position& pos,
                                        const Move& move) const {
  auto square = [](int sq) {
    std::string s;
    s += static_cast<char>('a' + sq % 8);
    s += std::to_string(sq / 8 + 1);
    return s;
  };
  const int opp = 1 - PlayerIndex(pos.to_move);
  const bool capture = (pos.knights[opp] >> move.to) & 1ULL;
  return square(move.from) + (capture ? "x" : "-") + square(move.to);
}

}  // namespace pnmcts
