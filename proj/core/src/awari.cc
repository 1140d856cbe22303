#include "pnmcts/awari.h"

#include <stdexcept>

#include "text_format.h"

namespace pnmcts {

Awari::Awari(int max_plies) : max_plies_(max_plies) {
  if (max_plies < 1) throw std::invalid_argument("max_plies must be >= 1");
}

AwariPosition Awari::InitialPosition() const {
  Position pos;
  pos.holes.fill(kSeedsPerHole);
  return pos;
}

// Over when no hole holds more than one counter, the mover's row is empty,
// or the ply cap is hit.
bool Awari::Finished(const Position& pos) const {
  if (pos.ply >= max_plies_) return true;
  bool any_big = false;
  for (auto h : pos.holes) any_big |= h > 1;
  if (!any_big) return true;
  const int start = RowStart(pos.to_move);
  for (int i = start; i < start + 6; ++i) {
    if (pos.holes[i] > 0) return false;
  }
  return true;
}

void Awari::GenerateMoves(const Position& pos, std::vector<Move>& out) const {
  out.clear();
  if (Finished(pos)) return;
  const int start = RowStart(pos.to_move);
  for (int i = start; i < start + 6; ++i) {
    if (pos.holes[i] > 0) out.push_back(Move{static_cast<std::uint8_t>(i)});
  }
}

AwariPosition Awari::ApplyUnchecked(const Position& pos,
                                    const Move& move) const {
  Position next = pos;
  const int origin = move.hole;
  int counters = next.holes[origin];
  next.holes[origin] = 0;
  int hole = origin;
  while (counters > 0) {
    hole = (hole + 1) % 12;
    if (hole == origin) continue;  // the emptied hole is skipped on laps
    ++next.holes[hole];
    --counters;
  }
  const Player mover = pos.to_move;
  const Player other = Opponent(mover);
  // Capture from the last hole backwards while the run stays in the
  // opponent's row and holds 2 or 3 counters.
  while (InRow(hole, other) &&
         (next.holes[hole] == 2 || next.holes[hole] == 3)) {
    next.captured[PlayerIndex(mover)] =
        static_cast<std::uint8_t>(next.captured[PlayerIndex(mover)] +
                                  next.holes[hole]);
    next.holes[hole] = 0;
    hole = (hole + 11) % 12;
  }
  next.to_move = other;
  next.ply = static_cast<std::uint16_t>(pos.ply + 1);
  return next;
}

Outcome Awari::GetOutcome(const Position& pos) const {
  if (!Finished(pos)) return Outcome::kOngoing;
  // Counters left on the board are not awarded to either side.
  const int p1 = pos.captured[0];
  const int p2 = pos.captured[1];
  if (p1 > p2) return Outcome::kWinP1;
  if (p2 > p1) return Outcome::kWinP2;
  return Outcome::kDraw;
}

std::string Awari::Serialize(const Position& pos) const {
  std::string cells;
  for (int i = 0; i < 12; ++i) {
    if (i > 0) cells += ',';
    cells += std::to_string(pos.holes[i]);
  }
  return name() + ":" + cells + ":" + internal::PlayerChar(pos.to_move) + ":" +
         std::to_string(pos.captured[0]) + "," +
         std::to_string(pos.captured[1]) + ":" + std::to_string(pos.ply);
}

AwariPosition Awari::Parse(std::string_view text) const {
  using namespace internal;
  PositionFields f = SplitPositionFields(text, name());
  Position pos;
  int total = 0;

  auto parse_list = [&](std::string_view list, int column, auto& dest,
                        std::size_t count) {
    std::size_t start = 0;
    for (std::size_t i = 0; i < count; ++i) {
      std::size_t end = list.find(',', start);
      if (end == std::string_view::npos) {
        if (i + 1 != count) {
          throw ParseError("expected " + std::to_string(count) +
                               " comma-separated counts",
                           1, column + static_cast<int>(list.size()));
        }
        end = list.size();
      } else if (i + 1 == count) {
        throw ParseError("too many counts", 1, column + static_cast<int>(end));
      }
      const int value = ParseInt(list.substr(start, end - start),
                                 column + static_cast<int>(start));
      if (value > kTotalCounters) {
        throw ParseError("count exceeds 48", 1,
                         column + static_cast<int>(start));
      }
      dest[i] = static_cast<std::uint8_t>(value);
      total += value;
      start = end + 1;
    }
  };

  parse_list(f.field[kCells], f.column[kCells], pos.holes, 12);
  pos.to_move = ParsePlayerField(f);
  parse_list(f.field[kCaptures], f.column[kCaptures], pos.captured, 2);
  pos.ply = static_cast<std::uint16_t>(ParsePlyField(f));
  if (total != kTotalCounters) {
    throw ParseError("holes and stores must sum to 48, got " +
                         std::to_string(total),
                     1, f.column[kCells]);
  }
  return pos;
}

std::string Awari::MoveToString(const Position&, const Move& move) const {
  return std::to_string(move.hole);
}

}  // namespace pnmcts
