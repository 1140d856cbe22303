#ifndef PNMCTS_LOA_H_
#define PNMCTS_LOA_H_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pnmcts/game.h"

namespace pnmcts {

// Lines of Action on an N x N board (N = 7 or 8). Squares are stored in an
// 8-wide bitboard, bit index = row * 8 + file, row 0 at the bottom.
// Black is P1 (top and bottom rows), White is P2 (outer files).
struct LoaPosition {
  std::uint64_t black = 0;
  std::uint64_t white = 0;
  Player to_move = Player::kP1;
  std::uint16_t ply = 0;
  // Result of the connection test made after the last move.
  Outcome connection = Outcome::kOngoing;

  std::uint64_t pieces(Player p) const {
    return p == Player::kP1 ? black : white;
  }
  bool operator==(const LoaPosition&) const = default;
};

struct LoaMove {
  std::uint8_t from = 0;
  std::uint8_t to = 0;
  bool operator==(const LoaMove&) const = default;
};

// Who wins when one move leaves both sides connected.
enum class SimultaneousConnection { kMoverWins, kOpponentWins, kDraw };

class Loa {
 public:
  using Position = LoaPosition;
  using Move = LoaMove;

  static constexpr int kDefaultMaxPlies = 300;

  explicit Loa(int size = 8, int max_plies = kDefaultMaxPlies,
               SimultaneousConnection rule = SimultaneousConnection::kMoverWins);

  std::string name() const { return size_ == 7 ? "loa7" : "loa8"; }
  int size() const { return size_; }
  int max_plies() const { return max_plies_; }
  SimultaneousConnection simultaneous_rule() const { return rule_; }

  Position InitialPosition() const;
  void GenerateMoves(const Position& pos, std::vector<Move>& out) const;
  Position ApplyUnchecked(const Position& pos, const Move& move) const;
  Outcome GetOutcome(const Position& pos) const;
  Player ToMove(const Position& pos) const { return pos.to_move; }
  int Ply(const Position& pos) const { return pos.ply; }

  // Cells row by row from row 0, rows separated by '/', alphabet {., b, w}.
  std::string Serialize(const Position& pos) const;
  Position Parse(std::string_view text) const;
  // Algebraic "b1-d3"; files a.., ranks 1.. from row 0.
  std::string MoveToString(const Position& pos, const Move& move) const;

  // 8-connectivity of a piece set; the empty set and singletons count as
  // connected.
  static bool Connected(std::uint64_t pieces);
  // Connection test applied after `mover` has moved.
  Outcome ConnectionOutcome(std::uint64_t black, std::uint64_t white,
                            Player mover) const;

 private:
  // Raw movement rule, ignoring termination. With a null `out` it returns
  // as soon as one legal move is found.
  bool Generate(const Position& pos, std::vector<Move>* out) const;

  int size_;
  int max_plies_;
  SimultaneousConnection rule_;
  std::uint64_t board_mask_;
  // Per square: pieces on the rank, file, diagonal and anti-diagonal.
  std::array<std::array<std::uint64_t, 4>, 64> line_masks_{};
};

}  // namespace pnmcts

#endif  // PNMCTS_LOA_H_
