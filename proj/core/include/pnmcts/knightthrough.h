#ifndef PNMCTS_KNIGHTTHROUGH_H_
#define PNMCTS_KNIGHTTHROUGH_H_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pnmcts/game.h"

namespace pnmcts {

// 8x8 board, bit index = row * 8 + file. P1 ('n') starts on rows 0-1 and
// races towards row 7; P2 ('N') starts on rows 6-7 and races towards row 0.
struct KnightthroughPosition {
  std::array<std::uint64_t, 2> knights{};
  Player to_move = Player::kP1;
  std::uint16_t ply = 0;

  bool operator==(const KnightthroughPosition&) const = default;
};

struct KnightthroughMove {
  std::uint8_t from = 0;
  std::uint8_t to = 0;
  bool operator==(const KnightthroughMove&) const = default;
};

// Knights only take the four jumps that gain rank towards the opponent's
// edge: (+1, +-2) and (+2, +-1) for P1, mirrored for P2.
class Knightthrough {
 public:
  using Position = KnightthroughPosition;
  using Move = KnightthroughMove;

  static constexpr int kDefaultMaxPlies = 300;

  explicit Knightthrough(int max_plies = kDefaultMaxPlies);

  std::string name() const { return "knightthrough"; }
  int max_plies() const { return max_plies_; }

  Position InitialPosition() const;
  void GenerateMoves(const Position& pos, std::vector<Move>& out) const;
  Position ApplyUnchecked(const Position& pos, const Move& move) const;
  Outcome GetOutcome(const Position& pos) const;
  Player ToMove(const Position& pos) const { return pos.to_move; }
  int Ply(const Position& pos) const { return pos.ply; }

  // Rows from 0, separated by '/', alphabet {., n, N}.
  std::string Serialize(const Position& pos) const;
  Position Parse(std::string_view text) const;
  std::string MoveToString(const Position& pos, const Move& move) const;

  static constexpr int GoalRow(Player p) { return p == Player::kP1 ? 7 : 0; }

 private:
  // Wins by reaching the far edge or by wiping out the opponent; ignores
  // the ply cap and stalemate.
  Outcome RaceOutcome(const Position& pos) const;
  bool Generate(const Position& pos, std::vector<Move>* out) const;

  int max_plies_;
  // Destination masks per player and origin square.
  std::array<std::array<std::uint64_t, 64>, 2> jumps_{};
};

}  // namespace pnmcts

#endif  // PNMCTS_KNIGHTTHROUGH_H_
