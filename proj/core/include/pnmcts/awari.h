#ifndef PNMCTS_AWARI_H_
#define PNMCTS_AWARI_H_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pnmcts/game.h"

namespace pnmcts {

// Holes 0..5 form P1's row and 6..11 P2's row; sowing runs towards higher
// indices (counter-clockwise), wrapping from 11 to 0.
struct AwariPosition {
  std::array<std::uint8_t, 12> holes{};
  std::array<std::uint8_t, 2> captured{};
  Player to_move = Player::kP1;
  std::uint16_t ply = 0;

  bool operator==(const AwariPosition&) const = default;
};

struct AwariMove {
  std::uint8_t hole = 0;
  bool operator==(const AwariMove&) const = default;
};

class Awari {
 public:
  using Position = AwariPosition;
  using Move = AwariMove;

  static constexpr int kDefaultMaxPlies = 200;
  static constexpr int kSeedsPerHole = 4;
  static constexpr int kTotalCounters = 48;

  explicit Awari(int max_plies = kDefaultMaxPlies);

  std::string name() const { return "awari"; }
  int max_plies() const { return max_plies_; }

  Position InitialPosition() const;
  void GenerateMoves(const Position& pos, std::vector<Move>& out) const;
  Position ApplyUnchecked(const Position& pos, const Move& move) const;
  Outcome GetOutcome(const Position& pos) const;
  Player ToMove(const Position& pos) const { return pos.to_move; }
  int Ply(const Position& pos) const { return pos.ply; }

  // `awari:h0,...,h11:<to-move>:capP1,capP2:<ply>`.
  std::string Serialize(const Position& pos) const;
  Position Parse(std::string_view text) const;
  // The absolute hole index, "0".."11".
  std::string MoveToString(const Position& pos, const Move& move) const;

  static int RowStart(Player p) { return p == Player::kP1 ? 0 : 6; }
  static bool InRow(int hole, Player p) {
    return hole >= RowStart(p) && hole < RowStart(p) + 6;
  }

 private:
  bool Finished(const Position& pos) const;

  int max_plies_;
};

}  // namespace pnmcts

#endif  // PNMCTS_AWARI_H_
