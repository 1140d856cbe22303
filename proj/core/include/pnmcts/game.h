#ifndef PNMCTS_GAME_H_
#define PNMCTS_GAME_H_

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pnmcts {

enum class Player : std::uint8_t { kP1 = 0, kP2 = 1 };

constexpr Player Opponent(Player p) {
  return p == Player::kP1 ? Player::kP2 : Player::kP1;
}

constexpr int PlayerIndex(Player p) { return static_cast<int>(p); }

// Game result. Terminal positions carry exactly one of the Win/Draw values.
enum class Outcome : std::uint8_t { kOngoing, kWinP1, kWinP2, kDraw };

constexpr Outcome WinFor(Player p) {
  return p == Player::kP1 ? Outcome::kWinP1 : Outcome::kWinP2;
}

constexpr bool IsTerminal(Outcome o) { return o != Outcome::kOngoing; }

constexpr bool IsWinFor(Outcome o, Player p) { return o == WinFor(p); }

constexpr bool IsLossFor(Outcome o, Player p) {
  return o == WinFor(Opponent(p));
}

// Playout reward R in {+1, 0, -1} seen from `p`.
constexpr int RewardFor(Outcome o, Player p) {
  if (o == WinFor(p)) return 1;
  if (o == WinFor(Opponent(p))) return -1;
  return 0;
}

std::string_view ToString(Player p);
std::string_view ToString(Outcome o);

class IllegalMove : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column);

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Contract every environment satisfies. Positions are immutable values;
// Apply returns a fresh position and never touches its input.
// GenerateMoves fills `out` in the game's canonical order (cleared first).
template <typename G>
concept Game = requires(const G& g, const typename G::Position& pos,
                        const typename G::Move& move,
                        std::vector<typename G::Move>& out,
                        std::string_view text) {
  typename G::Position;
  typename G::Move;
  { g.name() } -> std::convertible_to<std::string>;
  { g.max_plies() } -> std::convertible_to<int>;
  { g.InitialPosition() } -> std::same_as<typename G::Position>;
  { g.GenerateMoves(pos, out) } -> std::same_as<void>;
  { g.ApplyUnchecked(pos, move) } -> std::same_as<typename G::Position>;
  { g.GetOutcome(pos) } -> std::same_as<Outcome>;
  { g.ToMove(pos) } -> std::same_as<Player>;
  { g.Ply(pos) } -> std::convertible_to<int>;
  { g.Serialize(pos) } -> std::same_as<std::string>;
  { g.Parse(text) } -> std::same_as<typename G::Position>;
  { g.MoveToString(pos, move) } -> std::same_as<std::string>;
  { pos == pos } -> std::convertible_to<bool>;
  { move == move } -> std::convertible_to<bool>;
};

template <Game G>
std::vector<typename G::Move> LegalMoves(const G& game,
                                         const typename G::Position& pos) {
  std::vector<typename G::Move> moves;
  game.GenerateMoves(pos, moves);
  return moves;
}

// Checked application: throws IllegalMove unless `move` is currently legal.
template <Game G>
typename G::Position Apply(const G& game, const typename G::Position& pos,
                           const typename G::Move& move) {
  std::vector<typename G::Move> moves;
  game.GenerateMoves(pos, moves);
  for (const auto& m : moves) {
    if (m == move) return game.ApplyUnchecked(pos, move);
  }
  throw IllegalMove(game.name() + ": illegal move " +
                    game.MoveToString(pos, move) + " in " +
                    game.Serialize(pos));
}

// Applies the move at `index` of the canonical move list.
template <Game G>
typename G::Position ApplyIndex(const G& game, const typename G::Position& pos,
                                std::size_t index) {
  std::vector<typename G::Move> moves;
  game.GenerateMoves(pos, moves);
  if (index >= moves.size()) {
    throw IllegalMove(game.name() + ": move index " + std::to_string(index) +
                      " out of range (" + std::to_string(moves.size()) +
                      " legal moves)");
  }
  return game.ApplyUnchecked(pos, moves[index]);
}

// Finds a legal move by its notation; throws IllegalMove if none matches.
template <Game G>
typename G::Move ParseMove(const G& game, const typename G::Position& pos,
                           std::string_view text) {
  std::vector<typename G::Move> moves;
  game.GenerateMoves(pos, moves);
  for (const auto& m : moves) {
    if (game.MoveToString(pos, m) == text) return m;
  }
  throw IllegalMove(game.name() + ": no legal move '" + std::string(text) +
                    "'");
}

template <Game G>
std::uint64_t Perft(const G& game, const typename G::Position& pos,
                    int depth) {
  if (depth == 0) return 1;
  std::vector<typename G::Move> moves;
  game.GenerateMoves(pos, moves);
  if (depth == 1) return moves.size();
  std::uint64_t nodes = 0;
  for (const auto& m : moves) {
    nodes += Perft(game, game.ApplyUnchecked(pos, m), depth - 1);
  }
  return nodes;
}

}  // namespace pnmcts

#endif  // PNMCTS_GAME_H_
