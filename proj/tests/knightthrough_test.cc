#include <random>
#include <set>
#include <string>

#include <gtest/gtest.h>

#include "naive_games.h"
#include "pnmcts/knightthrough.h"

namespace pnmcts {
namespace {

std::set<std::string> EngineMoves(const Knightthrough& game,
                                  const KnightthroughPosition& pos) {
  std::set<std::string> out;
  for (const auto& m : LegalMoves(game, pos)) out.insert(game.MoveToString(pos, m));
  return out;
}

std::set<std::string> NaiveMoves(const oracle::NaiveKnightthrough& s) {
  auto v = s.Moves();
  return {v.begin(), v.end()};
}

Outcome FromNaive(oracle::Result r) {
  switch (r) {
    case oracle::Result::kP1: return Outcome::kWinP1;
    case oracle::Result::kP2: return Outcome::kWinP2;
    case oracle::Result::kDraw: return Outcome::kDraw;
    default: return Outcome::kOngoing;
  }
}

constexpr char kEmptyRows[] = "......../......../......../......../......../";

TEST(KnightthroughTest, InitialPositionMatchesNaiveEnumeration) {
  Knightthrough game;
  const auto pos = game.InitialPosition();
  const auto naive = oracle::NaiveKnightthrough::Initial(300);
  EXPECT_EQ(EngineMoves(game, pos), NaiveMoves(naive));
  EXPECT_EQ(LegalMoves(game, pos).size(), 40u);
  EXPECT_EQ(game.GetOutcome(pos), Outcome::kOngoing);
}

TEST(KnightthroughTest, PerftMatchesNaiveGenerator) {
  Knightthrough game;
  const auto naive = oracle::NaiveKnightthrough::Initial(300);
  for (int depth = 0; depth <= 3; ++depth) {
    EXPECT_EQ(Perft(game, game.InitialPosition(), depth),
              oracle::NaivePerft(naive, depth));
  }
}

TEST(KnightthroughTest, BackRankKnightOnClearBoard) {
  Knightthrough game;
  // Lone P1 knights on a1 and d1, one P2 knight far away on h8.
  const auto pos = game.Parse(
      "knightthrough:n..n..../......../" + std::string(kEmptyRows) +
      ".......N:1:-:0");
  EXPECT_EQ(game.GetOutcome(pos), Outcome::kOngoing);
  const auto moves = EngineMoves(game, pos);
  EXPECT_EQ(moves, (std::set<std::string>{"a1-c2", "a1-b3", "d1-b2", "d1-f2",
                                          "d1-c3", "d1-e3"}));
}

TEST(KnightthroughTest, OwnPieceBlocksAndCaptureRemovesEnemy) {
  Knightthrough game;
  const auto pos = game.Parse(
      "knightthrough:.n....../...n..../..N...../......../......../"
      "......../......../N.......:1:-:1");
  const auto moves = EngineMoves(game, pos);
  EXPECT_FALSE(moves.count("b1-d2"));
  EXPECT_TRUE(moves.count("b1xc3"));
  const auto next = Apply(game, pos, ParseMove(game, pos, "b1xc3"));
  EXPECT_EQ(std::popcount(next.knights[1]), 1);
  EXPECT_EQ(std::popcount(next.knights[0]), 2);
}

TEST(KnightthroughTest, WinConditions) {
  Knightthrough game;
  const auto reach = game.Parse(
      "knightthrough:n......./......../" + std::string(kEmptyRows) +
      "N..n....:2:-:9");
  EXPECT_EQ(game.GetOutcome(reach), Outcome::kWinP1);
  EXPECT_TRUE(LegalMoves(game, reach).empty());

  const auto wipe = game.Parse(
      "knightthrough:n......./......../" + std::string(kEmptyRows) +
      "........:2:-:9");
  EXPECT_EQ(game.GetOutcome(wipe), Outcome::kWinP1);

  // P2 knight in the corner of row 0 has reached P1's edge.
  const auto p2 = game.Parse(
      "knightthrough:N......./n......./" + std::string(kEmptyRows) +
      "........:1:-:9");
  EXPECT_EQ(game.GetOutcome(p2), Outcome::kWinP2);
}

TEST(KnightthroughTest, PlyCapIsDraw) {
  Knightthrough game(2);
  auto pos = game.InitialPosition();
  pos = ApplyIndex(game, pos, 0);
  pos = ApplyIndex(game, pos, 0);
  EXPECT_EQ(game.GetOutcome(pos), Outcome::kDraw);
}

TEST(KnightthroughTest, RandomPlayoutsAgreeWithNaiveAndMoveForward) {
  std::mt19937_64 rng(21);
  Knightthrough game;
  int checked = 0;
  for (int g = 0; g < 500; ++g) {
    auto pos = game.InitialPosition();
    auto naive = oracle::NaiveKnightthrough::Initial(300);
    for (;;) {
      ASSERT_EQ(game.Parse(game.Serialize(pos)), pos);
      ++checked;
      ASSERT_EQ(game.GetOutcome(pos), FromNaive(naive.Outcome()));
      const auto legal = LegalMoves(game, pos);
      ASSERT_EQ(EngineMoves(game, pos), NaiveMoves(naive));
      ASSERT_EQ(legal.empty(), IsTerminal(game.GetOutcome(pos)));
      if (legal.empty()) break;
      const auto m = legal[std::uniform_int_distribution<std::size_t>(
          0, legal.size() - 1)(rng)];
      const int gain = pos.to_move == Player::kP1 ? m.to / 8 - m.from / 8
                                                  : m.from / 8 - m.to / 8;
      ASSERT_GT(gain, 0);
      const std::string text = game.MoveToString(pos, m);
      const int before = std::popcount(pos.knights[1 - PlayerIndex(pos.to_move)]);
      const auto next = game.ApplyUnchecked(pos, m);
      const int after = std::popcount(next.knights[1 - PlayerIndex(pos.to_move)]);
      ASSERT_EQ(before - after, text[2] == 'x' ? 1 : 0);
      pos = next;
      naive = naive.Apply(text);
    }
  }
  EXPECT_GE(checked, 10000);
}

}  // namespace
}  // namespace pnmcts
