#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "naive_games.h"
#include "pnmcts/loa.h"

namespace pnmcts {
namespace {

std::set<std::string> EngineMoves(const Loa& game, const LoaPosition& pos) {
  std::set<std::string> out;
  for (const auto& m : LegalMoves(game, pos)) out.insert(game.MoveToString(pos, m));
  return out;
}

std::set<std::string> NaiveMoves(const oracle::NaiveLoa& s) {
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

TEST(LoaTest, InitialPositionMatchesNaiveEnumeration) {
  for (int n : {7, 8}) {
    Loa game(n);
    const auto pos = game.InitialPosition();
    const auto naive = oracle::NaiveLoa::Initial(n, 300);
    EXPECT_EQ(game.Serialize(pos), naive.ToText());
    EXPECT_EQ(EngineMoves(game, pos), NaiveMoves(naive)) << "size " << n;
    EXPECT_EQ(game.GetOutcome(pos), Outcome::kOngoing);
    EXPECT_EQ(game.ToMove(pos), Player::kP1);
  }
}

TEST(LoaTest, InitialMoveCountIs36On8x8) {
  Loa game(8);
  EXPECT_EQ(LegalMoves(game, game.InitialPosition()).size(), 36u);
}

TEST(LoaTest, PerftMatchesNaiveGenerator) {
  for (int n : {7, 8}) {
    Loa game(n);
    const auto naive = oracle::NaiveLoa::Initial(n, 300);
    for (int depth = 0; depth <= 3; ++depth) {
      EXPECT_EQ(Perft(game, game.InitialPosition(), depth),
                oracle::NaivePerft(naive, depth))
          << "loa" << n << " depth " << depth;
    }
  }
}

TEST(LoaTest, RandomPlayoutsAgreeWithNaiveRules) {
  std::mt19937_64 rng(7);
  for (int n : {7, 8}) {
    Loa game(n, 120);
    for (int g = 0; g < 60; ++g) {
      auto pos = game.InitialPosition();
      auto naive = oracle::NaiveLoa::Initial(n, 120);
      for (;;) {
        ASSERT_EQ(game.Serialize(pos), naive.ToText());
        ASSERT_EQ(game.GetOutcome(pos), FromNaive(naive.result));
        const auto moves = EngineMoves(game, pos);
        ASSERT_EQ(moves, NaiveMoves(naive)) << naive.ToText();
        if (moves.empty()) break;
        auto it = moves.begin();
        std::advance(it, std::uniform_int_distribution<std::size_t>(
                             0, moves.size() - 1)(rng));
        pos = Apply(game, pos, ParseMove(game, pos, *it));
        naive = naive.Apply(*it);
      }
    }
  }
}

TEST(LoaTest, LegalMovesEmptyIffTerminalAndPieceCountMonotone) {
  std::mt19937_64 rng(11);
  Loa game(8);
  for (int g = 0; g < 200; ++g) {
    auto pos = game.InitialPosition();
    for (;;) {
      const auto moves = LegalMoves(game, pos);
      ASSERT_EQ(moves.empty(), IsTerminal(game.GetOutcome(pos)));
      if (moves.empty()) break;
      const auto& m = moves[std::uniform_int_distribution<std::size_t>(
          0, moves.size() - 1)(rng)];
      const auto next = game.ApplyUnchecked(pos, m);
      const int before = std::popcount(pos.black | pos.white);
      const int after = std::popcount(next.black | next.white);
      const bool capture = (pos.pieces(Opponent(pos.to_move)) >> m.to) & 1;
      ASSERT_EQ(after, before - (capture ? 1 : 0));
      ASSERT_EQ(next.ply, pos.ply + 1);
      ASSERT_EQ(next.to_move, Opponent(pos.to_move));
      pos = next;
    }
  }
}

TEST(LoaTest, SerializationRoundTrip) {
  std::mt19937_64 rng(3);
  for (int n : {7, 8}) {
    Loa game(n);
    int checked = 0;
    while (checked < 10000) {
      auto pos = game.InitialPosition();
      for (;;) {
        ASSERT_EQ(game.Parse(game.Serialize(pos)), pos) << game.Serialize(pos);
        ++checked;
        const auto moves = LegalMoves(game, pos);
        if (moves.empty()) break;
        pos = game.ApplyUnchecked(
            pos, moves[std::uniform_int_distribution<std::size_t>(
                     0, moves.size() - 1)(rng)]);
      }
    }
  }
}

TEST(LoaTest, LoneMoverOnLineMovesOneSquare) {
  // d1 is the only piece on its rank, its file and both of its diagonals.
  Loa game(8);
  const auto pos = game.Parse(
      "loa8:...b..../......../......../......../......../......../"
      "w......./b......w:1:-:0");
  const auto moves = EngineMoves(game, pos);
  for (const char* m : {"d1-c1", "d1-e1", "d1-d2", "d1-c2", "d1-e2"}) {
    EXPECT_TRUE(moves.count(m)) << m;
  }
}

TEST(LoaTest, OpponentPieceBlocksButOwnPieceDoesNot) {
  Loa game(8);
  // Three pieces on rank 1: a1 must travel three files and b1 is white.
  const auto blocked = game.Parse(
      "loa8:bwb...../......../......../......../......../......../"
      "......../w......b:1:-:0");
  EXPECT_FALSE(EngineMoves(game, blocked).count("a1-d1"));
  // Own piece on b1 is jumped; d1 is white and captured.
  const auto own = game.Parse(
      "loa8:bb.w..../......../......../......../......../......../"
      "......../w......b:1:-:0");
  EXPECT_TRUE(EngineMoves(game, own).count("a1-d1"));
  for (const auto& pos : {blocked, own}) {
    const auto naive = oracle::NaiveLoa::FromText(game.Serialize(pos), 300);
    EXPECT_EQ(EngineMoves(game, pos), NaiveMoves(naive));
  }
}

TEST(LoaTest, SinglePieceSideIsConnected) {
  EXPECT_TRUE(Loa::Connected(0));
  EXPECT_TRUE(Loa::Connected(1ULL << 27));
  EXPECT_TRUE(Loa::Connected((1ULL << 27) | (1ULL << 36)));  // diagonal
  EXPECT_FALSE(Loa::Connected((1ULL << 0) | (1ULL << 2)));
}

TEST(LoaTest, CaptureOfPenultimatePieceConnectsVictim) {
  Loa game(8);
  // White {c3, a8}; the c-file holds two pieces so c1-c3 captures,
  // leaving white as a single piece and black {c3, h1} split.
  const auto pos = game.Parse(
      "loa8:..b....b/......../..w...../......../......../......../"
      "......../w.......:1:-:1");
  const auto next = Apply(game, pos, ParseMove(game, pos, "c1-c3"));
  EXPECT_EQ(game.GetOutcome(next), Outcome::kWinP2);
  const auto naive = oracle::NaiveLoa::FromText(game.Serialize(pos), 300).Apply("c1-c3");
  EXPECT_EQ(naive.result, oracle::Result::kP2);
}

TEST(LoaTest, SimultaneousConnectionGoesToMover) {
  // Black b1 captures the white piece on b3, joining black {b3, c4} while
  // leaving white as the single piece h8.
  const std::string text =
      "loa8:.b....../......../.w....../..b...../......../......../"
      "......../.......w:1:-:1";
  Loa game(8);
  const auto pos = game.Parse(text);
  const auto next = Apply(game, pos, ParseMove(game, pos, "b1-b3"));
  EXPECT_TRUE(Loa::Connected(next.black));
  EXPECT_TRUE(Loa::Connected(next.white));
  EXPECT_EQ(game.GetOutcome(next), Outcome::kWinP1);
  EXPECT_EQ(oracle::NaiveLoa::FromText(text, 300).Apply("b1-b3").result,
            oracle::Result::kP1);

  Loa opponent_rule(8, 300, SimultaneousConnection::kOpponentWins);
  EXPECT_EQ(opponent_rule.GetOutcome(opponent_rule.ApplyUnchecked(
                pos, ParseMove(game, pos, "b1-b3"))),
            Outcome::kWinP2);
  Loa draw_rule(8, 300, SimultaneousConnection::kDraw);
  EXPECT_EQ(draw_rule.GetOutcome(
                draw_rule.ApplyUnchecked(pos, ParseMove(game, pos, "b1-b3"))),
            Outcome::kDraw);
}

TEST(LoaTest, PlyCapIsDraw) {
  Loa game(8, 4);
  auto pos = game.InitialPosition();
  for (int i = 0; i < 4; ++i) pos = ApplyIndex(game, pos, 0);
  EXPECT_EQ(game.GetOutcome(pos), Outcome::kDraw);
  EXPECT_TRUE(LegalMoves(game, pos).empty());
}

TEST(LoaTest, IllegalMoveAndParseErrors) {
  Loa game(8);
  const auto pos = game.InitialPosition();
  EXPECT_THROW(Apply(game, pos, LoaMove{0, 1}), IllegalMove);
  EXPECT_THROW(ParseMove(game, pos, "a1-a2"), IllegalMove);
  EXPECT_THROW(game.Parse("loa7:.......:1:-:0"), ParseError);
  EXPECT_THROW(game.Parse("awari:1:1:-:0"), ParseError);
  try {
    game.Parse(
        "loa8:.bbbbbb./w......w/w......w/w..q...w/w......w/w......w/"
        "w......w/.bbbbbb.:1:-:0");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1);
    EXPECT_EQ(e.column(), 36);
  }
}

}  // namespace
}  // namespace pnmcts
