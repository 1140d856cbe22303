#ifndef PNMCTS_TREE_GAME_H_
#define PNMCTS_TREE_GAME_H_

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "pnmcts/game.h"

namespace pnmcts {

// Explicit game tree, written as
//   tree := "(L " ("W" | "D" | "L") ")" | "(N " tree+ ")"
// Leaf labels are relative to the root player (P1); players alternate by
// depth.
class TreeGameSpec {
 public:
  enum class Label : std::uint8_t { kWin, kDraw, kLoss };

  struct Node {
    bool leaf = false;
    Label label = Label::kDraw;
    std::vector<std::int32_t> children;
    std::int32_t depth = 0;
  };

  // Throws ParseError (with line and column) on malformed input.
  static TreeGameSpec Parse(std::string_view text);

  std::string ToString() const;

  const Node& node(std::int32_t index) const { return nodes_[index]; }
  std::int32_t root() const { return 0; }
  std::size_t size() const { return nodes_.size(); }
  int height() const { return height_; }

  // Builder used by generators and tests: adds a node and returns its
  // index. The first node added is the root.
  std::int32_t AddLeaf(std::int32_t parent, Label label);
  std::int32_t AddInternal(std::int32_t parent);

  // Checks that every internal node has at least one child.
  void Validate() const;

 private:
  std::int32_t Add(std::int32_t parent, Node node);

  std::vector<Node> nodes_;
  int height_ = 0;
};

struct TreeGamePosition {
  std::int32_t node = 0;
  std::uint16_t ply = 0;
  bool operator==(const TreeGamePosition&) const = default;
};

struct TreeGameMove {
  std::uint16_t child = 0;
  bool operator==(const TreeGameMove&) const = default;
};

class TreeGame {
 public:
  using Position = TreeGamePosition;
  using Move = TreeGameMove;

  explicit TreeGame(TreeGameSpec spec);
  static TreeGame FromText(std::string_view text) {
    return TreeGame(TreeGameSpec::Parse(text));
  }

  std::string name() const { return "tree"; }
  int max_plies() const { return spec_->height() + 1; }
  const TreeGameSpec& spec() const { return *spec_; }

  Position InitialPosition() const { return Position{}; }
  void GenerateMoves(const Position& pos, std::vector<Move>& out) const;
  Position ApplyUnchecked(const Position& pos, const Move& move) const;
  Outcome GetOutcome(const Position& pos) const;
  Player ToMove(const Position& pos) const {
    return pos.ply % 2 == 0 ? Player::kP1 : Player::kP2;
  }
  int Ply(const Position& pos) const { return pos.ply; }

  // `tree:<node-index>:<to-move>:-:<ply>`.
  std::string Serialize(const Position& pos) const;
  Position Parse(std::string_view text) const;
  std::string MoveToString(const Position& pos, const Move& move) const;

 private:
  std::shared_ptr<const TreeGameSpec> spec_;
};

}  // namespace pnmcts

#endif  // PNMCTS_TREE_GAME_H_
