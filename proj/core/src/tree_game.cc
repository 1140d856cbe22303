#include "pnmcts/tree_game.h"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "text_format.h"

namespace pnmcts {
namespace {

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  TreeGameSpec Run() {
    TreeGameSpec spec;
    SkipSpace();
    ParseTree(spec, -1);
    SkipSpace();
    if (pos_ != text_.size()) Fail("trailing characters after tree");
    return spec;
  }

 private:
  [[noreturn]] void Fail(const std::string& what) const {
    throw ParseError(what, line_, column_);
  }

  void Advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void SkipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      Advance();
    }
  }

  char Peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void Expect(char c) {
    if (Peek() != c) {
      Fail(std::string("expected '") + c + "'" +
           (pos_ < text_.size() ? std::string(", got '") + Peek() + "'"
                                : std::string(", got end of input")));
    }
    Advance();
  }

  void ExpectSpace() {
    if (!std::isspace(static_cast<unsigned char>(Peek()))) {
      Fail("expected whitespace");
    }
    SkipSpace();
  }

  void ParseTree(TreeGameSpec& spec, std::int32_t parent) {
    Expect('(');
    const char kind = Peek();
    if (kind == 'L') {
      Advance();
      ExpectSpace();
      TreeGameSpec::Label label;
      switch (Peek()) {
        case 'W':
          label = TreeGameSpec::Label::kWin;
          break;
        case 'D':
          label = TreeGameSpec::Label::kDraw;
          break;
        case 'L':
          label = TreeGameSpec::Label::kLoss;
          break;
        default:
          Fail("leaf label must be W, D or L");
      }
      Advance();
      SkipSpace();
      Expect(')');
      spec.AddLeaf(parent, label);
    } else if (kind == 'N') {
      Advance();
      ExpectSpace();
      const std::int32_t self = spec.AddInternal(parent);
      if (Peek() != '(') Fail("internal node needs at least one child");
      while (Peek() == '(') {
        ParseTree(spec, self);
        SkipSpace();
      }
      Expect(')');
    } else {
      Fail("node kind must be L or N");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

void AppendTree(const TreeGameSpec& spec, std::int32_t index,
                std::string& out) {
  const auto& node = spec.node(index);
  if (node.leaf) {
    out += "(L ";
    out += node.label == TreeGameSpec::Label::kWin    ? 'W'
           : node.label == TreeGameSpec::Label::kDraw ? 'D'
                                                      : 'L';
    out += ')';
    return;
  }
  out += "(N";
  for (auto child : node.children) {
    out += ' ';
    AppendTree(spec, child, out);
  }
  out += ')';
}

}  // namespace

TreeGameSpec TreeGameSpec::Parse(std::string_view text) {
  return TreeParser(text).Run();
}

std::string TreeGameSpec::ToString() const {
  std::string out;
  if (!nodes_.empty()) AppendTree(*this, 0, out);
  return out;
}

std::int32_t TreeGameSpec::Add(std::int32_t parent, Node node) {
  if (parent < 0 && !nodes_.empty()) {
    throw std::invalid_argument("tree already has a root");
  }
  if (parent >= 0) {
    if (nodes_[parent].leaf) throw std::invalid_argument("leaf parent");
    node.depth = nodes_[parent].depth + 1;
  }
  const auto index = static_cast<std::int32_t>(nodes_.size());
  nodes_.push_back(std::move(node));
  if (parent >= 0) nodes_[parent].children.push_back(index);
  height_ = std::max(height_, nodes_.back().depth);
  return index;
}

std::int32_t TreeGameSpec::AddLeaf(std::int32_t parent, Label label) {
  Node node;
  node.leaf = true;
  node.label = label;
  return Add(parent, std::move(node));
}

std::int32_t TreeGameSpec::AddInternal(std::int32_t parent) {
  return Add(parent, Node{});
}

void TreeGameSpec::Validate() const {
  if (nodes_.empty()) throw std::invalid_argument("empty tree");
  for (const auto& node : nodes_) {
    if (!node.leaf && node.children.empty()) {
      throw std::invalid_argument("internal tree node without children");
    }
  }
}

TreeGame::TreeGame(TreeGameSpec spec)
    : spec_(std::make_shared<const TreeGameSpec>(std::move(spec))) {
  spec_->Validate();
}

void TreeGame::GenerateMoves(const Position& pos,
                             std::vector<Move>& out) const {
  out.clear();
  const auto& node = spec_->node(pos.node);
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    out.push_back(Move{static_cast<std::uint16_t>(i)});
  }
}

TreeGamePosition TreeGame::ApplyUnchecked(const Position& pos,
                                          const Move& move) const {
  return Position{spec_->node(pos.node).children[move.child],
                  static_cast<std::uint16_t>(pos.ply + 1)};
}

Outcome TreeGame::GetOutcome(const Position& pos) const {
  const auto& node = spec_->node(pos.node);
  if (!node.leaf) return Outcome::kOngoing;
  switch (node.label) {
    case TreeGameSpec::Label::kWin:
      return Outcome::kWinP1;
    case TreeGameSpec::Label::kLoss:
      return Outcome::kWinP2;
    case TreeGameSpec::Label::kDraw:
      return Outcome::kDraw;
  }
  return Outcome::kDraw;
}

std::string TreeGame::Serialize(const Position& pos) const {
  return name() + ":" + std::to_string(pos.node) + ":" +
         internal::PlayerChar(ToMove(pos)) + ":-:" + std::to_string(pos.ply);
}

TreeGamePosition TreeGame::Parse(std::string_view text) const {
  using namespace internal;
  PositionFields f = SplitPositionFields(text, name());
  Position pos;
  pos.node = ParseInt(f.field[kCells], f.column[kCells]);
  if (static_cast<std::size_t>(pos.node) >= spec_->size()) {
    throw ParseError("node index out of range", 1, f.column[kCells]);
  }
  pos.ply = static_cast<std::uint16_t>(ParsePlyField(f));
  if (pos.ply != spec_->node(pos.node).depth) {
    throw ParseError("ply must equal the node's depth", 1, f.column[kPly]);
  }
  if (ParsePlayerField(f) != ToMove(pos)) {
    throw ParseError("player to move disagrees with depth parity", 1,
                     f.column[kToMove]);
  }
  if (f.field[kCaptures] != "-") {
    throw ParseError("expected '-' captures field", 1, f.column[kCaptures]);
  }
  return pos;
}

std::string TreeGame::MoveToString(const Position&, const Move& move) const {
  return std::to_string(move.child);
}

}  // namespace pnmcts
