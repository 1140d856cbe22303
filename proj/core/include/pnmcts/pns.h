#ifndef PNMCTS_PNS_H_
#define PNMCTS_PNS_H_

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pnmcts/game.h"
#include "pnmcts/proof.h"

namespace pnmcts {

enum class SolveStatus { kProven, kDisproven, kUnknown };

std::string_view ToString(SolveStatus s);

struct SolveResult {
  SolveStatus status = SolveStatus::kUnknown;
  std::uint64_t nodes_expanded = 0;
  // Root child with pn = 0 when proven (lowest index).
  std::optional<std::size_t> proven_move_index;
  std::string proven_move;
};

class AlreadySolved : public std::logic_error {
 public:
  AlreadySolved() : std::logic_error("proof-number root already solved") {}
};

inline constexpr std::uint64_t kUnboundedBudget =
    std::numeric_limits<std::uint64_t>::max();

// Best-first proof-number search over a fresh tree. The proof objective is
// fixed by `layer` (1: the player to move at the root wins, 2: does not
// lose). Ties between equal numbers go to the lowest child index.
template <Game G>
class PnsSolver {
 public:
  using Position = typename G::Position;
  using Move = typename G::Move;

  struct Node {
    Position position;
    Move move{};
    std::int32_t parent = -1;
    std::int32_t first_child = -1;
    std::int32_t num_children = 0;
    NodeKind kind = NodeKind::kOr;
    Outcome outcome = Outcome::kOngoing;
    ProofPair proof;

    bool expanded() const { return first_child >= 0; }
  };

  PnsSolver(const G& game, const Position& root, int layer)
      : game_(game), layer_(layer), root_player_(game.ToMove(root)) {
    if (layer != 1 && layer != 2) {
      throw std::invalid_argument("proof layer must be 1 or 2");
    }
    Node node;
    node.position = root;
    node.kind = NodeKind::kOr;
    node.outcome = game_.GetOutcome(root);
    node.proof = LeafEval(node.outcome, root_player_, layer_);
    nodes_.push_back(node);
  }

  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& root() const { return nodes_.front(); }
  Player root_player() const { return root_player_; }
  int layer() const { return layer_; }
  std::uint64_t nodes_expanded() const { return expanded_; }
  bool solved() const { return root().proof.solved(); }

  // Root-to-leaf path of node indices: min pn at OR nodes, min dpn at AND
  // nodes, first child on ties.
  std::vector<std::int32_t> SelectMostProving() const {
    if (solved()) throw AlreadySolved();
    std::vector<std::int32_t> path{0};
    std::int32_t current = 0;
    while (nodes_[current].expanded()) {
      const Node& node = nodes_[current];
      std::int32_t best = node.first_child;
      for (std::int32_t c = node.first_child + 1;
           c < node.first_child + node.num_children; ++c) {
        const ProofPair& cand = nodes_[c].proof;
        const ProofPair& incumbent = nodes_[best].proof;
        const bool better = node.kind == NodeKind::kOr
                                ? cand.pn < incumbent.pn
                                : cand.dpn < incumbent.dpn;
        if (better) best = c;
      }
      current = best;
      path.push_back(current);
    }
    return path;
  }

  // Generates every child of the leaf at the end of `path`, evaluates them
  // immediately and recomputes the pairs back up the path, stopping at the
  // first ancestor whose pair does not change.
  void ExpandAndUpdate(const std::vector<std::int32_t>& path) {
    const std::int32_t leaf = path.back();
    if (nodes_[leaf].expanded() || IsTerminal(nodes_[leaf].outcome)) {
      throw std::logic_error("PNS expansion of a non-frontier node");
    }
    game_.GenerateMoves(nodes_[leaf].position, moves_);
    const auto first = static_cast<std::int32_t>(nodes_.size());
    for (const Move& m : moves_) {
      Node child;
      child.position = game_.ApplyUnchecked(nodes_[leaf].position, m);
      child.move = m;
      child.parent = leaf;
      child.kind = KindFor(game_.ToMove(child.position), root_player_);
      child.outcome = game_.GetOutcome(child.position);
      child.proof = LeafEval(child.outcome, root_player_, layer_);
      nodes_.push_back(child);
    }
    nodes_[leaf].first_child = first;
    nodes_[leaf].num_children = static_cast<std::int32_t>(moves_.size());
    ++expanded_;

    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      Node& node = nodes_[*it];
      const ProofPair updated = Recompute(node);
      if (updated == node.proof && *it != leaf) break;
      node.proof = updated;
    }
  }

  // One select/expand/update cycle. Returns false once the root is solved.
  bool Step() {
    if (solved()) return false;
    ExpandAndUpdate(SelectMostProving());
    return true;
  }

  SolveResult Run(std::uint64_t node_budget) {
    while (!solved() && expanded_ < node_budget) Step();
    SolveResult result;
    result.nodes_expanded = expanded_;
    if (root().proof.proven()) {
      result.status = SolveStatus::kProven;
      const Node& r = root();
      for (std::int32_t c = r.first_child;
           r.expanded() && c < r.first_child + r.num_children; ++c) {
        if (nodes_[c].proof.proven()) {
          result.proven_move_index = static_cast<std::size_t>(c - r.first_child);
          result.proven_move = game_.MoveToString(r.position, nodes_[c].move);
          break;
        }
      }
    } else if (root().proof.disproven()) {
      result.status = SolveStatus::kDisproven;
    }
    return result;
  }

  // Pair implied by the node's current children (or its own evaluation
  // when unexpanded).
  ProofPair Recompute(const Node& node) const {
    if (!node.expanded()) return LeafEval(node.outcome, root_player_, layer_);
    ProofPair acc = CombineIdentity(node.kind);
    for (std::int32_t c = node.first_child;
         c < node.first_child + node.num_children; ++c) {
      CombineInto(node.kind, acc, nodes_[c].proof);
    }
    return acc;
  }

 private:
  const G& game_;
  int layer_;
  Player root_player_;
  std::vector<Node> nodes_;
  std::vector<Move> moves_;
  std::uint64_t expanded_ = 0;
};

template <Game G>
SolveResult Solve(const G& game, const typename G::Position& position,
                  int layer, std::uint64_t node_budget) {
  if (node_budget < 1) throw std::invalid_argument("node budget must be >= 1");
  PnsSolver<G> solver(game, position, layer);
  return solver.Run(node_budget);
}

}  // namespace pnmcts

#endif  // PNMCTS_PNS_H_
