#ifndef PNMCTS_SEARCH_H_
#define PNMCTS_SEARCH_H_

#include <chrono>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pnmcts/game.h"
#include "pnmcts/proof.h"
#include "pnmcts/rng.h"
#include "pnmcts/search_config.h"
#include "pnmcts/selection.h"

namespace pnmcts {

class NoLegalMoves : public std::invalid_argument {
 public:
  NoLegalMoves() : std::invalid_argument("search root has no legal moves") {}
};

enum class RootSolved { kNo, kWin, kDraw, kLoss };

std::string_view ToString(RootSolved s);

// Root solved status from its proof numbers: layer 1 proven is a win,
// layer 2 disproven a loss, layer 1 disproven with layer 2 proven a draw.
RootSolved ClassifyProof(const LayeredProof& proof);

struct RootChildReport {
  std::size_t move_index = 0;  // index in the canonical legal move list
  std::string move;
  std::uint64_t visits = 0;
  double value = 0.0;  // mean result from the root player's view
  LayeredProof proof;
};

struct SearchReport {
  std::size_t chosen_index = 0;  // index in the canonical legal move list
  std::string chosen_move;
  std::uint64_t simulations = 0;
  double root_value = 0.0;  // root player's view
  RootSolved root_solved = RootSolved::kNo;
  std::vector<RootChildReport> children;
};

// One search tree for one move decision. UCT expands a single random child
// per iteration; PN-MCTS expands every child at once, evaluates them
// immediately and keeps both proof layers up to date.
template <Game G>
class Searcher {
 public:
  using Position = typename G::Position;
  using Move = typename G::Move;

  struct Node {
    Position position;
    Move move{};
    std::int32_t parent = -1;
    // Child slots are contiguous; the first `num_children` are in the tree.
    std::int32_t first_child = -1;
    std::uint16_t num_moves = 0;
    std::uint16_t num_children = 0;
    std::uint16_t move_index = 0;
    Outcome outcome = Outcome::kOngoing;
    std::uint64_t visits = 0;
    // Accumulated results from the view of the player who moved into this
    // node.
    double value_sum = 0.0;
    LayeredProof proof;

    bool expanded() const { return first_child >= 0; }
    bool fully_expanded() const {
      return first_child >= 0 && num_children == num_moves;
    }
  };

  Searcher(const G& game, const Position& root, const SearchConfig& config)
      : game_(game),
        config_(config),
        root_player_(game.ToMove(root)),
        rng_(config.seed) {
    config_.Validate();
    Node node;
    node.position = root;
    node.outcome = game_.GetOutcome(root);
    if (IsTerminal(node.outcome)) throw NoLegalMoves();
    nodes_.push_back(node);
  }

  const G& game() const { return game_; }
  const SearchConfig& config() const { return config_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& root() const { return nodes_.front(); }
  Player root_player() const { return root_player_; }
  std::uint64_t simulations() const { return simulations_; }

  NodeKind KindOf(const Node& node) const {
    return KindFor(game_.ToMove(node.position), root_player_);
  }

  std::span<const Node> Children(const Node& node) const {
    if (!node.expanded()) return {};
    return {nodes_.data() + node.first_child, node.num_children};
  }

  bool Solved(const Node& node) const {
    return config_.maintains_proofs() &&
           SolvedPredicate(node.proof, config_.layers);
  }

  // Root mean value from the root player's view.
  double RootValue() const {
    const Node& r = root();
    return r.visits == 0 ? 0.0 : -r.value_sum / static_cast<double>(r.visits);
  }

  std::vector<int> ChildRanks(const Node& node) const {
    if (!config_.maintains_proofs()) throw MissingProofs();
    std::vector<int> ranks;
    std::vector<std::uint32_t> order;
    auto children = Children(node);
    if (children.empty()) throw NoChildren();
    ComputePnRanks(
        children.size(),
        [&](std::size_t i) -> const LayeredProof& { return children[i].proof; },
        KindOf(node), config_.layers, ranks, order);
    return ranks;
  }

  // Selection, expansion, playout and backpropagation.
  void Step() {
    path_.clear();
    std::int32_t current = 0;
    path_.push_back(current);
    std::int32_t expanded = -1;
    for (;;) {
      const Node& node = nodes_[current];
      if (IsTerminal(node.outcome)) break;
      if (!node.fully_expanded()) {
        expanded = current;
        current = Expand(current);
        path_.push_back(current);
        break;
      }
      const auto children = Children(node);
      current = node.first_child +
                static_cast<std::int32_t>(SelectChild(
                    children, node.visits, KindOf(node), config_, rng_,
                    scratch_));
      path_.push_back(current);
    }

    const Node& leaf = nodes_[current];
    const Outcome result =
        IsTerminal(leaf.outcome) ? leaf.outcome : Playout(leaf.position);
    Backpropagate(result);
    if (config_.maintains_proofs() && expanded >= 0) UpdateProofs(expanded);
    ++simulations_;
  }

  // Runs until the budget is spent or, with the solver on, the root is
  // solved. At least one iteration always runs.
  void Run() {
    const auto start = std::chrono::steady_clock::now();
    const Budget& budget = config_.budget;
    do {
      Step();
      if (config_.solver() && Solved(root())) break;
      if (budget.kind == Budget::Kind::kIterations) {
        if (simulations_ >= budget.iterations) break;
      } else if (std::chrono::steady_clock::now() - start >=
                 budget.wall_clock) {
        break;
      }
    } while (true);
  }

  // Index into Children(root()) of the move to play.
  std::size_t FinalChild() {
    return SelectFinalChild(Children(root()), RootValue(), config_, rng_);
  }

  SearchReport Report() {
    SearchReport report;
    const std::size_t chosen = FinalChild();
    const Node& r = root();
    const auto children = Children(r);
    report.chosen_index = children[chosen].move_index;
    report.chosen_move = game_.MoveToString(r.position, children[chosen].move);
    report.simulations = simulations_;
    report.root_value = RootValue();
    report.root_solved = config_.maintains_proofs() ? ClassifyProof(r.proof)
                                                    : RootSolved::kNo;
    for (const Node& child : children) {
      RootChildReport c;
      c.move_index = child.move_index;
      c.move = game_.MoveToString(r.position, child.move);
      c.visits = child.visits;
      const double mean =
          child.visits == 0 ? 0.0
                            : child.value_sum / static_cast<double>(child.visits);
      c.value = mean;
      c.proof = child.proof;
      report.children.push_back(std::move(c));
    }
    return report;
  }

 private:
  // Creates the child (or, for PN-MCTS, all children) of a node that is not
  // fully expanded and returns the one to play out from.
  std::int32_t Expand(std::int32_t index) {
    if (!nodes_[index].expanded()) AllocateSlots(index);
    Node& node = nodes_[index];
    if (config_.maintains_proofs()) {
      for (std::int32_t i = 0; i < node.num_moves; ++i) {
        CreateChild(index, node.first_child + i);
      }
      nodes_[index].num_children = nodes_[index].num_moves;
      const Node& n = nodes_[index];
      return n.first_child +
             static_cast<std::int32_t>(UniformIndex(rng_, n.num_children));
    }
    // Swap a random untried slot into the next free position.
    const std::size_t untried = node.num_moves - node.num_children;
    const std::int32_t pick = node.first_child + node.num_children +
                              static_cast<std::int32_t>(UniformIndex(rng_, untried));
    const std::int32_t slot = node.first_child + node.num_children;
    std::swap(nodes_[pick].move, nodes_[slot].move);
    std::swap(nodes_[pick].move_index, nodes_[slot].move_index);
    CreateChild(index, slot);
    ++nodes_[index].num_children;
    return slot;
  }

  void AllocateSlots(std::int32_t index) {
    game_.GenerateMoves(nodes_[index].position, moves_);
    const auto first = static_cast<std::int32_t>(nodes_.size());
    for (std::size_t i = 0; i < moves_.size(); ++i) {
      Node slot;
      slot.move = moves_[i];
      slot.parent = index;
      slot.move_index = static_cast<std::uint16_t>(i);
      nodes_.push_back(slot);
    }
    Node& node = nodes_[index];
    node.first_child = first;
    node.num_moves = static_cast<std::uint16_t>(moves_.size());
  }

  void CreateChild(std::int32_t parent, std::int32_t slot) {
    const Position pos =
        game_.ApplyUnchecked(nodes_[parent].position, nodes_[slot].move);
    Node& child = nodes_[slot];
    child.position = pos;
    child.outcome = game_.GetOutcome(pos);
    if (config_.maintains_proofs()) {
      child.proof = LeafEvalLayered(child.outcome, root_player_);
    }
  }

  Outcome Playout(Position pos) {
    for (;;) {
      game_.GenerateMoves(pos, playout_moves_);
      if (playout_moves_.empty()) return game_.GetOutcome(pos);
      pos = game_.ApplyUnchecked(
          pos, playout_moves_[UniformIndex(rng_, playout_moves_.size())]);
    }
  }

  void Backpropagate(Outcome result) {
    for (const std::int32_t index : path_) {
      Node& node = nodes_[index];
      ++node.visits;
      const Player mover = Opponent(game_.ToMove(node.position));
      node.value_sum += RewardFor(result, mover);
    }
  }

  // Recomputes proofs from `index` towards the root, stopping at the first
  // node whose pair is unchanged.
  void UpdateProofs(std::int32_t index) {
    while (index >= 0) {
      Node& node = nodes_[index];
      const NodeKind kind = KindOf(node);
      LayeredProof updated{CombineIdentity(kind), CombineIdentity(kind)};
      for (std::int32_t c = node.first_child;
           c < node.first_child + node.num_children; ++c) {
        CombineInto(kind, updated.layer1, nodes_[c].proof.layer1);
        CombineInto(kind, updated.layer2, nodes_[c].proof.layer2);
      }
      if (updated == node.proof) break;
      node.proof = updated;
      index = node.parent;
    }
  }

  const G& game_;
  SearchConfig config_;
  Player root_player_;
  Rng rng_;
  std::vector<Node> nodes_;
  std::vector<std::int32_t> path_;
  std::vector<Move> moves_;
  std::vector<Move> playout_moves_;
  SelectionScratch scratch_;
  std::uint64_t simulations_ = 0;
};

// Fresh tree, full budget, final move selection.
template <Game G>
SearchReport Search(const G& game, const typename G::Position& position,
                    const SearchConfig& config) {
  Searcher<G> searcher(game, position, config);
  searcher.Run();
  return searcher.Report();
}

}  // namespace pnmcts

#endif  // PNMCTS_SEARCH_H_
