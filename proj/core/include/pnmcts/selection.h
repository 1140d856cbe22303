#ifndef PNMCTS_SELECTION_H_
#define PNMCTS_SELECTION_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "pnmcts/proof.h"
#include "pnmcts/rng.h"
#include "pnmcts/search_config.h"

namespace pnmcts {

// Child statistics the selection rules read. Any type with `visits`,
// `value_sum` and `proof` members works (tree nodes, test fixtures).
template <typename T>
concept ChildStats = requires(const T& c) {
  { c.visits } -> std::convertible_to<std::uint64_t>;
  { c.value_sum } -> std::convertible_to<double>;
  { c.proof } -> std::convertible_to<LayeredProof>;
};

inline constexpr double kInfiniteScore =
    std::numeric_limits<double>::infinity();

class MissingProofs : public std::logic_error {
 public:
  MissingProofs()
      : std::logic_error("proof-number ranks requested on a tree without "
                         "proof numbers") {}
};

class NoChildren : public std::logic_error {
 public:
  NoChildren() : std::logic_error("node has no children to choose from") {}
};

// v_i + C * sqrt(ln(n_p) / n_i); unvisited children score +infinity.
inline double Ucb1Score(double value_sum, std::uint64_t visits,
                        std::uint64_t parent_visits, double c) {
  if (visits == 0) return kInfiniteScore;
  const double n = static_cast<double>(visits);
  const double mean = value_sum / n;
  if (c == 0.0) return mean;
  return mean + c * std::sqrt(std::log(static_cast<double>(parent_visits)) / n);
}

// C_pn * (1 - rank / max_rank).
inline double PnRankBonus(int rank, int max_rank, double c_pn) {
  return c_pn * (1.0 - static_cast<double>(rank) / max_rank);
}

inline double UctPnScore(double value_sum, std::uint64_t visits,
                         std::uint64_t parent_visits, int rank, int max_rank,
                         double c, double c_pn) {
  const double ucb = Ucb1Score(value_sum, visits, parent_visits, c);
  if (ucb == kInfiniteScore) return ucb;
  return ucb + PnRankBonus(rank, max_rank, c_pn);
}

// A node is solved when its deciding layer is proven or disproven: layer 1
// in single-layer mode, layer 2 in double-layer mode.
constexpr bool SolvedPredicate(const LayeredProof& proof, LayerMode layers) {
  return layers == LayerMode::kSingle ? proof.layer1.solved()
                                      : proof.layer2.solved();
}

namespace internal {

// Sort key a PNS would use at this node: pn at OR nodes, dpn at AND nodes;
// double-layer mode breaks first-layer ties with the same-side second-layer
// number.
struct RankKey {
  PnValue primary;
  PnValue secondary;
  friend constexpr auto operator<=>(const RankKey&, const RankKey&) = default;
};

constexpr RankKey MakeRankKey(const LayeredProof& p, NodeKind kind,
                              LayerMode layers) {
  const bool is_or = kind == NodeKind::kOr;
  RankKey key{is_or ? p.layer1.pn : p.layer1.dpn, PnValue(0)};
  if (layers == LayerMode::kDouble) {
    key.secondary = is_or ? p.layer2.pn : p.layer2.dpn;
  }
  return key;
}

}  // namespace internal

// Competition ranking (1 = best; tied children share the rank of the first
// of them; the next distinct key ranks 1 + number of strictly better
// children). Returns the highest rank assigned.
template <typename ProofOf>
int ComputePnRanks(std::size_t n, ProofOf&& proof_of, NodeKind kind,
                   LayerMode layers, std::vector<int>& ranks,
                   std::vector<std::uint32_t>& order) {
  ranks.assign(n, 0);
  order.resize(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<std::uint32_t>(i);
  auto key = [&](std::uint32_t i) {
    return internal::MakeRankKey(proof_of(i), kind, layers);
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t a, std::uint32_t b) {
                     return key(a) < key(b);
                   });
  int max_rank = 0;
  for (std::size_t pos = 0; pos < n; ++pos) {
    const std::uint32_t i = order[pos];
    if (pos > 0 && key(order[pos - 1]) == key(i)) {
      ranks[i] = ranks[order[pos - 1]];
    } else {
      ranks[i] = static_cast<int>(pos) + 1;
    }
    max_rank = std::max(max_rank, ranks[i]);
  }
  return max_rank;
}

inline std::vector<int> PnRanks(std::span<const LayeredProof> children,
                                NodeKind kind, LayerMode layers) {
  if (children.empty()) throw NoChildren();
  std::vector<int> ranks;
  std::vector<std::uint32_t> order;
  ComputePnRanks(
      children.size(), [&](std::size_t i) -> const LayeredProof& {
        return children[i];
      },
      kind, layers, ranks, order);
  return ranks;
}

struct SelectionScratch {
  std::vector<int> ranks;
  std::vector<std::uint32_t> order;
  std::vector<char> excluded;
};

// In-tree child choice: UCB1, or UCT-PN when the U flag is on. With the S
// flag, solved children visited more than T times are skipped unless that
// would skip every child. Exact score ties are broken uniformly at random.
template <ChildStats Child>
std::size_t SelectChild(std::span<const Child> children,
                        std::uint64_t parent_visits, NodeKind kind,
                        const SearchConfig& config, Rng& rng,
                        SelectionScratch& scratch) {
  const std::size_t n = children.size();
  if (n == 0) throw NoChildren();

  scratch.excluded.assign(n, 0);
  if (config.solver()) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (children[i].visits >
              static_cast<std::uint64_t>(config.solver_threshold) &&
          SolvedPredicate(children[i].proof, config.layers)) {
        scratch.excluded[i] = 1;
        ++count;
      }
    }
    if (count == n) scratch.excluded.assign(n, 0);
  }

  int max_rank = 1;
  const bool use_ranks = config.uct_pn();
  if (use_ranks) {
    max_rank = ComputePnRanks(
        n, [&](std::size_t i) -> const LayeredProof& { return children[i].proof; },
        kind, config.layers, scratch.ranks, scratch.order);
  }

  double best = -kInfiniteScore;
  std::size_t chosen = n;
  std::size_t ties = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (scratch.excluded[i]) continue;
    const Child& child = children[i];
    const double score =
        use_ranks ? UctPnScore(child.value_sum, child.visits, parent_visits,
                               scratch.ranks[i], max_rank, config.c,
                               config.c_pn)
                  : Ucb1Score(child.value_sum, child.visits, parent_visits,
                              config.c);
    if (chosen == n || score > best) {
      best = score;
      chosen = i;
      ties = 1;
    } else if (score == best) {
      ++ties;
      if (UniformIndex(rng, ties) == 0) chosen = i;
    }
  }
  return chosen;
}

// All children attaining the maximal selection score; the set SelectChild
// draws from.
template <ChildStats Child>
std::vector<std::size_t> SelectionArgmaxSet(std::span<const Child> children,
                                            std::uint64_t parent_visits,
                                            NodeKind kind,
                                            const SearchConfig& config) {
  std::vector<double> scores(children.size());
  std::vector<int> ranks;
  std::vector<std::uint32_t> order;
  int max_rank = 1;
  if (config.uct_pn()) {
    max_rank = ComputePnRanks(
        children.size(),
        [&](std::size_t i) -> const LayeredProof& { return children[i].proof; },
        kind, config.layers, ranks, order);
  }
  for (std::size_t i = 0; i < children.size(); ++i) {
    const Child& c = children[i];
    scores[i] = config.uct_pn()
                    ? UctPnScore(c.value_sum, c.visits, parent_visits, ranks[i],
                                 max_rank, config.c, config.c_pn)
                    : Ucb1Score(c.value_sum, c.visits, parent_visits, config.c);
  }
  std::vector<std::size_t> best;
  if (scores.empty()) return best;
  const double top = *std::max_element(scores.begin(), scores.end());
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (scores[i] == top) best.push_back(i);
  }
  return best;
}

// Move to play once the budget is spent:
//   1. F on: the first child proven a win on layer 1;
//   2. F on, double layer, root value strictly below contempt: the first
//      proven-draw child;
//   3. otherwise the most visited child, ties broken uniformly at random.
// `root_value` is the root's mean result from the root player's view.
template <ChildStats Child>
std::size_t SelectFinalChild(std::span<const Child> children,
                             double root_value, const SearchConfig& config,
                             Rng& rng) {
  if (children.empty()) throw NoChildren();
  if (config.final_move()) {
    for (std::size_t i = 0; i < children.size(); ++i) {
      if (children[i].proof.layer1.proven()) return i;
    }
    if (config.layers == LayerMode::kDouble && root_value < config.contempt) {
      for (std::size_t i = 0; i < children.size(); ++i) {
        if (children[i].proof.ProvenDraw()) return i;
      }
    }
  }
  std::uint64_t best = 0;
  std::size_t chosen = children.size();
  std::size_t ties = 0;
  for (std::size_t i = 0; i < children.size(); ++i) {
    const std::uint64_t v = children[i].visits;
    if (chosen == children.size() || v > best) {
      best = v;
      chosen = i;
      ties = 1;
    } else if (v == best) {
      ++ties;
      if (UniformIndex(rng, ties) == 0) chosen = i;
    }
  }
  return chosen;
}

}  // namespace pnmcts

#endif  // PNMCTS_SELECTION_H_
