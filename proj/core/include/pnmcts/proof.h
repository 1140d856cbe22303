#ifndef PNMCTS_PROOF_H_
#define PNMCTS_PROOF_H_

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>

#include "pnmcts/game.h"

namespace pnmcts {

// Extended natural number: a finite count or infinity. Addition saturates,
// so a finite sum that would overflow becomes infinity.
class PnValue {
 public:
  using Rep = std::uint32_t;
  static constexpr Rep kInfinityRep = std::numeric_limits<Rep>::max();

  constexpr PnValue() = default;
  constexpr explicit PnValue(Rep value) : value_(value) {}

  static constexpr PnValue Infinity() { return PnValue(kInfinityRep); }
  static constexpr PnValue Zero() { return PnValue(0); }

  constexpr bool is_infinite() const { return value_ == kInfinityRep; }
  constexpr bool is_zero() const { return value_ == 0; }
  constexpr Rep value() const { return value_; }

  friend constexpr PnValue operator+(PnValue a, PnValue b) {
    if (a.value_ >= kInfinityRep - b.value_) return Infinity();
    return PnValue(a.value_ + b.value_);
  }
  constexpr PnValue& operator+=(PnValue other) { return *this = *this + other; }

  friend constexpr auto operator<=>(PnValue, PnValue) = default;

  std::string ToString() const;

 private:
  Rep value_ = 0;
};

std::ostream& operator<<(std::ostream& os, PnValue v);

inline constexpr PnValue kPnInfinity = PnValue::Infinity();

struct ProofPair {
  PnValue pn{1};
  PnValue dpn{1};

  static constexpr ProofPair Proven() { return {PnValue(0), kPnInfinity}; }
  static constexpr ProofPair Disproven() { return {kPnInfinity, PnValue(0)}; }
  static constexpr ProofPair Unknown() { return {PnValue(1), PnValue(1)}; }

  constexpr bool proven() const { return pn.is_zero(); }
  constexpr bool disproven() const { return dpn.is_zero(); }
  constexpr bool solved() const { return proven() || disproven(); }
  // pn = 0 forces dpn = inf and vice versa; never both zero.
  constexpr bool Valid() const {
    if (pn.is_zero() && dpn.is_zero()) return false;
    if (pn.is_zero()) return dpn.is_infinite();
    if (dpn.is_zero()) return pn.is_infinite();
    return true;
  }

  bool operator==(const ProofPair&) const = default;
};

std::ostream& operator<<(std::ostream& os, const ProofPair& p);

// Layer 1 proves "the root player wins"; layer 2 proves "the root player
// does not lose".
struct LayeredProof {
  ProofPair layer1;
  ProofPair layer2;

  const ProofPair& layer(int which) const {
    return which == 1 ? layer1 : layer2;
  }

  constexpr bool Valid() const {
    if (!layer1.Valid() || !layer2.Valid()) return false;
    if (layer1.proven() && !layer2.proven()) return false;
    if (layer2.disproven() && !layer1.disproven()) return false;
    return true;
  }

  // Both layers agree the root player draws.
  constexpr bool ProvenDraw() const {
    return layer1.disproven() && layer2.proven();
  }

  bool operator==(const LayeredProof&) const = default;
};

std::ostream& operator<<(std::ostream& os, const LayeredProof& p);

// OR where the root player moves, AND where the opponent moves.
enum class NodeKind : std::uint8_t { kOr, kAnd };

constexpr NodeKind KindFor(Player to_move, Player root_player) {
  return to_move == root_player ? NodeKind::kOr : NodeKind::kAnd;
}

class EmptyChildren : public std::invalid_argument {
 public:
  EmptyChildren() : std::invalid_argument("proof combine over no children") {}
};

// Immediate evaluation of a (possibly terminal) node for one layer.
// Ongoing positions get (1, 1).
constexpr ProofPair LeafEval(Outcome outcome, Player root_player, int layer) {
  if (outcome == Outcome::kOngoing) return ProofPair::Unknown();
  const bool proven = layer == 1 ? IsWinFor(outcome, root_player)
                                 : !IsLossFor(outcome, root_player);
  return proven ? ProofPair::Proven() : ProofPair::Disproven();
}

constexpr LayeredProof LeafEvalLayered(Outcome outcome, Player root_player) {
  return {LeafEval(outcome, root_player, 1),
          LeafEval(outcome, root_player, 2)};
}

// Adds one child into a running combination. Start from CombineIdentity.
constexpr ProofPair CombineIdentity(NodeKind kind) {
  return kind == NodeKind::kOr ? ProofPair{kPnInfinity, PnValue(0)}
                               : ProofPair{PnValue(0), kPnInfinity};
}

constexpr void CombineInto(NodeKind kind, ProofPair& acc,
                           const ProofPair& child) {
  if (kind == NodeKind::kOr) {
    acc.pn = child.pn < acc.pn ? child.pn : acc.pn;
    acc.dpn += child.dpn;
  } else {
    acc.pn += child.pn;
    acc.dpn = child.dpn < acc.dpn ? child.dpn : acc.dpn;
  }
}

// OR: (min pn, sum dpn). AND: (sum pn, min dpn). Throws EmptyChildren.
ProofPair Combine(NodeKind kind, std::span<const ProofPair> children);
LayeredProof UpdateLayered(NodeKind kind,
                           std::span<const LayeredProof> children);

}  // namespace pnmcts

#endif  // PNMCTS_PROOF_H_
