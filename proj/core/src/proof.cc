#include "pnmcts/proof.h"

namespace pnmcts {

std::string PnValue::ToString() const {
  return is_infinite() ? "inf" : std::to_string(value_);
}

std::ostream& operator<<(std::ostream& os, PnValue v) {
  return os << v.ToString();
}

std::ostream& operator<<(std::ostream& os, const ProofPair& p) {
  return os << "(" << p.pn << ", " << p.dpn << ")";
}

std::ostream& operator<<(std::ostream& os, const LayeredProof& p) {
  return os << "{L1 " << p.layer1 << ", L2 " << p.layer2 << "}";
}

ProofPair Combine(NodeKind kind, std::span<const ProofPair> children) {
  if (children.empty()) throw EmptyChildren();
  ProofPair acc = CombineIdentity(kind);
  for (const auto& child : children) CombineInto(kind, acc, child);
  return acc;
}

LayeredProof UpdateLayered(NodeKind kind,
                           std::span<const LayeredProof> children) {
  if (children.empty()) throw EmptyChildren();
  LayeredProof acc{CombineIdentity(kind), CombineIdentity(kind)};
  for (const auto& child : children) {
    CombineInto(kind, acc.layer1, child.layer1);
    CombineInto(kind, acc.layer2, child.layer2);
  }
  return acc;
}

}  // namespace pnmcts
