#include "pnmcts/search.h"

namespace pnmcts {

std::string_view ToString(RootSolved s) {
  switch (s) {
    case RootSolved::kNo:
      return "no";
    case RootSolved::kWin:
      return "win";
    case RootSolved::kDraw:
      return "draw";
    case RootSolved::kLoss:
      return "loss";
  }
  return "?";
}

RootSolved ClassifyProof(const LayeredProof& proof) {
  if (proof.layer1.proven()) return RootSolved::kWin;
  if (proof.layer2.disproven()) return RootSolved::kLoss;
  if (proof.ProvenDraw()) return RootSolved::kDraw;
  return RootSolved::kNo;
}

}  // namespace pnmcts
