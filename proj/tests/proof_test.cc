#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "pnmcts/proof.h"
#include "tree_oracles.h"

namespace pnmcts {
namespace {

const ProofPair kProven = ProofPair::Proven();
const ProofPair kDisproven = ProofPair::Disproven();
const ProofPair kUnknown = ProofPair::Unknown();

ProofPair P(std::uint32_t pn, std::uint32_t dpn) {
  return {PnValue(pn), PnValue(dpn)};
}

TEST(PnValueTest, InfinityAbsorbsAndSumsSaturate) {
  EXPECT_EQ(kPnInfinity + PnValue(5), kPnInfinity);
  EXPECT_EQ(PnValue(5) + kPnInfinity, kPnInfinity);
  EXPECT_EQ(std::min(kPnInfinity, PnValue(3)), PnValue(3));
  const PnValue big(PnValue::kInfinityRep - 1);
  EXPECT_TRUE((big + PnValue(1)).is_infinite());
  EXPECT_TRUE((big + big).is_infinite());
  EXPECT_EQ(PnValue(2) + PnValue(3), PnValue(5));
  EXPECT_LT(PnValue(1'000'000), kPnInfinity);
}

TEST(LeafEvalTest, LayerSemantics) {
  const Player root = Player::kP1;
  EXPECT_EQ(LeafEval(Outcome::kWinP1, root, 1), kProven);
  EXPECT_EQ(LeafEval(Outcome::kWinP1, root, 2), kProven);
  EXPECT_EQ(LeafEval(Outcome::kDraw, root, 1), kDisproven);
  EXPECT_EQ(LeafEval(Outcome::kDraw, root, 2), kProven);
  EXPECT_EQ(LeafEval(Outcome::kWinP2, root, 1), kDisproven);
  EXPECT_EQ(LeafEval(Outcome::kWinP2, root, 2), kDisproven);
  EXPECT_EQ(LeafEval(Outcome::kOngoing, root, 1), kUnknown);
  EXPECT_EQ(LeafEval(Outcome::kOngoing, root, 2), kUnknown);
  EXPECT_EQ(LeafEval(Outcome::kWinP2, Player::kP2, 1), kProven);
}

TEST(CombineTest, SpecExamples) {
  const std::vector<ProofPair> a{kProven, kUnknown};
  EXPECT_EQ(Combine(NodeKind::kOr, a), kProven);
  const std::vector<ProofPair> b{kUnknown, kUnknown};
  EXPECT_EQ(Combine(NodeKind::kAnd, b), P(2, 1));
  const std::vector<ProofPair> c{kDisproven, kDisproven};
  EXPECT_EQ(Combine(NodeKind::kOr, c), kDisproven);
  EXPECT_THROW(Combine(NodeKind::kOr, {}), EmptyChildren);
}

TEST(CombineTest, UpdateLayeredExamples) {
  const LayeredProof unknown{kUnknown, kUnknown};
  const std::vector<LayeredProof> three(3, unknown);
  const LayeredProof out = UpdateLayered(NodeKind::kAnd, three);
  EXPECT_EQ(out.layer1, P(3, 1));
  EXPECT_EQ(out.layer2, P(3, 1));
  const LayeredProof draw{kDisproven, kProven};
  EXPECT_TRUE(draw.ProvenDraw());
  const std::vector<LayeredProof> single{draw};
  EXPECT_EQ(UpdateLayered(NodeKind::kOr, single), draw);
  EXPECT_THROW(UpdateLayered(NodeKind::kAnd, {}), EmptyChildren);
}

ProofPair RandomValidPair(std::mt19937_64& rng) {
  switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
    case 0: return kProven;
    case 1: return kDisproven;
    default: {
      std::uniform_int_distribution<std::uint32_t> v(1, 50);
      const bool huge = std::bernoulli_distribution(0.05)(rng);
      return {huge ? PnValue(PnValue::kInfinityRep - 2) : PnValue(v(rng)),
              PnValue(v(rng))};
    }
  }
}

TEST(CombineTest, RandomInstancesPreserveInvariantsAndAreIdempotent) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 100000; ++i) {
    const NodeKind kind =
        std::bernoulli_distribution(0.5)(rng) ? NodeKind::kOr : NodeKind::kAnd;
    std::vector<ProofPair> kids(std::uniform_int_distribution<int>(1, 6)(rng));
    for (auto& k : kids) k = RandomValidPair(rng);
    const ProofPair out = Combine(kind, kids);
    ASSERT_TRUE(out.Valid()) << out;
    const std::vector<ProofPair> only{out};
    ASSERT_EQ(Combine(kind, only), out);
    std::vector<oracle::Pair> plain;
    for (const auto& k : kids) plain.push_back(oracle::FromPn(k));
    oracle::Pair expect = oracle::CombinePairs(kind == NodeKind::kOr, plain);
    // The engine saturates at its own infinity; the oracle sums in 64 bits.
    auto clamp = [](std::uint64_t v) {
      return v >= PnValue::kInfinityRep ? oracle::kInf : v;
    };
    expect = {clamp(expect.pn), clamp(expect.dpn)};
    ASSERT_EQ(oracle::FromPn(out), expect);
  }
}

TEST(LayeredProofTest, ImplicationsHoldOnRandomTrees) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 300; ++t) {
    const TreeGameSpec spec = oracle::RandomTree(rng, 6, 4);
    // Evaluate bottom-up with leaf_eval + update_layered.
    std::vector<LayeredProof> proof(spec.size());
    for (std::size_t k = spec.size(); k-- > 0;) {
      const auto& node = spec.node(static_cast<std::int32_t>(k));
      if (node.leaf) {
        const Outcome o = node.label == TreeGameSpec::Label::kWin    ? Outcome::kWinP1
                          : node.label == TreeGameSpec::Label::kLoss ? Outcome::kWinP2
                                                                     : Outcome::kDraw;
        proof[k] = LeafEvalLayered(o, Player::kP1);
      } else {
        std::vector<LayeredProof> kids;
        for (auto c : node.children) kids.push_back(proof[c]);
        proof[k] = UpdateLayered(
            node.depth % 2 == 0 ? NodeKind::kOr : NodeKind::kAnd, kids);
      }
      ASSERT_TRUE(proof[k].Valid());
    }
    // A fully evaluated tree is solved on both layers, matching minimax.
    const int v = oracle::TreeMinimax(spec, 0);
    EXPECT_EQ(proof[0].layer1.proven(), v == 1);
    EXPECT_EQ(proof[0].layer2.proven(), v >= 0);
    EXPECT_EQ(proof[0].ProvenDraw(), v == 0);
  }
}

TEST(LayeredProofTest, ValidityRejectsContradictions) {
  EXPECT_FALSE((ProofPair{PnValue(0), PnValue(0)}).Valid());
  EXPECT_FALSE((ProofPair{PnValue(0), PnValue(3)}).Valid());
  EXPECT_FALSE((LayeredProof{kProven, kUnknown}).Valid());
  EXPECT_FALSE((LayeredProof{kUnknown, kDisproven}).Valid());
  EXPECT_TRUE((LayeredProof{kDisproven, kUnknown}).Valid());
}

}  // namespace
}  // namespace pnmcts
