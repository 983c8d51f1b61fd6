#include <gtest/gtest.h>

#include "deckpoly/deck.hpp"
#include "deckpoly/identities.hpp"
#include "deckpoly/random.hpp"
#include "deckpoly/reconstruct.hpp"

namespace deckpoly {
namespace {

const Digraph kStarOfDigons(3, {{0, 1}, {1, 0}, {0, 2}, {2, 0}});

Rational scalar(const IdentityValue& v) { return std::get<Rational>(v); }
Polynomial poly(const IdentityValue& v) { return std::get<Polynomial>(v); }

TEST(Thm21Test, HandValues) {
  const auto r = check_thm21(RationalMatrix{{1, 2}, {3, 4}});
  EXPECT_TRUE(r.holds());
  EXPECT_EQ(scalar(r.lhs), -4);
  EXPECT_EQ(scalar(r.rhs), -4);
  EXPECT_EQ(r.identity, "2.1");
  const auto z = check_thm21(RationalMatrix(3));
  EXPECT_TRUE(z.holds());
  EXPECT_EQ(scalar(z.lhs), 0);
}

TEST(Thm22Test, HandValues) {
  const auto r = check_thm22(RationalMatrix{{1, 2}, {0, 4}});
  EXPECT_TRUE(r.holds());
  EXPECT_EQ(scalar(r.lhs), 4);
  EXPECT_EQ(scalar(r.rhs), 4);
  EXPECT_TRUE(check_thm22(RationalMatrix{{1, 2}, {3, 4}}).holds());
  RationalMatrix diag(4);
  for (std::size_t i = 0; i < 4; ++i) diag(i, i) = static_cast<long>(i) + 2;
  const auto d = check_thm22(diag);
  EXPECT_TRUE(d.holds());
  EXPECT_EQ(scalar(d.lhs), 0);
  EXPECT_EQ(scalar(d.rhs), 0);
}

TEST(Thm23Test, HandValues) {
  const auto r = check_thm23(RationalMatrix{{1, 2}, {3, 4}});
  EXPECT_TRUE(r.holds());
  EXPECT_EQ(scalar(r.lhs), 20);
  EXPECT_EQ(scalar(r.rhs), 20);
  RationalMatrix diag(3);
  for (std::size_t i = 0; i < 3; ++i) diag(i, i) = make_rational(3, static_cast<long>(i) + 1);
  EXPECT_TRUE(check_thm23(diag).holds());
  EXPECT_EQ(scalar(check_thm23(diag).lhs), 0);
}

TEST(MatrixIdentitySweep, RandomMatrices) {
  InstanceGenerator gen(42);
  for (int trial = 0; trial < 300; ++trial) {
    RationalMatrix x = gen.matrix(6, 0.3);
    if (trial % 5 == 0) x(0, x.order() - 1) = make_rational(trial + 1, 7);
    const bool h21 = check_thm21(x).holds();
    const bool h22 = check_thm22(x).holds();
    ASSERT_TRUE(h21) << trial;
    ASSERT_TRUE(h22) << trial;
    ASSERT_TRUE(check_thm23(x).holds()) << trial;
  }
}

TEST(Thm31Test, StarOfDigons) {
  const auto r = check_thm31(kStarOfDigons, 0, 1, PencilMode::kDeterminant);
  EXPECT_TRUE(r.holds());
  EXPECT_EQ(poly(r.lhs), (Polynomial{0, -4, 0, 4}));
  EXPECT_EQ(poly(r.rhs), (Polynomial{0, -4, 0, 4}));
}

TEST(Thm31Test, CycleF1) {
  for (std::size_t n = 3; n <= 7; ++n) {
    const auto r = check_eq17(directed_cycle(n), PolyKind::f1());
    EXPECT_TRUE(r.holds());
    EXPECT_EQ(poly(r.lhs), Polynomial::monomial(n, static_cast<unsigned long>(n)));
  }
}

TEST(Thm31Test, RandomWeightedSweep) {
  InstanceGenerator gen(7);
  for (int trial = 0; trial < 120; ++trial) {
    const Digraph g = gen.digraph(gen.uniform_index(1, 6), trial % 2 == 0);
    const Rational beta = gen.rational();
    const Rational gamma = gen.nonzero_rational();
    const PencilMode mode = trial % 3 == 0 ? PencilMode::kPermanent : PencilMode::kDeterminant;
    const auto r = check_thm31(g, beta, gamma, mode);
    ASSERT_TRUE(r.holds()) << "trial " << trial;
    const auto& inst = std::get<PencilInstance>(r.instance);
    EXPECT_EQ(inst.graph, g);
    EXPECT_EQ(inst.kind.beta(), beta);
  }
}

TEST(Eq17Test, AllKindsOnCycleAndEmpty) {
  for (const PolyKind& kind : named_kinds()) {
    EXPECT_TRUE(check_eq17(directed_cycle(4), kind).holds()) << kind.name();
    const auto e = check_eq17(empty_digraph(4), kind);
    EXPECT_TRUE(e.holds());
    EXPECT_TRUE(poly(e.lhs).is_zero());
    EXPECT_TRUE(poly(e.rhs).is_zero());
  }
}

TEST(Eq17Test, RandomSweep) {
  InstanceGenerator gen(1);
  for (int trial = 0; trial < 60; ++trial) {
    const Digraph g = gen.digraph(gen.uniform_index(1, 6), false);
    for (const PolyKind& kind : named_kinds()) ASSERT_TRUE(check_eq17(g, kind).holds());
  }
}

TEST(Eq17Test, AnnihilatedDeckCoefficientVanishesBelowN) {
  InstanceGenerator gen(31);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = gen.uniform_index(2, 6);
    const std::size_t m = gen.uniform_index(1, n - 1);
    const Digraph g = gen.digraph_with_arcs(n, m, trial % 2 == 0);
    for (const PolyKind& kind : named_kinds()) {
      EXPECT_EQ(deck_sum(deck(g, kind)).coeff(n - m), 0);
    }
  }
}

}  // namespace
}  // namespace deckpoly
