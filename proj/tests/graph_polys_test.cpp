#include <gtest/gtest.h>

#include "deckpoly/error.hpp"
#include "deckpoly/graph_polys.hpp"
#include "deckpoly/random.hpp"
#include "deckpoly/search.hpp"
#include "oracles.hpp"

namespace deckpoly {
namespace {

const Digraph kSingleArc(2, {{0, 1}});
const Digraph kStarOfDigons(3, {{0, 1}, {1, 0}, {0, 2}, {2, 0}});

Polynomial x_pow_plus(std::size_t n, long constant) {
  Polynomial p = Polynomial::monomial(n);
  p += Polynomial::constant(constant);
  return p;
}

TEST(PolyKindTest, NamesRoundTrip) {
  for (const PolyKind& kind : named_kinds()) EXPECT_EQ(parse_kind(kind.name()), kind);
  const PolyKind g = PolyKind::general(make_rational(1, 2), -3, PencilMode::kPermanent);
  EXPECT_EQ(g.name(), "general:1/2,-3,per");
  EXPECT_EQ(parse_kind("general:1/2,-3,per"), g);
  EXPECT_EQ(parse_kind("general:0,1,det").beta(), 0);
  EXPECT_EQ(PolyKind::f5().gamma(), -1);
  EXPECT_EQ(PolyKind::f6().mode(), PencilMode::kPermanent);
  for (const char* bad : {"f0", "f7", "F1", "general:1,0,det", "general:1,2", "general:1,2,xx",
                          "general:a,2,det", ""}) {
    EXPECT_THROW(parse_kind(bad), Error) << bad;
  }
}

TEST(PencilTest, Examples) {
  EXPECT_EQ(pencil_at(kSingleArc, PolyKind::f2(), 2), (RationalMatrix{{2, 1}, {0, 1}}));
  const Digraph cycle = directed_cycle(4);
  RationalMatrix minus_a = adjacency(cycle);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) minus_a(i, j) = -minus_a(i, j);
  }
  EXPECT_EQ(pencil_at(cycle, PolyKind::f1(), 0), minus_a);
  for (const PolyKind& kind : named_kinds()) {
    RationalMatrix expected = RationalMatrix::identity(3);
    for (std::size_t i = 0; i < 3; ++i) expected(i, i) = make_rational(5, 2);
    EXPECT_EQ(pencil_at(empty_digraph(3), kind, make_rational(5, 2)), expected);
  }
}

TEST(PolyOfTest, CycleAndPathValues) {
  for (std::size_t n = 3; n <= 8; ++n) {
    const auto [cycle, path] = canonical_counterexample(n);
    EXPECT_EQ(poly_of(cycle, PolyKind::f1()), x_pow_plus(n, -1));
    EXPECT_EQ(poly_of(cycle, PolyKind::f4()), x_pow_plus(n, n % 2 == 0 ? 1 : -1));
    EXPECT_EQ(poly_of(path, PolyKind::f1()), Polynomial::monomial(n));
    EXPECT_EQ(poly_of(path, PolyKind::f4()), Polynomial::monomial(n));
  }
}

TEST(PolyOfTest, HandComputedValues) {
  EXPECT_EQ(poly_of(kSingleArc, PolyKind::f2()), (Polynomial{0, -1, 1}));
  EXPECT_EQ(poly_of(kStarOfDigons, PolyKind::f1()), (Polynomial{0, -2, 0, 1}));
  EXPECT_EQ(poly_of_oracle(Digraph(2, {{0, 1}, {1, 0}}), PolyKind::f1()), (Polynomial{-1, 0, 1}));
  for (const PolyKind& kind : named_kinds()) {
    EXPECT_EQ(poly_of(empty_digraph(4), kind), Polynomial::monomial(4));
    EXPECT_EQ(poly_of_oracle(empty_digraph(4), kind), Polynomial::monomial(4));
  }
}

TEST(PolyOfTest, FrozenLaplaceValues) {
  // Digon plus a pendant arc into vertex 2; values from laplace_pencil.
  const Digraph g(3, {{0, 1}, {1, 0}, {1, 2}});
  const Polynomial f3 = testing::laplace_pencil(g, 1, 1, true);
  const Polynomial f6 = testing::laplace_pencil(g, 1, 1, false);
  // det(xI - D - A) = (x-1)[(x-1)^2 - 1] = x^3 - 3x^2 + 2x
  EXPECT_EQ(f3, (Polynomial{0, 2, -3, 1}));
  // per(xI - D - A) = (x-1)[(x-1)^2 + 1] = x^3 - 3x^2 + 4x - 2
  EXPECT_EQ(f6, (Polynomial{-2, 4, -3, 1}));
  EXPECT_EQ(poly_of(g, PolyKind::f3()), f3);
  EXPECT_EQ(poly_of(g, PolyKind::f6()), f6);
}

TEST(PolyOfTest, MatchesOracleExhaustivelyOnThreeVertices) {
  for (std::size_t m = 0; m <= 6; ++m) {
    for (const Digraph& g : all_digraphs(3, m)) {
      for (const PolyKind& kind : named_kinds()) {
        ASSERT_EQ(poly_of(g, kind), poly_of_oracle(g, kind)) << kind.name();
      }
    }
  }
}

TEST(PolyOfTest, MatchesOracleOnFourAndFiveVertices) {
  for (std::size_t m = 0; m <= 4; ++m) {
    for (const Digraph& g : all_digraphs(4, m)) {
      for (const PolyKind& kind : named_kinds()) {
        ASSERT_EQ(poly_of(g, kind), poly_of_oracle(g, kind));
      }
    }
  }
  InstanceGenerator gen(55);
  for (int trial = 0; trial < 40; ++trial) {
    const Digraph g = gen.digraph(5, trial % 2 == 1);
    const PolyKind kind = PolyKind::general(gen.rational(), gen.nonzero_rational(),
                                            trial % 4 < 2 ? PencilMode::kDeterminant
                                                          : PencilMode::kPermanent);
    const Polynomial p = poly_of(g, kind);
    ASSERT_EQ(p, poly_of_oracle(g, kind));
    ASSERT_EQ(p, testing::laplace_pencil(g, kind.beta(), kind.gamma(),
                                         kind.mode() == PencilMode::kDeterminant));
  }
}

TEST(PolyOfTest, MonicWithTraceCoefficient) {
  InstanceGenerator gen(77);
  for (int trial = 0; trial < 60; ++trial) {
    const Digraph g = gen.digraph(gen.uniform_index(1, 7), trial % 2 == 0);
    const std::size_t n = g.vertex_count();
    for (const PolyKind& kind : named_kinds()) {
      const Polynomial p = poly_of(g, kind);
      ASSERT_EQ(p.degree(), n);
      ASSERT_EQ(p.leading(), 1);
      if (n >= 1) {
        EXPECT_EQ(p.coeff(n - 1), Rational(-kind.beta() * g.total_weight()));
      }
    }
  }
}

TEST(PolyOfTest, AcyclicDigraphsHaveTrivialF1) {
  InstanceGenerator gen(101);
  for (int trial = 0; trial < 40; ++trial) {
    const Digraph g = gen.digraph(gen.uniform_index(1, 7), false);
    std::vector<Arc> forward;
    for (const Arc& a : g.arcs()) {
      if (a.source < a.target) forward.push_back(a);
    }
    const Digraph dag(g.vertex_count(), forward);
    EXPECT_EQ(poly_of(dag, PolyKind::f1()), Polynomial::monomial(g.vertex_count()));
    EXPECT_EQ(poly_of(dag, PolyKind::f4()), Polynomial::monomial(g.vertex_count()));
  }
}

TEST(PolyOfTest, LaplacianConstantTermVanishes) {
  InstanceGenerator gen(13);
  for (int trial = 0; trial < 60; ++trial) {
    const Digraph g = gen.digraph(gen.uniform_index(1, 8), trial % 2 == 0);
    EXPECT_EQ(eval(poly_of(g, PolyKind::f2()), 0), 0);
  }
}

TEST(PolyOfTest, SizeCaps) {
  EXPECT_THROW(poly_of(empty_digraph(kMaxPermanentPolyOrder + 1), PolyKind::f4()), Error);
  EXPECT_THROW(poly_of(empty_digraph(kMaxDeterminantPolyOrder + 1), PolyKind::f1()), Error);
  EXPECT_THROW(poly_of_oracle(empty_digraph(kMaxOracleOrder + 1), PolyKind::f1()), Error);
  EXPECT_EQ(poly_of(directed_cycle(20), PolyKind::f1()), x_pow_plus(20, -1));
  EXPECT_THROW(poly_of(Digraph(2, {{0, 0}}), PolyKind::f1()), Error);
}

}  // namespace
}  // namespace deckpoly
