#include <gtest/gtest.h>

#include <set>

#include "deckpoly/deck.hpp"
#include "deckpoly/digraph.hpp"
#include "deckpoly/error.hpp"
#include "deckpoly/random.hpp"

namespace deckpoly {
namespace {

TEST(ValidateTest, AcceptsDigon) {
  EXPECT_FALSE(validate(Digraph(2, {{0, 1}, {1, 0}})).has_value());
}

TEST(ValidateTest, ReportsFirstViolation) {
  auto loop = validate(Digraph(1, {{0, 0}}));
  ASSERT_TRUE(loop);
  EXPECT_EQ(loop->kind, ViolationKind::kLoopFound);

  auto dup = validate(Digraph(2, {{0, 1}, {0, 1}}));
  ASSERT_TRUE(dup);
  EXPECT_EQ(dup->kind, ViolationKind::kDuplicateArc);
  EXPECT_EQ(dup->arc_index, 1u);

  auto range = validate(Digraph(2, {{0, 1}, {0, 2}}));
  ASSERT_TRUE(range);
  EXPECT_EQ(range->kind, ViolationKind::kIndexOutOfRange);

  auto zero = validate(Digraph(2, {{0, 1}}, std::vector<Rational>{0}));
  ASSERT_TRUE(zero);
  EXPECT_EQ(zero->kind, ViolationKind::kZeroWeight);

  auto mismatch = validate(Digraph(3, {{0, 1}, {1, 2}}, std::vector<Rational>{1}));
  ASSERT_TRUE(mismatch);
  EXPECT_EQ(mismatch->kind, ViolationKind::kWeightCountMismatch);

  EXPECT_EQ(validate(Digraph(0, {}))->kind, ViolationKind::kNoVertices);
  EXPECT_THROW(require_valid(Digraph(1, {{0, 0}})), Error);
}

TEST(MatricesTest, Adjacency) {
  EXPECT_EQ(adjacency(directed_cycle(3)), (RationalMatrix{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}));
  EXPECT_EQ(adjacency(empty_digraph(3)), RationalMatrix(3));
  const Digraph half(2, {{0, 1}}, std::vector<Rational>{make_rational(1, 2)});
  EXPECT_EQ(adjacency(half), (RationalMatrix{{0, make_rational(1, 2)}, {0, 0}}));
}

TEST(MatricesTest, InDegree) {
  EXPECT_EQ(in_degree_matrix(directed_cycle(3)), RationalMatrix::identity(3));
  EXPECT_EQ(in_degree_matrix(empty_digraph(3)), RationalMatrix(3));
  EXPECT_EQ(in_degree_matrix(Digraph(2, {{0, 1}})), (RationalMatrix{{0, 0}, {0, 1}}));
  const Digraph weighted(3, {{0, 2}, {1, 2}},
                         std::vector<Rational>{make_rational(1, 2), make_rational(-3, 4)});
  EXPECT_EQ(in_degree_matrix(weighted)(2, 2), make_rational(-1, 4));
}

TEST(MatricesTest, ColumnSumsOfAdjacencyAreInDegrees) {
  InstanceGenerator gen(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Digraph g = gen.digraph(gen.uniform_index(1, 6), trial % 2 == 0);
    const RationalMatrix a = adjacency(g);
    const RationalMatrix d = in_degree_matrix(g);
    for (std::size_t j = 0; j < g.vertex_count(); ++j) {
      Rational col = 0;
      for (std::size_t i = 0; i < g.vertex_count(); ++i) col += a(i, j);
      EXPECT_EQ(col, d(j, j));
      EXPECT_EQ(a(j, j), 0);
    }
  }
}

TEST(DeleteArcTest, Examples) {
  EXPECT_EQ(delete_arc(directed_cycle(3), 2), Digraph(3, {{0, 1}, {1, 2}}));
  EXPECT_EQ(delete_arc(Digraph(2, {{0, 1}}), 0), empty_digraph(2));
  EXPECT_EQ(delete_arc(Digraph(2, {{0, 1}, {1, 0}}), 1), Digraph(2, {{0, 1}}));
  EXPECT_THROW(delete_arc(Digraph(2, {{0, 1}}), 1), Error);
}

TEST(DeleteArcTest, UpdatesBothMatricesConsistently) {
  InstanceGenerator gen(11);
  for (int trial = 0; trial < 40; ++trial) {
    const Digraph g = gen.digraph(gen.uniform_index(2, 6), true);
    if (g.arc_count() == 0) continue;
    const std::size_t e = gen.uniform_index(0, g.arc_count() - 1);
    const Digraph h = delete_arc(g, e);
    const Arc arc = g.arcs()[e];
    const RationalMatrix a_diff = adjacency(g);
    const RationalMatrix a_after = adjacency(h);
    const RationalMatrix d_before = in_degree_matrix(g);
    const RationalMatrix d_after = in_degree_matrix(h);
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
      for (std::size_t j = 0; j < g.vertex_count(); ++j) {
        const bool deleted = i == arc.source && j == arc.target;
        EXPECT_EQ(a_after(i, j), deleted ? Rational(0) : a_diff(i, j));
      }
      const Rational drop = i == arc.target ? g.weight(e) : Rational(0);
      EXPECT_EQ(d_after(i, i), Rational(d_before(i, i) - drop));
    }
  }
}

TEST(EnumerateTest, Counts) {
  EXPECT_EQ(all_digraphs(2, 2).size(), 1u);
  EXPECT_EQ(all_digraphs(2, 2)[0], Digraph(2, {{0, 1}, {1, 0}}));
  EXPECT_EQ(all_digraphs(3, 1).size(), 6u);
  EXPECT_EQ(all_digraphs(4, 4).size(), 495u);
  EXPECT_EQ(count_digraphs(4, 4), 495u);
  EXPECT_EQ(all_digraphs(3, 0).size(), 1u);
  EXPECT_EQ(count_digraphs(5, 10), 184756u);
  EXPECT_THROW(all_digraphs(3, 7), Error);
}

TEST(EnumerateTest, EachDigraphOnceAllValidInLexOrder) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t m = 0; m <= n * (n - 1); ++m) {
      const auto graphs = all_digraphs(n, m);
      ASSERT_EQ(graphs.size(), count_digraphs(n, m));
      std::set<std::vector<Arc>> seen;
      for (std::size_t r = 0; r < graphs.size(); ++r) {
        EXPECT_FALSE(validate(graphs[r]).has_value());
        EXPECT_TRUE(seen.insert(graphs[r].arcs()).second);
        if (r > 0) EXPECT_LT(graphs[r - 1].arcs(), graphs[r].arcs());
      }
    }
  }
}

TEST(EnumerateTest, RangesConcatenateToWholeStream) {
  const auto whole = all_digraphs(4, 5);
  std::vector<Digraph> pieces;
  const std::uint64_t total = whole.size();
  for (std::uint64_t first = 0; first < total; first += 97) {
    enumerate_digraphs(4, 5, first, first + 97, [&](const Digraph& g) {
      pieces.push_back(g);
      return true;
    });
  }
  EXPECT_EQ(pieces, whole);
}

TEST(DeckTest, PaperDecks) {
  for (std::size_t n = 3; n <= 6; ++n) {
    const Deck d = deck(directed_cycle(n), PolyKind::f1());
    EXPECT_EQ(d.polys, std::vector<Polynomial>(n, Polynomial::monomial(n)));
  }
  EXPECT_EQ(deck(Digraph(2, {{0, 1}}), PolyKind::f1()).polys,
            std::vector<Polynomial>{Polynomial::monomial(2)});
  EXPECT_THROW(deck(empty_digraph(3), PolyKind::f1()), Error);
}

TEST(DeckTest, SizeAndMonicity) {
  InstanceGenerator gen(8);
  for (int trial = 0; trial < 30; ++trial) {
    const Digraph g = gen.digraph(gen.uniform_index(2, 5), trial % 3 == 0);
    if (g.arc_count() == 0) continue;
    for (const PolyKind& kind : named_kinds()) {
      const Deck d = deck(g, kind);
      ASSERT_EQ(d.polys.size(), g.arc_count());
      EXPECT_TRUE(std::is_sorted(d.polys.begin(), d.polys.end()));
      for (const Polynomial& p : d.polys) {
        EXPECT_EQ(p.degree(), g.vertex_count());
        EXPECT_EQ(p.leading(), 1);
      }
    }
  }
}

}  // namespace
}  // namespace deckpoly
