#pragma once

#include <cstddef>
#include <vector>

#include "deckpoly/digraph.hpp"
#include "deckpoly/graph_polys.hpp"
#include "deckpoly/polynomial.hpp"

namespace deckpoly {

// Multiset of polynomials of the one-arc-deleted subdigraphs, kept sorted.
struct Deck {
  std::size_t vertex_count = 0;
  PolyKind kind = PolyKind::f1();
  std::vector<Polynomial> polys;

  bool operator==(const Deck& other) const = default;
};

// Sorts polys into canonical order.
Deck make_deck(std::size_t vertex_count, PolyKind kind, std::vector<Polynomial> polys);

// {poly_of(G - e, kind) : e in E(G)}. Throws Error(kEmptyArcSet) when m == 0.
Deck deck(const Digraph& g, const PolyKind& kind);

}  // namespace deckpoly
