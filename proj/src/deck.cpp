#include "deckpoly/deck.hpp"

#include <algorithm>

#include "deckpoly/error.hpp"

namespace deckpoly {

Deck make_deck(std::size_t vertex_count, PolyKind kind, std::vector<Polynomial> polys) {
  std::sort(polys.begin(), polys.end());
  return Deck{vertex_count, std::move(kind), std::move(polys)};
}

Deck deck(const Digraph& g, const PolyKind& kind) {
  require_valid(g);
  if (g.arc_count() == 0) throw Error(ErrorKind::kEmptyArcSet, "deck of a digraph with no arcs");
  std::vector<Polynomial> polys;
  polys.reserve(g.arc_count());
  for (std::size_t e = 0; e < g.arc_count(); ++e) polys.push_back(poly_of(delete_arc(g, e), kind));
  return make_deck(g.vertex_count(), kind, std::move(polys));
}

}  // namespace deckpoly
