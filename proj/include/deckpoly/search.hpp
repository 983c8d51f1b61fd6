#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "deckpoly/digraph.hpp"
#include "deckpoly/graph_polys.hpp"
#include "deckpoly/polynomial.hpp"

namespace deckpoly {

inline constexpr std::uint64_t kDefaultSearchBudget = 1'000'000;

struct CollisionMember {
  Digraph graph;          // first labeled digraph, in enumeration order, with this polynomial
  Polynomial poly;
  std::uint64_t labeled_count;  // labeled digraphs in the group sharing poly
};

// Labeled (n, m)-digraphs whose decks coincide but whose polynomials do not.
// Members are sorted by polynomial.
struct CollisionGroup {
  PolyKind kind;
  std::size_t vertex_count;
  std::size_t arc_count;
  std::vector<Polynomial> deck_signature;
  std::vector<CollisionMember> members;
};

// G1 = directed n-cycle, G2 = path 0->1->...->n-1 plus arc (0, n-1).
// Throws Error(kInvalidArgument) for n < 3, where G2 repeats an arc.
std::pair<Digraph, Digraph> canonical_counterexample(std::size_t n);

struct SearchOptions {
  std::uint64_t budget = kDefaultSearchBudget;
  // 0 picks std::thread::hardware_concurrency().
  unsigned workers = 1;
};

// Groups every labeled (n, m)-digraph by deck signature and returns groups
// carrying at least two distinct polynomials, sorted by signature. The
// output does not depend on the worker count.
// Throws Error(kArcCountOutOfRange) or Error(kBudgetExceeded).
std::vector<CollisionGroup> find_deck_collisions(std::size_t n, std::size_t m,
                                                 const PolyKind& kind,
                                                 const SearchOptions& options = {});

// Recomputes every member's deck and polynomial from scratch.
bool recheck_group(const CollisionGroup& group);

}  // namespace deckpoly
