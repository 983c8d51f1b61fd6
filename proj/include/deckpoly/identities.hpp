#pragma once

#include <string>
#include <variant>

#include "deckpoly/digraph.hpp"
#include "deckpoly/graph_polys.hpp"
#include "deckpoly/matrix.hpp"
#include "deckpoly/polynomial.hpp"

namespace deckpoly {

// A digraph together with the pencil parameters an identity was checked on.
struct PencilInstance {
  Digraph graph;
  PolyKind kind;
};

using IdentityInstance = std::variant<RationalMatrix, PencilInstance>;
using IdentityValue = std::variant<Rational, Polynomial>;

enum class Verdict { kHolds, kViolated };

// Both sides of one identity on one instance. The instance is kept whole so
// a violation can be replayed.
struct IdentityReport {
  std::string identity;
  IdentityInstance instance;
  IdentityValue lhs;
  IdentityValue rhs;
  Verdict verdict;

  bool holds() const { return verdict == Verdict::kHolds; }
};

// (n^2 - n) det(X) = sum over all (i,j) of det(X_ij)
IdentityReport check_thm21(const RationalMatrix& x);

// (m - n) det(X) = sum over nonzero (i,j) of det(X_ij), m = nonzero count
IdentityReport check_thm22(const RationalMatrix& x);

// (m - n) per(X) = sum over nonzero (i,j) of per(X_ij)
IdentityReport check_thm23(const RationalMatrix& x);

// (m - n) g + x g' = sum over arcs e of g(G - e) for
// g = mode(xI - beta D - gamma A).
IdentityReport check_thm31(const Digraph& g, const Rational& beta, const Rational& gamma,
                           PencilMode mode);

// check_thm31 specialized to a kind's parameters; the report keeps the kind.
IdentityReport check_eq17(const Digraph& g, const PolyKind& kind);

}  // namespace deckpoly
