#include "deckpoly/identities.hpp"

#include "deckpoly/deck.hpp"

namespace deckpoly {

namespace {

IdentityReport matrix_report(std::string name, const RationalMatrix& x, Rational lhs,
                             Rational rhs) {
  const Verdict verdict = lhs == rhs ? Verdict::kHolds : Verdict::kViolated;
  return IdentityReport{std::move(name), x, std::move(lhs), std::move(rhs), verdict};
}

template <typename Kernel>
IdentityReport check_nonzero_sum(std::string name, const RationalMatrix& x, Kernel kernel) {
  const std::size_t n = x.order();
  const long m = static_cast<long>(x.count_nonzero());
  Rational rhs = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!is_zero(x(i, j))) rhs += kernel(zero_entry(x, i, j));
    }
  }
  Rational lhs = Rational(m - static_cast<long>(n)) * kernel(x);
  return matrix_report(std::move(name), x, std::move(lhs), std::move(rhs));
}

}  // namespace

IdentityReport check_thm21(const RationalMatrix& x) {
  const std::size_t n = x.order();
  Rational rhs = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rhs += det_bareiss(zero_entry(x, i, j));
  }
  Rational lhs = Rational(static_cast<unsigned long>(n * n - n)) * det_bareiss(x);
  return matrix_report("2.1", x, std::move(lhs), std::move(rhs));
}

IdentityReport check_thm22(const RationalMatrix& x) {
  return check_nonzero_sum("2.2", x, [](const RationalMatrix& y) { return det_bareiss(y); });
}

IdentityReport check_thm23(const RationalMatrix& x) {
  return check_nonzero_sum("2.3", x, [](const RationalMatrix& y) { return per_ryser(y); });
}

namespace {

IdentityReport check_deck_equation(std::string name, const Digraph& g, const PolyKind& kind) {
  const Polynomial f = poly_of(g, kind);
  const long shift = static_cast<long>(g.arc_count()) - static_cast<long>(g.vertex_count());
  Polynomial lhs = f * Rational(shift) + Polynomial::monomial(1) * derivative(f);
  Polynomial rhs;
  if (g.arc_count() > 0) {
    for (const Polynomial& p : deck(g, kind).polys) rhs += p;
  }
  const Verdict verdict = lhs == rhs ? Verdict::kHolds : Verdict::kViolated;
  return IdentityReport{std::move(name), PencilInstance{g, kind}, std::move(lhs), std::move(rhs),
                        verdict};
}

}  // namespace

IdentityReport check_thm31(const Digraph& g, const Rational& beta, const Rational& gamma,
                           PencilMode mode) {
  return check_deck_equation("3.1", g, PolyKind::general(beta, gamma, mode));
}

IdentityReport check_eq17(const Digraph& g, const PolyKind& kind) {
  return check_deck_equation("1.7", g, kind);
}

}  // namespace deckpoly
