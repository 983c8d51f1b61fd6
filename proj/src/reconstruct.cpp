#include "deckpoly/reconstruct.hpp"

#include <string>

#include "deckpoly/error.hpp"

namespace deckpoly {

namespace {

// Laplacian determinant pencils are singular at x = 0: every column of
// beta*D + gamma*A sums to zero when beta = -gamma.
bool constant_term_vanishes(const PolyKind& kind) {
  return kind.mode() == PencilMode::kDeterminant && kind.beta() == -kind.gamma();
}

}  // namespace

Polynomial deck_sum(const Deck& deck) {
  if (deck.polys.empty()) throw Error(ErrorKind::kInvalidArgument, "empty deck");
  Polynomial sum;
  for (const Polynomial& p : deck.polys) sum += p;
  return sum;
}

ReconstructionResult reconstruct(const Deck& deck) {
  const Polynomial s = deck_sum(deck);
  const std::size_t n = deck.polys.front().degree();
  const std::size_t m = deck.polys.size();
  for (const Polynomial& p : deck.polys) {
    if (p.degree() != n) {
      return Inconsistent{"deck members have different degrees (" + std::to_string(n) +
                          " and " + std::to_string(p.degree()) + ")"};
    }
  }
  if (s.coeff(n) != static_cast<unsigned long>(m)) {
    return Inconsistent{"leading coefficient sum " + to_string(s.coeff(n)) + " != m=" +
                        std::to_string(m)};
  }

  // (m - n + k) c_k = s_k
  const long shift = static_cast<long>(m) - static_cast<long>(n);
  std::vector<Rational> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    const long factor = shift + static_cast<long>(k);
    if (factor != 0) c[k] = s.coeff(k) / Rational(factor);
  }
  if (shift > 0) return Unique{Polynomial(std::move(c))};

  const std::size_t free = static_cast<std::size_t>(-shift);
  if (!is_zero(s.coeff(free))) {
    return Inconsistent{"coefficient " + std::to_string(free) + " reads 0 = " +
                        to_string(s.coeff(free))};
  }
  if (free == n) {
    c[n] = 1;
    return Unique{Polynomial(std::move(c))};
  }
  if (free == n - 1) {
    // x^{n-1} carries -trace(beta*D + gamma*A) = -beta * (single unit arc).
    c[n - 1] = -deck.kind.beta();
    return Unique{Polynomial(std::move(c))};
  }
  if (free == 0 && constant_term_vanishes(deck.kind)) {
    c[0] = 0;
    return Unique{Polynomial(std::move(c))};
  }
  return OneParameterFamily{Polynomial(std::move(c)), free};
}

const char* to_string(RoundtripStatus status) {
  switch (status) {
    case RoundtripStatus::kRecovered: return "recovered";
    case RoundtripStatus::kCovered: return "covered";
    case RoundtripStatus::kMissed: return "missed";
  }
  return "unknown";
}

RoundtripReport verify_roundtrip(const Digraph& g, const PolyKind& kind) {
  Polynomial truth = poly_of(g, kind);
  ReconstructionResult result = reconstruct(deck(g, kind));
  RoundtripStatus status = RoundtripStatus::kMissed;
  if (const auto* u = std::get_if<Unique>(&result)) {
    if (u->poly == truth) status = RoundtripStatus::kRecovered;
  } else if (const auto* f = std::get_if<OneParameterFamily>(&result)) {
    const Polynomial gap = truth - f->base;
    if (gap.is_zero() || gap == Polynomial::monomial(f->free_exponent, gap.leading())) {
      status = RoundtripStatus::kCovered;
    }
  }
  return RoundtripReport{std::move(truth), std::move(result), status};
}

}  // namespace deckpoly
