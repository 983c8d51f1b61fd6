#include "deckpoly/graph_polys.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "deckpoly/error.hpp"

namespace deckpoly {

PolyKind PolyKind::named(int index) {
  switch (index) {
    case 1: return f1();
    case 2: return f2();
    case 3: return f3();
    case 4: return f4();
    case 5: return f5();
    case 6: return f6();
    default:
      throw Error(ErrorKind::kInvalidArgument, "kind index must be 1..6, got " +
                                                   std::to_string(index));
  }
}

PolyKind PolyKind::general(const Rational& beta, const Rational& gamma, PencilMode mode) {
  if (is_zero(gamma)) throw Error(ErrorKind::kInvalidArgument, "gamma must be nonzero");
  return PolyKind(Tag::kGeneral, beta, gamma, mode);
}

std::string PolyKind::name() const {
  switch (tag_) {
    case Tag::kF1: return "f1";
    case Tag::kF2: return "f2";
    case Tag::kF3: return "f3";
    case Tag::kF4: return "f4";
    case Tag::kF5: return "f5";
    case Tag::kF6: return "f6";
    case Tag::kGeneral: break;
  }
  return "general:" + to_string(beta_) + "," + to_string(gamma_) + "," +
         (mode_ == PencilMode::kDeterminant ? "det" : "per");
}

PolyKind parse_kind(std::string_view text) {
  if (text.size() == 2 && text[0] == 'f' && text[1] >= '1' && text[1] <= '6') {
    return PolyKind::named(text[1] - '0');
  }
  constexpr std::string_view kPrefix = "general:";
  if (text.substr(0, kPrefix.size()) != kPrefix) {
    throw Error(ErrorKind::kInvalidArgument, "unknown kind '" + std::string(text) + "'");
  }
  std::string_view rest = text.substr(kPrefix.size());
  const auto c1 = rest.find(',');
  const auto c2 = c1 == std::string_view::npos ? c1 : rest.find(',', c1 + 1);
  if (c2 == std::string_view::npos) {
    throw Error(ErrorKind::kInvalidArgument,
                "expected general:BETA,GAMMA,det|per, got '" + std::string(text) + "'");
  }
  const std::string_view mode_text = rest.substr(c2 + 1);
  PencilMode mode;
  if (mode_text == "det") {
    mode = PencilMode::kDeterminant;
  } else if (mode_text == "per") {
    mode = PencilMode::kPermanent;
  } else {
    throw Error(ErrorKind::kInvalidArgument, "mode must be det or per in '" +
                                                 std::string(text) + "'");
  }
  try {
    return PolyKind::general(parse_rational(rest.substr(0, c1)),
                             parse_rational(rest.substr(c1 + 1, c2 - c1 - 1)), mode);
  } catch (const std::invalid_argument& e) {
    throw Error(ErrorKind::kInvalidArgument, e.what());
  }
}

const std::vector<PolyKind>& named_kinds() {
  static const std::vector<PolyKind> kinds = {PolyKind::f1(), PolyKind::f2(), PolyKind::f3(),
                                              PolyKind::f4(), PolyKind::f5(), PolyKind::f6()};
  return kinds;
}

RationalMatrix pencil_at(const Digraph& g, const PolyKind& kind, const Rational& t) {
  const std::size_t n = g.vertex_count();
  RationalMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = t;
  for (std::size_t e = 0; e < g.arc_count(); ++e) {
    const Arc& a = g.arcs()[e];
    const Rational w = g.weight(e);
    m(a.source, a.target) -= kind.gamma() * w;
    m(a.target, a.target) -= kind.beta() * w;
  }
  return m;
}

Polynomial poly_of(const Digraph& g, const PolyKind& kind) {
  require_valid(g);
  const std::size_t n = g.vertex_count();
  const bool det = kind.mode() == PencilMode::kDeterminant;
  const std::size_t cap = det ? kMaxDeterminantPolyOrder : kMaxPermanentPolyOrder;
  if (n > cap) {
    throw Error(ErrorKind::kOrderTooLarge, kind.name() + ": n=" + std::to_string(n) +
                                               " exceeds cap " + std::to_string(cap));
  }

  std::vector<std::pair<Rational, Rational>> samples;
  samples.reserve(n + 1);
  for (std::size_t t = 0; t <= n; ++t) {
    const Rational at(static_cast<unsigned long>(t));
    const RationalMatrix pencil = pencil_at(g, kind, at);
    samples.emplace_back(at, det ? det_bareiss(pencil) : per_ryser(pencil));
  }
  Polynomial p = interpolate(samples);
  if (p.degree() != n || p.leading() != 1) {
    throw std::logic_error("poly_of produced a non-monic or wrong-degree polynomial for " +
                           kind.name());
  }
  return p;
}

Polynomial poly_of_oracle(const Digraph& g, const PolyKind& kind) {
  require_valid(g);
  const std::size_t n = g.vertex_count();
  if (n > kMaxOracleOrder) {
    throw Error(ErrorKind::kOrderTooLarge, "poly_of_oracle: n=" + std::to_string(n) +
                                               " exceeds cap " +
                                               std::to_string(kMaxOracleOrder));
  }
  const RationalMatrix a = adjacency(g);
  const RationalMatrix d = in_degree_matrix(g);
  std::vector<Polynomial> entries(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      entries[i * n + j] = i == j ? Polynomial({-kind.beta() * d(i, i), Rational(1)})
                                  : Polynomial::constant(-kind.gamma() * a(i, j));
    }
  }

  const bool det = kind.mode() == PencilMode::kDeterminant;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Polynomial total;
  do {
    Polynomial term = Polynomial::constant(1);
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term *= entries[i * n + perm[i]];
    if (term.is_zero()) continue;
    std::size_t inversions = 0;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) inversions += perm[x] > perm[y];
    }
    if (det && inversions % 2 == 1) {
      total -= term;
    } else {
      total += term;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace deckpoly
