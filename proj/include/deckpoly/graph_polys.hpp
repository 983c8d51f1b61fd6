#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "deckpoly/digraph.hpp"
#include "deckpoly/matrix.hpp"
#include "deckpoly/polynomial.hpp"

namespace deckpoly {

enum class PencilMode { kDeterminant, kPermanent };

// One of the six digraph polynomials, or the two-parameter family
// mode(xI - beta*D - gamma*A) with gamma != 0.
class PolyKind {
 public:
  enum class Tag { kF1, kF2, kF3, kF4, kF5, kF6, kGeneral };

  static PolyKind f1() { return PolyKind(Tag::kF1, 0, 1, PencilMode::kDeterminant); }
  static PolyKind f2() { return PolyKind(Tag::kF2, 1, -1, PencilMode::kDeterminant); }
  static PolyKind f3() { return PolyKind(Tag::kF3, 1, 1, PencilMode::kDeterminant); }
  static PolyKind f4() { return PolyKind(Tag::kF4, 0, 1, PencilMode::kPermanent); }
  static PolyKind f5() { return PolyKind(Tag::kF5, 1, -1, PencilMode::kPermanent); }
  static PolyKind f6() { return PolyKind(Tag::kF6, 1, 1, PencilMode::kPermanent); }
  // index in 1..6
  static PolyKind named(int index);
  // Throws Error(kInvalidArgument) when gamma is zero.
  static PolyKind general(const Rational& beta, const Rational& gamma, PencilMode mode);

  Tag tag() const { return tag_; }
  const Rational& beta() const { return beta_; }
  const Rational& gamma() const { return gamma_; }
  PencilMode mode() const { return mode_; }

  // "f1".."f6" or "general:BETA,GAMMA,det|per".
  std::string name() const;

  bool operator==(const PolyKind& other) const = default;

 private:
  PolyKind(Tag tag, Rational beta, Rational gamma, PencilMode mode)
      : tag_(tag), beta_(std::move(beta)), gamma_(std::move(gamma)), mode_(mode) {}

  Tag tag_;
  Rational beta_;
  Rational gamma_;
  PencilMode mode_;
};

// Inverse of PolyKind::name(). Throws Error(kInvalidArgument).
PolyKind parse_kind(std::string_view text);

// The six named kinds in order f1..f6.
const std::vector<PolyKind>& named_kinds();

inline constexpr std::size_t kMaxDeterminantPolyOrder = 64;
inline constexpr std::size_t kMaxPermanentPolyOrder = kMaxRyserOrder;
inline constexpr std::size_t kMaxOracleOrder = 7;

// t*I - beta*D - gamma*A
RationalMatrix pencil_at(const Digraph& g, const PolyKind& kind, const Rational& t);

// Evaluates the pencil at t = 0..n with det_bareiss or per_ryser and
// interpolates. The result is checked monic of degree n; a failure there is
// a kernel bug and raises std::logic_error.
Polynomial poly_of(const Digraph& g, const PolyKind& kind);

// Independent route: permutation expansion with polynomial diagonal
// entries, no interpolation. n <= kMaxOracleOrder.
Polynomial poly_of_oracle(const Digraph& g, const PolyKind& kind);

}  // namespace deckpoly
