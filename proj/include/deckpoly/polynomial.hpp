#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "deckpoly/rational.hpp"

namespace deckpoly {

/// Dense univariate polynomial over Q, coefficients in ascending degree.
///
/// The zero polynomial is stored as the single coefficient 0, and no other
/// value carries a trailing zero, so equality is coefficient-vector equality.
class Polynomial {
 public:
  Polynomial();
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial constant(const Rational& value);
  // coefficient * x^exponent
  static Polynomial monomial(std::size_t exponent, const Rational& coefficient = 1);

  std::size_t degree() const { return coefficients_.size() - 1; }
  bool is_zero() const;

  // Coefficient of x^k; zero past the degree.
  Rational coeff(std::size_t k) const;
  const Rational& leading() const { return coefficients_.back(); }
  const std::vector<Rational>& coefficients() const { return coefficients_; }

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);
  Polynomial& operator*=(const Polynomial& other);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Polynomial operator*(const Rational& lhs, Polynomial rhs) { return rhs *= lhs; }
  friend Polynomial operator*(Polynomial lhs, const Polynomial& rhs) { return lhs *= rhs; }

  bool operator==(const Polynomial& other) const = default;

 private:
  void canonicalize();

  std::vector<Rational> coefficients_;
};

// Lexicographic order on ascending coefficient vectors; shorter vectors sort
// first when one is a prefix of the other.
bool operator<(const Polynomial& lhs, const Polynomial& rhs);

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial derivative(const Polynomial& p);
Rational eval(const Polynomial& p, const Rational& t);

// Unique polynomial of degree < points.size() through every point.
// Throws Error(kDuplicateAbscissa) on repeated abscissae and
// Error(kInvalidArgument) on an empty point set.
Polynomial interpolate(std::span<const std::pair<Rational, Rational>> points);

}  // namespace deckpoly
