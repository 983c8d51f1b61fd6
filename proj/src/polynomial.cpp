#include "deckpoly/polynomial.hpp"

#include <algorithm>
#include <string>

#include "deckpoly/error.hpp"

namespace deckpoly {

Polynomial::Polynomial() : coefficients_{Rational(0)} {}

Polynomial::Polynomial(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  canonicalize();
}

Polynomial::Polynomial(std::initializer_list<Rational> coefficients)
    : coefficients_(coefficients) {
  canonicalize();
}

Polynomial Polynomial::constant(const Rational& value) { return Polynomial({value}); }

Polynomial Polynomial::monomial(std::size_t exponent, const Rational& coefficient) {
  std::vector<Rational> c(exponent + 1);
  c[exponent] = coefficient;
  return Polynomial(std::move(c));
}

void Polynomial::canonicalize() {
  while (coefficients_.size() > 1 && deckpoly::is_zero(coefficients_.back())) {
    coefficients_.pop_back();
  }
  if (coefficients_.empty()) coefficients_.emplace_back(0);
}

bool Polynomial::is_zero() const {
  return coefficients_.size() == 1 && deckpoly::is_zero(coefficients_[0]);
}

Rational Polynomial::coeff(std::size_t k) const {
  return k < coefficients_.size() ? coefficients_[k] : Rational(0);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coefficients_.size() > coefficients_.size()) {
    coefficients_.resize(other.coefficients_.size());
  }
  for (std::size_t k = 0; k < other.coefficients_.size(); ++k) {
    coefficients_[k] += other.coefficients_[k];
  }
  canonicalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coefficients_.size() > coefficients_.size()) {
    coefficients_.resize(other.coefficients_.size());
  }
  for (std::size_t k = 0; k < other.coefficients_.size(); ++k) {
    coefficients_[k] -= other.coefficients_[k];
  }
  canonicalize();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  for (auto& c : coefficients_) c *= scalar;
  canonicalize();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  if (is_zero() || other.is_zero()) {
    *this = Polynomial();
    return *this;
  }
  std::vector<Rational> product(coefficients_.size() + other.coefficients_.size() - 1);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (deckpoly::is_zero(coefficients_[i])) continue;
    for (std::size_t j = 0; j < other.coefficients_.size(); ++j) {
      product[i + j] += coefficients_[i] * other.coefficients_[j];
    }
  }
  coefficients_ = std::move(product);
  canonicalize();
  return *this;
}

bool operator<(const Polynomial& lhs, const Polynomial& rhs) {
  const auto& a = lhs.coefficients();
  const auto& b = rhs.coefficients();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const Rational& x, const Rational& y) {
                                        return cmp(x, y) < 0;
                                      });
}

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }

Polynomial derivative(const Polynomial& p) {
  const auto& c = p.coefficients();
  if (c.size() == 1) return Polynomial();
  std::vector<Rational> d(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = c[k] * static_cast<unsigned long>(k);
  return Polynomial(std::move(d));
}

Rational eval(const Polynomial& p, const Rational& t) {
  const auto& c = p.coefficients();
  Rational acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial interpolate(std::span<const std::pair<Rational, Rational>> points) {
  if (points.empty()) throw Error(ErrorKind::kInvalidArgument, "no interpolation points");
  const std::size_t k = points.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (points[i].first == points[j].first) {
        throw Error(ErrorKind::kDuplicateAbscissa,
                    "duplicate abscissa " + to_string(points[i].first));
      }
    }
  }

  // Newton divided differences, in place.
  std::vector<Rational> dd(k);
  for (std::size_t i = 0; i < k; ++i) dd[i] = points[i].second;
  for (std::size_t level = 1; level < k; ++level) {
    for (std::size_t i = k - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);
    }
  }

  Polynomial result = Polynomial::constant(dd[k - 1]);
  for (std::size_t i = k - 1; i-- > 0;) {
    result *= Polynomial({-points[i].first, Rational(1)});
    result += Polynomial::constant(dd[i]);
  }
  return result;
}

}  // namespace deckpoly
