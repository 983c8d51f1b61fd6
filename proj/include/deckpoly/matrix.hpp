#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "deckpoly/rational.hpp"

namespace deckpoly {

// Dense square matrix of exact rationals, row-major.
class RationalMatrix {
 public:
  // Zero matrix of the given order. Throws on order 0.
  explicit RationalMatrix(std::size_t order);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t order);
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t order() const { return order_; }

  Rational& operator()(std::size_t row, std::size_t col) {
    return entries_[row * order_ + col];
  }
  const Rational& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * order_ + col];
  }

  std::size_t count_nonzero() const;

  bool operator==(const RationalMatrix& other) const = default;

 private:
  std::size_t order_;
  std::vector<Rational> entries_;
};

inline constexpr std::size_t kMaxExpansionOrder = 8;
inline constexpr std::size_t kMaxRyserOrder = 16;

// Fraction-free Bareiss elimination. Rows are scaled to integers first so
// every intermediate division is exact in Z.
Rational det_bareiss(const RationalMatrix& m);

// Signed sum over all n! permutations. Order capped at kMaxExpansionOrder.
Rational det_expansion(const RationalMatrix& m);

// Ryser's formula with Gray-code subset order, O(2^n n) updates.
// Order capped at kMaxRyserOrder.
Rational per_ryser(const RationalMatrix& m);

// Unsigned sum over all n! permutations. Order capped at kMaxExpansionOrder.
Rational per_expansion(const RationalMatrix& m);

// Copy of m with entry (row, col) replaced by zero.
RationalMatrix zero_entry(const RationalMatrix& m, std::size_t row, std::size_t col);

// Principal submatrix with row and column `index` removed.
RationalMatrix delete_row_col(const RationalMatrix& m, std::size_t index);

}  // namespace deckpoly
