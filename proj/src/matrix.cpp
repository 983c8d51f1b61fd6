#include "deckpoly/matrix.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>

#include "deckpoly/error.hpp"

namespace deckpoly {

namespace {

void require_order_at_most(const RationalMatrix& m, std::size_t cap, const char* what) {
  if (m.order() > cap) {
    throw Error(ErrorKind::kOrderTooLarge, std::string(what) + ": order " +
                                               std::to_string(m.order()) + " exceeds cap " +
                                               std::to_string(cap));
  }
}

void require_index(const RationalMatrix& m, std::size_t index) {
  if (index >= m.order()) {
    throw Error(ErrorKind::kIndexOutOfRange, "index " + std::to_string(index) +
                                                 " out of range for order " +
                                                 std::to_string(m.order()));
  }
}

// Row-scaled integer copy of m. Row i is multiplied by the lcm of its
// denominators; the product of those factors is returned in `scale`, so
// det(m) = det(result) / scale and likewise for the permanent.
std::vector<Integer> integer_rows(const RationalMatrix& m, Integer& scale) {
  const std::size_t n = m.order();
  std::vector<Integer> out(n * n);
  scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer row_lcm = 1;
    for (std::size_t j = 0; j < n; ++j) {
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m(i, j).get_den_mpz_t());
    }
    for (std::size_t j = 0; j < n; ++j) {
      out[i * n + j] = m(i, j).get_num() * (row_lcm / m(i, j).get_den());
    }
    scale *= row_lcm;
  }
  return out;
}

// Calls visit(perm, even) for every permutation of 0..n-1.
template <typename Visit>
void for_each_permutation(std::size_t n, Visit&& visit) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    std::size_t inversions = 0;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (perm[a] > perm[b]) ++inversions;
      }
    }
    visit(perm, inversions % 2 == 0);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

RationalMatrix::RationalMatrix(std::size_t order) : order_(order), entries_(order * order) {
  if (order == 0) throw Error(ErrorKind::kInvalidArgument, "matrix order must be positive");
}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : RationalMatrix(rows.size()) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != order_) throw Error(ErrorKind::kInvalidArgument, "matrix is not square");
    std::size_t j = 0;
    for (const auto& value : row) (*this)(i, j++) = value;
    ++i;
  }
}

RationalMatrix RationalMatrix::identity(std::size_t order) {
  RationalMatrix m(order);
  for (std::size_t i = 0; i < order; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  RationalMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw Error(ErrorKind::kInvalidArgument, "matrix is not square");
    }
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::size_t RationalMatrix::count_nonzero() const {
  return static_cast<std::size_t>(std::count_if(
      entries_.begin(), entries_.end(), [](const Rational& v) { return !is_zero(v); }));
}

Rational det_bareiss(const RationalMatrix& m) {
  const std::size_t n = m.order();
  Integer scale;
  std::vector<Integer> a = integer_rows(m, scale);
  auto at = [&](std::size_t i, std::size_t j) -> Integer& { return a[i * n + j]; };

  int sign = 1;
  Integer previous_pivot = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && at(r, k) == 0) ++r;
      if (r == n) return Rational(0);
      for (std::size_t j = k; j < n; ++j) std::swap(at(k, j), at(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), v.get_mpz_t(), previous_pivot.get_mpz_t());
      }
    }
    previous_pivot = at(k, k);
  }
  Integer numerator = at(n - 1, n - 1);
  if (sign < 0) numerator = -numerator;
  Rational det(numerator, scale);
  det.canonicalize();
  return det;
}

Rational det_expansion(const RationalMatrix& m) {
  require_order_at_most(m, kMaxExpansionOrder, "det_expansion");
  Rational sum = 0;
  for_each_permutation(m.order(), [&](const std::vector<std::size_t>& perm, bool even) {
    Rational term = 1;
    for (std::size_t i = 0; i < perm.size() && !is_zero(term); ++i) term *= m(i, perm[i]);
    if (even) {
      sum += term;
    } else {
      sum -= term;
    }
  });
  return sum;
}

Rational per_ryser(const RationalMatrix& m) {
  require_order_at_most(m, kMaxRyserOrder, "per_ryser");
  const std::size_t n = m.order();
  Integer scale;
  const std::vector<Integer> a = integer_rows(m, scale);

  // per(A) = (-1)^n sum_{S} (-1)^{|S|} prod_i sum_{j in S} a_ij, with S
  // walked in Gray-code order so each step adds or removes one column.
  std::vector<Integer> row_sums(n);
  Integer total = 0;
  Integer product;
  std::uint32_t gray = 0;
  const std::uint32_t subsets = std::uint32_t{1} << n;
  for (std::uint32_t k = 1; k < subsets; ++k) {
    const int col = std::countr_zero(k);
    const std::uint32_t bit = std::uint32_t{1} << col;
    gray ^= bit;
    if (gray & bit) {
      for (std::size_t i = 0; i < n; ++i) row_sums[i] += a[i * n + col];
    } else {
      for (std::size_t i = 0; i < n; ++i) row_sums[i] -= a[i * n + col];
    }
    product = 1;
    for (std::size_t i = 0; i < n && product != 0; ++i) product *= row_sums[i];
    if (std::popcount(gray) % 2 == 0) {
      total += product;
    } else {
      total -= product;
    }
  }
  if (n % 2 == 1) total = -total;
  Rational per(total, scale);
  per.canonicalize();
  return per;
}

Rational per_expansion(const RationalMatrix& m) {
  require_order_at_most(m, kMaxExpansionOrder, "per_expansion");
  Rational sum = 0;
  for_each_permutation(m.order(), [&](const std::vector<std::size_t>& perm, bool) {
    Rational term = 1;
    for (std::size_t i = 0; i < perm.size() && !is_zero(term); ++i) term *= m(i, perm[i]);
    sum += term;
  });
  return sum;
}

RationalMatrix zero_entry(const RationalMatrix& m, std::size_t row, std::size_t col) {
  require_index(m, row);
  require_index(m, col);
  RationalMatrix out = m;
  out(row, col) = 0;
  return out;
}

RationalMatrix delete_row_col(const RationalMatrix& m, std::size_t index) {
  require_index(m, index);
  if (m.order() < 2) {
    throw Error(ErrorKind::kInvalidArgument, "cannot delete from an order-1 matrix");
  }
  const std::size_t n = m.order();
  RationalMatrix out(n - 1);
  for (std::size_t i = 0, oi = 0; i < n; ++i) {
    if (i == index) continue;
    for (std::size_t j = 0, oj = 0; j < n; ++j) {
      if (j == index) continue;
      out(oi, oj++) = m(i, j);
    }
    ++oi;
  }
  return out;
}

}  // namespace deckpoly
