#include "deckpoly/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "deckpoly/error.hpp"

namespace deckpoly {

namespace {

bool is_integer_literal(std::string_view text) {
  if (!text.empty() && text.front() == '-') text.remove_prefix(1);
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-') {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kOrderTooLarge: return "order-too-large";
    case ErrorKind::kIndexOutOfRange: return "index-out-of-range";
    case ErrorKind::kDuplicateAbscissa: return "duplicate-abscissa";
    case ErrorKind::kInvalidDigraph: return "invalid-digraph";
    case ErrorKind::kEmptyArcSet: return "empty-arc-set";
    case ErrorKind::kArcCountOutOfRange: return "m-out-of-range";
    case ErrorKind::kBudgetExceeded: return "budget-exceeded";
    case ErrorKind::kInvalidArgument: return "invalid-argument";
  }
  return "unknown";
}

}  // namespace deckpoly
