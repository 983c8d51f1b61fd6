#include "deckpoly/digraph.hpp"

#include <limits>
#include <set>
#include <string>

#include "deckpoly/error.hpp"

namespace deckpoly {

namespace {

std::vector<Arc> ordered_pairs(std::size_t n) {
  std::vector<Arc> pairs;
  pairs.reserve(n * (n - 1));
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      if (s != t) pairs.push_back({s, t});
    }
  }
  return pairs;
}

Integer binomial(std::size_t n, std::size_t k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

std::uint64_t binomial_u64(std::size_t n, std::size_t k) {
  const Integer b = binomial(n, k);
  if (!b.fits_ulong_p()) return std::numeric_limits<std::uint64_t>::max();
  return b.get_ui();
}

std::string arc_text(const Arc& a) {
  return "(" + std::to_string(a.source) + "," + std::to_string(a.target) + ")";
}

}  // namespace

Digraph::Digraph(std::size_t vertex_count, std::vector<Arc> arcs,
                 std::optional<std::vector<Rational>> weights)
    : vertex_count_(vertex_count), arcs_(std::move(arcs)), weights_(std::move(weights)) {}

Rational Digraph::weight(std::size_t e) const {
  return weights_ ? (*weights_)[e] : Rational(1);
}

Rational Digraph::total_weight() const {
  Rational sum = 0;
  for (std::size_t e = 0; e < arcs_.size(); ++e) sum += weight(e);
  return sum;
}

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kNoVertices: return "no-vertices";
    case ViolationKind::kLoopFound: return "loop-found";
    case ViolationKind::kDuplicateArc: return "duplicate-arc";
    case ViolationKind::kIndexOutOfRange: return "index-out-of-range";
    case ViolationKind::kZeroWeight: return "zero-weight";
    case ViolationKind::kWeightCountMismatch: return "weight-count-mismatch";
  }
  return "unknown";
}

std::optional<Violation> validate(const Digraph& g) {
  if (g.vertex_count() == 0) {
    return Violation{ViolationKind::kNoVertices, 0, "digraph has no vertices"};
  }
  if (g.weights() && g.weights()->size() != g.arc_count()) {
    return Violation{ViolationKind::kWeightCountMismatch, 0,
                     "weights has " + std::to_string(g.weights()->size()) + " entries for " +
                         std::to_string(g.arc_count()) + " arcs"};
  }
  std::set<Arc> seen;
  for (std::size_t e = 0; e < g.arc_count(); ++e) {
    const Arc& a = g.arcs()[e];
    if (a.source >= g.vertex_count() || a.target >= g.vertex_count()) {
      return Violation{ViolationKind::kIndexOutOfRange, e,
                       "arc " + std::to_string(e) + " " + arc_text(a) + " leaves [0," +
                           std::to_string(g.vertex_count()) + ")"};
    }
    if (a.source == a.target) {
      return Violation{ViolationKind::kLoopFound, e,
                       "arc " + std::to_string(e) + " " + arc_text(a) + " is a loop"};
    }
    if (!seen.insert(a).second) {
      return Violation{ViolationKind::kDuplicateArc, e,
                       "arc " + std::to_string(e) + " " + arc_text(a) + " repeats"};
    }
    if (is_zero(g.weight(e))) {
      return Violation{ViolationKind::kZeroWeight, e,
                       "arc " + std::to_string(e) + " " + arc_text(a) + " has weight 0"};
    }
  }
  return std::nullopt;
}

void require_valid(const Digraph& g) {
  if (auto v = validate(g)) {
    throw Error(ErrorKind::kInvalidDigraph, std::string(to_string(v->kind)) + ": " + v->message);
  }
}

RationalMatrix adjacency(const Digraph& g) {
  RationalMatrix a(g.vertex_count());
  for (std::size_t e = 0; e < g.arc_count(); ++e) {
    a(g.arcs()[e].source, g.arcs()[e].target) = g.weight(e);
  }
  return a;
}

RationalMatrix in_degree_matrix(const Digraph& g) {
  RationalMatrix d(g.vertex_count());
  for (std::size_t e = 0; e < g.arc_count(); ++e) {
    const std::size_t head = g.arcs()[e].target;
    d(head, head) += g.weight(e);
  }
  return d;
}

Digraph delete_arc(const Digraph& g, std::size_t e) {
  if (e >= g.arc_count()) {
    throw Error(ErrorKind::kIndexOutOfRange, "arc index " + std::to_string(e) +
                                                 " out of range for " +
                                                 std::to_string(g.arc_count()) + " arcs");
  }
  std::vector<Arc> arcs = g.arcs();
  arcs.erase(arcs.begin() + static_cast<std::ptrdiff_t>(e));
  std::optional<std::vector<Rational>> weights = g.weights();
  if (weights) weights->erase(weights->begin() + static_cast<std::ptrdiff_t>(e));
  return Digraph(g.vertex_count(), std::move(arcs), std::move(weights));
}

std::uint64_t count_digraphs(std::size_t n, std::size_t m) {
  if (n == 0) return 0;
  return binomial_u64(n * (n - 1), m);
}

void enumerate_digraphs(std::size_t n, std::size_t m,
                        const std::function<bool(const Digraph&)>& visit) {
  enumerate_digraphs(n, m, 0, count_digraphs(n, m), visit);
}

void enumerate_digraphs(std::size_t n, std::size_t m, std::uint64_t first, std::uint64_t last,
                        const std::function<bool(const Digraph&)>& visit) {
  if (n == 0) throw Error(ErrorKind::kInvalidArgument, "enumeration needs n >= 1");
  const std::size_t slots = n * (n - 1);
  if (m > slots) {
    throw Error(ErrorKind::kArcCountOutOfRange,
                "m=" + std::to_string(m) + " exceeds n(n-1)=" + std::to_string(slots));
  }
  const std::uint64_t total = count_digraphs(n, m);
  if (total == std::numeric_limits<std::uint64_t>::max()) {
    throw Error(ErrorKind::kBudgetExceeded, "enumeration size does not fit in 64 bits");
  }
  last = std::min(last, total);
  if (first >= last) return;

  const std::vector<Arc> pairs = ordered_pairs(n);

  // Unrank `first` into the lexicographic m-combination of pair indices.
  std::vector<std::size_t> comb(m);
  std::uint64_t rank = first;
  std::size_t candidate = 0;
  for (std::size_t pos = 0; pos < m; ++pos) {
    for (;;) {
      const std::uint64_t with_candidate = binomial_u64(slots - candidate - 1, m - pos - 1);
      if (rank < with_candidate) break;
      rank -= with_candidate;
      ++candidate;
    }
    comb[pos] = candidate++;
  }

  std::vector<Arc> arcs(m);
  for (std::uint64_t r = first; r < last; ++r) {
    for (std::size_t pos = 0; pos < m; ++pos) arcs[pos] = pairs[comb[pos]];
    if (!visit(Digraph(n, arcs))) return;

    std::size_t i = m;
    while (i > 0 && comb[i - 1] == slots - m + (i - 1)) --i;
    if (i == 0) return;
    ++comb[i - 1];
    for (std::size_t j = i; j < m; ++j) comb[j] = comb[j - 1] + 1;
  }
}

std::vector<Digraph> all_digraphs(std::size_t n, std::size_t m) {
  std::vector<Digraph> out;
  enumerate_digraphs(n, m, [&](const Digraph& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

Digraph directed_cycle(std::size_t n) {
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n});
  return Digraph(n, std::move(arcs));
}

Digraph empty_digraph(std::size_t n) { return Digraph(n, {}); }

}  // namespace deckpoly
