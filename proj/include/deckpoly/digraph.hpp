#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "deckpoly/matrix.hpp"
#include "deckpoly/rational.hpp"

namespace deckpoly {

struct Arc {
  std::size_t source = 0;
  std::size_t target = 0;

  auto operator<=>(const Arc&) const = default;
};

// Labeled digraph with optional nonzero rational arc weights. Construction
// does not validate; call validate() or require_valid() on untrusted input.
class Digraph {
 public:
  Digraph(std::size_t vertex_count, std::vector<Arc> arcs,
          std::optional<std::vector<Rational>> weights = std::nullopt);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t arc_count() const { return arcs_.size(); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::optional<std::vector<Rational>>& weights() const { return weights_; }
  bool is_weighted() const { return weights_.has_value(); }

  // Weight of arc e, 1 when unweighted.
  Rational weight(std::size_t e) const;
  Rational total_weight() const;

  bool operator==(const Digraph& other) const = default;

 private:
  std::size_t vertex_count_;
  std::vector<Arc> arcs_;
  std::optional<std::vector<Rational>> weights_;
};

enum class ViolationKind {
  kNoVertices,
  kLoopFound,
  kDuplicateArc,
  kIndexOutOfRange,
  kZeroWeight,
  kWeightCountMismatch,
};

struct Violation {
  ViolationKind kind;
  std::size_t arc_index;  // offending arc, or 0 for whole-graph violations
  std::string message;
};

const char* to_string(ViolationKind kind);

// First violated invariant in arc order, or nullopt when G is valid.
std::optional<Violation> validate(const Digraph& g);

// Throws Error(kInvalidDigraph) carrying the violation message.
void require_valid(const Digraph& g);

RationalMatrix adjacency(const Digraph& g);
RationalMatrix in_degree_matrix(const Digraph& g);

// G - e. Throws Error(kIndexOutOfRange) when e >= m.
Digraph delete_arc(const Digraph& g, std::size_t e);

// C(n(n-1), m); saturates at UINT64_MAX.
std::uint64_t count_digraphs(std::size_t n, std::size_t m);

// Visits every labeled loopless simple digraph on n vertices with exactly m
// arcs, ordered lexicographically by arc set over the (source, target) pairs
// in row-major order. `first` and `last` select a half-open range of ranks
// so the stream can be split across workers. Returning false from the
// visitor stops the walk.
void enumerate_digraphs(std::size_t n, std::size_t m,
                        const std::function<bool(const Digraph&)>& visit);
void enumerate_digraphs(std::size_t n, std::size_t m, std::uint64_t first, std::uint64_t last,
                        const std::function<bool(const Digraph&)>& visit);

// Whole enumeration materialized; convenience for tests and small n.
std::vector<Digraph> all_digraphs(std::size_t n, std::size_t m);

// Named families used throughout the tests and the counterexample.
Digraph directed_cycle(std::size_t n);
Digraph empty_digraph(std::size_t n);

}  // namespace deckpoly
