#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "deckpoly/digraph.hpp"
#include "deckpoly/matrix.hpp"
#include "deckpoly/rational.hpp"

namespace deckpoly {

// Seeded instance generators for the identity sweeps. Same seed, same
// sequence on a given standard library.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed) : engine_(seed) {}

  std::size_t uniform_index(std::size_t lo, std::size_t hi);  // inclusive
  bool bernoulli(double p);

  // Order uniform in [1, max_order]; each entry is zero with probability
  // zero_density, otherwise uniform over the nonzero integers in [-9, 9].
  RationalMatrix matrix(std::size_t max_order, double zero_density);

  // p/q with p in [-9, 9] \ {0}, q in [1, 5].
  Rational nonzero_rational();
  // p/q with p in [-5, 5], q in [1, 4].
  Rational rational();

  // Uniform arc subset on n vertices (every subset equally likely).
  Digraph digraph(std::size_t n, bool weighted);
  // Uniform m-subset of the n(n-1) ordered pairs.
  Digraph digraph_with_arcs(std::size_t n, std::size_t m, bool weighted);

 private:
  std::mt19937_64 engine_;
};

}  // namespace deckpoly
