#include "deckpoly/random.hpp"

#include <algorithm>

namespace deckpoly {

std::size_t InstanceGenerator::uniform_index(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_);
}

bool InstanceGenerator::bernoulli(double p) { return std::bernoulli_distribution(p)(engine_); }

RationalMatrix InstanceGenerator::matrix(std::size_t max_order, double zero_density) {
  const std::size_t n = uniform_index(1, max_order);
  RationalMatrix m(n);
  std::uniform_int_distribution<long> magnitude(1, 9);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (bernoulli(zero_density)) continue;
      const long v = magnitude(engine_);
      m(i, j) = bernoulli(0.5) ? v : -v;
    }
  }
  return m;
}

Rational InstanceGenerator::nonzero_rational() {
  const long p = std::uniform_int_distribution<long>(1, 9)(engine_);
  const long q = std::uniform_int_distribution<long>(1, 5)(engine_);
  return make_rational(bernoulli(0.5) ? p : -p, q);
}

Rational InstanceGenerator::rational() {
  const long p = std::uniform_int_distribution<long>(-5, 5)(engine_);
  const long q = std::uniform_int_distribution<long>(1, 4)(engine_);
  return make_rational(p, q);
}

Digraph InstanceGenerator::digraph(std::size_t n, bool weighted) {
  std::vector<Arc> arcs;
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      if (s != t && bernoulli(0.5)) arcs.push_back({s, t});
    }
  }
  std::optional<std::vector<Rational>> weights;
  if (weighted) {
    weights.emplace();
    for (std::size_t e = 0; e < arcs.size(); ++e) weights->push_back(nonzero_rational());
  }
  return Digraph(n, std::move(arcs), std::move(weights));
}

Digraph InstanceGenerator::digraph_with_arcs(std::size_t n, std::size_t m, bool weighted) {
  std::vector<Arc> pairs;
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      if (s != t) pairs.push_back({s, t});
    }
  }
  // Partial Fisher-Yates: the first m slots are a uniform m-subset.
  for (std::size_t i = 0; i < m && i < pairs.size(); ++i) {
    std::swap(pairs[i], pairs[uniform_index(i, pairs.size() - 1)]);
  }
  pairs.resize(std::min(m, pairs.size()));
  std::sort(pairs.begin(), pairs.end());
  std::optional<std::vector<Rational>> weights;
  if (weighted) {
    weights.emplace();
    for (std::size_t e = 0; e < pairs.size(); ++e) weights->push_back(nonzero_rational());
  }
  return Digraph(n, std::move(pairs), std::move(weights));
}

}  // namespace deckpoly
