#pragma once

#include <cstddef>
#include <string>
#include <variant>

#include "deckpoly/deck.hpp"
#include "deckpoly/polynomial.hpp"

namespace deckpoly {

struct Unique {
  Polynomial poly;
};

// Every base + C x^free_exponent solves the deck equation.
struct OneParameterFamily {
  Polynomial base;
  std::size_t free_exponent;
};

struct Inconsistent {
  std::string detail;
};

using ReconstructionResult = std::variant<Unique, OneParameterFamily, Inconsistent>;

// S(x) = sum of the deck members. Throws Error(kInvalidArgument) on an empty deck.
Polynomial deck_sum(const Deck& deck);

// Solves (m - n + k) c_k = s_k coefficient-wise. n is the common degree of
// the members and m their count; deck.vertex_count is not consulted.
//
// The coefficient k* = n - m is annihilated when 0 <= k* <= n. It is pinned
// only by digraph structure:
//   k* = n - 1 (m = 1): c_{n-1} = -beta, the trace of a single unit arc;
//   k* = 0 with a Laplacian determinant kind (beta = -gamma): c_0 = 0,
//   since the columns of D - A sum to zero.
// Otherwise a OneParameterFamily is returned with c_{k*} = 0 in the base.
// Throws Error(kInvalidArgument) on an empty deck.
ReconstructionResult reconstruct(const Deck& deck);

enum class RoundtripStatus { kRecovered, kCovered, kMissed };

const char* to_string(RoundtripStatus status);

struct RoundtripReport {
  Polynomial truth;
  ReconstructionResult result;
  RoundtripStatus status;
};

// deck -> reconstruct -> compare with poly_of(G, kind).
RoundtripReport verify_roundtrip(const Digraph& g, const PolyKind& kind);

}  // namespace deckpoly
