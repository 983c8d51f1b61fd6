#pragma once

#include <string>

#include "json.hpp"

#include "deckpoly/deck.hpp"
#include "deckpoly/digraph.hpp"
#include "deckpoly/identities.hpp"
#include "deckpoly/polynomial.hpp"
#include "deckpoly/reconstruct.hpp"
#include "deckpoly/search.hpp"

namespace deckpoly {

inline constexpr int kFormatVersion = 1;

// Parse failures throw FormatError.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const RationalMatrix& m);

// {"format_version":1,"n":..,"arcs":[[s,t],..],"weights":[..]?}
nlohmann::json digraph_to_json(const Digraph& g);
// Structural parse plus validate(); invalid digraphs raise FormatError.
Digraph digraph_from_json(const nlohmann::json& j);

// {"format_version":1,"n":..,"kind":"f1","polys":[[..],..]}
nlohmann::json deck_to_json(const Deck& deck);
Deck deck_from_json(const nlohmann::json& j);

nlohmann::json result_to_json(const ReconstructionResult& result);
nlohmann::json report_to_json(const IdentityReport& report);
nlohmann::json group_to_json(const CollisionGroup& group);

}  // namespace deckpoly
