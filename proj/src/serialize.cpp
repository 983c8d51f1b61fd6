#include "deckpoly/serialize.hpp"

#include <stdexcept>

#include "deckpoly/error.hpp"

namespace deckpoly {

using nlohmann::json;

namespace {

void check_version(const json& j) {
  if (!j.is_object()) throw FormatError("expected a JSON object");
  if (j.contains("format_version") && j.at("format_version") != kFormatVersion) {
    throw FormatError("unsupported format_version " + j.at("format_version").dump());
  }
}

const json& field(const json& j, const char* name) {
  if (!j.contains(name)) throw FormatError(std::string("missing field '") + name + "'");
  return j.at(name);
}

std::size_t index_value(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw FormatError(std::string(what) + " must be a non-negative integer, got " + j.dump());
  }
  return j.get<std::size_t>();
}

Rational rational_value(const json& j) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(Integer(j.dump()));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  throw FormatError("expected a rational string, got " + j.dump());
}

json rational_to_json(const Rational& r) { return to_string(r); }

json value_to_json(const IdentityValue& v) {
  return std::visit(
      [](const auto& x) -> json {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Rational>) {
          return rational_to_json(x);
        } else {
          return polynomial_to_json(x);
        }
      },
      v);
}

}  // namespace

json polynomial_to_json(const Polynomial& p) {
  json out = json::array();
  for (const Rational& c : p.coefficients()) out.push_back(rational_to_json(c));
  return out;
}

Polynomial polynomial_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw FormatError("polynomial must be a non-empty array");
  std::vector<Rational> c;
  c.reserve(j.size());
  for (const json& v : j) c.push_back(rational_value(v));
  return Polynomial(std::move(c));
}

json matrix_to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.order(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.order(); ++j) row.push_back(rational_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json digraph_to_json(const Digraph& g) {
  json arcs = json::array();
  for (const Arc& a : g.arcs()) arcs.push_back({a.source, a.target});
  json out = {{"format_version", kFormatVersion}, {"n", g.vertex_count()}, {"arcs", arcs}};
  if (g.weights()) {
    json w = json::array();
    for (const Rational& r : *g.weights()) w.push_back(rational_to_json(r));
    out["weights"] = std::move(w);
  }
  return out;
}

Digraph digraph_from_json(const json& j) {
  check_version(j);
  const std::size_t n = index_value(field(j, "n"), "n");
  const json& arcs_json = field(j, "arcs");
  if (!arcs_json.is_array()) throw FormatError("'arcs' must be an array");
  std::vector<Arc> arcs;
  for (const json& a : arcs_json) {
    if (!a.is_array() || a.size() != 2) throw FormatError("arc must be [source,target]");
    arcs.push_back({index_value(a[0], "arc source"), index_value(a[1], "arc target")});
  }
  std::optional<std::vector<Rational>> weights;
  if (j.contains("weights")) {
    const json& w = j.at("weights");
    if (!w.is_array()) throw FormatError("'weights' must be an array");
    weights.emplace();
    for (const json& v : w) weights->push_back(rational_value(v));
  }
  Digraph g(n, std::move(arcs), std::move(weights));
  if (auto v = validate(g)) {
    throw FormatError(std::string(to_string(v->kind)) + ": " + v->message);
  }
  return g;
}

json deck_to_json(const Deck& deck) {
  json polys = json::array();
  for (const Polynomial& p : deck.polys) polys.push_back(polynomial_to_json(p));
  return {{"format_version", kFormatVersion},
          {"n", deck.vertex_count},
          {"kind", deck.kind.name()},
          {"polys", polys}};
}

Deck deck_from_json(const json& j) {
  check_version(j);
  const std::size_t n = index_value(field(j, "n"), "n");
  const json& kind_json = field(j, "kind");
  if (!kind_json.is_string()) throw FormatError("'kind' must be a string");
  PolyKind kind = PolyKind::f1();
  try {
    kind = parse_kind(kind_json.get<std::string>());
  } catch (const Error& e) {
    throw FormatError(e.what());
  }
  const json& polys_json = field(j, "polys");
  if (!polys_json.is_array() || polys_json.empty()) {
    throw FormatError("'polys' must be a non-empty array");
  }
  std::vector<Polynomial> polys;
  for (const json& p : polys_json) {
    Polynomial poly = polynomial_from_json(p);
    if (poly.degree() != n) {
      throw FormatError("deck member of degree " + std::to_string(poly.degree()) +
                        " in a deck with n=" + std::to_string(n));
    }
    polys.push_back(std::move(poly));
  }
  return make_deck(n, std::move(kind), std::move(polys));
}

json result_to_json(const ReconstructionResult& result) {
  json out = {{"format_version", kFormatVersion}};
  if (const auto* u = std::get_if<Unique>(&result)) {
    out["result"] = "unique";
    out["poly"] = polynomial_to_json(u->poly);
  } else if (const auto* f = std::get_if<OneParameterFamily>(&result)) {
    out["result"] = "one_parameter_family";
    out["base"] = polynomial_to_json(f->base);
    out["free_exponent"] = f->free_exponent;
  } else {
    out["result"] = "inconsistent";
    out["detail"] = std::get<Inconsistent>(result).detail;
  }
  return out;
}

json report_to_json(const IdentityReport& report) {
  json instance;
  if (const auto* m = std::get_if<RationalMatrix>(&report.instance)) {
    instance = {{"type", "matrix"}, {"rows", matrix_to_json(*m)}};
  } else {
    const auto& p = std::get<PencilInstance>(report.instance);
    instance = {{"type", "digraph"}, {"digraph", digraph_to_json(p.graph)},
                {"kind", p.kind.name()}};
  }
  return {{"identity", report.identity},
          {"instance", std::move(instance)},
          {"lhs", value_to_json(report.lhs)},
          {"rhs", value_to_json(report.rhs)},
          {"verdict", report.holds() ? "holds" : "violated"}};
}

json group_to_json(const CollisionGroup& group) {
  json signature = json::array();
  for (const Polynomial& p : group.deck_signature) signature.push_back(polynomial_to_json(p));
  json members = json::array();
  for (const CollisionMember& m : group.members) {
    members.push_back({{"digraph", digraph_to_json(m.graph)},
                       {"poly", polynomial_to_json(m.poly)},
                       {"labeled_count", m.labeled_count}});
  }
  return {{"format_version", kFormatVersion},
          {"kind", group.kind.name()},
          {"n", group.vertex_count},
          {"m", group.arc_count},
          {"deck_signature", std::move(signature)},
          {"members", std::move(members)}};
}

}  // namespace deckpoly
