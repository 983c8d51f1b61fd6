#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "deckpoly/deck.hpp"
#include "deckpoly/error.hpp"
#include "deckpoly/graph_polys.hpp"
#include "deckpoly/identities.hpp"
#include "deckpoly/matrix.hpp"
#include "deckpoly/reconstruct.hpp"
#include "deckpoly/search.hpp"

namespace py = pybind11;
using namespace deckpoly;

namespace {

// Python ints, Fractions and "p/q" strings all round-trip through str().
Rational to_rational(const py::handle& value) {
  return parse_rational(py::str(value).cast<std::string>());
}

py::object to_fraction(const Rational& value) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_string(value));
}

py::list to_py(const Polynomial& p) {
  py::list out;
  for (const Rational& c : p.coefficients()) out.append(to_fraction(c));
  return out;
}

Polynomial to_polynomial(const py::sequence& coefficients) {
  std::vector<Rational> c;
  for (const auto& v : coefficients) c.push_back(to_rational(v));
  return Polynomial(std::move(c));
}

RationalMatrix to_matrix(const py::sequence& rows) {
  std::vector<std::vector<Rational>> out;
  for (const auto& row : rows) {
    std::vector<Rational> r;
    for (const auto& v : row.cast<py::sequence>()) r.push_back(to_rational(v));
    out.push_back(std::move(r));
  }
  return RationalMatrix::from_rows(out);
}

Digraph to_digraph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& arcs,
                   const py::object& weights) {
  std::vector<Arc> a;
  for (const auto& [s, t] : arcs) a.push_back({s, t});
  std::optional<std::vector<Rational>> w;
  if (!weights.is_none()) {
    w.emplace();
    for (const auto& v : weights.cast<py::sequence>()) w->push_back(to_rational(v));
  }
  Digraph g(n, std::move(a), std::move(w));
  require_valid(g);
  return g;
}

py::dict digraph_dict(const Digraph& g) {
  py::list arcs;
  for (const Arc& a : g.arcs()) arcs.append(py::make_tuple(a.source, a.target));
  py::dict d;
  d["n"] = g.vertex_count();
  d["arcs"] = arcs;
  return d;
}

py::dict result_dict(const ReconstructionResult& result) {
  py::dict d;
  if (const auto* u = std::get_if<Unique>(&result)) {
    d["result"] = "unique";
    d["poly"] = to_py(u->poly);
  } else if (const auto* f = std::get_if<OneParameterFamily>(&result)) {
    d["result"] = "one_parameter_family";
    d["base"] = to_py(f->base);
    d["free_exponent"] = f->free_exponent;
  } else {
    d["result"] = "inconsistent";
    d["detail"] = std::get<Inconsistent>(result).detail;
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(deckpoly, m) {
  m.doc() = "Exact digraph characteristic/permanental polynomials and edge-deck reconstruction";

  py::register_exception<Error>(m, "DeckpolyError", PyExc_ValueError);

  m.def("det", [](const py::sequence& rows) { return to_fraction(det_bareiss(to_matrix(rows))); },
        py::arg("matrix"));
  m.def("per", [](const py::sequence& rows) { return to_fraction(per_ryser(to_matrix(rows))); },
        py::arg("matrix"));

  m.def(
      "poly_of",
      [](std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& arcs,
         const std::string& kind, const py::object& weights) {
        return to_py(poly_of(to_digraph(n, arcs, weights), parse_kind(kind)));
      },
      py::arg("n"), py::arg("arcs"), py::arg("kind") = "f1", py::arg("weights") = py::none(),
      "Coefficients (ascending, as Fractions) of the kind's polynomial.");

  m.def(
      "deck",
      [](std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& arcs,
         const std::string& kind, const py::object& weights) {
        py::list out;
        for (const Polynomial& p : deck(to_digraph(n, arcs, weights), parse_kind(kind)).polys) {
          out.append(to_py(p));
        }
        return out;
      },
      py::arg("n"), py::arg("arcs"), py::arg("kind") = "f1", py::arg("weights") = py::none(),
      "Sorted edge deck of polynomials.");

  m.def(
      "reconstruct",
      [](std::size_t n, const std::string& kind, const std::vector<py::sequence>& polys) {
        std::vector<Polynomial> members;
        for (const auto& p : polys) members.push_back(to_polynomial(p));
        return result_dict(reconstruct(make_deck(n, parse_kind(kind), std::move(members))));
      },
      py::arg("n"), py::arg("kind"), py::arg("polys"));

  m.def(
      "check_eq17",
      [](std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& arcs,
         const std::string& kind, const py::object& weights) {
        return check_eq17(to_digraph(n, arcs, weights), parse_kind(kind)).holds();
      },
      py::arg("n"), py::arg("arcs"), py::arg("kind") = "f1", py::arg("weights") = py::none());

  m.def(
      "find_deck_collisions",
      [](std::size_t n, std::size_t arcs, const std::string& kind, unsigned workers) {
        std::vector<CollisionGroup> groups;
        {
          py::gil_scoped_release release;
          groups = find_deck_collisions(n, arcs, parse_kind(kind),
                                        SearchOptions{kDefaultSearchBudget, workers});
        }
        py::list out;
        for (const CollisionGroup& g : groups) {
          py::list members;
          for (const CollisionMember& member : g.members) {
            py::dict d = digraph_dict(member.graph);
            d["poly"] = to_py(member.poly);
            d["labeled_count"] = member.labeled_count;
            members.append(d);
          }
          py::list signature;
          for (const Polynomial& p : g.deck_signature) signature.append(to_py(p));
          py::dict group;
          group["deck_signature"] = signature;
          group["members"] = members;
          out.append(group);
        }
        return out;
      },
      py::arg("n"), py::arg("arcs"), py::arg("kind"), py::arg("workers") = 1);

  m.def(
      "counterexample",
      [](std::size_t n) {
        auto [g1, g2] = canonical_counterexample(n);
        return py::make_tuple(digraph_dict(g1), digraph_dict(g2));
      },
      py::arg("n"));
}
