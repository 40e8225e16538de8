#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ocpoly/cli.hpp"
#include "ocpoly/descent.hpp"
#include "ocpoly/equivalence.hpp"
#include "ocpoly/error.hpp"
#include "ocpoly/geometry.hpp"
#include "ocpoly/poset_file.hpp"
#include "ocpoly/verify.hpp"

namespace py = pybind11;
using namespace ocpoly;

namespace {

// Rationals cross the boundary as "p/q" strings; the Python package turns
// them into fractions.Fraction.
std::vector<std::string> point_strings(const Point& p) {
  std::vector<std::string> out;
  for (const auto& x : p) out.push_back(to_string(x));
  return out;
}

std::vector<std::vector<std::string>> vertex_strings(const VertexSet& v) {
  std::vector<std::vector<std::string>> out;
  for (const auto& p : v.vertices) out.push_back(point_strings(p));
  return out;
}

std::vector<std::pair<int, int>> edge_pairs(const std::vector<Cover>& covers) {
  std::vector<std::pair<int, int>> out;
  for (const auto& c : covers) out.emplace_back(c.lower, c.upper);
  return out;
}

std::vector<Cover> to_covers(const std::vector<std::pair<int, int>>& edges) {
  std::vector<Cover> out;
  for (auto [i, j] : edges) out.push_back({i, j});
  return out;
}

HalfspaceSystem system_of(const std::string& kind, const EdgePartition& l) {
  if (kind == "order") return hrep_order(l.base());
  if (kind == "chain") return hrep_chain(l.base());
  if (kind == "order-chain") return hrep_order_chain(l);
  fail(ErrorKind::InvalidArgument, "polytope kind must be 'order', 'chain' or 'order-chain'");
}

py::dict fingerprint_dict(const Fingerprint& f) {
  py::dict d;
  d["dimension"] = f.dimension;
  d["vertex_count"] = f.vertex_count;
  d["facet_count"] = f.facet_count;
  d["volume"] = to_string(f.volume);
  d["lattice_counts"] = f.lattice_counts;
  return d;
}

}  // namespace

PYBIND11_MODULE(_ocpoly, m) {
  m.doc() = "Order, chain and order-chain polytopes of finite posets";

  static py::exception<Error> error_type(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error_type, (std::string(error_kind_name(e.kind())) + ": " + e.what()).c_str());
    }
  });

  py::class_<Poset>(m, "Poset")
      .def(py::init([](int d, const std::vector<std::pair<int, int>>& covers) { return new_poset(d, to_covers(covers)); }),
           py::arg("d"), py::arg("covers"))
      .def_property_readonly("size", &Poset::size)
      .def_property_readonly("covers", [](const Poset& p) { return edge_pairs(p.covers()); })
      .def("less", &Poset::less)
      .def("linear_extensions", [](const Poset& p) { return linear_extensions_count(p); })
      .def("antichains", [](const Poset& p) { return antichains(p); })
      .def("order_ideals", [](const Poset& p) { return order_ideals(p); })
      .def("maximal_chains", &maximal_chains)
      .def("is_hasse_forest", &is_hasse_forest)
      .def("is_zigzag", &is_zigzag)
      .def("contains_forbidden_x", &contains_forbidden_X)
      .def("__eq__", [](const Poset& a, const Poset& b) { return a == b; })
      .def("__repr__", [](const Poset& p) { return "Poset(" + describe(p) + ")"; });

  m.def("chain", &chain_poset, py::arg("n"));
  m.def("antichain", &antichain_poset, py::arg("n"));
  m.def("zigzag", [](int n, const ElementSet& s) { return zigzag_from_descent_set(DescentSet::make(n, s)); },
        py::arg("n"), py::arg("descent_set"));
  m.def("posets_up_to_iso", [](int n) { return enumerate_posets_up_to_iso(n); }, py::arg("n"));

  py::class_<EdgePartition>(m, "EdgePartition")
      .def(py::init([](const Poset& p, const std::vector<std::pair<int, int>>& order_edges) {
             return EdgePartition::make(p, to_covers(order_edges));
           }),
           py::arg("poset"), py::arg("order_edges"))
      .def_property_readonly("poset", &EdgePartition::base)
      .def_property_readonly("order_edges", [](const EdgePartition& l) { return edge_pairs(l.order_edges()); })
      .def_property_readonly("chain_edges", [](const EdgePartition& l) { return edge_pairs(l.chain_edges()); })
      .def("complement", &EdgePartition::complement)
      .def("__eq__", [](const EdgePartition& a, const EdgePartition& b) { return a == b; });

  m.def("partitions", [](const Poset& p) { return enumerate_partitions(p); }, py::arg("poset"));
  m.def("minimal_incident_partition", &minimal_incident_partition, py::arg("poset"), py::arg("minimal_subset"));
  m.def("parse_poset_file", [](const std::string& text) { return parse_poset_file(text).partition; }, py::arg("text"));

  m.def("hrep",
        [](const EdgePartition& l, const std::string& kind) {
          std::vector<std::string> out;
          for (const auto& h : system_of(kind, l).halfspaces) out.push_back(format_halfspace(h));
          return out;
        },
        py::arg("partition"), py::arg("kind") = "order-chain");
  m.def("vertices", [](const EdgePartition& l, const std::string& kind) {
          return vertex_strings(enumerate_vertices(system_of(kind, l)));
        },
        py::arg("partition"), py::arg("kind") = "order-chain");
  m.def("facet_count", [](const EdgePartition& l, const std::string& kind) {
          return Polytope::build(system_of(kind, l)).facets.size();
        },
        py::arg("partition"), py::arg("kind") = "order-chain");
  m.def("volume", [](const EdgePartition& l, const std::string& kind) {
          return to_string(Polytope::build(system_of(kind, l)).volume());
        },
        py::arg("partition"), py::arg("kind") = "order-chain");
  m.def("is_integral", [](const EdgePartition& l) { return is_integral(enumerate_vertices(hrep_order_chain(l))); },
        py::arg("partition"));
  m.def("fingerprint", [](const EdgePartition& l, const std::string& kind, int dilations) {
          return fingerprint_dict(fingerprint(system_of(kind, l), dilations));
        },
        py::arg("partition"), py::arg("kind") = "order-chain", py::arg("dilations") = 3);

  m.def("equivalent",
        [](const EdgePartition& a, const std::string& kind_a, const EdgePartition& b, const std::string& kind_b) {
          auto cert = equivalent_exhaustive(system_of(kind_a, a), system_of(kind_b, b));
          py::dict d;
          d["verdict"] = verdict_name(cert.verdict);
          d["reason"] = cert.reason;
          if (cert.map) {
            std::vector<std::vector<long>> matrix;
            for (const auto& row : cert.map->matrix()) {
              matrix.emplace_back();
              for (const auto& x : row) matrix.back().push_back(x.get_si());
            }
            std::vector<long> shift;
            for (const auto& x : cert.map->shift()) shift.push_back(x.get_si());
            d["matrix"] = matrix;
            d["shift"] = shift;
          } else {
            d["matrix"] = py::none();
            d["shift"] = py::none();
          }
          return d;
        },
        py::arg("first"), py::arg("first_kind"), py::arg("second"), py::arg("second_kind"));

  m.def("beta", [](int n, const ElementSet& s) { return to_string(beta(DescentSet::make(n, s))); }, py::arg("n"),
        py::arg("descent_set"));
  m.def("family_f", [](int n) {
          std::vector<ElementSet> out;
          for (const auto& s : family_F(n)) out.push_back(s.elements);
          return out;
        },
        py::arg("n"));
  m.def("max_beta", [](int n) {
          auto r = max_beta_over_F(n);
          std::vector<ElementSet> argmaxes;
          for (const auto& s : r.argmaxes) argmaxes.push_back(s.elements);
          return std::make_pair(to_string(r.value), argmaxes);
        },
        py::arg("n"));

  m.def("suite_slugs", &suite_slugs);
  m.def("verify", [](const std::string& slug) {
          auto rep = run_suite(slug);
          py::list assertions;
          for (const auto& a : rep.assertions) {
            py::dict d;
            d["description"] = a.description;
            d["claim"] = a.claim;
            d["passed"] = a.passed;
            d["detail"] = a.detail;
            assertions.append(d);
          }
          py::dict d;
          d["suite"] = rep.slug;
          d["passed"] = rep.passed();
          d["assertions"] = assertions;
          return d;
        },
        py::arg("slug"));

  m.def("run_cli", [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          int code = run_command(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
