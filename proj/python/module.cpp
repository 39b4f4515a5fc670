#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "regcl/convex.hpp"
#include "regcl/graph.hpp"
#include "regcl/io.hpp"
#include "regcl/lattice.hpp"
#include "regcl/semilattice.hpp"
#include "regcl/spaces.hpp"
#include "regcl/verify.hpp"

namespace py = pybind11;
using namespace regcl;

namespace {

using Labels = std::vector<std::string>;

struct PySpace {
  ClosureSpace space;

  ElementSet set(const Labels& xs) const { return space.set_of(xs); }
  Labels names(const ElementSet& x) const { return space.ground().names(x); }
  std::vector<Labels> names(const std::vector<ElementSet>& xs) const {
    std::vector<Labels> out;
    for (const auto& x : xs) out.push_back(names(x));
    return out;
  }
};

ClosureSpace implications(const Labels& labels, const std::vector<std::pair<Labels, std::string>>& rules) {
  GroundSet g(labels);
  std::vector<Rule> rs;
  for (const auto& [prem, concl] : rules) rs.push_back({g.set_of(prem), g.index(concl)});
  return ClosureSpace::implications(std::move(g), std::move(rs));
}

py::dict classification(const Classification& c) {
  py::dict d;
  d["closed"] = c.closed;
  d["open"] = c.open;
  d["regular_closed"] = c.regular_closed;
  d["regular_open"] = c.regular_open;
  d["clopen"] = c.clopen;
  return d;
}

py::dict claim(const verify::ClaimResult& r) {
  py::dict d;
  d["id"] = r.id;
  d["description"] = r.description;
  d["expected"] = r.expected;
  d["computed"] = r.computed;
  d["passed"] = r.passed;
  d["seconds"] = r.seconds;
  return d;
}

}  // namespace

PYBIND11_MODULE(_regcl, m) {
  m.doc() = "Regular closed sets of finite closure spaces";

  py::register_exception<Error>(m, "RegclError", PyExc_ValueError);

  py::class_<FiniteLattice>(m, "Lattice")
      .def_static("from_leq", [](const std::vector<std::vector<bool>>& leq) { return FiniteLattice::from_leq(leq); })
      .def_static("chain", &FiniteLattice::chain)
      .def_static("builtin", &lattices::by_name, py::arg("name"))
      .def_property_readonly("size", &FiniteLattice::size)
      .def_property_readonly("bottom", &FiniteLattice::bottom)
      .def_property_readonly("top", &FiniteLattice::top)
      .def("leq", &FiniteLattice::leq)
      .def("join", &FiniteLattice::join)
      .def("meet", &FiniteLattice::meet)
      .def("labels", &FiniteLattice::labels)
      .def("lower_covers", &FiniteLattice::lower_covers)
      .def("dual", &FiniteLattice::dual)
      .def("join_irreducibles", [](const FiniteLattice& L) { return join_irreducibles(L); })
      .def("meet_irreducibles", [](const FiniteLattice& L) { return meet_irreducibles(L); })
      .def("is_semidistributive", [](const FiniteLattice& L) { return semidistributivity(L).sd; })
      .def("satisfies_rsd", [](const FiniteLattice& L, int k) { return satisfies_rsd(L, k).holds; })
      .def("is_bounded", [](const FiniteLattice& L) { return is_bounded(L).bounded; })
      .def("is_pseudocomplemented", [](const FiniteLattice& L) { return is_pseudocomplemented(L); })
      .def("is_distributive", [](const FiniteLattice& L) { return is_distributive(L); })
      .def("is_isomorphic", [](const FiniteLattice& A, const FiniteLattice& B) { return is_isomorphic(A, B); })
      .def("contains_copy_of", [](const FiniteLattice& L, const FiniteLattice& P) {
        return find_sublattice_copy(L, P).has_value();
      })
      .def("is_dm_completion", [](const FiniteLattice& L, const std::vector<int>& K) { return is_dm_completion(L, K); })
      .def("is_tight", [](const FiniteLattice& L, const std::vector<int>& K) { return is_tight(L, K).tight; })
      .def("to_json", [](const FiniteLattice& L) { return io::lattice_to_json(L).dump(); })
      .def("to_dot", [](const FiniteLattice& L) { return to_dot(L); })
      .def("__len__", &FiniteLattice::size);

  py::class_<RegLattice>(m, "RegLattice")
      .def_readonly("lattice", &RegLattice::lattice)
      .def_readonly("clopen", &RegLattice::clopen)
      .def("clopen_indices", &RegLattice::clopen_indices)
      .def("__len__", [](const RegLattice& r) { return r.sets.size(); });

  py::class_<PySpace>(m, "Space")
      .def(py::init([](const Labels& labels, const std::vector<std::pair<Labels, std::string>>& rules) {
             return PySpace{implications(labels, rules)};
           }),
           py::arg("labels"), py::arg("rules"))
      .def_static("from_json", [](const std::string& text) { return PySpace{io::space_from_json(io::parse(text))}; })
      .def_static("builtin", [](const std::string& name) { return PySpace{spaces::by_name(name)}; })
      .def_static("graph", [](const std::string& name) {
        return PySpace{graph_closure_space(connected_catalog(graphs::by_name(name)))};
      })
      .def_static("graph_from_json", [](const std::string& text) {
        return PySpace{graph_closure_space(connected_catalog(io::graph_from_json(io::parse(text))))};
      })
      .def_static("semilattice", [](int k) { return PySpace{semilattice_closure_space(generate_sm(k))}; })
      .def_static("semilattice_from_json", [](const std::string& text) {
        return PySpace{semilattice_closure_space(io::semilattice_from_json(io::parse(text)))};
      })
      .def_static("points", [](const std::vector<std::vector<std::string>>& pts) {
        std::vector<RationalVector> vs;
        for (const auto& p : pts) {
          RationalVector v;
          for (const auto& q : p) v.push_back(parse_rational(q));
          vs.push_back(v);
        }
        return PySpace{conv_e_space(PointConfiguration(vs))};
      })
      .def_property_readonly("labels", [](const PySpace& s) { return s.space.ground().labels(); })
      .def("__len__", [](const PySpace& s) { return s.space.size(); })
      .def("closure", [](const PySpace& s, const Labels& x) { return s.names(s.space.closure(s.set(x))); })
      .def("interior", [](const PySpace& s, const Labels& x) { return s.names(s.space.interior(s.set(x))); })
      .def("orthogonal", [](const PySpace& s, const Labels& x) { return s.names(orthogonal(s.space, s.set(x))); })
      .def("classify", [](const PySpace& s, const Labels& x) { return classification(classify(s.space, s.set(x))); })
      .def("closed_sets", [](const PySpace& s, int bound) { return s.names(enumerate_closed(s.space, bound)); },
           py::arg("bound") = kDefaultBound)
      .def("regular_closed_sets",
           [](const PySpace& s, int bound) { return s.names(regular_closed_sets(s.space, bound)); },
           py::arg("bound") = kDefaultBound)
      .def("clopen_sets", [](const PySpace& s, int bound) { return s.names(enumerate_clopen(s.space, bound)); },
           py::arg("bound") = kDefaultBound)
      .def("minimal_neighborhoods",
           [](const PySpace& s, const std::string& p) {
             return s.names(minimal_neighborhoods(s.space, s.space.ground().index(p)));
           })
      .def("is_convex_geometry", [](const PySpace& s) { return is_convex_geometry(s.space); })
      .def("reg", [](const PySpace& s, int bound) { return enumerate_regular_closed(s.space, bound); },
           py::arg("bound") = kDefaultBound)
      .def("to_json", [](const PySpace& s) { return io::space_to_json(s.space).dump(); });

  m.def("graph_is_lattice", [](const std::string& name) { return pg_lattice_criterion(graphs::by_name(name)).is_lattice; });
  m.def("claim_ids", &verify::claim_ids);
  m.def(
      "verify",
      [](const std::string& filter, std::uint64_t seed) {
        verify::Options o;
        o.filter = filter;
        o.seed = seed;
        py::list out;
        std::vector<verify::ClaimResult> rs;
        {
          py::gil_scoped_release release;
          rs = verify::run(o);
        }
        for (const auto& r : rs) out.append(claim(r));
        return out;
      },
      py::arg("filter") = "", py::arg("seed") = 1);
}
