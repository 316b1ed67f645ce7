#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "treespec/enumeration.hpp"
#include "treespec/json_io.hpp"

namespace py = pybind11;
using namespace treespec;

namespace {

py::object py_int(const BigInt& z) {
  return py::reinterpret_steal<py::object>(
      PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

py::object py_fraction(const BigRational& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py_int(q.get_num()), py_int(q.get_den()));
}

BigRational rational_from(py::handle obj) {
  return parse_rational(py::str(obj).cast<std::string>());
}

py::dict spectrum_dict(const SpectrumReport& rep) {
  py::dict d;
  d["n"] = rep.n;
  py::list coeffs;
  for (int k = 0; k <= rep.char_poly.degree(); ++k) coeffs.append(py_int(rep.char_poly.coeff(k)));
  d["coefficients"] = coeffs;
  py::list spectrum;
  for (const auto& [value, mult] : rep.integer_spectrum)
    spectrum.append(py::make_tuple(py_int(value), mult));
  d["integer_spectrum"] = spectrum;
  d["is_integral"] = rep.is_integral;
  d["distinct_in_open_m2_2"] = rep.distinct_in_open_m2_2;
  if (rep.witness)
    d["witness"] = py::make_tuple(py_fraction(rep.witness->first), py_fraction(rep.witness->second));
  else
    d["witness"] = py::none();
  return d;
}

SubdividedEdge edge_for(const Tree& t, std::optional<std::pair<int, int>> endpoints) {
  auto edges = find_subdivided_edges(t);
  if (edges.empty()) throw std::invalid_argument("tree has no subdivided edge");
  if (!endpoints) return edges.front();
  auto [a, b] = *endpoints;
  for (auto& e : edges) {
    if (e.endpoints == std::make_pair(std::min(a, b), std::max(a, b))) {
      if (e.vertices.front() != a) std::reverse(e.vertices.begin(), e.vertices.end());
      return e;
    }
  }
  throw std::invalid_argument("no maximal subdivided edge with those endpoints");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact spectral analysis of trees";

  py::class_<Tree>(m, "Tree")
      .def_readonly("n", &Tree::n)
      .def_property_readonly("edges", [](const Tree& t) { return t.edges; })
      .def("record", &format_edge_record)
      .def("__repr__", [](const Tree& t) { return "Tree(" + format_edge_record(t) + ")"; });

  m.def("parse_tree", &parse_tree, py::arg("text"),
        "Parse an edge-list document or single-line record");

  m.def(
      "char_poly",
      [](const Tree& t) {
        IntPolynomial p = char_poly(t);
        py::list coeffs;
        for (int k = 0; k <= p.degree(); ++k) coeffs.append(py_int(p.coeff(k)));
        return coeffs;
      },
      py::arg("tree"), "Characteristic polynomial coefficients, degree-ascending");

  m.def(
      "spectrum_report", [](const Tree& t) { return spectrum_dict(spectrum_report(t)); },
      py::arg("tree"));

  m.def(
      "count_eigs_interval",
      [](const Tree& t, py::handle a, py::handle b, bool distinct) {
        return count_eigs_interval(t, rational_from(a), rational_from(b),
                                   distinct ? CountMode::distinct : CountMode::with_multiplicity);
      },
      py::arg("tree"), py::arg("a"), py::arg("b"), py::arg("distinct") = false,
      "Eigenvalues in the open interval (a, b); endpoints accept int, str or Fraction");

  m.def(
      "subdivided_edges",
      [](const Tree& t) {
        py::list out;
        for (const auto& e : find_subdivided_edges(t)) {
          py::dict d;
          d["endpoints"] = e.endpoints;
          d["vertices"] = e.vertices;
          d["length"] = e.length;
          out.append(d);
        }
        return out;
      },
      py::arg("tree"));

  m.def("longest_subdivided_edge_length", &longest_subdivided_edge_length, py::arg("tree"));
  m.def("canonical_code", &canonical_code_hex, py::arg("tree"),
        "Isomorphism-invariant code, lowercase hex");

  m.def(
      "build_figure_tree",
      [](const Tree& left, int left_root, int inner, const Tree& right, int right_root) {
        return build_figure_tree(root_at(left, left_root), inner, root_at(right, right_root));
      },
      py::arg("left"), py::arg("left_root"), py::arg("inner"), py::arg("right"),
      py::arg("right_root"),
      "Join two trees by a path with `inner` extra vertices between the two roots");

  m.def(
      "enumerate_trees",
      [](int n, std::optional<int> min_subdivided) {
        std::vector<Tree> out;
        TreeStream stream = min_subdivided ? enumerate_with_subdivided_edge(n, *min_subdivided)
                                           : enumerate_free_trees(n);
        Tree t;
        while (stream.next(t)) out.push_back(std::move(t));
        return out;
      },
      py::arg("n"), py::arg("min_subdivided") = py::none(),
      "All non-isomorphic trees on n vertices, optionally filtered");

  m.def(
      "verify_theorem",
      [](int max_n, int k, int jobs) {
        VerificationReport rep = verify_theorem(max_n, k, jobs);
        py::dict d;
        d["n_max"] = rep.n_max;
        d["k"] = rep.k;
        d["trees_checked"] = rep.trees_checked;
        py::list violations;
        for (const auto& v : rep.violations) {
          py::dict item;
          item["n"] = v.n;
          item["index"] = v.index;
          item["tree"] = v.tree_record;
          item["distinct_in_m2_2"] = v.distinct_in_m2_2;
          item["is_integral"] = v.is_integral;
          violations.append(item);
        }
        d["violations"] = violations;
        d["min_distinct_in_interval"] = rep.min_distinct_in_interval;
        d["elapsed_seconds"] = rep.elapsed_seconds;
        return d;
      },
      py::arg("max_n"), py::arg("k") = 7, py::arg("jobs") = 1);

  m.def(
      "search_integral_trees",
      [](int max_n, int jobs) {
        py::list out;
        for (const auto& [tree, rep] : search_integral_trees(max_n, jobs)) {
          py::dict item;
          item["tree"] = tree;
          item["spectrum"] = spectrum_dict(rep);
          out.append(item);
        }
        return out;
      },
      py::arg("max_n"), py::arg("jobs") = 1);

  m.def(
      "trace_sign_dynamics",
      [](const Tree& t, std::optional<std::pair<int, int>> endpoints) {
        SignTrace trace = trace_sign_dynamics(t, edge_for(t, endpoints));
        py::dict d;
        d["path"] = trace.path;
        py::list bps;
        for (const auto& b : trace.breakpoints) {
          py::dict item;
          item["lo"] = py_fraction(b.lo);
          item["hi"] = py_fraction(b.hi);
          item["exact"] = b.exact();
          item["zero_positions"] = b.zero_positions;
          item["pole_positions"] = b.pole_positions;
          bps.append(item);
        }
        d["breakpoints"] = bps;
        d["panels"] = trace.panels;
        d["root_zero_count"] = trace.root_zero_count;
        return d;
      },
      py::arg("tree"), py::arg("endpoints") = py::none());

  m.def(
      "theta_boundary_counts",
      [](const Tree& t, std::optional<std::pair<int, int>> endpoints) {
        return theta_boundary_counts(t, edge_for(t, endpoints));
      },
      py::arg("tree"), py::arg("endpoints") = py::none(),
      "(positive-or-pole count at 2, at -2) over non-root path vertices");
}
