#include "spectral_er/acceptance.hpp"
#include "spectral_er/constructions.hpp"
#include "spectral_er/enumerate.hpp"
#include "spectral_er/errors.hpp"
#include "spectral_er/graph.hpp"
#include "spectral_er/polynomial.hpp"
#include "spectral_er/spectral.hpp"
#include "spectral_er/verify.hpp"

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace ser;

namespace {

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    return Graph::from_edges(n, edges);
}

py::dict spectral_dict(const SpectralResult& r) {
    py::dict d;
    d["lambda"] = r.lambda;
    d["lo"] = r.lo;
    d["hi"] = r.hi;
    d["residual"] = r.residual;
    d["iterations"] = r.iterations;
    d["vector"] = r.vector;
    return d;
}

std::vector<std::string> poly_coeff_strings(const Polynomial& p) {
    std::vector<std::string> out;
    for (const Rational& c : p.coeffs()) out.push_back(c.str());
    return out;
}

Polynomial family_by_name(const std::string& name, long n, std::optional<Abc> abc) {
    auto fam = poly_family_from_name(name);
    if (!fam) throw parameter_error("unknown polynomial family: " + name);
    return poly_family(*fam, n, abc);
}

std::string report_json_string(const VerificationReport& rep) { return rep.to_json().dump(); }

}  // namespace

PYBIND11_MODULE(spectral_er, m) {
    m.doc() = "spectral triangle-supersaturation toolkit: constructions, certified "
              "eigenvalues, and exhaustive small-graph verification";

    py::register_exception<parameter_error>(m, "ParameterError", PyExc_ValueError);
    py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init(&graph_from_edges), py::arg("n"), py::arg("edges"))
        .def_static("from_graph6", [](const std::string& s) { return from_graph6(s); })
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("m", &Graph::edge_count)
        .def("degree", &Graph::degree)
        .def("has_edge", &Graph::has_edge)
        .def("edges", &Graph::edges)
        .def("graph6", [](const Graph& g) { return to_graph6(g); })
        .def("triangles", [](const Graph& g) { return count_triangles(g); })
        .def("is_connected", [](const Graph& g) { return is_connected(g); })
        .def("canonical", [](const Graph& g) { return py::bytes(
            reinterpret_cast<const char*>(canonical_form(g).data()), canonical_form(g).size()); })
        .def("aut_order", [](const Graph& g) { return aut_order(g); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.vertex_count()) + " '" + to_graph6(g) + "'>";
        });

    m.def("count_copies", &count_copies, py::arg("g"), py::arg("f"));
    m.def("rotate_edges",
          [](const Graph& g, int vi, int vj, const std::vector<int>& s) {
              VertexSet vs;
              for (int v : s) vs.add(v);
              return rotate_edges(g, vi, vj, vs);
          },
          py::arg("g"), py::arg("vi"), py::arg("vj"), py::arg("s"));

    m.def("spectral_radius",
          [](const Graph& g, double tol) { return spectral_dict(spectral_radius(g, tol)); },
          py::arg("g"), py::arg("tol") = 1e-10);
    m.def("signless_laplacian_radius",
          [](const Graph& g, double tol) {
              return spectral_dict(signless_laplacian_radius(g, tol));
          },
          py::arg("g"), py::arg("tol") = 1e-10);
    m.def("rayleigh_lower_bound", &rayleigh_lower_bound);
    m.def("lemma21_checks", &lemma21_checks, py::arg("n"));

    m.def("turan", &turan, py::arg("n"), py::arg("r"));
    m.def("turan_plus_star", &turan_plus_star, py::arg("n"), py::arg("r"), py::arg("q"));
    m.def("k_plus", &k_plus, py::arg("n"));
    m.def("remark_graph",
          [](const std::string& kind, int n) {
              auto k = remark_kind_from_name(kind);
              if (!k) throw parameter_error("unknown remark kind: " + kind);
              return remark_graph(*k, n);
          },
          py::arg("kind"), py::arg("n"));
    m.def("case_graph",
          [](const std::string& tag, int n, std::optional<long> a, std::optional<long> b,
             std::optional<long> c) {
              auto t = case_tag_from_name(tag);
              if (!t) throw parameter_error("unknown case tag: " + tag);
              return case_graph({*t, a, b, c}, n);
          },
          py::arg("tag"), py::arg("n"), py::arg("a") = std::nullopt, py::arg("b") = std::nullopt,
          py::arg("c") = std::nullopt);
    m.def("claim10_graph", &claim10_graph, py::arg("even"), py::arg("n"));
    m.def("min_added_edge_copies", &min_added_edge_copies, py::arg("n"), py::arg("r"),
          py::arg("f"));

    m.def("poly_family",
          [](const std::string& name, long n, std::optional<std::tuple<long, long, long>> abc) {
              std::optional<Abc> p;
              if (abc) p = Abc{std::get<0>(*abc), std::get<1>(*abc), std::get<2>(*abc)};
              return poly_coeff_strings(family_by_name(name, n, p));
          },
          py::arg("name"), py::arg("n"), py::arg("abc") = std::nullopt,
          "ascending exact rational coefficients, as strings");
    m.def("family_root",
          [](const std::string& name, long n, std::optional<std::tuple<long, long, long>> abc,
             double tol) {
              std::optional<Abc> p;
              if (abc) p = Abc{std::get<0>(*abc), std::get<1>(*abc), std::get<2>(*abc)};
              return largest_real_root(family_by_name(name, n, p), tol);
          },
          py::arg("name"), py::arg("n"), py::arg("abc") = std::nullopt, py::arg("tol") = 1e-10);

    m.def("enumerate_graph6",
          [](int n, bool connected_only, std::optional<int> min_edges,
             std::optional<int> max_edges) {
              EnumerationFilter f;
              f.connected_only = connected_only;
              f.min_edges = min_edges;
              f.max_edges = max_edges;
              std::vector<std::string> out;
              enumerate_nonisomorphic(n, f, [&](const Graph& g) { out.push_back(to_graph6(g)); },
                                      1);
              return out;
          },
          py::arg("n"), py::arg("connected_only") = false, py::arg("min_edges") = std::nullopt,
          py::arg("max_edges") = std::nullopt);

    m.def("verify",
          [](const std::string& check, int n, int q, int r, std::optional<std::string> f_g6,
             int workers) {
              VerifyOptions opt;
              opt.workers = workers;
              if (check == "spectral-er") return report_json_string(verify_spectral_er(n, opt));
              if (check == "edge-er") return report_json_string(verify_edge_er(n, opt));
              if (check == "nz") return report_json_string(verify_nz(n, opt));
              if (check == "lovasz-simonovits")
                  return report_json_string(verify_lovasz_simonovits(n, q, opt));
              if (check == "sqrt-m") return report_json_string(verify_sqrt_m(n, opt));
              if (check == "signless") return report_json_string(verify_signless(n, opt));
              if (check == "bn-bounds") return report_json_string(verify_bn_bounds(n, opt));
              if (check == "near-misses") return report_json_string(search_near_misses(n, opt));
              if (check == "conjecture") {
                  Graph f = f_g6 ? from_graph6(*f_g6)
                                 : Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
                  return report_json_string(verify_conjecture(n, r, q, f, opt));
              }
              throw parameter_error("unknown check: " + check);
          },
          py::arg("check"), py::arg("n"), py::arg("q") = 1, py::arg("r") = 2,
          py::arg("f") = std::nullopt, py::arg("workers") = 0,
          "run an exhaustive check; returns the JSON report as a string");
}
