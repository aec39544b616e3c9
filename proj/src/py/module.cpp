#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wavegraph/analyticity.hpp"
#include "wavegraph/format.hpp"
#include "wavegraph/graph.hpp"
#include "wavegraph/graph_io.hpp"
#include "wavegraph/laplacian.hpp"
#include "wavegraph/solution.hpp"
#include "wavegraph/spectral.hpp"
#include "wavegraph/tychonoff.hpp"
#include "wavegraph/verify.hpp"
#include "wavegraph/version.hpp"

namespace py = pybind11;
using namespace wavegraph;

namespace {

VertexFunction dict_to_function(const VertexSet& omega,
                                const std::map<VertexId, double>& values, const char* what) {
    return VertexFunction::tabulate(omega, [&](VertexId v) {
        auto it = values.find(v);
        if (it == values.end())
            throw std::invalid_argument(std::string(what) + ": no value for vertex " +
                                        std::to_string(v));
        return it->second;
    });
}

}  // namespace

PYBIND11_MODULE(_wavegraph, m) {
    m.doc() = "waves on weighted graphs: spectral Dirichlet solver, flat-bump counterexample, "
              "derivative bounds";
    m.attr("__version__") = WAVEGRAPH_VERSION;

    py::class_<WeightedGraph, std::shared_ptr<WeightedGraph>>(m, "Graph")
        .def_static(
            "build",
            [](const std::vector<std::pair<VertexId, double>>& vertices,
               const std::vector<std::tuple<VertexId, VertexId, double>>& edges) {
                std::vector<VertexSpec> vs;
                vs.reserve(vertices.size());
                for (const auto& [id, mu] : vertices) vs.push_back({id, mu});
                std::vector<EdgeSpec> es;
                es.reserve(edges.size());
                for (const auto& [u, v, w] : edges) es.push_back({u, v, w});
                return std::make_shared<WeightedGraph>(WeightedGraph::build(vs, es));
            },
            py::arg("vertices"), py::arg("edges"),
            "build from [(id, mu), ...] and [(u, v, w), ...]")
        .def_static(
            "line",
            [](int radius) {
                return std::make_shared<WeightedGraph>(line_graph_window(radius));
            },
            py::arg("radius"), "finite window {-radius..radius} of the unit-weight line")
        .def_static(
            "star",
            [](int leaves) { return std::make_shared<WeightedGraph>(star_graph(leaves)); },
            py::arg("leaves"))
        .def_static(
            "from_json",
            [](const std::string& text) {
                return std::make_shared<WeightedGraph>(parse_graph_json(text, "<python>"));
            },
            py::arg("text"))
        .def("to_json", [](const WeightedGraph& g) { return graph_to_json(g); })
        .def_property_readonly("vertex_count", &WeightedGraph::vertex_count)
        .def_property_readonly("edge_count", &WeightedGraph::edge_count)
        .def("vertices", [](const WeightedGraph& g) { return g.vertex_ids(); })
        .def("mu", &WeightedGraph::mu, py::arg("v"))
        .def("degree", &WeightedGraph::degree, py::arg("v"),
             "weighted degree sum_y w_xy / mu_x")
        .def("adjacent", &WeightedGraph::adjacent, py::arg("x"), py::arg("y"))
        .def(
            "distance",
            [](const WeightedGraph& g, VertexId x, VertexId y) { return distance(g, x, y); },
            py::arg("x"), py::arg("y"), "combinatorial distance; None when unreachable")
        .def(
            "ball",
            [](const WeightedGraph& g, VertexId center, int R) {
                return ball(g, center, R).ids();
            },
            py::arg("center"), py::arg("R"))
        .def(
            "vertex_boundary",
            [](const WeightedGraph& g, const std::vector<VertexId>& omega) {
                return vertex_boundary(g, VertexSet(omega)).ids();
            },
            py::arg("omega"))
        .def("is_connected", &WeightedGraph::is_connected)
        .def("__repr__", [](const WeightedGraph& g) {
            return "<Graph " + std::to_string(g.vertex_count()) + " vertices, " +
                   std::to_string(g.edge_count()) + " edges>";
        });

    m.def(
        "apply_laplacian",
        [](std::shared_ptr<WeightedGraph> g, const std::map<VertexId, double>& f, VertexId x,
           int power) {
            std::vector<VertexId> ids;
            ids.reserve(f.size());
            for (const auto& [v, _] : f) ids.push_back(v);
            auto fn = dict_to_function(VertexSet(ids), f, "f");
            return apply_laplacian_power(*g, fn, x, power);
        },
        py::arg("graph"), py::arg("f"), py::arg("x"), py::arg("power") = 1,
        "(Delta^power f)(x); f is {vertex: value} and must cover B_power(x)");

    m.def(
        "verify_power_bound",
        [](std::shared_ptr<WeightedGraph> g, const std::map<VertexId, double>& f, VertexId x,
           int k) {
            std::vector<VertexId> ids;
            ids.reserve(f.size());
            for (const auto& [v, _] : f) ids.push_back(v);
            auto fn = dict_to_function(VertexSet(ids), f, "f");
            auto chk = verify_power_bound(*g, fn, x, k);
            py::dict d;
            d["lhs"] = chk.lhs;
            d["rhs"] = chk.rhs;
            d["holds"] = chk.holds;
            d["touches_truncation"] = chk.touches_truncation;
            return d;
        },
        py::arg("graph"), py::arg("f"), py::arg("x"), py::arg("k"));

    m.def(
        "eigendecompose",
        [](std::shared_ptr<WeightedGraph> g, const std::vector<VertexId>& omega, double tol) {
            auto sd = eigendecompose(*g, VertexSet(omega), tol);
            py::dict d;
            d["omega"] = sd.omega.ids();
            d["boundary"] = sd.boundary.ids();
            d["eigenvalues"] = sd.lambda;
            d["eigenvectors"] = sd.psi;
            d["orthonormality_error"] = sd.orthonormality_error;
            d["eigen_residual"] = sd.eigen_residual;
            return d;
        },
        py::arg("graph"), py::arg("omega"), py::arg("tol") = 1e-12,
        "Dirichlet eigenpairs on omega with zero boundary data");

    py::class_<WaveSolution>(m, "WaveSolution")
        .def("evaluate", &WaveSolution::evaluate, py::arg("t"), py::arg("x"))
        .def("derivative", &WaveSolution::time_derivative, py::arg("t"), py::arg("x"),
             py::arg("order") = 1)
        .def("residual", &WaveSolution::residual, py::arg("t_samples"),
             "max |d2u/dt2 - Delta u| over the samples and omega")
        .def("energy", &WaveSolution::energy, py::arg("t"))
        .def_property_readonly(
            "eigenvalues", [](const WaveSolution& s) { return s.spectral().lambda; })
        .def_property_readonly("orthonormality_error",
                               [](const WaveSolution& s) {
                                   return s.spectral().orthonormality_error;
                               })
        .def_property_readonly(
            "eigen_residual", [](const WaveSolution& s) { return s.spectral().eigen_residual; });

    m.def(
        "solve_wave",
        [](std::shared_ptr<WeightedGraph> g, const std::vector<VertexId>& omega_ids,
           const std::map<VertexId, double>& g0, const std::map<VertexId, double>& h0,
           double tol) {
            VertexSet omega(omega_ids);
            auto problem = DirichletProblem::make(g, omega, dict_to_function(omega, g0, "g0"),
                                                  dict_to_function(omega, h0, "h0"));
            return solve_wave(problem, tol);
        },
        py::arg("graph"), py::arg("omega"), py::arg("g0"), py::arg("h0"), py::arg("tol") = 1e-12,
        "homogeneous Dirichlet wave solution from initial value/velocity dicts");

    m.def(
        "spatial_product",
        [](long x, int k) { return spatial_product(x, k).get_str(); }, py::arg("x"),
        py::arg("k"), "product (x-k+1)...(x+k) as a decimal string, exact");

    py::class_<CounterexampleSolution, std::shared_ptr<CounterexampleSolution>>(
        m, "Counterexample")
        .def(py::init([](int beta, int order, long precision, int depth) {
                 return std::make_shared<CounterexampleSolution>(
                     beta, order, static_cast<mpfr_prec_t>(precision), depth);
             }),
             py::arg("beta"), py::arg("order") = 2, py::arg("precision") = 256,
             py::arg("depth") = 40)
        .def_property_readonly("beta", &CounterexampleSolution::beta)
        .def_property_readonly("order", &CounterexampleSolution::order)
        .def_property_readonly("depth", &CounterexampleSolution::depth)
        .def(
            "evaluate",
            [](const CounterexampleSolution& s, const std::string& t, long x, int order) {
                return s.evaluate(rational_from_decimal(t), x, order).to_double();
            },
            py::arg("t"), py::arg("x"), py::arg("order") = 0,
            "u and its time derivatives; t is an exact decimal/fraction string")
        .def(
            "evaluate_decimal",
            [](const CounterexampleSolution& s, const std::string& t, long x, int order) {
                return format_real(s.evaluate(rational_from_decimal(t), x, order));
            },
            py::arg("t"), py::arg("x"), py::arg("order") = 0)
        .def(
            "pde_residual",
            [](const CounterexampleSolution& s, const std::string& t, long x) {
                return format_real(s.pde_residual(rational_from_decimal(t), x));
            },
            py::arg("t"), py::arg("x"),
            "decimal string of d^m u/dt^m - Delta u; \"0\" means exactly zero")
        .def(
            "growth_ratio",
            [](const CounterexampleSolution& s, const std::string& t, long x, double eps) {
                return s.growth_ratio(rational_from_decimal(t), x, eps).to_double();
            },
            py::arg("t"), py::arg("x"), py::arg("eps") = 1.0)
        .def(
            "certificate",
            [](const CounterexampleSolution& s, long x, int jet_order,
               const std::string& t_probe) {
                auto c = s.nonanalyticity_certificate(x, jet_order,
                                                      rational_from_decimal(t_probe));
                py::dict d;
                d["x"] = c.x;
                d["jet_order"] = c.jet_order;
                d["jet_vanishes"] = c.jet_vanishes;
                d["probe_value"] = format_real(c.probe_value);
                d["probe_nonzero"] = c.probe_nonzero;
                d["certified"] = c.certified;
                return d;
            },
            py::arg("x") = 0, py::arg("jet_order") = 20, py::arg("t_probe") = "1");

    m.def("first_derivative_bound", &first_derivative_bound, py::arg("M0"), py::arg("M2"),
          py::arg("a"), py::arg("b"));
    m.def("intermediate_derivative_bound", &intermediate_derivative_bound, py::arg("M0"),
          py::arg("M_top"), py::arg("a"), py::arg("b"), py::arg("i"), py::arg("n"));
    m.def(
        "ore_constant", [](int i, int n) { return ore_K(i, n).get_d(); }, py::arg("i"),
        py::arg("n"));
    m.def(
        "ore_constant_exact", [](int i, int n) { return ore_K(i, n).get_str(); }, py::arg("i"),
        py::arg("n"), "exact value as a fraction string");

    m.def(
        "analytic_radius",
        [](double D, double alpha, double A1) -> py::object {
            auto rep = analytic_radius_lower_bound(D, alpha, A1);
            if (rep.radius_unbounded) return py::none();
            return py::float_(rep.radius);
        },
        py::arg("D"), py::arg("alpha"), py::arg("A1"),
        "lower bound for the analytic radius; None means unbounded");
    m.def("taylor_remainder_log_bound", &taylor_remainder_log_bound, py::arg("k"), py::arg("D"),
          py::arg("alpha"), py::arg("A1"), py::arg("C"), py::arg("d"), py::arg("dt"));

    m.def(
        "taylor_reconstruct",
        [](const WaveSolution& s, VertexId x0, double t0, int N, double t) {
            SpectralEvaluable e(s);
            auto r = taylor_reconstruct(e, x0, t0, N, t);
            return py::make_tuple(r.value, r.tail);
        },
        py::arg("solution"), py::arg("x0"), py::arg("t0"), py::arg("N"), py::arg("t"),
        "(partial sum, |last term|) of the Taylor series in t");
    m.def(
        "taylor_reconstruct_counterexample",
        [](std::shared_ptr<CounterexampleSolution> s, VertexId x0, double t0, int N, double t) {
            CounterexampleEvaluable e{std::shared_ptr<const CounterexampleSolution>(s)};
            auto r = taylor_reconstruct(e, x0, t0, N, t);
            return py::make_tuple(r.value, r.tail);
        },
        py::arg("solution"), py::arg("x0"), py::arg("t0"), py::arg("N"), py::arg("t"));

    m.def(
        "verify",
        [](const std::string& suite, std::uint64_t seed) {
            py::list out;
            for (const auto& r : run_verify(suite, seed)) {
                py::dict d;
                d["name"] = r.name;
                d["passed"] = r.passed;
                d["instances"] = r.instances;
                d["failures"] = r.failures;
                d["detail"] = r.detail;
                out.append(d);
            }
            return out;
        },
        py::arg("suite") = "all", py::arg("seed") = std::uint64_t{1},
        "seeded property sweeps; suite in lap-bound|ore|residual|growth|uniqueness|all");
}
