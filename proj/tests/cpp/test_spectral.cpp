#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <memory>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "wavegraph/rng.hpp"
#include "wavegraph/spectral.hpp"

using namespace wavegraph;

namespace {

std::shared_ptr<const WeightedGraph> shared(WeightedGraph g) {
    return std::make_shared<const WeightedGraph>(std::move(g));
}

VertexSet range_set(VertexId lo, VertexId hi) {
    std::vector<VertexId> ids;
    for (VertexId v = lo; v <= hi; ++v) ids.push_back(v);
    return VertexSet(std::move(ids));
}

}  // namespace

TEST_CASE("jacobi frozen 2x2") {
    Matrix s(2);
    s.at(0, 0) = 2.0; s.at(0, 1) = -1.0;
    s.at(1, 0) = -1.0; s.at(1, 1) = 2.0;
    auto r = jacobi_eigen(s);
    REQUIRE(r.values.size() == 2);
    CHECK(r.values[0] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(r.values[1] == doctest::Approx(3.0).epsilon(1e-13));
    double inv = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(r.vectors[0][0]) == doctest::Approx(inv));
    CHECK(std::abs(r.vectors[0][1]) == doctest::Approx(inv));
    // lambda = 1 pairs with the flat vector, lambda = 3 with the alternating one
    CHECK(r.vectors[0][0] * r.vectors[0][1] > 0.0);
    CHECK(r.vectors[1][0] * r.vectors[1][1] < 0.0);

    Matrix bad(2);
    bad.at(0, 1) = 1.0;  // bad.at(1,0) stays 0
    CHECK_THROWS(jacobi_eigen(bad));
}

TEST_CASE("jacobi random symmetric vs trace and determinant invariants") {
    SplitMix64 rng(99);
    for (int rep = 0; rep < 10; ++rep) {
        int n = 6;
        Matrix s(n);
        std::vector<std::vector<double>> dense(n, std::vector<double>(n));
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                double v = rng.uniform(-2.0, 2.0);
                s.at(i, j) = v;
                s.at(j, i) = v;
                dense[i][j] = dense[j][i] = v;
            }
        auto r = jacobi_eigen(s);

        double trace = 0.0, sum = 0.0, prod = 1.0;
        for (int i = 0; i < n; ++i) trace += s.at(i, i);
        for (double l : r.values) { sum += l; prod *= l; }
        CHECK(sum == doctest::Approx(trace).epsilon(1e-10));
        CHECK(prod == doctest::Approx(oracle::determinant(dense)).epsilon(1e-8));

        for (int i = 0; i < n; ++i) {
            // residual ||S v - l v||_inf against the input matrix
            double worst = 0.0;
            for (int row = 0; row < n; ++row) {
                double sv = 0.0;
                for (int col = 0; col < n; ++col) sv += dense[row][col] * r.vectors[i][col];
                worst = std::max(worst, std::abs(sv - r.values[i] * r.vectors[i][row]));
            }
            CHECK(worst <= 1e-9 * s.frobenius() + 1e-12);
            for (int j = 0; j < n; ++j) {
                double dot = 0.0;
                for (int k = 0; k < n; ++k) dot += r.vectors[i][k] * r.vectors[j][k];
                CHECK(dot == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-10));
            }
        }
        CHECK(r.values.size() == std::size_t(n));
        for (std::size_t i = 1; i < r.values.size(); ++i) CHECK(r.values[i - 1] <= r.values[i]);
    }
}

TEST_CASE("dirichlet matrix on the path") {
    auto g = line_graph_window(3);
    auto dm = dirichlet_matrix(g, range_set(-2, 2));
    REQUIRE(dm.L.n() == 5);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            double expect = i == j ? 2.0 : (std::abs(i - j) == 1 ? -1.0 : 0.0);
            CHECK(dm.L.at(i, j) == doctest::Approx(expect));
            CHECK(dm.S.at(i, j) == doctest::Approx(expect));  // unit mu: S == L
        }
}

TEST_CASE("dirichlet spectrum positivity is enforced") {
    // A component of Omega with no vertex boundary has constant functions in
    // its kernel; the solver must refuse instead of dividing by sqrt(0).
    std::vector<VertexSpec> vs;
    for (VertexId v = -3; v <= 3; ++v) vs.push_back({v, 1.0});
    vs.push_back({10, 1.0});
    vs.push_back({11, 1.0});
    vs.push_back({12, 1.0});
    std::vector<EdgeSpec> es;
    for (VertexId v = -3; v < 3; ++v) es.push_back({v, v + 1, 1.0});
    es.push_back({10, 11, 1.0});
    es.push_back({11, 12, 1.0});
    es.push_back({10, 12, 1.0});
    auto g = WeightedGraph::build(vs, es);

    VertexSet omega(std::vector<VertexId>{-2, -1, 0, 1, 2, 10, 11, 12});
    try {
        dirichlet_matrix(g, omega);
        CHECK(false);
    } catch (const std::exception& e) {
        CHECK(std::string(e.what()).find("not strictly positive") != std::string::npos);
    }

    // Omega covering a whole connected graph is the same defect.
    auto star = star_graph(3);
    CHECK_THROWS(dirichlet_matrix(star, VertexSet(star.vertex_ids())));

    // empty and non-subset omegas are plain validation errors
    CHECK_THROWS(dirichlet_matrix(g, VertexSet{}));
    CHECK_THROWS(dirichlet_matrix(g, VertexSet(std::vector<VertexId>{77})));
}

TEST_CASE("path eigenvalues match the closed form") {
    auto g = line_graph_window(3);
    auto sd = eigendecompose(g, range_set(-2, 2));
    REQUIRE(sd.n() == 5);
    const double pi = std::acos(-1.0);
    for (int j = 1; j <= 5; ++j)
        CHECK(sd.lambda[j - 1] == doctest::Approx(2.0 - 2.0 * std::cos(j * pi / 6.0)).epsilon(1e-10));
    CHECK(sd.orthonormality_error <= 1e-10);
    CHECK(sd.eigen_residual <= 1e-10);
    CHECK(sd.boundary.ids() == std::vector<VertexId>{-3, 3});
}

TEST_CASE("weighted eigendecomposition is mu-orthonormal with small residual") {
    SplitMix64 rng(4242);
    std::vector<VertexSpec> vs;
    for (VertexId v = 0; v <= 4; ++v) vs.push_back({v, rng.uniform(0.1, 10.0)});
    std::vector<EdgeSpec> es;
    for (VertexId v = 0; v < 4; ++v) es.push_back({v, v + 1, rng.uniform(0.1, 10.0)});
    auto g = WeightedGraph::build(vs, es);
    auto sd = eigendecompose(g, range_set(1, 3));
    REQUIRE(sd.n() == 3);
    CHECK(sd.orthonormality_error <= 1e-10);
    CHECK(sd.eigen_residual <= 1e-10);
    for (double l : sd.lambda) CHECK(l > 0.0);
}

TEST_CASE("single mode closed forms") {
    auto g = shared(line_graph_window(1));
    VertexSet omega(std::vector<VertexId>{0});

    auto value_data = DirichletProblem::make(g, omega, VertexFunction::constant(omega, 1.0),
                                             VertexFunction::constant(omega, 0.0));
    auto u = solve_wave(value_data);
    auto velocity_data = DirichletProblem::make(g, omega, VertexFunction::constant(omega, 0.0),
                                                VertexFunction::constant(omega, 1.0));
    auto v = solve_wave(velocity_data);

    const double rt2 = std::sqrt(2.0);
    for (int i = 0; i < 20; ++i) {
        double t = -4.0 + 8.0 * i / 19.0;
        CHECK(std::abs(u.evaluate(t, 0) - std::cos(rt2 * t)) <= 1e-12);
        CHECK(std::abs(v.evaluate(t, 0) - std::sin(rt2 * t) / rt2) <= 1e-12);
        CHECK(std::abs(u.time_derivative(t, 0, 1) + rt2 * std::sin(rt2 * t)) <= 1e-12);
        CHECK(std::abs(v.time_derivative(t, 0, 2) + rt2 * std::sin(rt2 * t)) <= 1e-12);
    }
    CHECK(u.evaluate(0.7, 1) == 0.0);   // boundary value is pinned to zero
    CHECK_THROWS(u.evaluate(0.7, 99));  // outside the closure is undefined
}

TEST_CASE("random dirichlet wave on the path window") {
    auto g = shared(line_graph_window(3));
    VertexSet omega = range_set(-2, 2);
    SplitMix64 rng(515);
    auto g0 = VertexFunction::tabulate(omega, [&](VertexId) { return rng.uniform(-1.0, 1.0); });
    auto h0 = VertexFunction::tabulate(omega, [&](VertexId) { return rng.uniform(-1.0, 1.0); });
    auto sol = solve_wave(DirichletProblem::make(g, omega, g0, h0));

    std::vector<double> ts;
    for (int i = 0; i < 20; ++i) ts.push_back(rng.uniform(-5.0, 5.0));
    CHECK(sol.residual(ts) <= 1e-9);
    CHECK(sol.reconstruction_error(g0, h0) <= 1e-12);

    double e0 = sol.energy(0.0);
    CHECK(e0 > 0.0);
    for (double t : {-3.7, 0.4, 1.9, 12.0})
        CHECK(std::abs(sol.energy(t) - e0) <= 1e-10 * std::abs(e0));

    // derivative definitions vs central differences of the solution itself
    for (int order = 1; order <= 2; ++order)
        for (double t : {-1.3, 0.6}) {
            double fd = oracle::central_difference(
                [&](double s) { return sol.evaluate(s, 1); }, t, order, 1e-5);
            CHECK(sol.time_derivative(t, 1, order) == doctest::Approx(fd).epsilon(1e-5));
        }

    // perturbing a coefficient breaks data reconstruction but not the PDE:
    // each mode solves it on its own
    WaveSolution bent = sol;
    bent.perturb_coefficient_a(0, 0.25);
    CHECK(bent.reconstruction_error(g0, h0) > 0.1);
    CHECK(bent.residual(ts) <= 1e-9);
}

TEST_CASE("initial data must live exactly on omega") {
    auto g = shared(line_graph_window(3));
    VertexSet omega = range_set(-2, 2);
    VertexSet wrong = range_set(-1, 1);
    CHECK_THROWS(DirichletProblem::make(g, omega, VertexFunction::constant(wrong, 1.0),
                                        VertexFunction::constant(omega, 0.0)));
    CHECK_THROWS(DirichletProblem::make(g, omega, VertexFunction::constant(omega, 1.0),
                                        VertexFunction::constant(wrong, 0.0)));
}

TEST_CASE("zero forcing reproduces the homogeneous solution") {
    auto g = shared(line_graph_window(2));
    VertexSet omega = range_set(-1, 1);
    auto g0 = VertexFunction::tabulate(omega, [](VertexId v) { return 1.0 + 0.5 * double(v); });
    auto h0 = VertexFunction::constant(omega, 0.25);
    auto problem = DirichletProblem::make(g, omega, g0, h0);
    auto plain = solve_wave(problem);
    auto forced = solve_wave_forced(problem, [](double, VertexId) { return 0.0; }, 0.05);
    for (double t : {0.3, 1.1, 2.6})
        for (VertexId x = -1; x <= 1; ++x) {
            CHECK(std::abs(forced.evaluate(t, x) - plain.evaluate(t, x)) <= 1e-12);
            CHECK(std::abs(forced.time_derivative(t, x, 2) - plain.time_derivative(t, x, 2)) <=
                  1e-12);
        }
}

TEST_CASE("constant forcing on a single mode has a closed form") {
    auto g = shared(line_graph_window(1));
    VertexSet omega(std::vector<VertexId>{0});
    auto zero = VertexFunction::constant(omega, 0.0);
    auto problem = DirichletProblem::make(g, omega, zero, zero);
    const double c = 0.8;
    const double rt2 = std::sqrt(2.0);
    auto closed = [&](double t) { return (c / 2.0) * (1.0 - std::cos(rt2 * t)); };

    auto forced = solve_wave_forced(problem, [&](double, VertexId) { return c; }, 0.01);
    for (double t : {0.5, 1.0, 2.0, 3.5})
        CHECK(forced.evaluate(t, 0) == doctest::Approx(closed(t)).epsilon(1e-7));

    // quadrature convergence: halving the step should cut the error by
    // about 2^4; anything above 2^3 certifies at least third order
    double t = 1.7;
    std::vector<double> errs;
    for (double step : {0.2, 0.1, 0.05}) {
        auto s = solve_wave_forced(problem, [&](double, VertexId) { return c; }, step);
        errs.push_back(std::abs(s.evaluate(t, 0) - closed(t)));
    }
    CHECK(errs[0] / errs[1] > 8.0);
    CHECK(errs[1] / errs[2] > 8.0);

    // derivative consistency and the documented order cap
    auto s = solve_wave_forced(problem, [&](double, VertexId) { return c; }, 0.005);
    for (int order = 1; order <= 2; ++order) {
        double fd = oracle::central_difference([&](double tt) { return s.evaluate(tt, 0); }, t,
                                               order, 1e-4);
        CHECK(s.time_derivative(t, 0, order) == doctest::Approx(fd).epsilon(1e-4));
    }
    CHECK_THROWS(s.time_derivative(t, 0, 3));
    CHECK_THROWS(solve_wave_forced(problem, [](double, VertexId) { return 0.0; }, 0.0));
}
