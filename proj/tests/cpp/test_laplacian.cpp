#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <string>

#include "oracles.hpp"
#include "wavegraph/graph.hpp"
#include "wavegraph/laplacian.hpp"
#include "wavegraph/rng.hpp"

using namespace wavegraph;

TEST_CASE("vertex function evaluation and extension") {
    VertexSet s(std::vector<VertexId>{1, 2, 4});
    VertexFunction f(s, {10.0, 20.0, 40.0});
    CHECK(f(2) == 20.0);
    CHECK(!f.defined_at(3));
    CHECK_THROWS_AS(f(3), std::out_of_range);
    CHECK_THROWS(VertexFunction(s, {1.0}));  // length mismatch

    VertexSet larger(std::vector<VertexId>{0, 1, 2, 3, 4});
    auto g = f.extended_by_zero(larger);
    CHECK(g(0) == 0.0);
    CHECK(g(4) == 40.0);
    CHECK_THROWS(f.extended_by_zero(VertexSet(std::vector<VertexId>{1, 2})));  // not larger

    auto c = VertexFunction::constant(s, 3.5);
    CHECK(c(4) == 3.5);
    auto t = VertexFunction::tabulate(s, [](VertexId v) { return double(v * v); });
    CHECK(t(4) == 16.0);
}

TEST_CASE("laplacian on the line matches hand values") {
    auto g = line_graph_window(4);
    VertexSet all(g.vertex_ids());
    auto sq = VertexFunction::tabulate(all, [](VertexId v) { return double(v) * double(v); });
    // second difference of x^2 is identically 2 away from the cut
    for (VertexId x = -3; x <= 3; ++x) CHECK(apply_laplacian(g, sq, x) == doctest::Approx(2.0));

    auto quart = VertexFunction::tabulate(all, [](VertexId v) { return std::pow(double(v), 4); });
    // second discrete difference applied twice to x^4 at 0: frozen hand value
    CHECK(apply_laplacian_power(g, quart, 0, 2) == doctest::Approx(24.0));
    CHECK(apply_laplacian_power(g, quart, 0, 0) == 0.0);
}

TEST_CASE("laplacian respects mu and omega") {
    auto g = WeightedGraph::build({{0, 2.0}, {1, 1.0}}, {{0, 1, 3.0}});
    VertexSet s(std::vector<VertexId>{0, 1});
    VertexFunction f(s, {1.0, 5.0});
    CHECK(apply_laplacian(g, f, 0) == doctest::Approx(1.5 * 4.0));  // (w/mu)(f1-f0)
    CHECK(apply_laplacian(g, f, 1) == doctest::Approx(3.0 * -4.0));
}

TEST_CASE("laplacian power needs the whole ball") {
    auto g = line_graph_window(3);
    VertexSet partial(std::vector<VertexId>{-1, 0, 1});
    VertexFunction f = VertexFunction::constant(partial, 1.0);
    CHECK(apply_laplacian(g, f, 0) == doctest::Approx(0.0));
    try {
        apply_laplacian_power(g, f, 0, 2);
        CHECK(false);
    } catch (const std::exception& e) {
        std::string msg = e.what();
        CHECK(msg.find("2") != std::string::npos);  // names the missing vertex or radius
    }
}

TEST_CASE("laplacian power agrees with dense oracle") {
    SplitMix64 rng(2024);
    for (int rep = 0; rep < 25; ++rep) {
        int n = int(rng.integer(3, 9));
        std::vector<VertexSpec> vs;
        for (int i = 0; i < n; ++i) vs.push_back({i, rng.uniform(0.1, 10.0)});
        std::vector<EdgeSpec> es;
        for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1, rng.uniform(0.1, 10.0)});
        for (int i = 0; i + 2 < n; ++i)
            if (rng.uniform() < 0.4) es.push_back({i, i + 2, rng.uniform(0.1, 10.0)});
        auto g = WeightedGraph::build(vs, es);

        VertexSet all(g.vertex_ids());
        std::vector<double> by_index(g.vertex_count());
        for (std::size_t i = 0; i < by_index.size(); ++i) by_index[i] = rng.uniform(-1.0, 1.0);
        auto f = VertexFunction::tabulate(
            all, [&](VertexId v) { return by_index[std::size_t(g.index_of(v))]; });

        int k = int(rng.integer(1, 3));
        VertexId x = g.id_at(int(rng.integer(0, n - 1)));
        double mine = apply_laplacian_power(g, f, x, k);
        double ref = oracle::dense_laplacian_power(g, by_index, x, k);
        CHECK(mine == doctest::Approx(ref).epsilon(1e-10));
    }
}

TEST_CASE("power bound formula and verification") {
    auto g = line_graph_window(5);
    auto pb = laplacian_power_bound(g, 0, 2, 1.0);
    CHECK(pb.value == doctest::Approx(16.0));  // (2*2)^2 * 1
    CHECK(!pb.touches_truncation);
    CHECK(laplacian_power_bound(g, 4, 1, 1.0).touches_truncation);

    VertexSet all(g.vertex_ids());
    SplitMix64 rng(7);
    auto f = VertexFunction::tabulate(all, [&](VertexId) { return rng.uniform(-1.0, 1.0); });
    for (int k = 1; k <= 3; ++k) {
        auto chk = verify_power_bound(g, f, 0, k);
        CHECK(chk.holds);
        CHECK(chk.lhs <= chk.rhs * (1.0 + 1e-12));
    }
}
