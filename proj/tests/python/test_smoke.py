"""Smoke tests for the python bindings.

Runnable directly (python3 test_smoke.py) or under pytest. Frozen values
mirror the C++ test oracles: closed-form path eigenvalues, single-mode
cosine, the exact u(1,1) cancellation, Ore constants, and the 1/e radius.
"""

import math

import wavegraph as wg


def test_graph_basics():
    g = wg.Graph.line(3)
    assert g.vertex_count == 7
    assert g.edge_count == 6
    assert g.degree(0) == 2.0
    assert g.distance(-3, 3) == 6
    assert g.ball(0, 2) == [-2, -1, 0, 1, 2]
    assert g.vertex_boundary([-2, -1, 0, 1, 2]) == [-3, 3]
    assert g.is_connected()

    star = wg.Graph.star(4)
    assert star.degree(0) == 4.0
    assert star.distance(1, 2) == 2

    custom = wg.Graph.build([(0, 2.0), (1, 0.5)], [(0, 1, 3.0)])
    assert abs(custom.degree(0) - 1.5) < 1e-15
    assert custom.adjacent(0, 1)
    round_trip = wg.Graph.from_json(custom.to_json())
    assert round_trip.mu(1) == 0.5

    split = wg.Graph.build([(0, 1.0), (1, 1.0), (2, 1.0)], [(0, 1, 1.0)])
    assert split.distance(0, 2) is None


def test_laplacian():
    g = wg.Graph.line(4)
    f = {x: float(x * x) for x in range(-4, 5)}
    assert abs(wg.apply_laplacian(g, f, 0) - 2.0) < 1e-12
    quart = {x: float(x**4) for x in range(-4, 5)}
    assert abs(wg.apply_laplacian(g, quart, 0, power=2) - 24.0) < 1e-9

    chk = wg.verify_power_bound(g, {x: 0.5 for x in range(-4, 5)}, 0, 2)
    assert chk["holds"]
    assert chk["lhs"] <= chk["rhs"] * (1 + 1e-12)


def test_eigenvalues():
    g = wg.Graph.line(3)
    sd = wg.eigendecompose(g, [-2, -1, 0, 1, 2])
    expect = [2.0 - 2.0 * math.cos(j * math.pi / 6.0) for j in range(1, 6)]
    assert all(abs(a - b) < 1e-10 for a, b in zip(sd["eigenvalues"], expect))
    assert sd["orthonormality_error"] < 1e-10
    assert sd["eigen_residual"] < 1e-10
    assert sd["boundary"] == [-3, 3]


def test_single_mode_wave():
    g = wg.Graph.line(1)
    sol = wg.solve_wave(g, [0], {0: 1.0}, {0: 0.0})
    rt2 = math.sqrt(2.0)
    for i in range(20):
        t = -4.0 + 8.0 * i / 19.0
        assert abs(sol.evaluate(t, 0) - math.cos(rt2 * t)) < 1e-12
    assert abs(sol.energy(1.3) - sol.energy(0.0)) < 1e-12
    assert sol.residual([0.5, 1.5, -2.0]) < 1e-9
    assert abs(sol.eigenvalues[0] - 2.0) < 1e-12

    value, tail = wg.taylor_reconstruct(sol, 0, 0.0, 40, 0.3)
    assert abs(value - math.cos(rt2 * 0.3)) < 1e-12
    assert tail < 1e-12


def test_counterexample():
    assert int(wg.spatial_product(2, 2)) == 24
    assert int(wg.spatial_product(3, 5)) == 0

    cex = wg.Counterexample(beta=1, order=2, precision=256, depth=24)
    assert abs(cex.evaluate("1", 0) - math.exp(-1.0)) < 1e-15
    assert cex.evaluate_decimal("1", 1) == "0"        # exact cancellation
    assert cex.evaluate_decimal("0", 5, order=7) == "0"  # flat jet
    assert cex.pde_residual("0.7", 3) == "0"          # solves the equation exactly
    assert cex.evaluate("0.5", 2) == cex.evaluate("0.5", -3)  # reflection symmetry

    cert = cex.certificate(x=0, jet_order=20, t_probe="1")
    assert cert["certified"] and cert["jet_vanishes"] and cert["probe_nonzero"]

    sums = [wg.taylor_reconstruct_counterexample(cex, 0, 0.0, N, 0.5)[0] for N in (5, 10, 20)]
    assert sums == [0.0, 0.0, 0.0]
    assert cex.evaluate("0.5", 0) > 0.1

    fast = wg.Counterexample(beta=3, order=2, precision=256, depth=30)
    r10 = fast.growth_ratio("1", 10, eps=1.0)
    r14 = fast.growth_ratio("1", 14, eps=1.0)
    assert 0 < r14 < r10


def test_bounds():
    assert wg.first_derivative_bound(1.0, 0.0, 0.0, 1.0) == 2.0
    assert wg.ore_constant(1, 1) == 2.0
    assert wg.ore_constant(2, 2) == 16.0
    assert wg.ore_constant_exact(1, 3) == "18"
    assert abs(wg.intermediate_derivative_bound(1.0, 0.0, 0.0, 1.0, 2, 3) - 96.0) < 1e-12

    assert abs(wg.analytic_radius(2.0, 0.0, 2.0) - math.exp(-1.0)) < 1e-15
    assert wg.analytic_radius(2.0, 0.0, 1.5) is None
    assert math.isfinite(wg.taylor_remainder_log_bound(200, 2.0, 0.0, 2.0, 1.0, 1, 0.3))


def test_verify_sweeps():
    results = wg.verify(suite="ore", seed=1)
    assert results and all(r["passed"] for r in results)
    assert all(r["failures"] == 0 for r in results)


def main():
    tests = [(name, fn) for name, fn in sorted(globals().items())
             if name.startswith("test_") and callable(fn)]
    for name, fn in tests:
        fn()
        print(f"ok {name}")
    print(f"{len(tests)} smoke tests passed (wavegraph {wg.__version__})")


if __name__ == "__main__":
    main()
