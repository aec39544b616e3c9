"""Waves on weighted graphs.

Spectral Dirichlet solver on finite windows, the flat-bump nonuniqueness
counterexample evaluated in exact rational arithmetic, and derivative /
analytic-radius bounds. The heavy lifting lives in the C++ extension.
"""

from ._wavegraph import (
    Counterexample,
    Graph,
    WaveSolution,
    __version__,
    analytic_radius,
    apply_laplacian,
    eigendecompose,
    first_derivative_bound,
    intermediate_derivative_bound,
    ore_constant,
    ore_constant_exact,
    solve_wave,
    spatial_product,
    taylor_reconstruct,
    taylor_reconstruct_counterexample,
    taylor_remainder_log_bound,
    verify,
    verify_power_bound,
)

__all__ = [
    "Counterexample",
    "Graph",
    "WaveSolution",
    "__version__",
    "analytic_radius",
    "apply_laplacian",
    "eigendecompose",
    "first_derivative_bound",
    "intermediate_derivative_bound",
    "ore_constant",
    "ore_constant_exact",
    "solve_wave",
    "spatial_product",
    "taylor_reconstruct",
    "taylor_reconstruct_counterexample",
    "taylor_remainder_log_bound",
    "verify",
    "verify_power_bound",
]
