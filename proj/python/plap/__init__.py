"""Ground states of the discrete p-Laplacian on lattice graphs.

Thin wrapper over the C++ core; see the project README for the full CLI.
"""

from ._plap import (  # noqa: F401
    Boundary,
    DistinctOptions,
    Domain,
    FiberDivergence,
    GridFunction,
    HypothesisError,
    NehariProjection,
    Nonlinearity,
    OrbitSet,
    Potential,
    Problem,
    QuotientResult,
    SobolevResult,
    SolveResult,
    SolverConfig,
    dirichlet_norm,
    e_norm,
    energy,
    fiber,
    fiber_slope,
    find_distinct,
    grid_to_csv,
    ground_state,
    lq_norm,
    orbit_distance,
    pairing,
    project_nehari,
    residual,
    residual_norm,
    run_verify,
    sobolev_constant,
    sobolev_quotient_descent,
)

__all__ = [
    "Boundary",
    "DistinctOptions",
    "Domain",
    "FiberDivergence",
    "GridFunction",
    "HypothesisError",
    "NehariProjection",
    "Nonlinearity",
    "OrbitSet",
    "Potential",
    "Problem",
    "QuotientResult",
    "SobolevResult",
    "SolveResult",
    "SolverConfig",
    "dirichlet_norm",
    "e_norm",
    "energy",
    "fiber",
    "fiber_slope",
    "find_distinct",
    "grid_to_csv",
    "ground_state",
    "lq_norm",
    "orbit_distance",
    "pairing",
    "project_nehari",
    "residual",
    "residual_norm",
    "run_verify",
    "sobolev_constant",
    "sobolev_quotient_descent",
]
