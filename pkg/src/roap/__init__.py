"""Radius-optimal single-edge augmentation of a metric path with vertex centers."""
from .generators import GenSpec, gen_euclidean, gen_graph_completion, generate, paper_fig1
from .kernels import backend
from .metric_path import (
    MetricError,
    MetricViolation,
    PathInstance,
    aug_distance,
    build,
    cycle_distance,
    eccentricity,
    from_matrix,
    from_points,
    path_distance,
    path_radius,
    validate_metric,
)
from .oracle import OracleResult, brute_radius, brute_solve, cycle_radius_diametral, cycle_radius_discrete
from .solver import (
    Augmentation,
    CaseTag,
    LambdaTable,
    SweepTable,
    candidate_case11,
    candidate_case12,
    compute_lambda,
    compute_sweep,
    solve,
)

__version__ = "0.1.0"
