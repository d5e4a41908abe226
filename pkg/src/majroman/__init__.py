"""Exact majority Roman domination: solvers, closed forms, proof
certificates, and a cross-validation harness for small graphs."""

from .graph import (
    Graph,
    GraphError,
    GraphSpec,
    complement,
    corona,
    generate,
    gnp,
    join,
    parse_edge_list,
    random_tree,
    serialize_edge_list,
)
from .labeling import (
    LabelingError,
    ValidationReport,
    closed_sum,
    majority_threshold,
    parse_labeling,
    satisfied_count,
    serialize_labeling,
    validate,
    weight,
)
from .solver import (
    CapExceededError,
    InfeasibleError,
    OptResult,
    SolveOptions,
    SolverError,
    branch_and_bound,
    brute_force,
    delta_lower_bound,
    solve,
)

__all__ = [
    "Graph",
    "GraphError",
    "GraphSpec",
    "complement",
    "corona",
    "generate",
    "gnp",
    "join",
    "parse_edge_list",
    "random_tree",
    "serialize_edge_list",
    "LabelingError",
    "ValidationReport",
    "closed_sum",
    "majority_threshold",
    "parse_labeling",
    "satisfied_count",
    "serialize_labeling",
    "validate",
    "weight",
    "CapExceededError",
    "InfeasibleError",
    "OptResult",
    "SolveOptions",
    "SolverError",
    "branch_and_bound",
    "brute_force",
    "delta_lower_bound",
    "solve",
]
