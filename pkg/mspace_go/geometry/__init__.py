"""Flag manifolds, M-spaces and invariant metrics."""

from mspace_go.geometry.flag import (
    FlagManifold,
    TRoot,
    TRootGraph,
    adjacency,
    build_flag,
    connected_components,
    lowest_highest,
    summand_basis,
    t_basis,
)
from mspace_go.geometry.metric import (
    MetricOperator,
    apply,
    diagonal_metric,
    fibration_metric,
    standard_metric,
    validate,
)
from mspace_go.geometry.mspace import (
    MSpace,
    ReducibilityFinding,
    SummandSplit,
    build_mspace,
    is_reducible,
    orbit_irreducibility_oracle,
    split_summand,
)

__all__ = [
    "FlagManifold",
    "TRoot",
    "TRootGraph",
    "build_flag",
    "adjacency",
    "connected_components",
    "summand_basis",
    "lowest_highest",
    "t_basis",
    "MSpace",
    "SummandSplit",
    "ReducibilityFinding",
    "build_mspace",
    "is_reducible",
    "split_summand",
    "orbit_irreducibility_oracle",
    "MetricOperator",
    "standard_metric",
    "validate",
    "apply",
    "diagonal_metric",
    "fibration_metric",
]
