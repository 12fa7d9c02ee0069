"""Pydantic models for algebra descriptors, metric specs, run configs and reports."""

from mspace_go.models.algebra import PaintedDiagram, RootSystemType
from mspace_go.models.metric_spec import (
    MetricSpec,
    RootWeightsSummand,
    ScalarSummand,
    SplitSummand,
)
from mspace_go.models.run_config import OutputFormat, RunConfig

__all__ = [
    "RootSystemType",
    "PaintedDiagram",
    "MetricSpec",
    "ScalarSummand",
    "SplitSummand",
    "RootWeightsSummand",
    "RunConfig",
    "OutputFormat",
]
