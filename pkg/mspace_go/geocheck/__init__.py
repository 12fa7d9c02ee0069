"""Geodesic vectors, g.o. feasibility, criteria and theorem grids."""

from mspace_go.geocheck.criteria import (
    CrossValidation,
    FibrationChain,
    bracket_equation_37,
    prop_p2_conditions,
    prop_p2_crosscheck,
    prop_p3_necessary,
    prop_p5_check,
    prop_p5_crossvalidate,
    two_summand_joint,
)
from mspace_go.geocheck.feasibility import (
    check_go_metric,
    find_geodesic,
    go_feasibility,
    is_geodesic_vector,
)
from mspace_go.geocheck.probes import ProbeSet
from mspace_go.geocheck.scan import scan_catalog
from mspace_go.geocheck.theorems import THEOREMS, verify_theorem
from mspace_go.geocheck.verdict import SAMPLING_CAVEAT, Verdict, VerdictStatus

__all__ = [
    "Verdict",
    "VerdictStatus",
    "SAMPLING_CAVEAT",
    "ProbeSet",
    "is_geodesic_vector",
    "go_feasibility",
    "check_go_metric",
    "find_geodesic",
    "prop_p2_conditions",
    "prop_p2_crosscheck",
    "prop_p3_necessary",
    "FibrationChain",
    "prop_p5_check",
    "prop_p5_crossvalidate",
    "CrossValidation",
    "two_summand_joint",
    "bracket_equation_37",
    "THEOREMS",
    "verify_theorem",
    "scan_catalog",
]
