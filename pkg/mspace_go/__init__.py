"""
mspace-go

Exact-arithmetic construction of generalized flag manifolds G/K and their
M-spaces G/K₁ from painted Dynkin diagrams, with geodesic-orbit checks for
Ad(K₁)-invariant metrics by exact linear feasibility.
"""

from loguru import logger

__version__ = "1.0.0"

# Library code stays quiet unless the application enables it (the CLI does).
logger.disable("mspace_go")

from mspace_go.errors import MSpaceGoError  # noqa: E402
from mspace_go.geometry.flag import build_flag  # noqa: E402
from mspace_go.geometry.metric import standard_metric, validate  # noqa: E402
from mspace_go.geometry.mspace import build_mspace  # noqa: E402
from mspace_go.geocheck import check_go_metric, go_feasibility, verify_theorem  # noqa: E402
from mspace_go.lie.chevalley import get_algebra  # noqa: E402
from mspace_go.lie.rootsys import build_root_system  # noqa: E402
from mspace_go.models.algebra import PaintedDiagram, RootSystemType  # noqa: E402
from mspace_go.models.metric_spec import MetricSpec  # noqa: E402

__all__ = [
    "MSpaceGoError",
    "RootSystemType",
    "PaintedDiagram",
    "MetricSpec",
    "build_root_system",
    "get_algebra",
    "build_flag",
    "build_mspace",
    "standard_metric",
    "validate",
    "go_feasibility",
    "check_go_metric",
    "verify_theorem",
]
