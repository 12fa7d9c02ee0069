"""Exact Lie theory: root systems, the compact real form, rational linear algebra."""

from mspace_go.lie.chevalley import (
    AlgebraElement,
    CompactLieAlgebra,
    Generator,
    GeneratorKind,
    StructureConstants,
    bracket,
    compute_structure_constants,
    get_algebra,
    killing_form,
    project,
    span_closure,
)
from mspace_go.lie.rootsys import (
    Root,
    RootSystem,
    build_root_system,
    fundamental_coweight,
    pair_B,
    root_string,
)

__all__ = [
    "Root",
    "RootSystem",
    "build_root_system",
    "root_string",
    "pair_B",
    "fundamental_coweight",
    "Generator",
    "GeneratorKind",
    "AlgebraElement",
    "CompactLieAlgebra",
    "StructureConstants",
    "compute_structure_constants",
    "get_algebra",
    "bracket",
    "killing_form",
    "project",
    "span_closure",
]
