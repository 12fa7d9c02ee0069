"""
Algebra descriptors: simple Lie type and painted Dynkin diagram.

Both are frozen pydantic models so they can key caches and travel as JSON:

    {"family": "A", "rank": 3}
    {"algebra": {"family": "B", "rank": 3}, "painted": [3]}
"""

from pathlib import Path
from typing import List, Literal, Tuple

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from mspace_go.errors import EmptyPainted, IndexOutOfRange, InvalidType

Family = Literal["A", "B", "C", "D", "E", "F", "G"]

# Classical families: least admissible rank. Exceptional families: every admissible rank.
_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4}
_FIXED_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


class RootSystemType(BaseModel):
    """
    Simple Lie type (family, rank).

    Admissible pairs: A l≥1, B l≥2, C l≥3, D l≥4, E l∈{6,7,8}, F l=4, G l=2.
    """
    model_config = ConfigDict(frozen=True)

    family: Family = Field(..., description="Cartan–Killing family letter")
    rank: int = Field(..., ge=1, description="Number of simple roots")

    @field_validator("family", mode="before")
    @classmethod
    def normalize_family(cls, v):
        if isinstance(v, str):
            return v.strip().upper()
        return v

    @model_validator(mode="after")
    def validate_admissible(self) -> "RootSystemType":
        if self.family in _FIXED_RANKS:
            if self.rank not in _FIXED_RANKS[self.family]:
                allowed = ", ".join(str(r) for r in _FIXED_RANKS[self.family])
                raise ValueError(
                    f"Type {self.family}{self.rank} is not admissible (rank must be one of {allowed})"
                )
        elif self.rank < _MIN_RANK[self.family]:
            raise ValueError(
                f"Type {self.family}{self.rank} is not admissible "
                f"(rank must be >= {_MIN_RANK[self.family]})"
            )
        return self

    @classmethod
    def of(cls, family: str, rank: int) -> "RootSystemType":
        """Construct, converting validation failures into InvalidType."""
        try:
            return cls(family=family, rank=rank)
        except ValidationError as e:
            raise InvalidType(f"Invalid type ({family!r}, {rank!r}): {e.errors()[0]['msg']}") from e

    @classmethod
    def from_file(cls, path: Path) -> "RootSystemType":
        """Load an algebra descriptor from JSON or YAML."""
        text = Path(path).read_text()
        data = yaml.safe_load(text)
        if not isinstance(data, dict):
            raise InvalidType(f"Algebra descriptor must be a mapping: {path}")
        return cls.of(data.get("family"), data.get("rank"))

    @property
    def label(self) -> str:
        return f"{self.family}{self.rank}"

    def __str__(self) -> str:
        return self.label


class PaintedDiagram(BaseModel):
    """
    A Dynkin diagram with a non-empty set of painted simple roots (Π_M).

    Painted indices are 1-based and kept sorted; the unpainted complement is Π_K.
    """
    model_config = ConfigDict(frozen=True)

    algebra: RootSystemType = Field(..., description="Simple type of G")
    painted: Tuple[int, ...] = Field(..., description="1-based painted simple-root indices")

    @field_validator("painted", mode="before")
    @classmethod
    def normalize_painted(cls, v):
        if isinstance(v, str):
            v = [int(p) for p in v.split(",") if p.strip()]
        return tuple(sorted(set(v)))

    @model_validator(mode="after")
    def validate_painted(self) -> "PaintedDiagram":
        if not self.painted:
            raise ValueError("Painted set is empty (K = G, no flag manifold)")
        bad = [p for p in self.painted if not 1 <= p <= self.algebra.rank]
        if bad:
            raise ValueError(
                f"Painted index {bad[0]} out of range 1..{self.algebra.rank} for {self.algebra}"
            )
        return self

    @classmethod
    def of(cls, algebra: RootSystemType, painted) -> "PaintedDiagram":
        """Construct, mapping validation failures onto the library's errors."""
        painted = tuple(painted)
        if not painted:
            raise EmptyPainted("Painted set is empty (K = G, no flag manifold)")
        try:
            return cls(algebra=algebra, painted=painted)
        except ValidationError as e:
            raise IndexOutOfRange(e.errors()[0]["msg"].removeprefix("Value error, ")) from e

    @property
    def unpainted(self) -> List[int]:
        return [j for j in range(1, self.algebra.rank + 1) if j not in self.painted]

    @property
    def label(self) -> str:
        return f"{self.algebra.label}{{{','.join(str(p) for p in self.painted)}}}"

    def __str__(self) -> str:
        return self.label
