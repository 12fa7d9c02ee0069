"""
RunConfig - validated command-line inputs.

The CLI collects its options into one RunConfig before any computation, so
missing files, bad painted lists and inconsistent algebra selectors fail
fast with a usage error.

Usage:
    >>> cfg = RunConfig(family="A", rank=2, painted=(1, 2))
    >>> cfg.diagram().label
    'A2{1,2}'
"""

from enum import Enum
from pathlib import Path
from typing import Optional, Tuple

import yaml
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from mspace_go.models.algebra import PaintedDiagram, RootSystemType


class OutputFormat(str, Enum):
    JSON = "json"
    TEXT = "text"
    DOT = "dot"


class RunConfig(BaseModel):
    """
    Inputs shared by every subcommand.

    Attributes:
        algebra_path: JSON/YAML algebra descriptor (exclusive with family/rank)
        family, rank: inline algebra selector
        painted: 1-based painted indices
        metric_path: optional metric spec (JSON or YAML)
        probes: random probe count for g.o. sampling
        seed: random probe seed
        output_format: json, text or dot
    """
    model_config = ConfigDict(frozen=True)

    algebra_path: Optional[Path] = Field(default=None, description="Algebra descriptor file")
    family: Optional[str] = Field(default=None, description="Inline family letter")
    rank: Optional[int] = Field(default=None, ge=1, description="Inline rank")
    painted: Tuple[int, ...] = Field(..., description="1-based painted simple roots")
    metric_path: Optional[Path] = Field(default=None, description="Metric spec file")
    probes: int = Field(default=200, ge=0, description="Random probe count")
    seed: int = Field(default=42, description="Random probe seed")
    output_format: OutputFormat = Field(default=OutputFormat.TEXT, description="Report format")

    @field_validator("painted", mode="before")
    @classmethod
    def parse_painted(cls, v):
        if isinstance(v, str):
            try:
                return tuple(int(p) for p in v.split(",") if p.strip())
            except ValueError:
                raise ValueError(f"Painted indices must be comma-separated integers, got '{v}'") from None
        return v

    @field_validator("algebra_path", "metric_path")
    @classmethod
    def validate_readable(cls, v: Optional[Path]) -> Optional[Path]:
        if v is None:
            return v
        if not v.is_file():
            raise ValueError(f"File not found: {v}")
        return v

    @model_validator(mode="after")
    def validate_algebra_selector(self) -> "RunConfig":
        inline = self.family is not None or self.rank is not None
        if self.algebra_path is not None and inline:
            raise ValueError("Use either --algebra or --family/--rank, not both")
        if self.algebra_path is None and (self.family is None or self.rank is None):
            raise ValueError("An algebra is required: --algebra FILE or --family X --rank N")
        return self

    def algebra(self) -> RootSystemType:
        if self.algebra_path is not None:
            return RootSystemType.from_file(self.algebra_path)
        return RootSystemType.of(self.family, self.rank)

    def diagram(self) -> PaintedDiagram:
        return PaintedDiagram.of(self.algebra(), self.painted)

    @classmethod
    def from_yaml(cls, path: Path) -> "RunConfig":
        with open(path) as f:
            data = yaml.safe_load(f)
        return cls(**data)
