"""
JSON report models.

Every CLI output that is not DOT is one of these models dumped with
model_dump_json(indent=2). Algebra elements travel as ordered term lists:

    [{"gen": "A[1,1,0]", "coeff": "3/2"}, {"gen": "iH1", "coeff": "-1"}]
"""

from typing import List, Literal, Optional

from pydantic import BaseModel, Field


class Term(BaseModel):
    gen: str = Field(..., description="Generator label (iH2, A[1,0], B[1,1])")
    coeff: str = Field(..., description="Exact rational 'p/q'")


class VerdictReport(BaseModel):
    """Serialized geocheck Verdict."""
    status: str
    witness: Optional[List[Term]] = None
    certificate: Optional[List[Term]] = None
    counterexample: Optional[List[Term]] = None
    probes_run: int = 0
    rank_coefficient: Optional[int] = None
    rank_augmented: Optional[int] = None
    caveat: Optional[str] = None


class GridRow(BaseModel):
    """One metric of a theorem grid."""
    label: str
    expected: Literal["pass", "refute", "info"]
    status: str
    consistent: bool
    counterexample: Optional[List[Term]] = None
    note: Optional[str] = None


class TheoremReport(BaseModel):
    theorem: str
    diagram: str
    reducibility: Literal["effective", "criterion"] = "effective"
    applicable: bool
    explanation: Optional[str] = None
    rows: List[GridRow] = Field(default_factory=list)
    consistent: bool = True


class SummandReport(BaseModel):
    index: int
    troot: List[int]
    dim: int
    roots: List[List[int]]
    lowest: List[int]
    highest: List[int]
    criterion_reducible: bool
    oracle_irreducible: bool
    representation_type: Literal["real", "complex", "quaternionic"]
    split_dims: Optional[List[int]] = None
    n1: Optional[List[List[Term]]] = None
    n2: Optional[List[List[Term]]] = None


class DescribeReport(BaseModel):
    diagram: str
    dim_g: int
    rank: int
    R_K: int
    R_M: int
    s: int
    dim_s: int
    dim_k1: int
    dim_n: int
    k1: str = Field(..., description="Unpainted nodes generating k1 (empty when K1 is trivial)")
    summand_dims: List[int]
    reducible: List[bool]
    representation_types: List[str]


class FiberReport(BaseModel):
    troot: List[int]
    roots: List[List[int]] = Field(..., description="R_i+ in canonical order")


class TRootsReport(BaseModel):
    diagram: str
    s: int
    positive: List[List[int]]
    fibers: List[FiberReport]
    t_basis: List[List[int]]
    components: List[List[List[int]]]
    connected: bool


class DecomposeReport(BaseModel):
    diagram: str
    s_basis: List[List[Term]]
    k1_basis: List[List[Term]]
    summands: List[SummandReport]
    cross_couplings: List[List[str]] = Field(default_factory=list)


class Finding(BaseModel):
    diagram: str
    kind: str
    message: str


class ScanEntry(BaseModel):
    diagram: str
    s: int
    components: int
    representation_types: List[str]
    standard_metric: str
    pp3: bool
    pp4: bool


class ScanReport(BaseModel):
    entries: List[ScanEntry] = Field(default_factory=list)
    findings: List[Finding] = Field(default_factory=list)
    notes: List[Finding] = Field(default_factory=list)
    theorems: List[TheoremReport] = Field(default_factory=list)
