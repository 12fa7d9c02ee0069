"""Verdicts of the geodesic checks."""

from dataclasses import dataclass
from enum import Enum
from typing import List, Optional

from mspace_go.lie.chevalley import AlgebraElement
from mspace_go.models.reports import Term, VerdictReport

SAMPLING_CAVEAT = "sampling evidence only"


class VerdictStatus(str, Enum):
    GEODESIC = "GEODESIC"
    NOT_GEODESIC = "NOT_GEODESIC"
    FEASIBLE = "FEASIBLE"
    INFEASIBLE = "INFEASIBLE"
    REFUTED = "REFUTED"
    PASSED_SAMPLES = "PASSED_SAMPLES"


def terms(x: Optional[AlgebraElement]) -> Optional[List[Term]]:
    if x is None:
        return None
    return [Term(**t) for t in x.to_json_terms()]


@dataclass(frozen=True)
class Verdict:
    """
    Outcome of a check.

    witness: the k₁ element (FEASIBLE) or the geodesic vector (GEODESIC from
    find_geodesic). certificate: the residual r ∈ n with B([k, Λx], r) = 0 for
    all k and B([x, Λx], r) ≠ 0 (INFEASIBLE, REFUTED), or the failing
    direction Y (NOT_GEODESIC). counterexample: the refuting probe x.
    """
    status: VerdictStatus
    witness: Optional[AlgebraElement] = None
    certificate: Optional[AlgebraElement] = None
    counterexample: Optional[AlgebraElement] = None
    count: int = 0
    rank_coefficient: Optional[int] = None
    rank_augmented: Optional[int] = None
    caveat: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.status in (
            VerdictStatus.GEODESIC, VerdictStatus.FEASIBLE, VerdictStatus.PASSED_SAMPLES
        )

    def to_report(self) -> VerdictReport:
        return VerdictReport(
            status=self.status.value,
            witness=terms(self.witness),
            certificate=terms(self.certificate),
            counterexample=terms(self.counterexample),
            probes_run=self.count,
            rank_coefficient=self.rank_coefficient,
            rank_augmented=self.rank_augmented,
            caveat=self.caveat,
        )
