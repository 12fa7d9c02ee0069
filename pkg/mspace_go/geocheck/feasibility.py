"""
Geodesic lemma and exact g.o. feasibility.

For x ∈ n and a metric Λ, x has a geodesic lift a + x (a ∈ k₁) iff

    [a + x, Λx]_n = 0

which is linear in a. Pairing with the n basis under B gives the system

    Σ_j c_j B([k_j, Λx], b) = −B([x, Λx], b)     for b ∈ n_basis

solved exactly. FEASIBLE verdicts carry a = Σ c_j k_j; INFEASIBLE ones carry
r ∈ n with B([k, Λx], r) = 0 for every k ∈ k₁ and B([x, Λx], r) ≠ 0. Both are
replayed before being returned.
"""

from fractions import Fraction
from typing import List, Optional

from loguru import logger

from mspace_go.errors import OutOfSubspace, ZeroVector
from mspace_go.geocheck.probes import ProbeSet
from mspace_go.geocheck.verdict import SAMPLING_CAVEAT, Verdict, VerdictStatus
from mspace_go.geometry.metric import MetricOperator, apply
from mspace_go.geometry.mspace import MSpace
from mspace_go.lie import linalg
from mspace_go.lie.chevalley import AlgebraElement, bracket, killing_form


def combine(basis: List[AlgebraElement], coeffs: List[Fraction], zero: AlgebraElement) -> AlgebraElement:
    out = zero
    for b, c in zip(basis, coeffs):
        if c:
            out = out + b * c
    return out


def is_geodesic_vector(m: MSpace, op: MetricOperator, X: AlgebraElement) -> Verdict:
    """
    Geodesic lemma: X ∈ g is a geodesic vector iff ⟨[X, Y]_n, X_n⟩ = 0 for all Y ∈ n.

    A failing Y is returned as the certificate.

    Raises:
        ZeroVector: X = 0
    """
    if not X:
        raise ZeroVector("Geodesic test needs a non-zero vector")
    lx = apply(op, m.project_to_n(X))
    for Y in m.n_basis:
        if killing_form(m.project_to_n(bracket(X, Y)), lx) != 0:
            return Verdict(VerdictStatus.NOT_GEODESIC, certificate=Y)
    return Verdict(VerdictStatus.GEODESIC, witness=X)


def go_feasibility(m: MSpace, op: MetricOperator, x: AlgebraElement) -> Verdict:
    """
    Decide whether some a ∈ k₁ makes a + x geodesic.

    Raises:
        ZeroVector: x = 0
        OutOfSubspace: x ∉ n
    """
    if not x:
        raise ZeroVector("g.o. feasibility needs a non-zero vector")
    if not m.in_n(x):
        raise OutOfSubspace(f"{x!r} is not in n")
    lx = apply(op, x)
    columns = [bracket(k, lx) for k in m.k1_basis]
    rhs_vector = bracket(x, lx)
    rows = [[killing_form(col, b) for col in columns] for b in m.n_basis]
    rhs = [-killing_form(rhs_vector, b) for b in m.n_basis]
    result = linalg.solve(rows, rhs, len(columns))

    zero = m.algebra.zero()
    if result.feasible:
        a = combine(m.k1_basis, result.solution, zero)
        if m.project_to_n(bracket(a + x, lx)):
            raise AssertionError(f"Witness {a!r} does not satisfy [a + x, Λx]_n = 0")
        return Verdict(
            VerdictStatus.FEASIBLE,
            witness=a,
            rank_coefficient=result.rank_a,
            rank_augmented=result.rank_augmented,
        )

    r = combine(m.n_basis, result.certificate, zero)
    if any(killing_form(col, r) != 0 for col in columns) or killing_form(rhs_vector, r) == 0:
        raise AssertionError(f"Certificate {r!r} does not separate [x, Λx] from [k1, Λx]")
    return Verdict(
        VerdictStatus.INFEASIBLE,
        certificate=r,
        rank_coefficient=result.rank_a,
        rank_augmented=result.rank_augmented,
    )


def find_geodesic(m: MSpace, op: MetricOperator, x: AlgebraElement) -> Verdict:
    """GEODESIC with the vector a + x as witness, or the INFEASIBLE verdict."""
    verdict = go_feasibility(m, op, x)
    if not verdict.ok:
        return verdict
    X = verdict.witness + x
    check = is_geodesic_vector(m, op, X)
    if check.status != VerdictStatus.GEODESIC:
        raise AssertionError(f"Lifted vector {X!r} fails the geodesic lemma")
    return Verdict(
        VerdictStatus.GEODESIC,
        witness=X,
        rank_coefficient=verdict.rank_coefficient,
        rank_augmented=verdict.rank_augmented,
    )


def check_go_metric(
    m: MSpace,
    op: MetricOperator,
    probes: Optional[ProbeSet] = None,
) -> Verdict:
    """
    Sample the g.o. property over a probe set.

    Stops at the first probe without a geodesic lift (REFUTED, with that probe
    and its certificate). Otherwise PASSED_SAMPLES, which is evidence only.
    """
    probes = probes or ProbeSet()
    vectors = probes.vectors(m)
    for count, x in enumerate(vectors, start=1):
        verdict = go_feasibility(m, op, x)
        if not verdict.ok:
            logger.info(f"{m.flag.diagram}: refuted at probe {count}/{len(vectors)}")
            return Verdict(
                VerdictStatus.REFUTED,
                certificate=verdict.certificate,
                counterexample=x,
                count=count,
                rank_coefficient=verdict.rank_coefficient,
                rank_augmented=verdict.rank_augmented,
            )
    logger.info(f"{m.flag.diagram}: {len(vectors)} probes passed")
    return Verdict(VerdictStatus.PASSED_SAMPLES, count=len(vectors), caveat=SAMPLING_CAVEAT)
