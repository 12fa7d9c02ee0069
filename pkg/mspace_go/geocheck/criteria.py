"""
Algebraic criteria around the geodesic lemma.

Each criterion reduces to an exact linear system in the coefficients of an
unknown k₁ element. Systems written in g coordinates carry coordinate
certificates: y with Σ_p y_p·column_p = 0 for every column and
Σ_p y_p·target_p ≠ 0, returned as the element Σ_p y_p·e_p of g.

Usage:
    c2, c3, c4 = prop_p2_conditions(m, op, a, x)
    verdict = prop_p3_necessary(m, op, X, Y)
    verdict = prop_p5_check(m, v_F, v_C)
    report = prop_p5_crossvalidate(m, Fraction(1), Fraction(2), ProbeSet())
"""

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple

from loguru import logger

from mspace_go.errors import (
    BadChain,
    EqualEigenvalues,
    NotApplicable,
    NotEigenvectors,
    OutOfSubspace,
)
from mspace_go.geocheck.feasibility import check_go_metric, combine, go_feasibility
from mspace_go.geocheck.probes import ProbeSet
from mspace_go.geocheck.verdict import Verdict, VerdictStatus
from mspace_go.geometry.metric import MetricOperator, apply, fibration_metric
from mspace_go.geometry.mspace import MSpace
from mspace_go.lie import linalg
from mspace_go.lie.chevalley import AlgebraElement, bracket, killing_form
from mspace_go.lie.linalg import SpanReducer

Block = Tuple[List[AlgebraElement], AlgebraElement]


# ============================================================================
# Systems in g coordinates
# ============================================================================


def solve_in_g(
    m: MSpace, blocks: Sequence[Block]
) -> Tuple[Verdict, Optional[List[Fraction]]]:
    """
    Find c with Σ_j c_j·columns_j = target in every block simultaneously.

    All blocks share the unknowns. Returns the verdict (no witness) and the
    coefficient vector when feasible. For a joint system the certificate adds
    the per-block parts.
    """
    ncols = len(blocks[0][0]) if blocks else 0
    rows: List[List[Fraction]] = []
    rhs: List[Fraction] = []
    keys: List[int] = []
    for columns, target in blocks:
        sparse_cols = [c.sparse() for c in columns]
        sparse_target = target.sparse()
        positions = set(sparse_target)
        for c in sparse_cols:
            positions.update(c)
        for p in sorted(positions):
            rows.append([c.get(p, Fraction(0)) for c in sparse_cols])
            rhs.append(sparse_target.get(p, Fraction(0)))
            keys.append(p)
    result = linalg.solve(rows, rhs, ncols)
    if result.feasible:
        return Verdict(
            VerdictStatus.FEASIBLE,
            witness=None,
            rank_coefficient=result.rank_a,
            rank_augmented=result.rank_augmented,
        ), result.solution
    cert: dict = {}
    for p, y in zip(keys, result.certificate):
        if y:
            cert[p] = cert.get(p, Fraction(0)) + y
    return Verdict(
        VerdictStatus.INFEASIBLE,
        certificate=m.algebra.from_sparse(cert),
        rank_coefficient=result.rank_a,
        rank_augmented=result.rank_augmented,
    ), None


def _feasible_k1(
    m: MSpace,
    blocks: Sequence[Block],
    basis: Sequence[AlgebraElement],
    replay: Callable[[AlgebraElement], bool],
) -> Verdict:
    verdict, solution = solve_in_g(m, blocks)
    if solution is None:
        return verdict
    witness = combine(list(basis), solution, m.algebra.zero())
    if not replay(witness):
        raise AssertionError(f"Witness {witness!r} does not replay")
    return Verdict(
        VerdictStatus.FEASIBLE,
        witness=witness,
        rank_coefficient=verdict.rank_coefficient,
        rank_augmented=verdict.rank_augmented,
    )


# ============================================================================
# Equivalent geodesic conditions
# ============================================================================


def prop_p2_conditions(
    m: MSpace, op: MetricOperator, a: AlgebraElement, x: AlgebraElement
) -> Tuple[bool, bool, bool]:
    """
    The three equivalent forms of "exp t(a + x)·o is a geodesic":

        (2) [a + x, Λx]_n = 0
        (3) ⟨[a, x], y⟩ = ⟨x, [x, y]_n⟩ for all y ∈ n
        (4) ⟨[a + x, y]_n, x⟩ = 0 for all y ∈ n

    Raises:
        OutOfSubspace: a ∉ k₁ or x ∉ n
    """
    if not m.in_k1(a):
        raise OutOfSubspace(f"{a!r} is not in k1")
    if not m.in_n(x):
        raise OutOfSubspace(f"{x!r} is not in n")
    lx = apply(op, x)
    c2 = not m.project_to_n(bracket(a + x, lx))
    ax = bracket(a, x)
    c3 = all(
        op.inner(ax, y) == killing_form(lx, m.project_to_n(bracket(x, y)))
        for y in m.n_basis
    )
    c4 = all(
        killing_form(m.project_to_n(bracket(a + x, y)), lx) == 0 for y in m.n_basis
    )
    return c2, c3, c4


def prop_p2_crosscheck(m: MSpace, op: MetricOperator, a: AlgebraElement, x: AlgebraElement) -> bool:
    """True iff conditions (2), (3), (4) all hold or all fail."""
    c2, c3, c4 = prop_p2_conditions(m, op, a, x)
    agree = c2 == c3 == c4
    if not agree:
        logger.warning(f"{m.flag.diagram}: geodesic conditions disagree at a={a!r}, x={x!r}")
    return agree


# ============================================================================
# Eigenvector necessary condition
# ============================================================================


def prop_p3_necessary(
    m: MSpace, op: MetricOperator, X: AlgebraElement, Y: AlgebraElement
) -> Verdict:
    """
    For eigenvectors ΛX = λX, ΛY = μY with λ ≠ μ, solve for h ∈ k₁:

        [X, Y] = λ/(λ−μ)·[h, X] + μ/(λ−μ)·[h, Y]

    INFEASIBLE means the metric is not g.o.

    Raises:
        NotEigenvectors: X or Y is zero or not an eigenvector
        EqualEigenvalues: λ = μ
    """
    lam = op.eigenvalue(X)
    mu = op.eigenvalue(Y)
    if lam is None or mu is None:
        raise NotEigenvectors("X and Y must be non-zero eigenvectors of the metric operator")
    if lam == mu:
        raise EqualEigenvalues(f"Both eigenvalues are {lam}")
    d = lam - mu
    columns = [(bracket(k, X) * lam + bracket(k, Y) * mu) * (1 / d) for k in m.k1_basis]
    target = bracket(X, Y)

    def replay(h: AlgebraElement) -> bool:
        return (bracket(h, X) * lam + bracket(h, Y) * mu) * (1 / d) == target

    return _feasible_k1(m, [(columns, target)], m.k1_basis, replay)


# ============================================================================
# Fibration criterion
# ============================================================================


@dataclass(frozen=True)
class FibrationChain:
    """
    k₁ ⊂ h ⊂ g with the tangent splits of the fiber H/K₁ (M_F) and of the
    base G/H (M_C).
    """
    k1_basis: Tuple[AlgebraElement, ...]
    h_basis: Tuple[AlgebraElement, ...]
    fiber_basis: Tuple[AlgebraElement, ...]
    base_basis: Tuple[AlgebraElement, ...]

    @classmethod
    def for_mspace(cls, m: MSpace) -> "FibrationChain":
        """h = k = s ⊕ k₁, M_F = s, M_C = m."""
        base = tuple(b for b in m.n_basis[m.dim_s:])
        return cls(
            k1_basis=tuple(m.k1_basis),
            h_basis=tuple(m.s_basis) + tuple(m.k1_basis),
            fiber_basis=tuple(m.s_basis),
            base_basis=base,
        )

    @staticmethod
    def _span(vectors: Sequence[AlgebraElement]) -> SpanReducer:
        reducer = SpanReducer()
        for v in vectors:
            reducer.add(v.sparse())
        return reducer

    def check(self) -> None:
        """
        Raises:
            BadChain: k₁ ⊄ h, M_F ⊄ h, or [h, M_C] ⊄ M_C
        """
        h = self._span(self.h_basis)
        if any(not h.contains(k.sparse()) for k in self.k1_basis):
            raise BadChain("h does not contain k1")
        if any(not h.contains(v.sparse()) for v in self.fiber_basis):
            raise BadChain("M_F is not inside h")
        base = self._span(self.base_basis)
        for x in self.h_basis:
            for v in self.base_basis:
                if not base.contains(bracket(x, v).sparse()):
                    raise BadChain("[h, M_C] leaves M_C")

    def in_fiber(self, v: AlgebraElement) -> bool:
        return self._span(self.fiber_basis).contains(v.sparse())

    def in_base(self, v: AlgebraElement) -> bool:
        return self._span(self.base_basis).contains(v.sparse())


@lru_cache(maxsize=32)
def _checked(chain: FibrationChain) -> None:
    chain.check()


def prop_p5_check(
    m: MSpace,
    v_F: AlgebraElement,
    v_C: AlgebraElement,
    chain: Optional[FibrationChain] = None,
) -> Verdict:
    """
    Find X ∈ k₁ with [X, v_F] = 0 and [X + v_F, v_C] = 0.

    Stage one is the nullspace of X ↦ [X, v_F] on k₁; stage two solves
    [X, v_C] = −[v_F, v_C] over that nullspace.

    Raises:
        BadChain: the chain is inconsistent, v_F ∉ M_F or v_C ∉ M_C
    """
    chain = chain or FibrationChain.for_mspace(m)
    _checked(chain)
    if not chain.in_fiber(v_F):
        raise BadChain(f"{v_F!r} is not in M_F")
    if not chain.in_base(v_C):
        raise BadChain(f"{v_C!r} is not in M_C")
    k1 = list(chain.k1_basis)
    zero = m.algebra.zero()

    images = [bracket(k, v_F).sparse() for k in k1]
    positions = sorted(set().union(*images)) if images else []
    rows = [[img.get(p, Fraction(0)) for img in images] for p in positions]
    if rows:
        null = linalg.nullspace(rows, len(k1))
    else:
        null = [[Fraction(int(r == c)) for c in range(len(k1))] for r in range(len(k1))]
    stabilizer = [combine(k1, v, zero) for v in null]
    logger.debug(f"{m.flag.diagram}: stabilizer of v_F in k1 has dim {len(stabilizer)}")

    columns = [bracket(X, v_C) for X in stabilizer]
    target = -bracket(v_F, v_C)

    def replay(X: AlgebraElement) -> bool:
        return not bracket(X, v_F) and not bracket(X + v_F, v_C)

    return _feasible_k1(m, [(columns, target)], stabilizer, replay)


def split_n_vector(m: MSpace, x: AlgebraElement) -> Tuple[AlgebraElement, AlgebraElement]:
    """x = v_F + v_C with v_F ∈ s and v_C ∈ m."""
    v = m.n_vector(x)
    v_F = m.from_n_vector(v[:m.dim_s] + [Fraction(0)] * (m.dim_n - m.dim_s))
    return v_F, x - v_F


@dataclass(frozen=True)
class CrossValidation:
    """Pointwise comparison of a criterion with go_feasibility over a probe set."""
    probes_run: int
    disagreements: Tuple[AlgebraElement, ...]
    go_verdict: Verdict

    @property
    def consistent(self) -> bool:
        return not self.disagreements


def prop_p5_crossvalidate(
    m: MSpace, a: Fraction, b: Fraction, probes: Optional[ProbeSet] = None
) -> CrossValidation:
    """
    Compare the fibration criterion with go_feasibility for g = aB|_s + bB|_m.

    With a ≠ b the two agree at every x = v_F + v_C.

    Raises:
        NotApplicable: a = b (the criterion needs two distinct scales)
    """
    a, b = Fraction(a), Fraction(b)
    if a == b:
        raise NotApplicable("The fibration criterion needs a != b")
    op = fibration_metric(m, a, b)
    probes = probes or ProbeSet()
    chain = FibrationChain.for_mspace(m)
    vectors = probes.vectors(m)
    disagreements = []
    for x in vectors:
        v_F, v_C = split_n_vector(m, x)
        if go_feasibility(m, op, x).ok != prop_p5_check(m, v_F, v_C, chain).ok:
            disagreements.append(x)
    if disagreements:
        logger.warning(
            f"{m.flag.diagram}: fibration criterion disagrees at {len(disagreements)} probes"
        )
    return CrossValidation(len(vectors), tuple(disagreements), check_go_metric(m, op, probes))


# ============================================================================
# Two-summand bracket equations
# ============================================================================


def summand_parts(m: MSpace, x: AlgebraElement) -> List[AlgebraElement]:
    """[V, X_1, …, X_s]: the s part and the summand parts of x ∈ n."""
    v = m.n_vector(x)
    zero = m.algebra.zero()
    V = combine(m.n_basis[:m.dim_s], v[:m.dim_s], zero)
    parts = [V]
    for gens in m.m_generators:
        part = zero
        for g in gens:
            c = v[m.m_slot(g)]
            if c:
                part = part + m.algebra.gen(g) * c
        parts.append(part)
    return parts


def two_summand_joint(
    m: MSpace,
    mu: Fraction,
    mu1: Fraction,
    mu2: Fraction,
    V: AlgebraElement,
    X1: AlgebraElement,
    X2: AlgebraElement,
) -> Verdict:
    """
    Joint solvability in k ∈ k₁ of

        [μ₁k + (μ₁−μ)V + (μ₁−μ₂)X₂, X₁] = 0
        [μ₂k + (μ₂−μ)V, X₂] = 0
    """
    mu, mu1, mu2 = Fraction(mu), Fraction(mu1), Fraction(mu2)
    k1 = m.k1_basis
    first = ([bracket(k, X1) * mu1 for k in k1], -bracket(V * (mu1 - mu) + X2 * (mu1 - mu2), X1))
    second = ([bracket(k, X2) * mu2 for k in k1], -bracket(V * (mu2 - mu), X2))

    def replay(k: AlgebraElement) -> bool:
        return (
            not bracket(k * mu1 + V * (mu1 - mu) + X2 * (mu1 - mu2), X1)
            and not bracket(k * mu2 + V * (mu2 - mu), X2)
        )

    return _feasible_k1(m, [first, second], k1, replay)


def bracket_equation_37(
    m: MSpace, V: AlgebraElement, X1: AlgebraElement, X2: AlgebraElement
) -> Verdict:
    """Solvability of [k + V + X₂, X₁] = 0 in k ∈ k₁."""
    columns = [bracket(k, X1) for k in m.k1_basis]
    target = -bracket(V + X2, X1)

    def replay(k: AlgebraElement) -> bool:
        return not bracket(k + V + X2, X1)

    return _feasible_k1(m, [(columns, target)], m.k1_basis, replay)
