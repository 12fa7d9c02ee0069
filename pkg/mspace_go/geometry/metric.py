"""
Ad(K₁)-invariant metrics on n as compiled operators.

A metric ⟨x, y⟩ = B(Λx, y) is given by a MetricSpec and compiled into the
matrix of Λ over n_basis (column b is the image of n_basis[b]). Validation
checks, in order:

1. shape against the effective decomposition of the M-space
2. B-self-adjointness of the compiled matrix
3. positive definiteness by exact leading principal minors of B(Λe_a, e_b)
4. ad(k₁)-equivariance on every (k₁ generator, n basis vector) pair

Design:
    s_block is the Gram matrix of the metric on s, so the s part of Λ is
    G_s⁻¹·s_block with G_s = B(s_i, s_j). On a split summand the coupling
    uses J = ad(iH_{Λ_j}) for the smallest painted j in the support of the
    t-root; J is B-skew, which is why n₂ gets −c·J.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from loguru import logger

from mspace_go.errors import (
    NotEquivariant,
    NotPositiveDefinite,
    NotSelfAdjoint,
    ShapeMismatch,
)
from mspace_go.geometry.mspace import MSpace
from mspace_go.lie import linalg
from mspace_go.lie.chevalley import AlgebraElement, killing_form
from mspace_go.models.metric_spec import (
    MetricSpec,
    RootWeightsSummand,
    ScalarSummand,
    SplitSummand,
)

Matrix = List[List[Fraction]]


@dataclass(frozen=True)
class MetricOperator:
    """
    Validated metric operator Λ on n.

    Attributes:
        mspace: the M-space whose n_basis indexes the matrix
        spec: the spec it was compiled from
        matrix: Λ over n_basis, matrix[a][b] = a-th coordinate of Λ n_basis[b]
        gram: B(Λ e_a, e_b) over n_basis
    """
    mspace: MSpace
    spec: MetricSpec
    matrix: Tuple[Tuple[Fraction, ...], ...]
    gram: Tuple[Tuple[Fraction, ...], ...]

    def apply(self, x: AlgebraElement) -> AlgebraElement:
        return apply(self, x)

    def inner(self, x: AlgebraElement, y: AlgebraElement) -> Fraction:
        """⟨x, y⟩ = B(Λx, y)."""
        return killing_form(apply(self, x), y)

    def eigenvalue(self, x: AlgebraElement) -> Optional[Fraction]:
        """λ with Λx = λx, or None when x is not an eigenvector (or is zero)."""
        v = self.mspace.n_vector(x)
        w = linalg.mat_vec(self.matrix, v)
        k = next((i for i, c in enumerate(v) if c != 0), None)
        if k is None:
            return None
        lam = w[k] / v[k]
        if all(wi == lam * vi for wi, vi in zip(w, v)):
            return lam
        return None

    def standard_scale(self) -> Optional[Fraction]:
        """c when Λ = c·Id (a homothety of the standard metric), else None."""
        c = self.matrix[0][0]
        n = len(self.matrix)
        for a in range(n):
            for b in range(n):
                if self.matrix[a][b] != (c if a == b else 0):
                    return None
        return c

    @property
    def is_standard_homothety(self) -> bool:
        return self.standard_scale() is not None


def apply(op: MetricOperator, x: AlgebraElement) -> AlgebraElement:
    """
    Λx for x ∈ n.

    Raises:
        OutOfSubspace: x has a k₁ component
    """
    m = op.mspace
    v = m.n_vector(x)
    return m.from_n_vector(linalg.mat_vec(op.matrix, v))


# ============================================================================
# Compilation
# ============================================================================


def _compile(spec: MetricSpec, m: MSpace) -> Matrix:
    n = m.dim_n
    ds = m.dim_s
    if len(spec.s_block) != ds:
        raise ShapeMismatch(f"s_block is {len(spec.s_block)}x{len(spec.s_block)}, dim s = {ds}")
    if len(spec.summands) != m.s_count:
        raise ShapeMismatch(f"Spec has {len(spec.summands)} summands, the M-space has {m.s_count}")

    M: Matrix = [[Fraction(0)] * n for _ in range(n)]
    s_op = linalg.mat_mul(linalg.inverse(m.s_gram), [list(r) for r in spec.s_block])
    for a in range(ds):
        for b in range(ds):
            M[a][b] = s_op[a][b]

    for i in range(1, m.s_count + 1):
        params = spec.summand(i)
        gens = m.m_generators[i - 1]
        slots = [m.m_slot(g) for g in gens]
        if isinstance(params, ScalarSummand):
            for p in slots:
                M[p][p] = params.lam
        elif isinstance(params, RootWeightsSummand):
            fiber = m.flag.fiber(i)
            if len(params.weights) != len(fiber):
                raise ShapeMismatch(
                    f"Summand {i} has {len(fiber)} roots, got {len(params.weights)} weights"
                )
            for r, w in enumerate(params.weights):
                M[slots[2 * r]][slots[2 * r]] = w
                M[slots[2 * r + 1]][slots[2 * r + 1]] = w
        else:
            _compile_split(m, i, params, slots, M)
    return M


def _compile_split(m: MSpace, i: int, params: SplitSummand, slots: List[int], M: Matrix) -> None:
    split = m.effective_split(i)
    if not split.is_split:
        raise ShapeMismatch(f"Summand {i} is Ad(K1)-irreducible; split parameters need a split summand")
    gens = m.m_generators[i - 1]
    local = {g: t for t, g in enumerate(gens)}
    halves = list(split.n1_basis) + list(split.n2_basis)
    d, h = len(gens), len(split.n1_basis)
    # columns of P are the half-basis vectors in generator coordinates
    P = [[Fraction(0)] * d for _ in range(d)]
    for col, v in enumerate(halves):
        for g, c in v.terms.items():
            P[local[g]][col] = c
    P_inv = linalg.inverse(P)
    c = params.coupling

    def J(x: AlgebraElement) -> AlgebraElement:
        return m.J(i, x)

    for t, g in enumerate(gens):
        coords = [P_inv[r][t] for r in range(d)]
        u = m.algebra.zero()
        w = m.algebra.zero()
        for r, v in enumerate(halves):
            if coords[r]:
                if r < h:
                    u = u + v * coords[r]
                else:
                    w = w + v * coords[r]
        image = u * params.mu1 + w * params.mu2
        if c:
            image = image + (J(u) - J(w)) * c
        for gg, cc in image.terms.items():
            M[m.m_slot(gg)][slots[t]] = cc


# ============================================================================
# Validation
# ============================================================================


def _element_label(x: AlgebraElement) -> str:
    if len(x.terms) == 1:
        (g, c), = x.terms.items()
        if c == 1:
            return x.algebra.label(g)
    return repr(x)


def validate(spec: MetricSpec, m: MSpace) -> MetricOperator:
    """
    Compile and check a metric spec.

    Raises:
        ShapeMismatch: spec does not fit the decomposition
        NotSelfAdjoint: compiled matrix is not B-symmetric
        NotPositiveDefinite: some leading principal minor is ≤ 0
        NotEquivariant: Λ does not commute with some ad(k), k ∈ k₁
    """
    M = _compile(spec, m)
    gram = linalg.mat_mul(linalg.transpose(M), m.n_gram)
    n = m.dim_n
    for a in range(n):
        for b in range(a + 1, n):
            if gram[a][b] != gram[b][a]:
                raise NotSelfAdjoint(
                    f"B(Λ{m.n_label(a)}, {m.n_label(b)}) != B({m.n_label(a)}, Λ{m.n_label(b)})"
                )
    for k, minor in enumerate(linalg.leading_principal_minors(gram), start=1):
        if minor <= 0:
            raise NotPositiveDefinite(f"Leading principal minor {k} is {minor}")
    for kx in m.k1_basis:
        ad = m.ad_matrix(kx)
        left = linalg.mat_mul(M, ad)
        right = linalg.mat_mul(ad, M)
        for b in range(n):
            if any(left[a][b] != right[a][b] for a in range(n)):
                pair = (_element_label(kx), m.n_label(b))
                raise NotEquivariant(
                    f"Λ does not commute with ad({pair[0]}) on {pair[1]}", pair=pair
                )
    logger.debug(f"{m.flag.diagram}: metric validated (dim n={n})")
    return MetricOperator(
        mspace=m,
        spec=spec,
        matrix=tuple(tuple(r) for r in M),
        gram=tuple(tuple(r) for r in gram),
    )


# ============================================================================
# Constructors
# ============================================================================


def _scaled(rows: Sequence[Sequence[Fraction]], c: Fraction) -> List[List[str]]:
    return [[str(Fraction(c) * x) for x in row] for row in rows]


def metric_spec(
    m: MSpace,
    s_block: Sequence[Sequence[Fraction]],
    summands: Sequence[dict],
) -> MetricSpec:
    """Build a spec from an explicit s_block and per-summand parameter dicts (ids added)."""
    return MetricSpec.model_validate({
        "s_block": [[str(Fraction(x)) for x in row] for row in s_block],
        "summands": [{"id": i, **params} for i, params in enumerate(summands, start=1)],
    })


def standard_spec(m: MSpace, scale: Fraction = Fraction(1)) -> MetricSpec:
    scale = Fraction(scale)
    return MetricSpec.model_validate({
        "s_block": _scaled(m.s_gram, scale),
        "summands": [
            {"id": i, "kind": "scalar", "lambda": str(scale)} for i in range(1, m.s_count + 1)
        ],
    })


def standard_metric(m: MSpace) -> MetricOperator:
    """Λ = Id: the metric induced by B."""
    return validate(standard_spec(m), m)


def diagonal_metric(
    m: MSpace,
    lambdas: Sequence[Fraction],
    s_scale: Fraction = Fraction(1),
    s_block: Optional[Sequence[Sequence[Fraction]]] = None,
) -> MetricOperator:
    """Λ|_s from s_block (default s_scale·B|_s) plus λ_i·Id on each m_i."""
    if len(lambdas) != m.s_count:
        raise ShapeMismatch(f"Expected {m.s_count} lambdas, got {len(lambdas)}")
    block = s_block if s_block is not None else [
        [Fraction(s_scale) * x for x in row] for row in m.s_gram
    ]
    spec = metric_spec(m, block, [{"kind": "scalar", "lambda": str(Fraction(v))} for v in lambdas])
    return validate(spec, m)


def fibration_metric(m: MSpace, a: Fraction, b: Fraction) -> MetricOperator:
    """g_{a,b} = a·B|_s + b·B|_m."""
    return diagonal_metric(m, [Fraction(b)] * m.s_count, s_scale=Fraction(a))
