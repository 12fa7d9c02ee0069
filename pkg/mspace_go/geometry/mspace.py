"""
M-spaces G/K₁ and the Ad(K₁)-structure of their tangent space.

    g = k₁ ⊕ n,    n = s ⊕ m_1 ⊕ … ⊕ m_s,    k = s ⊕ k₁

s is spanned by iH_{Λ_j} for painted j, a₁ by the unpainted simple coroots,
k₁ by a₁ and {A_φ, B_φ : φ ∈ R_K⁺}. Each m_i is either Ad(K₁)-irreducible or
splits into two equivalent halves n₁ ⊕ n₂ exchanged by ad(iH_{Λ_j}).

Two verdicts on splitting are kept apart:

* the lowest/highest-root criterion (``is_reducible``), which tests
  α_low|a₁ = −α_high|a₁ and so detects self-duality of the summand;
* the orbit oracle (``orbit_irreducibility_oracle``), which looks for a proper
  U(k₁)-orbit.

They differ on self-dual summands of quaternionic type. The decomposition used
by metrics and checks is the one the orbit construction actually certifies;
every disagreement is recorded as a ReducibilityFinding.
"""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger

from mspace_go.errors import NotReducible, OutOfSubspace
from mspace_go.geometry.flag import FlagManifold, lowest_highest, summand_basis
from mspace_go.lie import linalg
from mspace_go.lie.chevalley import (
    AlgebraElement,
    CompactLieAlgebra,
    Generator,
    GeneratorKind,
    bracket,
    killing_form,
    span_closure,
)
from mspace_go.lie.linalg import SpanReducer
from mspace_go.lie.rootsys import Root

Weight = Tuple[int, ...]


@dataclass(frozen=True)
class SummandSplit:
    """
    Ad(K₁)-structure of one summand m_i.

    For a split summand n1_basis/n2_basis are fully reduced echelon bases
    (coefficient 1 on their pivot generator), seeds record the lowest and
    highest roots that generated them, and j is the painted node whose
    ad(iH_{Λ_j}) maps n₁ onto n₂.
    """
    summand_index: int
    status: str
    n1_basis: Tuple[AlgebraElement, ...] = ()
    n2_basis: Tuple[AlgebraElement, ...] = ()
    seed_low: Optional[Root] = None
    seed_high: Optional[Root] = None
    j: Optional[int] = None

    @property
    def is_split(self) -> bool:
        return self.status == "split"

    @property
    def split_dims(self) -> Optional[Tuple[int, int]]:
        if not self.is_split:
            return None
        return len(self.n1_basis), len(self.n2_basis)


@dataclass(frozen=True)
class ReducibilityFinding:
    """The root criterion and the orbit oracle disagree on a summand."""
    summand_index: int
    criterion_reducible: bool
    oracle_irreducible: bool
    kind: str

    def describe(self) -> str:
        return (
            f"m_{self.summand_index}: root criterion says "
            f"{'reducible' if self.criterion_reducible else 'irreducible'}, orbit oracle says "
            f"{'irreducible' if self.oracle_irreducible else 'reducible'} ({self.kind})"
        )


@dataclass(frozen=True)
class Piece:
    """An Ad(K₁)-invariant block of n with an echelon basis."""
    label: str
    summand_index: int
    basis: Tuple[AlgebraElement, ...]
    weights: Tuple[Weight, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)


class MSpace:
    """
    Tangent data of G/K₁ for a flag manifold.

    Attributes:
        flag: the underlying flag manifold G/K
        s_basis: iH_{Λ_j} for painted j (coroot normalisation α_i(H_{Λ_j}) = δ_ij)
        a1_basis: iH_{α_k∨} for unpainted k
        k1_basis: a1_basis then A_φ, B_φ for φ ∈ R_K⁺
        n_basis: s_basis then the generators of m_1, …, m_s
    """

    def __init__(self, flag: FlagManifold):
        self.flag = flag
        self.algebra: CompactLieAlgebra = flag.algebra
        rs = flag.rs
        algebra = self.algebra
        self.painted = list(flag.diagram.painted)
        self.unpainted = list(flag.diagram.unpainted)

        self.s_basis: List[AlgebraElement] = [
            algebra.cartan_element(rs.fundamental_coweight(j)) for j in self.painted
        ]
        self.a1_basis: List[AlgebraElement] = [algebra.ih(k) for k in self.unpainted]
        self.k1_basis: List[AlgebraElement] = list(self.a1_basis)
        for phi in flag.R_K_plus:
            self.k1_basis.append(algebra.A(phi))
            self.k1_basis.append(algebra.B(phi))

        self.m_generators: List[List[Generator]] = [
            summand_basis(flag, i) for i in range(1, flag.s_count + 1)
        ]
        self.n_basis: List[AlgebraElement] = list(self.s_basis)
        for gens in self.m_generators:
            self.n_basis.extend(algebra.gen(g) for g in gens)
        self._m_slot: Dict[Generator, int] = {}
        for gens in self.m_generators:
            for g in gens:
                self._m_slot[g] = len(self.s_basis) + len(self._m_slot)
        self._k_generators = {
            Generator(GeneratorKind.A, rs.positive_index(phi)) for phi in flag.R_K_plus
        } | {Generator(GeneratorKind.B, rs.positive_index(phi)) for phi in flag.R_K_plus}

        # C_K[j][k] = ⟨φ_j, φ_k∨⟩ over unpainted nodes, for splitting a = s ⊕ a₁
        idx = [k - 1 for k in self.unpainted]
        self._cartan_k_inverse = (
            linalg.inverse([[Fraction(rs.cartan[j][k]) for k in idx] for j in idx]) if idx else []
        )
        self._splits: Dict[int, SummandSplit] = {}
        self._oracle: Dict[int, bool] = {}
        self._n_gram: Optional[List[List[Fraction]]] = None
        self.s_orthogonal: List[AlgebraElement] = self._gram_schmidt(self.s_basis)
        logger.info(
            f"M-space {flag.diagram}: dim n={len(self.n_basis)}, dim s={len(self.s_basis)}, "
            f"dim k1={len(self.k1_basis)}"
        )

    # ---- bookkeeping -------------------------------------------------------------

    @property
    def s_count(self) -> int:
        return self.flag.s_count

    @property
    def dim_n(self) -> int:
        return len(self.n_basis)

    @property
    def dim_s(self) -> int:
        return len(self.s_basis)

    def _check_summand(self, i: int) -> None:
        self.flag.check_summand(i)

    def summand_elements(self, i: int) -> List[AlgebraElement]:
        self._check_summand(i)
        return [self.algebra.gen(g) for g in self.m_generators[i - 1]]

    def summand_dim(self, i: int) -> int:
        self._check_summand(i)
        return len(self.m_generators[i - 1])

    @staticmethod
    def _gram_schmidt(vectors: Sequence[AlgebraElement]) -> List[AlgebraElement]:
        out: List[AlgebraElement] = []
        for v in vectors:
            w = v
            for u in out:
                w = w - u * (killing_form(v, u) / killing_form(u, u))
            out.append(w)
        return out

    # ---- projections -------------------------------------------------------------

    def split_cartan(self, h: Sequence[Fraction]) -> Tuple[Tuple[Fraction, ...], Tuple[Fraction, ...]]:
        """Split h (coroot coordinates) as h_s + h_a₁ with h_s ∈ s, h_a₁ ∈ a₁."""
        rs = self.flag.rs
        if not self.unpainted:
            return tuple(h), tuple(Fraction(0) for _ in h)
        rhs = [rs.evaluate(rs.simple_root(k), h) for k in self.unpainted]
        c = linalg.mat_vec(self._cartan_k_inverse, rhs)
        h_a1 = [Fraction(0)] * rs.rank
        for k, ck in zip(self.unpainted, c):
            h_a1[k - 1] = ck
        h_s = tuple(Fraction(a) - b for a, b in zip(h, h_a1))
        return h_s, tuple(h_a1)

    def project_to_n(self, x: AlgebraElement) -> AlgebraElement:
        """B-orthogonal projection g → n."""
        algebra = self.algebra
        h_s, _ = self.split_cartan(algebra.cartan_part(x))
        terms = {
            g: c for g, c in x.terms.items()
            if g.kind != GeneratorKind.IH and g not in self._k_generators
        }
        for j, c in enumerate(h_s):
            if c:
                terms[Generator(GeneratorKind.IH, j)] = c
        return algebra.element(terms)

    def project_to_k1(self, x: AlgebraElement) -> AlgebraElement:
        return x - self.project_to_n(x)

    def in_n(self, x: AlgebraElement) -> bool:
        return not self.project_to_k1(x)

    def in_k1(self, x: AlgebraElement) -> bool:
        return not self.project_to_n(x)

    def s_coordinates(self, x: AlgebraElement) -> List[Fraction]:
        """Coordinates of the s-part of x over s_basis: t_j = α_j(h_s)."""
        rs = self.flag.rs
        h_s, _ = self.split_cartan(self.algebra.cartan_part(x))
        return [rs.evaluate(rs.simple_root(j), h_s) for j in self.painted]

    def n_vector(self, x: AlgebraElement) -> List[Fraction]:
        """
        Coordinates of x ∈ n over n_basis.

        Raises:
            OutOfSubspace: x has a k₁ component
        """
        if not self.in_n(x):
            raise OutOfSubspace(f"{x!r} is not in n")
        v = self.s_coordinates(x) + [Fraction(0)] * (self.dim_n - self.dim_s)
        for g, c in x.terms.items():
            if g.kind != GeneratorKind.IH:
                v[self._m_slot[g]] = c
        return v

    def from_n_vector(self, v: Sequence[Fraction]) -> AlgebraElement:
        out = self.algebra.zero()
        for c, b in zip(v, self.n_basis):
            if c:
                out = out + b * c
        return out

    def m_slot(self, g: Generator) -> int:
        """Position of an m generator within n_basis."""
        return self._m_slot[g]

    def n_label(self, b: int) -> str:
        if b < self.dim_s:
            return f"iHΛ{self.painted[b]}"
        x = self.n_basis[b]
        (g, _), = x.terms.items()
        return self.algebra.label(g)

    @property
    def n_gram(self) -> List[List[Fraction]]:
        """B(e_a, e_b) over n_basis (cached)."""
        if self._n_gram is None:
            self._n_gram = [
                [killing_form(u, v) for v in self.n_basis] for u in self.n_basis
            ]
        return self._n_gram

    @property
    def s_gram(self) -> List[List[Fraction]]:
        d = self.dim_s
        return [row[:d] for row in self.n_gram[:d]]

    def ad_matrix(self, k: AlgebraElement) -> List[List[Fraction]]:
        """ad(k) restricted to n, in n coordinates (column b is the image of n_basis[b])."""
        columns = [self.n_vector(self.project_to_n(bracket(k, x))) for x in self.n_basis]
        return linalg.transpose(columns)

    # ---- restrictions to a₁ and s ------------------------------------------------

    def restrict_a1(self, alpha: Sequence[int]) -> Weight:
        """α|a₁ as the tuple (⟨α, α_k∨⟩) over unpainted k."""
        rs = self.flag.rs
        return tuple(rs.cartan_pairing(alpha, k - 1) for k in self.unpainted)

    def restrict_s(self, alpha: Sequence[int]) -> Tuple[Fraction, ...]:
        """α(iH_{Λ_j}) for painted j."""
        rs = self.flag.rs
        return tuple(
            rs.evaluate(alpha, rs.fundamental_coweight(j)) for j in self.painted
        )

    # ---- splitting ---------------------------------------------------------------

    def equivalence_nodes(self, i: int) -> List[int]:
        """Painted j with non-zero coefficient in ξ_i (each ad(iH_{Λ_j}) maps n₁ onto n₂)."""
        xi = self.flag.check_summand(i)
        return [j for j, c in zip(self.painted, xi) if c != 0]

    def J(self, i: int, x: AlgebraElement) -> AlgebraElement:
        """ad(iH_{Λ_j}) x for the smallest admissible j of summand i."""
        j = self.equivalence_nodes(i)[0]
        return bracket(self.s_basis[self.painted.index(j)], x)

    def _orbit(self, seeds: Sequence[AlgebraElement]) -> List[AlgebraElement]:
        return span_closure(seeds, self.k1_basis)

    def _split_from_seeds(self, i: int) -> SummandSplit:
        algebra = self.algebra
        d = self.summand_dim(i)
        if d == 2:
            alpha = self.flag.fiber(i)[0]
            return SummandSplit(
                summand_index=i,
                status="split",
                n1_basis=(algebra.A(alpha),),
                n2_basis=(algebra.B(alpha),),
                seed_low=alpha,
                seed_high=alpha,
                j=self.equivalence_nodes(i)[0],
            )
        low, high = lowest_highest(self.flag, i)
        # A_{−β} = −A_β
        n1 = self._orbit([algebra.A(low) + algebra.A(self.flag.rs.negative(high))])
        n2 = self._orbit([algebra.A(low) - algebra.A(self.flag.rs.negative(high))])
        if len(n1) != d // 2 or len(n2) != d // 2:
            raise NotReducible(
                f"m_{i}: seed orbits have dims {len(n1)}, {len(n2)}, not {d // 2}"
            )
        for u in n1:
            for w in n2:
                if killing_form(u, w) != 0:
                    raise NotReducible(f"m_{i}: halves are not B-orthogonal")
        reducer = SpanReducer()
        for v in n1 + n2:
            reducer.add(v.sparse())
        if len(reducer) != d:
            raise NotReducible(f"m_{i}: halves do not span the summand")
        n2_span = SpanReducer()
        for w in n2:
            n2_span.add(w.sparse())
        for j in self.equivalence_nodes(i):
            h = self.s_basis[self.painted.index(j)]
            image = [bracket(h, u) for u in n1]
            if any(not n2_span.contains(v.sparse()) for v in image):
                raise NotReducible(f"m_{i}: ad(iH_Λ{j}) does not map n1 onto n2")
        for u in n1:
            if len(self._orbit([u])) != len(n1):
                raise NotReducible(f"m_{i}: n1 has a proper invariant subspace")
        return SummandSplit(
            summand_index=i,
            status="split",
            n1_basis=tuple(n1),
            n2_basis=tuple(n2),
            seed_low=low,
            seed_high=high,
            j=self.equivalence_nodes(i)[0],
        )

    def effective_split(self, i: int) -> SummandSplit:
        """The decomposition of m_i certified by an actual split (cached)."""
        self._check_summand(i)
        if i not in self._splits:
            try:
                self._splits[i] = self._split_from_seeds(i)
            except NotReducible as e:
                logger.debug(f"{self.flag.diagram}: {e}")
                self._splits[i] = SummandSplit(summand_index=i, status="irreducible")
        return self._splits[i]

    def is_effectively_split(self, i: int) -> bool:
        return self.effective_split(i).is_split

    def representation_type(self, i: int) -> str:
        """'real' (split), 'quaternionic' (self-dual, irreducible) or 'complex'."""
        if self.is_effectively_split(i):
            return "real"
        return "quaternionic" if is_reducible(self, i) else "complex"

    # ---- pieces and equivalences -------------------------------------------------

    def pieces(self) -> List[Piece]:
        """s, then each summand or its two halves, with complexified a₁-weights."""
        zero = tuple(0 for _ in self.unpainted)
        out = [Piece("s", 0, tuple(self.s_basis), tuple(zero for _ in self.s_basis))]
        for i in range(1, self.s_count + 1):
            fiber = self.flag.fiber(i)
            half = tuple(sorted(self.restrict_a1(a) for a in fiber))
            split = self.effective_split(i)
            if split.is_split:
                out.append(Piece(f"n1^{i}", i, split.n1_basis, half))
                out.append(Piece(f"n2^{i}", i, split.n2_basis, half))
            else:
                both = tuple(sorted(half + tuple(tuple(-c for c in w) for w in half)))
                out.append(Piece(f"m{i}", i, tuple(self.summand_elements(i)), both))
        return out


def build_mspace(f: FlagManifold) -> MSpace:
    return MSpace(f)


# ============================================================================
# Reducibility
# ============================================================================


def is_reducible(m: MSpace, i: int) -> bool:
    """
    Lowest/highest-root criterion: α|a₁ = −β|a₁ and α(h) = β(h) on s.

    Raises:
        IndexOutOfRange: bad summand index
    """
    m._check_summand(i)
    low, high = lowest_highest(m.flag, i)
    on_a1 = m.restrict_a1(low) == tuple(-c for c in m.restrict_a1(high))
    on_s = m.restrict_s(low) == m.restrict_s(high)
    return on_a1 and on_s


def split_summand(m: MSpace, i: int) -> SummandSplit:
    """
    n₁ = U(k₁)(A_α + A_{−β}), n₂ = U(k₁)(A_α − A_{−β}); (ℝA_α, ℝB_α) when dim m_i = 2.

    Raises:
        NotReducible: the criterion fails, or the seeds do not produce two
            orthogonal, equivalent, irreducible halves
    """
    if not is_reducible(m, i):
        raise NotReducible(f"m_{i} fails the lowest/highest-root criterion")
    split = m.effective_split(i)
    if not split.is_split:
        raise NotReducible(
            f"m_{i} passes the root criterion but its seed orbits are the whole summand"
        )
    return split


def orbit_irreducibility_oracle(m: MSpace, i: int) -> bool:
    """
    True iff no tested seed generates a proper U(k₁)-invariant subspace of m_i.

    Seeds: every generator of m_i and A_α ± A_β, A_α ± B_β for the lowest and
    highest roots α, β. A self-dual summand of real type always has a proper
    orbit through A_α ± A_β, so the seed set decides reducibility.
    """
    m._check_summand(i)
    if i in m._oracle:
        return m._oracle[i]
    algebra = m.algebra
    d = m.summand_dim(i)
    low, high = lowest_highest(m.flag, i)
    seeds = m.summand_elements(i)
    if low != high:
        a = algebra.A(low)
        seeds += [
            a + algebra.A(high), a - algebra.A(high), a + algebra.B(high), a - algebra.B(high),
        ]
    result = True
    for seed in seeds:
        if len(m._orbit([seed])) < d:
            result = False
            break
    m._oracle[i] = result
    return result


def reducibility_findings(m: MSpace) -> List[ReducibilityFinding]:
    """Every summand where the root criterion and the orbit oracle disagree."""
    findings = []
    for i in range(1, m.s_count + 1):
        criterion = is_reducible(m, i)
        irreducible = orbit_irreducibility_oracle(m, i)
        if criterion == (not irreducible):
            continue
        kind = "quaternionic" if criterion else "unexpected"
        finding = ReducibilityFinding(i, criterion, irreducible, kind)
        logger.warning(f"{m.flag.diagram}: {finding.describe()}")
        findings.append(finding)
    return findings


# ============================================================================
# Per-fiber instance checks
# ============================================================================


def pp3_check(m: MSpace, i: int) -> bool:
    """
    If some α, γ ∈ R_i⁺ have α|a₁ = −γ|a₁ (a pair of R_i with equal a₁-restriction
    and opposite s-values), the lowest/highest pair must satisfy the criterion.
    """
    fiber = m.flag.fiber(i)
    restr = {a: m.restrict_a1(a) for a in fiber}
    hypothesis = any(
        restr[a] == tuple(-c for c in restr[g]) for a in fiber for g in fiber
    )
    return (not hypothesis) or is_reducible(m, i)


def pp4_check(m: MSpace, i: int) -> bool:
    """When the criterion holds, every α ∈ R_i⁺ has a partner β ∈ R_i⁺ with α|a₁ = −β|a₁."""
    if not is_reducible(m, i):
        return True
    fiber = m.flag.fiber(i)
    restr = {a: m.restrict_a1(a) for a in fiber}
    return all(
        any(restr[a] == tuple(-c for c in restr[b]) for b in fiber) for a in fiber
    )


def cross_summand_couplings(m: MSpace) -> List[Tuple[str, str]]:
    """
    Pairs of pieces from different blocks that are equivalent Ad(K₁)-modules.

    Real representations of the connected group K₁ are equivalent iff their
    complexifications have the same a₁-weight multiset.
    """
    pieces = m.pieces()
    pairs = []
    for a in range(len(pieces)):
        for b in range(a + 1, len(pieces)):
            p, q = pieces[a], pieces[b]
            if p.summand_index == q.summand_index:
                continue
            if p.dim == q.dim and Counter(p.weights) == Counter(q.weights):
                pairs.append((p.label, q.label))
    if pairs:
        logger.warning(f"{m.flag.diagram}: {len(pairs)} cross-block Ad(K1)-equivalences")
    return pairs


def equivariant_map_dimension(m: MSpace, p: Piece, q: Piece) -> int:
    """
    dim Hom_{k₁}(P, Q) by exact linear solve over T (dim Q × dim P).

    Both bases are brought to reduced echelon form, so coordinates of a vector
    of the piece are its entries at the pivots.
    """
    def echelon(piece: Piece) -> Tuple[List[AlgebraElement], List[int]]:
        reducer = SpanReducer()
        for v in piece.basis:
            reducer.add(v.sparse())
        rows = reducer.basis()
        return [m.algebra.from_sparse(r) for r in rows], [min(r) for r in rows]

    (pb, pp), (qb, qp) = echelon(p), echelon(q)

    def coords(v: AlgebraElement, piv: List[int]) -> List[Fraction]:
        s = v.sparse()
        return [s.get(k, Fraction(0)) for k in piv]

    dp, dq = len(pb), len(qb)
    rows: List[List[Fraction]] = []
    for k in m.k1_basis:
        M = [coords(bracket(k, e), pp) for e in pb]  # M[b] = coords of ad k e_b
        N = [coords(bracket(k, f), qp) for f in qb]
        # (T M)[a][b] − (N T)[a][b] = 0, unknown T[a][c] at a*dp + c
        for a in range(dq):
            for b in range(dp):
                row = [Fraction(0)] * (dq * dp)
                for c in range(dp):
                    row[a * dp + c] += M[b][c]
                for c in range(dq):
                    row[c * dp + b] -= N[c][a]
                if any(row):
                    rows.append(row)
    return dq * dp - linalg.rank(rows, dq * dp)
