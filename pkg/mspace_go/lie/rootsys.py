"""
Root systems of the simple Lie algebras A_l–G₂ in simple-root coordinates.

Roots are integer tuples over the simple roots Π = (α_1, …, α_l) in Bourbaki
numbering. Inner products are exact: ``gram`` is (α_i, α_j) with long roots of
squared length 2, and ``killing_scale·gram`` is the pairing dual to the
Killing form.

Enumeration extends positive roots one simple root at a time using root
strings: for β ∈ R⁺ and α_i, β + α_i ∈ R iff q > 0 where q = p − ⟨β, α_i∨⟩
and p counts the steps β − α_i, β − 2α_i, … that stay in R.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, FrozenSet, List, Sequence, Tuple

from loguru import logger

from mspace_go.errors import IndexOutOfRange, NotARoot, ProportionalRoots
from mspace_go.lie import linalg
from mspace_go.models.algebra import RootSystemType

Root = Tuple[int, ...]
CartanVector = Tuple[Fraction, ...]

# Classical root counts |R| per type.
_ROOT_COUNT = {
    "A": lambda l: l * (l + 1),
    "B": lambda l: 2 * l * l,
    "C": lambda l: 2 * l * l,
    "D": lambda l: 2 * l * (l - 1),
    "E": lambda l: {6: 72, 7: 126, 8: 240}[l],
    "F": lambda l: 48,
    "G": lambda l: 12,
}


def expected_root_count(t: RootSystemType) -> int:
    return _ROOT_COUNT[t.family](t.rank)


# ============================================================================
# Dynkin data
# ============================================================================


def _diagram(t: RootSystemType) -> Tuple[List[Fraction], List[Tuple[int, int]]]:
    """Squared lengths and edges (0-based) of the Dynkin diagram."""
    l = t.rank
    two, one = Fraction(2), Fraction(1)
    chain = [(i, i + 1) for i in range(l - 1)]
    if t.family == "A":
        return [two] * l, chain
    if t.family == "B":
        return [two] * (l - 1) + [one], chain
    if t.family == "C":
        return [one] * (l - 1) + [two], chain
    if t.family == "D":
        return [two] * l, [(i, i + 1) for i in range(l - 2)] + [(l - 3, l - 1)]
    if t.family == "E":
        edges = [(0, 2)] + [(i, i + 1) for i in range(2, l - 1)] + [(1, 3)]
        return [two] * l, edges
    if t.family == "F":
        return [two, two, one, one], chain
    # G2: α_1 short
    return [Fraction(2, 3), two], chain


def _gram(t: RootSystemType) -> List[List[Fraction]]:
    lengths, edges = _diagram(t)
    l = t.rank
    gram = [[Fraction(0)] * l for _ in range(l)]
    for i in range(l):
        gram[i][i] = lengths[i]
    for i, j in edges:
        gram[i][j] = gram[j][i] = -max(lengths[i], lengths[j]) / 2
    return gram


# ============================================================================
# RootSystem
# ============================================================================


@dataclass(frozen=True)
class RootSystem:
    """
    A reduced root system with exact inner products.

    Attributes:
        type: the simple type
        roots: all roots
        positive_roots: R⁺ ordered by height, then coefficients descending
        cartan: C[i][j] = ⟨α_i, α_j∨⟩
        gram: (α_i, α_j), long roots of squared length 2
        killing_scale: factor with (·,·)_B = killing_scale · gram
    """
    type: RootSystemType
    roots: FrozenSet[Root]
    positive_roots: Tuple[Root, ...]
    cartan: Tuple[Tuple[int, ...], ...]
    gram: Tuple[Tuple[Fraction, ...], ...]
    killing_scale: Fraction
    _cartan_inverse: Tuple[Tuple[Fraction, ...], ...] = field(repr=False, compare=False)
    _positive_index: Dict[Root, int] = field(repr=False, compare=False, hash=False)

    @property
    def rank(self) -> int:
        return self.type.rank

    def __hash__(self) -> int:
        return hash(self.type)

    # ---- membership and order ------------------------------------------------

    def is_root(self, alpha: Sequence[int]) -> bool:
        return tuple(alpha) in self.roots

    def is_positive(self, alpha: Sequence[int]) -> bool:
        return tuple(alpha) in self._positive_index

    def positive_index(self, alpha: Root) -> int:
        """Position of a positive root in the canonical order."""
        try:
            return self._positive_index[alpha]
        except KeyError:
            raise NotARoot(f"{alpha} is not a positive root of {self.type}") from None

    def require_root(self, alpha: Sequence[int]) -> Root:
        alpha = tuple(alpha)
        if len(alpha) != self.rank or alpha not in self.roots:
            raise NotARoot(f"{alpha} is not a root of {self.type}")
        return alpha

    @staticmethod
    def height(alpha: Sequence[int]) -> int:
        return sum(alpha)

    def simple_root(self, i: int) -> Root:
        """α_i for 1-based i."""
        self._check_index(i)
        return tuple(1 if k == i - 1 else 0 for k in range(self.rank))

    def highest_root(self) -> Root:
        return self.positive_roots[-1]

    # ---- pairings --------------------------------------------------------------

    def gram_pairing(self, u: Sequence, v: Sequence) -> Fraction:
        total = Fraction(0)
        for i, ui in enumerate(u):
            if not ui:
                continue
            row = self.gram[i]
            for j, vj in enumerate(v):
                if vj:
                    total += ui * row[j] * vj
        return total

    def pair_B(self, alpha: Sequence, beta: Sequence) -> Fraction:
        """Killing-dual pairing (α, β)_B on the span of Π."""
        return self.killing_scale * self.gram_pairing(alpha, beta)

    def cartan_pairing(self, beta: Sequence[int], i: int) -> int:
        """⟨β, α_i∨⟩ for 0-based i."""
        return sum(b * self.cartan[k][i] for k, b in enumerate(beta))

    def coroot(self, alpha: Sequence[int]) -> CartanVector:
        """α∨ in coroot coordinates: Σ_i k_i (α_i,α_i)/(α,α) · α_i∨."""
        alpha = self.require_root(alpha)
        norm = self.gram_pairing(alpha, alpha)
        return tuple(Fraction(k) * self.gram[i][i] / norm for i, k in enumerate(alpha))

    def evaluate(self, alpha: Sequence, h: Sequence) -> Fraction:
        """α(h) for h in coroot coordinates: Σ_j h_j ⟨α, α_j∨⟩."""
        total = Fraction(0)
        for j, hj in enumerate(h):
            if hj:
                total += hj * sum(a * self.cartan[k][j] for k, a in enumerate(alpha))
        return total

    # ---- weights ---------------------------------------------------------------

    def _check_index(self, j: int) -> None:
        if not isinstance(j, int) or not 1 <= j <= self.rank:
            raise IndexOutOfRange(f"Index {j} out of range 1..{self.rank} for {self.type}")

    def fundamental_weight(self, j: int) -> CartanVector:
        """Λ_j in simple-root coordinates (row j of C⁻¹)."""
        self._check_index(j)
        return tuple(self._cartan_inverse[j - 1])

    def fundamental_coweight(self, j: int) -> CartanVector:
        """
        h_{Λ_j} in coroot coordinates, normalised by α_i(h_{Λ_j}) = δ_ij.

        This is column j of C⁻¹; it is a positive multiple of the Killing dual
        of Λ_j. For A_1 it is (1/2)·α_1∨.
        """
        self._check_index(j)
        return tuple(row[j - 1] for row in self._cartan_inverse)

    # ---- strings ---------------------------------------------------------------

    def root_string(self, alpha: Sequence[int], beta: Sequence[int]) -> Tuple[int, int]:
        """
        (p, q): β − pα, …, β + qα is the α-string through β.

        Raises:
            NotARoot: α or β outside R
            ProportionalRoots: β = ±α
        """
        alpha = self.require_root(alpha)
        beta = self.require_root(beta)
        neg = tuple(-a for a in alpha)
        if beta == alpha or beta == neg:
            raise ProportionalRoots(f"No string of {alpha} through ±itself")
        p = 0
        while tuple(b - (p + 1) * a for a, b in zip(alpha, beta)) in self.roots:
            p += 1
        q = 0
        while tuple(b + (q + 1) * a for a, b in zip(alpha, beta)) in self.roots:
            q += 1
        return p, q

    def negative(self, alpha: Root) -> Root:
        return tuple(-a for a in alpha)


def _enumerate_positive(cartan: Sequence[Sequence[int]], rank: int) -> List[Root]:
    simple = [tuple(1 if k == i else 0 for k in range(rank)) for i in range(rank)]
    found = set(simple)
    layer = list(simple)
    while layer:
        next_layer = []
        for beta in layer:
            for i in range(rank):
                p = 0
                while True:
                    down = tuple(b - (p + 1) * (1 if k == i else 0) for k, b in enumerate(beta))
                    if down in found:
                        p += 1
                    else:
                        break
                pairing = sum(b * cartan[k][i] for k, b in enumerate(beta))
                if p - pairing > 0:
                    up = tuple(b + (1 if k == i else 0) for k, b in enumerate(beta))
                    if up not in found:
                        found.add(up)
                        next_layer.append(up)
        layer = next_layer
    return sorted(found, key=lambda r: (sum(r), tuple(-c for c in r)))


@lru_cache(maxsize=None)
def build_root_system(t: RootSystemType) -> RootSystem:
    """
    Build the full root system of a simple type.

    killing_scale follows from B(α_1∨, α_1∨) = Σ_{γ∈R} ⟨γ, α_1∨⟩² and
    (α,α)_B = 4 / B(α∨, α∨); the chevalley module cross-checks it by trace.
    """
    gram = _gram(t)
    l = t.rank
    cartan = tuple(
        tuple(int(2 * gram[i][j] / gram[j][j]) for j in range(l)) for i in range(l)
    )
    positive = _enumerate_positive(cartan, l)
    roots = frozenset(positive) | frozenset(tuple(-c for c in r) for r in positive)

    expected = expected_root_count(t)
    if len(roots) != expected:
        raise AssertionError(f"{t}: enumerated {len(roots)} roots, expected {expected}")

    coroot_norm = sum(
        sum(g * cartan[k][0] for k, g in enumerate(gamma)) ** 2 for gamma in roots
    )
    killing_scale = Fraction(4, coroot_norm) / gram[0][0]

    cartan_inverse = linalg.inverse([[Fraction(c) for c in row] for row in cartan])
    logger.debug(f"{t}: {len(roots)} roots, killing_scale={killing_scale}")
    return RootSystem(
        type=t,
        roots=roots,
        positive_roots=tuple(positive),
        cartan=cartan,
        gram=tuple(tuple(row) for row in gram),
        killing_scale=killing_scale,
        _cartan_inverse=tuple(tuple(row) for row in cartan_inverse),
        _positive_index={r: i for i, r in enumerate(positive)},
    )


def root_string(rs: RootSystem, alpha: Sequence[int], beta: Sequence[int]) -> Tuple[int, int]:
    return rs.root_string(alpha, beta)


def pair_B(rs: RootSystem, alpha: Sequence, beta: Sequence) -> Fraction:
    return rs.pair_B(alpha, beta)


def fundamental_coweight(rs: RootSystem, j: int) -> CartanVector:
    return rs.fundamental_coweight(j)
