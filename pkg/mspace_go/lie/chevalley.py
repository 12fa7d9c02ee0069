"""
Compact real form of a simple Lie algebra in a Chevalley-normalised basis.

Basis: iH_1..iH_l (simple coroots), then A_α, B_α for α ∈ R⁺ in canonical
order, where A_α = e_α − e_{−α} and B_α = i(e_α + e_{−α}) for a Chevalley
basis with [e_α, e_{−α}] = α∨, integral N_{α,β} = ±(p+1) and
N_{−α,−β} = −N_{α,β}. Negative roots rewrite as A_{−γ} = −A_γ, B_{−γ} = B_γ.

Bracket table:

    [iH, A_β] = β(H) B_β            [iH, B_β] = −β(H) A_β
    [A_α, B_α] = 2 iH_{α∨}
    [A_α, A_β] = N_{α,β} A_{α+β} + N_{−α,β} A_{α−β}
    [B_α, B_β] = −N_{α,β} A_{α+β} − N_{α,−β} A_{α−β}
    [A_α, B_β] = N_{α,β} B_{α+β} + N_{α,−β} B_{α−β}

Signs of N come from extraspecial pairs taken in the canonical positive-root
order. The Killing form here is B = −Killing, positive definite on the
compact form.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Mapping, NamedTuple, Optional, Sequence, Tuple

from loguru import logger

from mspace_go.errors import AlgebraMismatch, NonOrthogonalBasis, NotARoot
from mspace_go.lie.linalg import SpanReducer
from mspace_go.lie.rationals import format_rational
from mspace_go.lie.rootsys import Root, RootSystem, build_root_system
from mspace_go.models.algebra import RootSystemType


class GeneratorKind(str, Enum):
    IH = "IH"
    A = "A"
    B = "B"


class Generator(NamedTuple):
    """
    A compact-basis generator.

    index is the 0-based simple-root index for IH and the 0-based position of
    the positive root in canonical order for A and B.
    """
    kind: GeneratorKind
    index: int


# ============================================================================
# Structure constants
# ============================================================================


@dataclass(frozen=True)
class StructureConstants:
    """N_{α,β} for every ordered pair of roots with α + β ∈ R."""
    rs: RootSystem
    table: Mapping[Tuple[Root, Root], int]

    def N(self, alpha: Root, beta: Root) -> int:
        return self.table.get((alpha, beta), 0)

    def to_json(self) -> str:
        """Debug dump of the positive-pair entries."""
        entries = [
            {"alpha": list(a), "beta": list(b), "N": n}
            for (a, b), n in sorted(self.table.items())
            if self.rs.is_positive(a) and self.rs.is_positive(b)
        ]
        return json.dumps(entries, indent=2)


def compute_structure_constants(rs: RootSystem) -> StructureConstants:
    """
    Sign-consistent integral structure constants by the extraspecial-pair method.

    For each non-simple ξ ∈ R⁺ (increasing height) the extraspecial pair
    (α', β') with α' minimal gets N = +(p+1). Every other special pair
    (α, β), α ≺ β, α + β = ξ follows from the four-root identity applied to
    α, β, −α', −β'.
    """
    order = {r: i for i, r in enumerate(rs.positive_roots)}
    roots = rs.roots
    norm = {r: rs.gram_pairing(r, r) for r in roots}
    positive: Dict[Tuple[Root, Root], Fraction] = {}

    def add(x: Root, y: Root) -> Root:
        return tuple(a + b for a, b in zip(x, y))

    def neg(x: Root) -> Root:
        return tuple(-a for a in x)

    def n_pos(x: Root, y: Root) -> Fraction:
        return positive.get((x, y), Fraction(0))

    def n_any(x: Root, y: Root) -> Fraction:
        z = add(x, y)
        if z not in roots:
            return Fraction(0)
        xp, yp = x in order, y in order
        if xp and yp:
            return n_pos(x, y)
        if not xp and not yp:
            return -n_pos(neg(x), neg(y))
        if not xp:
            return -n_any(y, x)
        # x > 0 > y
        if z in order:
            return norm[z] / norm[x] * n_any(y, neg(z))
        return norm[z] / norm[y] * n_any(neg(z), x)

    for xi in rs.positive_roots:
        special = []
        for alpha in rs.positive_roots:
            if order[alpha] >= order[xi]:
                break
            beta = tuple(a - b for a, b in zip(xi, alpha))
            if beta in order and order[alpha] < order[beta]:
                special.append((alpha, beta))
        if not special:
            continue
        a1, b1 = special[0]
        p, _ = rs.root_string(a1, b1)
        n1 = Fraction(p + 1)
        positive[(a1, b1)] = n1
        positive[(b1, a1)] = -n1
        for alpha, beta in special[1:]:
            t1 = n_any(beta, neg(a1)) * n_any(alpha, neg(b1))
            if t1:
                t1 /= norm[tuple(b - a for a, b in zip(a1, beta))]
            t2 = n_any(neg(a1), alpha) * n_any(beta, neg(b1))
            if t2:
                t2 /= norm[tuple(a - c for a, c in zip(alpha, a1))]
            value = norm[xi] / n1 * (t1 + t2)
            positive[(alpha, beta)] = value
            positive[(beta, alpha)] = -value

    table: Dict[Tuple[Root, Root], int] = {}
    for x in roots:
        for y in roots:
            if add(x, y) in roots:
                value = n_any(x, y)
                if value.denominator != 1 or value == 0:
                    raise AssertionError(f"{rs.type}: N{x},{y} = {value} is not a non-zero integer")
                table[(x, y)] = int(value)
    logger.debug(f"{rs.type}: {len(table)} structure constants")
    return StructureConstants(rs=rs, table=table)


# ============================================================================
# Algebra elements
# ============================================================================


class AlgebraElement:
    """
    Sparse exact-rational combination of compact-basis generators.

    Elements are immutable; arithmetic returns new elements. Zero
    coefficients are never stored.
    """

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: "CompactLieAlgebra", terms: Optional[Mapping[Generator, Fraction]] = None):
        self.algebra = algebra
        self.terms: Dict[Generator, Fraction] = {
            g: Fraction(c) for g, c in (terms or {}).items() if c != 0
        }

    def _check(self, other: "AlgebraElement") -> None:
        if not isinstance(other, AlgebraElement):
            raise TypeError(f"Expected AlgebraElement, got {type(other).__name__}")
        if other.algebra is not self.algebra:
            raise AlgebraMismatch(
                f"Elements of {self.algebra.type} and {other.algebra.type} cannot be combined"
            )

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        out = dict(self.terms)
        for g, c in other.terms.items():
            out[g] = out.get(g, Fraction(0)) + c
        return AlgebraElement(self.algebra, out)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.algebra, {g: -c for g, c in self.terms.items()})

    def __mul__(self, scalar) -> "AlgebraElement":
        s = Fraction(scalar)
        return AlgebraElement(self.algebra, {g: s * c for g, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.algebra is other.algebra and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __iter__(self) -> Iterator[Tuple[Generator, Fraction]]:
        return iter(self.ordered_terms())

    def coeff(self, g: Generator) -> Fraction:
        return self.terms.get(g, Fraction(0))

    def ordered_terms(self) -> List[Tuple[Generator, Fraction]]:
        pos = self.algebra.position
        return sorted(self.terms.items(), key=lambda t: pos(t[0]))

    def to_vector(self) -> List[Fraction]:
        v = [Fraction(0)] * self.algebra.dim
        for g, c in self.terms.items():
            v[self.algebra.position(g)] = c
        return v

    def sparse(self) -> Dict[int, Fraction]:
        return {self.algebra.position(g): c for g, c in self.terms.items()}

    def bracket(self, other: "AlgebraElement") -> "AlgebraElement":
        return bracket(self, other)

    def to_json_terms(self) -> List[Dict[str, str]]:
        return [
            {"gen": self.algebra.label(g), "coeff": format_rational(c)}
            for g, c in self.ordered_terms()
        ]

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{format_rational(c)}·{self.algebra.label(g)}" for g, c in self.ordered_terms())


# ============================================================================
# Algebra
# ============================================================================


class CompactLieAlgebra:
    """
    The compact real form g with its generator basis, bracket and Killing form.

    Generator brackets and Killing entries are computed on first use and
    cached.
    """

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.type = rs.type
        self.constants = compute_structure_constants(rs)
        l = rs.rank
        self.generators: List[Generator] = [Generator(GeneratorKind.IH, j) for j in range(l)]
        for r in range(len(rs.positive_roots)):
            self.generators.append(Generator(GeneratorKind.A, r))
            self.generators.append(Generator(GeneratorKind.B, r))
        self._position = {g: i for i, g in enumerate(self.generators)}
        self._bracket_cache: Dict[Tuple[Generator, Generator], Dict[Generator, Fraction]] = {}
        self._killing_cache: Dict[Tuple[Generator, Generator], Fraction] = {}
        logger.info(f"Built compact algebra {self.type} (dim {self.dim})")

    # ---- basis -----------------------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.generators)

    def position(self, g: Generator) -> int:
        return self._position[g]

    def root_of(self, g: Generator) -> Root:
        if g.kind == GeneratorKind.IH:
            raise ValueError(f"{g} is a Cartan generator")
        return self.rs.positive_roots[g.index]

    def label(self, g: Generator) -> str:
        if g.kind == GeneratorKind.IH:
            return f"iH{g.index + 1}"
        return f"{g.kind.value}[{','.join(str(c) for c in self.root_of(g))}]"

    def parse_label(self, text: str) -> Generator:
        """Inverse of label(): 'iH2', 'A[1,1,0]', 'B[0,1]'."""
        text = text.strip()
        if text.startswith("iH"):
            j = int(text[2:])
            if not 1 <= j <= self.rs.rank:
                raise ValueError(f"Unknown generator '{text}'")
            return Generator(GeneratorKind.IH, j - 1)
        if text[:1] in ("A", "B") and text[1:2] == "[" and text.endswith("]"):
            root = tuple(int(c) for c in text[2:-1].split(","))
            return Generator(GeneratorKind(text[0]), self.rs.positive_index(root))
        raise ValueError(f"Unknown generator '{text}'")

    def element(self, terms: Optional[Mapping[Generator, Fraction]] = None) -> AlgebraElement:
        return AlgebraElement(self, terms)

    def zero(self) -> AlgebraElement:
        return AlgebraElement(self)

    def gen(self, g: Generator) -> AlgebraElement:
        return AlgebraElement(self, {g: Fraction(1)})

    def from_vector(self, v: Sequence[Fraction]) -> AlgebraElement:
        return AlgebraElement(self, {self.generators[i]: c for i, c in enumerate(v) if c})

    def from_sparse(self, v: Mapping[int, Fraction]) -> AlgebraElement:
        return AlgebraElement(self, {self.generators[i]: c for i, c in v.items()})

    def ih(self, j: int) -> AlgebraElement:
        """iH_{α_j∨} for 1-based j."""
        return self.gen(Generator(GeneratorKind.IH, j - 1))

    def cartan_element(self, h: Sequence[Fraction]) -> AlgebraElement:
        """i·h for h in coroot coordinates."""
        return AlgebraElement(self, {Generator(GeneratorKind.IH, j): c for j, c in enumerate(h)})

    def _signed(self, kind: GeneratorKind, root: Sequence[int]) -> Tuple[Generator, int]:
        root = tuple(root)
        if self.rs.is_positive(root):
            return Generator(kind, self.rs.positive_index(root)), 1
        neg = self.rs.negative(root)
        if not self.rs.is_positive(neg):
            raise NotARoot(f"{root} is not a root of {self.type}")
        return Generator(kind, self.rs.positive_index(neg)), (-1 if kind == GeneratorKind.A else 1)

    def A(self, root: Sequence[int]) -> AlgebraElement:
        """A_γ for any root γ (A_{−γ} = −A_γ)."""
        g, sign = self._signed(GeneratorKind.A, root)
        return AlgebraElement(self, {g: Fraction(sign)})

    def B(self, root: Sequence[int]) -> AlgebraElement:
        """B_γ for any root γ (B_{−γ} = B_γ)."""
        g, sign = self._signed(GeneratorKind.B, root)
        return AlgebraElement(self, {g: Fraction(sign)})

    def cartan_part(self, x: AlgebraElement) -> Tuple[Fraction, ...]:
        """Coroot coordinates of the iH-component of x."""
        return tuple(x.coeff(Generator(GeneratorKind.IH, j)) for j in range(self.rs.rank))

    # ---- bracket ---------------------------------------------------------------

    def _add_root_term(self, out: Dict[Generator, Fraction], kind: GeneratorKind, root: Root, c) -> None:
        if not c:
            return
        g, sign = self._signed(kind, root)
        out[g] = out.get(g, Fraction(0)) + sign * c

    def generator_bracket(self, g1: Generator, g2: Generator) -> Dict[Generator, Fraction]:
        key = (g1, g2)
        cached = self._bracket_cache.get(key)
        if cached is None:
            cached = {g: c for g, c in self._compute_bracket(g1, g2).items() if c != 0}
            self._bracket_cache[key] = cached
        return cached

    def _compute_bracket(self, g1: Generator, g2: Generator) -> Dict[Generator, Fraction]:
        IH, A, B = GeneratorKind.IH, GeneratorKind.A, GeneratorKind.B
        out: Dict[Generator, Fraction] = {}
        if g1.kind == IH and g2.kind == IH:
            return out
        if g2.kind == IH:
            return {g: -c for g, c in self._compute_bracket(g2, g1).items()}
        rs, N = self.rs, self.constants.N
        if g1.kind == IH:
            beta = self.root_of(g2)
            value = Fraction(rs.cartan_pairing(beta, g1.index))
            if g2.kind == A:
                out[Generator(B, g2.index)] = value
            else:
                out[Generator(A, g2.index)] = -value
            return out

        alpha, beta = self.root_of(g1), self.root_of(g2)
        if g1.index == g2.index:
            if g1.kind == g2.kind:
                return out
            sign = 1 if g1.kind == A else -1
            for j, c in enumerate(rs.coroot(alpha)):
                if c:
                    out[Generator(IH, j)] = 2 * sign * c
            return out

        plus = tuple(a + b for a, b in zip(alpha, beta))
        minus = tuple(a - b for a, b in zip(alpha, beta))
        neg_a, neg_b = rs.negative(alpha), rs.negative(beta)
        if g1.kind == A and g2.kind == A:
            self._add_root_term(out, A, plus, N(alpha, beta))
            self._add_root_term(out, A, minus, N(neg_a, beta))
        elif g1.kind == B and g2.kind == B:
            self._add_root_term(out, A, plus, -N(alpha, beta))
            self._add_root_term(out, A, minus, -N(alpha, neg_b))
        elif g1.kind == A:
            self._add_root_term(out, B, plus, N(alpha, beta))
            self._add_root_term(out, B, minus, N(alpha, neg_b))
        else:
            return {g: -c for g, c in self._compute_bracket(g2, g1).items()}
        return out

    # ---- Killing form ----------------------------------------------------------

    def _trace_form(self, g1: Generator, g2: Generator) -> Fraction:
        """−tr(ad g1 ∘ ad g2) by direct trace over the basis."""
        total = Fraction(0)
        x1, x2 = self.gen(g1), self.gen(g2)
        for g in self.generators:
            inner = bracket(x2, self.gen(g))
            total += bracket(x1, inner).coeff(g)
        return -total

    def killing_entry(self, g1: Generator, g2: Generator) -> Fraction:
        """B(g1, g2), zero unless both are Cartan or g1 = g2."""
        if g1.kind != GeneratorKind.IH or g2.kind != GeneratorKind.IH:
            if g1 != g2:
                return Fraction(0)
        key = (g1, g2) if self.position(g1) <= self.position(g2) else (g2, g1)
        value = self._killing_cache.get(key)
        if value is None:
            value = self._trace_form(*key)
            self._killing_cache[key] = value
        return value

    def killing_gram_full(self) -> List[List[Fraction]]:
        """Every entry by trace, without the structural zero pattern."""
        return [[self._trace_form(g1, g2) for g2 in self.generators] for g1 in self.generators]

    def killing_scale_by_trace(self) -> Fraction:
        """killing_scale re-derived from B(iα_1∨, iα_1∨) = 4 / (α_1, α_1)_B."""
        h = Generator(GeneratorKind.IH, 0)
        return Fraction(4) / (self.killing_entry(h, h) * self.rs.gram[0][0])

    def cartan_killing_closed_form(self, h1: Sequence[Fraction], h2: Sequence[Fraction]) -> Fraction:
        """Σ_{γ∈R} γ(h1) γ(h2) for coroot-coordinate vectors."""
        return sum(
            (self.rs.evaluate(g, h1) * self.rs.evaluate(g, h2) for g in self.rs.roots), Fraction(0)
        )


# ============================================================================
# Module-level operations
# ============================================================================


@lru_cache(maxsize=None)
def get_algebra(t: RootSystemType) -> CompactLieAlgebra:
    """One shared algebra per type."""
    algebra = CompactLieAlgebra(build_root_system(t))
    derived = algebra.killing_scale_by_trace()
    if derived != algebra.rs.killing_scale:
        raise AssertionError(
            f"{t}: killing_scale {algebra.rs.killing_scale} disagrees with trace form {derived}"
        )
    return algebra


def bracket(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Lie bracket [x, y]."""
    x._check(y)
    algebra = x.algebra
    out: Dict[Generator, Fraction] = {}
    for g1, c1 in x.terms.items():
        for g2, c2 in y.terms.items():
            for g, c in algebra.generator_bracket(g1, g2).items():
                out[g] = out.get(g, Fraction(0)) + c1 * c2 * c
    return AlgebraElement(algebra, out)


def killing_form(x: AlgebraElement, y: AlgebraElement) -> Fraction:
    """B(x, y) = −Killing(x, y)."""
    x._check(y)
    algebra = x.algebra
    total = Fraction(0)
    cartan_x = [(g, c) for g, c in x.terms.items() if g.kind == GeneratorKind.IH]
    cartan_y = [(g, c) for g, c in y.terms.items() if g.kind == GeneratorKind.IH]
    for g1, c1 in cartan_x:
        for g2, c2 in cartan_y:
            total += c1 * c2 * algebra.killing_entry(g1, g2)
    for g, c in x.terms.items():
        if g.kind != GeneratorKind.IH:
            d = y.terms.get(g)
            if d:
                total += c * d * algebra.killing_entry(g, g)
    return total


def project(x: AlgebraElement, basis: Sequence[AlgebraElement]) -> AlgebraElement:
    """
    B-orthogonal projection onto span(basis).

    Raises:
        NonOrthogonalBasis: the basis has a zero vector or a non-orthogonal pair
    """
    norms = []
    for i, b in enumerate(basis):
        x._check(b)
        nb = killing_form(b, b)
        if nb == 0:
            raise NonOrthogonalBasis(f"Basis vector {i} is zero")
        for j in range(i):
            if killing_form(basis[j], b) != 0:
                raise NonOrthogonalBasis(f"Basis vectors {j} and {i} are not B-orthogonal")
        norms.append(nb)
    out = x.algebra.zero()
    for b, nb in zip(basis, norms):
        c = killing_form(x, b)
        if c:
            out = out + b * (c / nb)
    return out


def span_closure(seeds: Iterable[AlgebraElement], actors: Sequence[AlgebraElement]) -> List[AlgebraElement]:
    """
    Basis of the smallest ad(actors)-invariant subspace containing the seeds.

    Breadth-first saturation with exact row reduction; each new vector raises
    the dimension, so it stops after at most dim g rounds.
    """
    reducer = SpanReducer()
    queue: List[AlgebraElement] = []
    algebra = None
    for s in seeds:
        algebra = s.algebra
        if reducer.add(s.sparse()):
            queue.append(s)
    while queue:
        v = queue.pop(0)
        for k in actors:
            w = bracket(k, v)
            if w and reducer.add(w.sparse()):
                queue.append(w)
    if algebra is None:
        return []
    return [algebra.from_sparse(row) for row in reducer.basis()]
