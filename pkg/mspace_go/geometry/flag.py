"""
Generalized flag manifolds G/K from painted Dynkin diagrams.

Unpainted simple roots generate R_K; R_M = R ∖ R_K. The restriction κ of a
root to the centre t of k is the slice of its coefficients at the painted
nodes, so t-roots are integer vectors of length |Π_M|. Each positive t-root ξ
indexes an isotropy summand m_ξ spanned by {A_α, B_α : α ∈ R_M⁺, κ(α) = ξ}.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

import networkx as nx
from loguru import logger

from mspace_go.errors import EmptyPainted, IndexOutOfRange, NotATRoot
from mspace_go.lie.chevalley import CompactLieAlgebra, Generator, GeneratorKind, get_algebra
from mspace_go.lie.rootsys import Root, RootSystem
from mspace_go.models.algebra import PaintedDiagram

TRoot = Tuple[int, ...]


def _troot_key(xi: TRoot) -> Tuple[int, Tuple[int, ...]]:
    return sum(xi), tuple(-c for c in xi)


@dataclass(frozen=True)
class FlagManifold:
    """
    Root data of G/K for a painted diagram.

    Attributes:
        diagram: the painted diagram
        algebra: compact real form of g
        R_K, R_M: roots with zero / non-zero painted coefficients
        R_K_plus, R_M_plus: their positive parts in canonical order
        troots_plus: positive t-roots ξ_1..ξ_s ordered by t-height, then descending
        fibers: ξ → R_ξ⁺ (roots of R_M⁺ restricting to ξ), canonical order
    """
    diagram: PaintedDiagram
    algebra: CompactLieAlgebra = field(repr=False, compare=False)
    R_K: Tuple[Root, ...]
    R_M: Tuple[Root, ...]
    R_K_plus: Tuple[Root, ...]
    R_M_plus: Tuple[Root, ...]
    troots_plus: Tuple[TRoot, ...]
    fibers: Dict[TRoot, Tuple[Root, ...]] = field(compare=False, hash=False)

    @property
    def rs(self) -> RootSystem:
        return self.algebra.rs

    @property
    def s_count(self) -> int:
        return len(self.troots_plus)

    @property
    def painted_indices(self) -> Tuple[int, ...]:
        """0-based painted node positions."""
        return tuple(p - 1 for p in self.diagram.painted)

    @property
    def troots(self) -> Tuple[TRoot, ...]:
        """All t-roots: positive ones, then their negatives."""
        return self.troots_plus + tuple(tuple(-c for c in xi) for xi in self.troots_plus)

    def kappa(self, alpha: Sequence[int]) -> TRoot:
        return tuple(alpha[p] for p in self.painted_indices)

    def is_troot(self, xi: Sequence[int]) -> bool:
        xi = tuple(xi)
        return xi in self.fibers or tuple(-c for c in xi) in self.fibers

    def check_summand(self, i: int) -> TRoot:
        """ξ_i for a 1-based summand index."""
        if not isinstance(i, int) or not 1 <= i <= self.s_count:
            raise IndexOutOfRange(f"Summand {i} out of range 1..{self.s_count} for {self.diagram}")
        return self.troots_plus[i - 1]

    def fiber(self, i: int) -> Tuple[Root, ...]:
        return self.fibers[self.check_summand(i)]

    def summand_of_root(self, alpha: Sequence[int]) -> int:
        """1-based summand index of a root of R_M (either sign)."""
        xi = self.kappa(alpha)
        if sum(xi) < 0:
            xi = tuple(-c for c in xi)
        try:
            return self.troots_plus.index(xi) + 1
        except ValueError:
            raise NotATRoot(f"{tuple(alpha)} restricts to {xi}, not a t-root of {self.diagram}") from None


def build_flag(d: PaintedDiagram) -> FlagManifold:
    """
    Split R = R_K ⊔ R_M and group R_M⁺ into κ-fibers.

    Raises:
        EmptyPainted: no painted node
    """
    if not d.painted:
        raise EmptyPainted("Painted set is empty (K = G, no flag manifold)")
    algebra = get_algebra(d.algebra)
    rs = algebra.rs
    painted = [p - 1 for p in d.painted]

    def in_k(alpha: Root) -> bool:
        return all(alpha[p] == 0 for p in painted)

    ordered = list(rs.positive_roots) + [rs.negative(r) for r in rs.positive_roots]
    R_K = tuple(r for r in ordered if in_k(r))
    R_M = tuple(r for r in ordered if not in_k(r))
    R_K_plus = tuple(r for r in rs.positive_roots if in_k(r))
    R_M_plus = tuple(r for r in rs.positive_roots if not in_k(r))

    fibers: Dict[TRoot, List[Root]] = {}
    for alpha in R_M_plus:
        fibers.setdefault(tuple(alpha[p] for p in painted), []).append(alpha)
    troots_plus = tuple(sorted(fibers, key=_troot_key))

    flag = FlagManifold(
        diagram=d,
        algebra=algebra,
        R_K=R_K,
        R_M=R_M,
        R_K_plus=R_K_plus,
        R_M_plus=R_M_plus,
        troots_plus=troots_plus,
        fibers={xi: tuple(fibers[xi]) for xi in troots_plus},
    )
    logger.info(
        f"Flag {d}: |R_K|={len(R_K)}, |R_M|={len(R_M)}, s={flag.s_count}"
    )
    return flag


# ============================================================================
# t-root graph
# ============================================================================


@dataclass(frozen=True)
class TRootGraph:
    """Adjacency graph on R_t with its connected components."""
    nodes: Tuple[TRoot, ...]
    edges: Tuple[Tuple[TRoot, TRoot], ...]
    components: Tuple[Tuple[TRoot, ...], ...]

    @property
    def r(self) -> int:
        return len(self.components)

    @property
    def is_connected(self) -> bool:
        return self.r == 1


def _proportion(xi: TRoot, eta: TRoot):
    """c with η = c·ξ, or None when η is not a multiple of ξ."""
    k = next(i for i, c in enumerate(xi) if c != 0)
    c = Fraction(eta[k], xi[k])
    if all(c * a == b for a, b in zip(xi, eta)):
        return c
    return None


def adjacency(f: FlagManifold, xi: Sequence[int], eta: Sequence[int]) -> bool:
    """
    Adjacency of two distinct t-roots.

    Multiples are adjacent unless one is ±2 times the other; otherwise ξ, η
    are adjacent when ξ + η or ξ − η is a t-root. A t-root is not adjacent
    to itself.

    Raises:
        NotATRoot: ξ or η is not in R_t
    """
    xi, eta = tuple(xi), tuple(eta)
    for v in (xi, eta):
        if not f.is_troot(v):
            raise NotATRoot(f"{v} is not a t-root of {f.diagram}")
    if xi == eta:
        return False
    c = _proportion(xi, eta)
    if c is not None:
        return c not in (2, -2) and 1 / c not in (2, -2)
    plus = tuple(a + b for a, b in zip(xi, eta))
    minus = tuple(a - b for a, b in zip(xi, eta))
    return f.is_troot(plus) or f.is_troot(minus)


def connected_components(f: FlagManifold) -> TRootGraph:
    """Components of the adjacency relation on all of R_t (deterministic order)."""
    nodes = f.troots
    graph = nx.Graph()
    graph.add_nodes_from(nodes)
    edges = []
    for i, xi in enumerate(nodes):
        for eta in nodes[i + 1:]:
            if adjacency(f, xi, eta):
                graph.add_edge(xi, eta)
                edges.append((xi, eta))
    position = {v: i for i, v in enumerate(nodes)}
    components = sorted(
        (tuple(sorted(comp, key=position.__getitem__)) for comp in nx.connected_components(graph)),
        key=lambda comp: position[comp[0]],
    )
    if f.s_count >= 3 and len(components) != 1:
        logger.warning(f"{f.diagram}: s={f.s_count} but R_t has {len(components)} components")
    return TRootGraph(nodes=nodes, edges=tuple(edges), components=tuple(components))


# ============================================================================
# Summands
# ============================================================================


def summand_basis(f: FlagManifold, i: int) -> List[Generator]:
    """{A_α, B_α : α ∈ R_i⁺} for the 1-based summand index i."""
    generators = []
    for alpha in f.fiber(i):
        index = f.rs.positive_index(alpha)
        generators.append(Generator(GeneratorKind.A, index))
        generators.append(Generator(GeneratorKind.B, index))
    return generators


def _extremal(f: FlagManifold, i: int, step: int) -> List[Root]:
    roots = f.rs.roots
    found = []
    for alpha in f.fiber(i):
        if all(
            tuple(a + step * g for a, g in zip(alpha, gamma)) not in roots for gamma in f.R_K_plus
        ):
            found.append(alpha)
    return found


def lowest_highest(f: FlagManifold, i: int) -> Tuple[Root, Root]:
    """
    Lowest and highest roots of R_i⁺ relative to R_K⁺.

    The first candidate in canonical order is returned; several candidates
    are reported as a warning.
    """
    lows, highs = _extremal(f, i, -1), _extremal(f, i, +1)
    if len(lows) != 1 or len(highs) != 1:
        logger.warning(
            f"{f.diagram} summand {i}: {len(lows)} lowest and {len(highs)} highest roots"
        )
    return lows[0], highs[0]


def extremal_roots_unique(f: FlagManifold, i: int) -> bool:
    return len(_extremal(f, i, -1)) == 1 and len(_extremal(f, i, +1)) == 1


def t_basis(f: FlagManifold) -> Tuple[TRoot, ...]:
    """Simple t-roots: positive t-roots that are not a sum of two positive t-roots."""
    sums = {
        tuple(a + b for a, b in zip(x, y)) for x in f.troots_plus for y in f.troots_plus
    }
    return tuple(xi for xi in f.troots_plus if xi not in sums)


def invariant_ordering_holds(f: FlagManifold) -> bool:
    """
    Invariant-ordering axioms for R_M⁺ = R⁺ ∖ R_K⁺.

    (i) R_M = R_M⁺ ⊔ −R_M⁺; (ii) α, β ∈ R_M⁺ with α + β ∈ R_M gives
    α + β ∈ R_M⁺; (iii) α ∈ R_K⁺, β ∈ R_M⁺ with α + β ∈ R gives α + β ∈ R_M⁺.
    """
    rs = f.rs
    plus = set(f.R_M_plus)
    minus = {rs.negative(r) for r in f.R_M_plus}
    if plus & minus or plus | minus != set(f.R_M):
        return False
    r_m = set(f.R_M)
    for a in f.R_M_plus:
        for b in f.R_M_plus:
            c = tuple(x + y for x, y in zip(a, b))
            if c in r_m and c not in plus:
                return False
    for a in f.R_K_plus:
        for b in f.R_M_plus:
            c = tuple(x + y for x, y in zip(a, b))
            if c in rs.roots and c not in plus:
                return False
    return True
