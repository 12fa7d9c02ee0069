"""
Probe vectors for g.o. sampling.

Structured probes follow the test vectors of the hand proofs: generators,
s + generator, cross-summand sums with a non-trivial bracket, the
A_α + A_{−β} / B_α − B_{−β} pairs of each summand and the split halves.
Random probes have coordinates drawn uniformly from {−9..9}/{1..9}.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List

from mspace_go.geometry.flag import lowest_highest
from mspace_go.geometry.mspace import MSpace
from mspace_go.lie.chevalley import AlgebraElement


def _unique(vectors: Iterable[AlgebraElement]) -> List[AlgebraElement]:
    seen = set()
    out = []
    for v in vectors:
        if v and v not in seen:
            seen.add(v)
            out.append(v)
    return out


def structured_probes(m: MSpace) -> List[AlgebraElement]:
    algebra = m.algebra
    rs = m.flag.rs
    out: List[AlgebraElement] = list(m.n_basis)
    m_gens = m.n_basis[m.dim_s:]
    for s in m.s_basis:
        out.extend(s + x for x in m_gens)

    fibers = [m.flag.fiber(i) for i in range(1, m.s_count + 1)]
    for i, fi in enumerate(fibers):
        for fj in fibers[i + 1:]:
            for a in fi:
                for b in fj:
                    plus = tuple(x + y for x, y in zip(a, b))
                    minus = tuple(x - y for x, y in zip(a, b))
                    if rs.is_root(plus) or rs.is_root(minus):
                        out.append(algebra.A(a) + algebra.A(b))

    for i in range(1, m.s_count + 1):
        if m.summand_dim(i) > 2:
            low, high = lowest_highest(m.flag, i)
            out.append(algebra.A(low) + algebra.A(rs.negative(high)))
            out.append(algebra.B(low) - algebra.B(rs.negative(high)))

    others = {
        i: algebra.A(lowest_highest(m.flag, i)[0]) for i in range(1, m.s_count + 1)
    }
    for i in range(1, m.s_count + 1):
        split = m.effective_split(i)
        if not split.is_split:
            continue
        for u in split.n1_basis + split.n2_basis:
            out.append(u)
            out.extend(s + u for s in m.s_basis)
            out.extend(u + x for j, x in others.items() if j != i)
    return _unique(out)


def random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def random_probes(m: MSpace, count: int, seed: int) -> List[AlgebraElement]:
    """count non-zero random vectors of n, deterministic in seed."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        v = [random_rational(rng) for _ in range(m.dim_n)]
        if any(v):
            out.append(m.from_n_vector(v))
    return out


def random_k1(m: MSpace, rng: random.Random) -> AlgebraElement:
    out = m.algebra.zero()
    for k in m.k1_basis:
        out = out + k * random_rational(rng)
    return out


@dataclass(frozen=True)
class ProbeSet:
    """Structured probes (always included) followed by seeded random ones."""
    random_count: int = 200
    seed: int = 42

    def vectors(self, m: MSpace) -> List[AlgebraElement]:
        return structured_probes(m) + random_probes(m, self.random_count, self.seed)
