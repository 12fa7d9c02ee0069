"""
Instance-level verification of the classification results.

Each theorem has a hypothesis check (NotApplicable otherwise) and a grid of
metrics with an expectation per row:

    pass    the metric must survive sampling (PASSED_SAMPLES)
    refute  the metric must be REFUTED
    info    reported only; the row is consistent by construction unless a
            pointwise comparison attached to it fails

A positive multiple of the standard metric counts as the standard metric.

Usage:
    report = verify_theorem(m, "T1")
    report = verify_theorem(m, "T3_2", reducibility="criterion")
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Literal, Optional, Sequence, Tuple

from loguru import logger

from mspace_go.errors import NotApplicable
from mspace_go.geocheck.criteria import bracket_equation_37, summand_parts, two_summand_joint
from mspace_go.geocheck.feasibility import check_go_metric, go_feasibility
from mspace_go.geocheck.probes import ProbeSet
from mspace_go.geocheck.verdict import Verdict, VerdictStatus, terms
from mspace_go.geometry.metric import MetricOperator, diagonal_metric, metric_spec, validate
from mspace_go.geometry.mspace import MSpace, is_reducible
from mspace_go.lie.chevalley import bracket
from mspace_go.models.reports import GridRow, TheoremReport

THEOREMS = ("T1", "T2_1", "T2_2", "T2_3", "T3_2", "CC1", "C2")
Reducibility = Literal["effective", "criterion"]
F = Fraction

LAMBDAS = (F(1), F(2), F(3), F(1, 2))
HOMOTHETIES = (F(1), F(2), F(1, 2))
EQ11_PAIRS = ((F(1), F(2)), (F(2), F(1)), (F(1, 2), F(3)))
SPLIT_VARIANTS = ((F(2), F(1), F(0)), (F(1), F(1), F(1, 8)))


@dataclass(frozen=True)
class GridMetric:
    label: str
    op: MetricOperator
    expected: str
    params: Tuple[Fraction, ...] = ()


def _fmt(values: Sequence[Fraction]) -> str:
    return "(" + ",".join(str(v) for v in values) + ")"


# ============================================================================
# Metric families
# ============================================================================


def _homotheties(m: MSpace) -> List[GridMetric]:
    return [
        GridMetric(f"standard x {c}", diagonal_metric(m, [c] * m.s_count, s_scale=c), "pass")
        for c in HOMOTHETIES
    ]


def _split_rows(m: MSpace, summands: Sequence[int], s_scale: Fraction = F(1)) -> List[GridMetric]:
    """Split parameters (μ₁, μ₂, c) on one split summand, scalar 1 elsewhere."""
    rows = []
    for i in summands:
        if not m.is_effectively_split(i):
            continue
        for mu1, mu2, c in SPLIT_VARIANTS:
            params = [{"kind": "scalar", "lambda": "1"} for _ in range(m.s_count)]
            params[i - 1] = {"kind": "split", "mu1": str(mu1), "mu2": str(mu2), "coupling": str(c)}
            block = [[s_scale * x for x in row] for row in m.s_gram]
            op = validate(metric_spec(m, block, params), m)
            rows.append(GridMetric(f"m{i} split {_fmt((mu1, mu2, c))}", op, "refute"))
    return rows


def _s_blocks(m: MSpace) -> Dict[str, List[List[Fraction]]]:
    d = m.dim_s
    ident = [[F(int(a == b)) for b in range(d)] for a in range(d)]
    blocks = {"s=Id": ident}
    if d >= 2:
        blocks["s=diag(1,2,..)"] = [[F(a + 1) if a == b else F(0) for b in range(d)] for a in range(d)]
        off = [row[:] for row in ident]
        off[0][1] = off[1][0] = F(1, 2)
        blocks["s=offdiag 1/2"] = off
    return blocks


def _unequal_rows(m: MSpace) -> List[GridMetric]:
    """λ_i = 2 on one summand with 1 elsewhere, plus a cyclic staircase."""
    s = m.s_count
    rows = []
    for i in range(s):
        lambdas = [F(1)] * s
        lambdas[i] = F(2)
        rows.append(GridMetric(f"lambda={_fmt(lambdas)}", diagonal_metric(m, lambdas), "refute"))
    stair = [LAMBDAS[i % len(LAMBDAS)] for i in range(s)]
    label = f"lambda={_fmt(stair)}"
    if all(r.label != label for r in rows):
        rows.append(GridMetric(f"{label} cyclic", diagonal_metric(m, stair), "refute"))
    return rows


def _eq11(m: MSpace, j: int, mu: Fraction, mu_i: Fraction) -> MetricOperator:
    """μB on s ⊕ m_j, μ_i B on the other summand."""
    lambdas = [mu_i] * m.s_count
    lambdas[j - 1] = mu
    return diagonal_metric(m, lambdas, s_scale=mu)


# ============================================================================
# Hypotheses
# ============================================================================


def reducible_predicate(m: MSpace, reducibility: Reducibility) -> Callable[[int], bool]:
    if reducibility == "criterion":
        return lambda i: is_reducible(m, i)
    return m.is_effectively_split


def check_two_summand_convention(m: MSpace) -> None:
    """
    [m₁, m₁] ⊆ k ⊕ m₂, and a two-dimensional summand is m₂.

    Raises:
        NotApplicable: the labelling violates the convention
    """
    m1 = m.summand_elements(1)
    slots = {g for g in m.m_generators[0]}
    for a, x in enumerate(m1):
        for y in m1[a + 1:]:
            if any(g in slots for g in bracket(x, y).terms):
                raise NotApplicable("[m1, m1] has an m1 component")
    if m.summand_dim(1) == 2:
        raise NotApplicable("dim m1 = 2; the two-summand convention puts the 2-dimensional summand second")


def _require(condition: bool, explanation: str) -> None:
    if not condition:
        raise NotApplicable(explanation)


def check_hypotheses(m: MSpace, which: str, reducibility: Reducibility = "effective") -> None:
    """
    Raises:
        NotApplicable: the M-space does not satisfy the theorem's hypotheses
    """
    if which not in THEOREMS:
        raise NotApplicable(f"Unknown theorem {which!r}; expected one of {', '.join(THEOREMS)}")
    s = m.s_count
    red = reducible_predicate(m, reducibility)
    flags = [red(i) for i in range(1, s + 1)]
    if which == "T1":
        _require(s >= 3, f"T1 needs s >= 3, got s = {s}")
    elif which == "CC1":
        _require(s >= 3, f"CC1 needs s >= 3, got s = {s}")
        _require(m.dim_s == 1, f"CC1 needs dim s = 1, got {m.dim_s}")
        _require(any(flags), "CC1 needs a reducible summand")
    elif which == "T3_2":
        _require(s == 1, f"T3_2 needs s = 1, got s = {s}")
        _require(flags[0], "T3_2 needs m reducible")
    else:
        _require(s == 2, f"{which} needs s = 2, got s = {s}")
        check_two_summand_convention(m)
        if which == "T2_1":
            _require(not any(flags), "T2_1 needs both summands irreducible")
        elif which == "T2_2":
            _require(sum(flags) == 1, "T2_2 needs exactly one reducible summand")
        elif which == "T2_3":
            _require(all(flags), "T2_3 needs both summands reducible")
        elif which == "C2":
            _require(m.summand_dim(2) == 2, f"C2 needs dim m2 = 2, got {m.summand_dim(2)}")


# ============================================================================
# Grids
# ============================================================================


def _row(m: MSpace, metric: GridMetric, probes: ProbeSet, note: Optional[str] = None,
         extra_ok: bool = True) -> GridRow:
    verdict = check_go_metric(m, metric.op, probes)
    passed = verdict.status == VerdictStatus.PASSED_SAMPLES
    if metric.expected == "pass":
        consistent = passed
    elif metric.expected == "refute":
        consistent = not passed
    else:
        consistent = True
    consistent = consistent and extra_ok
    if not consistent:
        logger.warning(f"{m.flag.diagram}: {metric.label} expected {metric.expected}, got {verdict.status.value}")
    return GridRow(
        label=metric.label,
        expected=metric.expected,
        status=verdict.status.value,
        consistent=consistent,
        counterexample=terms(verdict.counterexample),
        note=note,
    )


def _grid_t1(m: MSpace) -> List[GridMetric]:
    rows = _homotheties(m)
    for lam in LAMBDAS:
        if lam not in HOMOTHETIES:
            rows.append(GridMetric(
                f"equal lambda={lam}, s={lam}B", diagonal_metric(m, [lam] * m.s_count, s_scale=lam), "pass"
            ))
    for name, block in _s_blocks(m).items():
        rows.append(GridMetric(
            f"equal lambda=2, {name}", diagonal_metric(m, [F(2)] * m.s_count, s_block=block), "info"
        ))
    rows.append(GridMetric("equal lambda=2, s=B", diagonal_metric(m, [F(2)] * m.s_count), "info"))
    rows.extend(_unequal_rows(m))
    rows.extend(_split_rows(m, range(1, m.s_count + 1)))
    return rows


def _non_standard(m: MSpace) -> List[GridMetric]:
    """Rows that are not a multiple of the standard metric."""
    rows = [GridMetric("s=2B, lambda=1", diagonal_metric(m, [F(1)] * m.s_count, s_scale=F(2)), "refute")]
    rows.extend(_unequal_rows(m) if m.s_count > 1 else [
        GridMetric("s=B, lambda=2", diagonal_metric(m, [F(2)]), "refute")
    ])
    rows.extend(_split_rows(m, range(1, m.s_count + 1)))
    return rows


def _pointwise_rows(
    m: MSpace,
    metrics: Sequence[GridMetric],
    probes: ProbeSet,
    compare: Callable[[GridMetric, Verdict, List], Optional[bool]],
) -> List[GridRow]:
    """
    Rows whose consistency also depends on a per-probe comparison.

    compare(metric, go_verdict, parts) returns False on a contradiction, None when
    the probe leaves the question open, True otherwise.
    """
    vectors = probes.vectors(m)
    decomposed = [(x, summand_parts(m, x)) for x in vectors]
    out = []
    for metric in metrics:
        contradictions = 0
        open_points = 0
        for x, parts in decomposed:
            outcome = compare(metric, go_feasibility(m, metric.op, x), parts)
            if outcome is False:
                contradictions += 1
            elif outcome is None:
                open_points += 1
        note = f"{contradictions} contradictions"
        if open_points:
            note += f", unresolved at {open_points} probes"
        out.append(_row(m, metric, probes, note=note, extra_ok=contradictions == 0))
    return out


def _t2_1_rows(m: MSpace, probes: ProbeSet) -> List[GridRow]:
    params = [
        (F(1), F(1), F(1)), (F(2), F(1), F(1)), (F(1), F(2), F(1)),
        (F(1), F(1), F(2)), (F(1), F(2), F(3)), (F(1, 2), F(1), F(3)),
    ]
    metrics = []
    for mu, mu1, mu2 in params:
        label = f"mu={mu}, mu1={mu1}, mu2={mu2}"
        expected = "pass" if mu == mu1 == mu2 else "info"
        op = diagonal_metric(m, [mu1, mu2], s_scale=mu)
        metrics.append(GridMetric(label, op, expected, (mu, mu1, mu2)))

    def compare(metric: GridMetric, go: Verdict, parts: List) -> Optional[bool]:
        mu, mu1, mu2 = metric.params
        V, X1, X2 = parts
        joint = two_summand_joint(m, mu, mu1, mu2, V, X1, X2).ok
        if joint and not go.ok:
            return False
        if not joint and go.ok:
            return None
        return True

    return _pointwise_rows(m, metrics, probes, compare)


def _c2_rows(m: MSpace, probes: ProbeSet) -> List[GridRow]:
    metrics = [
        GridMetric(f"eq11 mu={mu}, mu1={mu1}", _eq11(m, 2, mu, mu1), "info") for mu, mu1 in EQ11_PAIRS
    ]

    def compare(metric: GridMetric, go: Verdict, parts: List) -> Optional[bool]:
        V, X1, X2 = parts
        return bracket_equation_37(m, V, X1, X2).ok == go.ok

    return _pointwise_rows(m, metrics, probes, compare)


def _t2_2_grid(m: MSpace, reducible: Callable[[int], bool]) -> List[GridMetric]:
    j = next(i for i in (1, 2) if reducible(i))
    rows = _homotheties(m)
    for mu, mu_i in EQ11_PAIRS:
        rows.append(GridMetric(f"eq11 mu={mu}, mu_i={mu_i}", _eq11(m, j, mu, mu_i), "info"))
    rows.append(GridMetric("s=2B, lambda=1", diagonal_metric(m, [F(1), F(1)], s_scale=F(2)), "refute"))
    rows.extend(_split_rows(m, [j]))
    return rows


# ============================================================================
# Entry point
# ============================================================================


def verify_theorem(
    m: MSpace,
    which: str,
    probes: Optional[ProbeSet] = None,
    reducibility: Reducibility = "effective",
) -> TheoremReport:
    """
    Run the metric grid of one theorem on one M-space.

    reducibility selects how hypotheses read "m_i is reducible": "effective"
    uses the certified split, "criterion" the lowest/highest-root test.

    Raises:
        NotApplicable: the hypotheses fail (the explanation says which)
    """
    check_hypotheses(m, which, reducibility)
    probes = probes or ProbeSet()
    red = reducible_predicate(m, reducibility)
    logger.info(f"{m.flag.diagram}: verifying {which} ({reducibility} reducibility)")

    if which == "T2_1":
        rows = [_row(m, g, probes) for g in _homotheties(m)[1:]] + _t2_1_rows(m, probes)
    elif which == "C2":
        rows = _c2_rows(m, probes)
    else:
        if which == "T1":
            grid = _grid_t1(m)
        elif which == "T2_2":
            grid = _t2_2_grid(m, red)
        else:
            grid = _homotheties(m) + _non_standard(m)
        rows = [_row(m, g, probes) for g in grid]

    report = TheoremReport(
        theorem=which,
        diagram=str(m.flag.diagram),
        reducibility=reducibility,
        applicable=True,
        rows=rows,
        consistent=all(r.consistent for r in rows),
    )
    if not report.consistent:
        logger.warning(f"{m.flag.diagram}: {which} grid is inconsistent")
    return report


def not_applicable_report(m: MSpace, which: str, error: NotApplicable,
                          reducibility: Reducibility = "effective") -> TheoremReport:
    return TheoremReport(
        theorem=which,
        diagram=str(m.flag.diagram),
        reducibility=reducibility,
        applicable=False,
        explanation=error.explanation,
    )
