"""
Catalog scan.

For each catalog diagram: connectedness of the t-root graph when s ≥ 3,
agreement of the reducibility criterion with the orbit oracle, the per-fiber
PP3/PP4 checks, the standard-metric control (must pass sampling) and,
optionally, every applicable theorem grid. Disagreements are findings;
cross-summand Ad(K₁)-equivalences are notes.
"""

from typing import Iterable, Optional

from loguru import logger

from mspace_go.errors import NotApplicable
from mspace_go.geocheck.feasibility import check_go_metric
from mspace_go.geocheck.probes import ProbeSet
from mspace_go.geocheck.theorems import THEOREMS, verify_theorem
from mspace_go.geocheck.verdict import VerdictStatus
from mspace_go.geometry.catalog import catalog_entries
from mspace_go.geometry.flag import build_flag, connected_components
from mspace_go.geometry.metric import standard_metric
from mspace_go.geometry.mspace import (
    build_mspace,
    cross_summand_couplings,
    pp3_check,
    pp4_check,
    reducibility_findings,
)
from mspace_go.models.algebra import PaintedDiagram
from mspace_go.models.reports import Finding, ScanEntry, ScanReport


def scan_catalog(
    diagrams: Optional[Iterable[PaintedDiagram]] = None,
    probes: Optional[ProbeSet] = None,
    theorems: bool = False,
    max_rank: Optional[int] = None,
    include_f4: bool = False,
) -> ScanReport:
    """Scan diagrams (default: the catalog up to max_rank) and collect findings."""
    probes = probes or ProbeSet()
    diagrams = list(diagrams) if diagrams is not None else catalog_entries(max_rank, include_f4)
    report = ScanReport()

    for d in diagrams:
        name = str(d)
        flag = build_flag(d)
        graph = connected_components(flag)
        if flag.s_count >= 3 and not graph.is_connected:
            report.findings.append(Finding(
                diagram=name, kind="disconnected", message=f"s={flag.s_count} but r={graph.r}"
            ))

        m = build_mspace(flag)
        for finding in reducibility_findings(m):
            report.findings.append(Finding(diagram=name, kind="reducibility", message=finding.describe()))
        indices = range(1, m.s_count + 1)
        pp3 = all(pp3_check(m, i) for i in indices)
        pp4 = all(pp4_check(m, i) for i in indices)
        if not pp3:
            report.findings.append(Finding(diagram=name, kind="pp3", message="PP3 fails on some fiber"))
        if not pp4:
            report.findings.append(Finding(diagram=name, kind="pp4", message="PP4 fails on some fiber"))
        for p, q in cross_summand_couplings(m):
            report.notes.append(Finding(
                diagram=name, kind="coupling", message=f"{p} and {q} are equivalent Ad(K1)-modules"
            ))

        control = check_go_metric(m, standard_metric(m), probes)
        if control.status != VerdictStatus.PASSED_SAMPLES:
            report.findings.append(Finding(
                diagram=name, kind="standard-refuted", message="standard metric failed g.o. sampling"
            ))

        if theorems:
            for which in THEOREMS:
                try:
                    result = verify_theorem(m, which, probes)
                except NotApplicable:
                    continue
                report.theorems.append(result)
                if not result.consistent:
                    report.findings.append(Finding(
                        diagram=name, kind="theorem", message=f"{which} grid is inconsistent"
                    ))

        report.entries.append(ScanEntry(
            diagram=name,
            s=m.s_count,
            components=graph.r,
            representation_types=[m.representation_type(i) for i in indices],
            standard_metric=control.status.value,
            pp3=pp3,
            pp4=pp4,
        ))
        logger.debug(f"{name}: scanned")

    logger.info(f"Scanned {len(report.entries)} diagrams, {len(report.findings)} findings")
    return report
