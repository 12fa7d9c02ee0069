"""
mspace-go: flag manifolds, M-spaces and g.o. metric checks from the command line.

Every subcommand first collects its options into a RunConfig; invalid input
(unknown type, bad painted index, missing or malformed file) exits with 2
before any computation.

Usage:
    mspace-go describe --family A --rank 2 --painted 1,2
    mspace-go troots --family G --rank 2 --painted 1,2 --format json
    mspace-go decompose --family B --rank 2 --painted 1
    mspace-go check-go --family A --rank 2 --painted 1,2 --metric metric.json
    mspace-go find-geodesic --family A --rank 2 --painted 1,2 --vector "A[1,0]=1;A[0,1]=1"
    mspace-go refute --family G --rank 2 --painted 1 --theorem CC1
    mspace-go graph --family A --rank 2 --painted 1,2 > a2.dot
    mspace-go scan --max-rank 3

Exit codes:
    0  success, or a theorem grid consistent with its statement (or not applicable)
    1  a finding: a grid inconsistent with its theorem, or scan findings
    2  usage error
"""

import sys
from pathlib import Path
from typing import Optional

import typer
from loguru import logger
from pydantic import BaseModel, ValidationError
from rich.console import Console
from rich.table import Table

from mspace_go.errors import MSpaceGoError, NotApplicable
from mspace_go.generator.graph_dot import render_dot
from mspace_go.geocheck import (
    THEOREMS,
    ProbeSet,
    check_go_metric,
    find_geodesic,
    scan_catalog,
    verify_theorem,
)
from mspace_go.geocheck.theorems import not_applicable_report
from mspace_go.geocheck.verdict import terms
from mspace_go.geometry.flag import (
    build_flag,
    connected_components,
    lowest_highest,
    t_basis,
)
from mspace_go.geometry.metric import MetricOperator, standard_metric, validate
from mspace_go.geometry.mspace import (
    MSpace,
    build_mspace,
    cross_summand_couplings,
    is_reducible,
    orbit_irreducibility_oracle,
)
from mspace_go.lie.chevalley import AlgebraElement
from mspace_go.lie.rationals import parse_rational
from mspace_go.models.metric_spec import MetricSpec
from mspace_go.models.reports import (
    DecomposeReport,
    DescribeReport,
    FiberReport,
    SummandReport,
    TheoremReport,
    TRootsReport,
    VerdictReport,
)
from mspace_go.models.run_config import OutputFormat, RunConfig

app = typer.Typer(
    name="mspace-go",
    help="Flag manifolds, M-spaces and geodesic-orbit metric checks from painted Dynkin diagrams",
    add_completion=False,
)

console = Console()

USAGE_ERROR = 2
FINDING = 1

AlgebraOpt = typer.Option(None, "--algebra", "-a", help="Algebra descriptor (JSON or YAML)")
FamilyOpt = typer.Option(None, "--family", "-f", help="Inline family letter (A-G)")
RankOpt = typer.Option(None, "--rank", "-r", help="Inline rank")
PaintedOpt = typer.Option(..., "--painted", "-p", help="Painted simple roots, e.g. 1,2")
MetricOpt = typer.Option(None, "--metric", "-m", help="Metric spec (JSON or YAML); standard if omitted")
ProbesOpt = typer.Option(200, "--probes", "-n", help="Random probe count")
SeedOpt = typer.Option(42, "--seed", "-s", help="Random probe seed")
FormatOpt = typer.Option(OutputFormat.TEXT, "--format", "-F", help="Output format: json, text or dot")


# ============================================================================
# Setup helpers
# ============================================================================


@app.callback()
def main(verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging to stderr")):
    logger.remove()
    logger.enable("mspace_go")
    logger.add(sys.stderr, level="DEBUG" if verbose else "WARNING")


def usage_error(message: str) -> typer.Exit:
    console.print(f"[red]{message}[/red]")
    return typer.Exit(USAGE_ERROR)


def make_config(**kwargs) -> RunConfig:
    try:
        return RunConfig(**kwargs)
    except ValidationError as e:
        messages = "; ".join(err["msg"] for err in e.errors())
        raise usage_error(f"Invalid options: {messages}")


def load_mspace(cfg: RunConfig) -> MSpace:
    try:
        return build_mspace(build_flag(cfg.diagram()))
    except (MSpaceGoError, ValidationError, ValueError) as e:
        raise usage_error(str(e))


def load_metric(cfg: RunConfig, m: MSpace) -> MetricOperator:
    if cfg.metric_path is None:
        return standard_metric(m)
    try:
        return validate(MetricSpec.from_file(cfg.metric_path), m)
    except (MSpaceGoError, ValidationError, ValueError) as e:
        raise usage_error(f"Invalid metric {cfg.metric_path}: {e}")


def parse_vector(m: MSpace, text: str) -> AlgebraElement:
    """'A[1,0]=1;iH1=1/2' → element of g."""
    out = m.algebra.zero()
    for item in text.split(";"):
        if not item.strip():
            continue
        label, _, coeff = item.partition("=")
        g = m.algebra.parse_label(label)
        out = out + m.algebra.gen(g) * parse_rational(coeff.strip() or "1")
    return out


def emit(model: BaseModel) -> None:
    typer.echo(model.model_dump_json(indent=2))


def _root(r) -> str:
    return "(" + ",".join(str(c) for c in r) + ")"


def _terms_text(x: Optional[AlgebraElement]) -> str:
    return repr(x) if x is not None else "-"


# ============================================================================
# Report builders
# ============================================================================


def cmd_describe(cfg: RunConfig) -> DescribeReport:
    m = load_mspace(cfg)
    f = m.flag
    indices = range(1, m.s_count + 1)
    return DescribeReport(
        diagram=str(f.diagram),
        dim_g=m.algebra.dim,
        rank=f.rs.rank,
        R_K=len(f.R_K),
        R_M=len(f.R_M),
        s=m.s_count,
        dim_s=m.dim_s,
        dim_k1=len(m.k1_basis),
        dim_n=m.dim_n,
        k1="" if not m.k1_basis else ",".join(str(k) for k in m.unpainted),
        summand_dims=[m.summand_dim(i) for i in indices],
        reducible=[m.is_effectively_split(i) for i in indices],
        representation_types=[m.representation_type(i) for i in indices],
    )


def cmd_troots(cfg: RunConfig) -> TRootsReport:
    f = build_flag(cfg.diagram())
    graph = connected_components(f)
    return TRootsReport(
        diagram=str(f.diagram),
        s=f.s_count,
        positive=[list(xi) for xi in f.troots_plus],
        fibers=[
            FiberReport(troot=list(xi), roots=[list(a) for a in f.fiber(i)])
            for i, xi in enumerate(f.troots_plus, start=1)
        ],
        t_basis=[list(xi) for xi in t_basis(f)],
        components=[[list(xi) for xi in comp] for comp in graph.components],
        connected=graph.is_connected,
    )


def cmd_decompose(cfg: RunConfig) -> DecomposeReport:
    m = load_mspace(cfg)
    summands = []
    for i in range(1, m.s_count + 1):
        low, high = lowest_highest(m.flag, i)
        split = m.effective_split(i)
        summands.append(SummandReport(
            index=i,
            troot=list(m.flag.check_summand(i)),
            dim=m.summand_dim(i),
            roots=[list(a) for a in m.flag.fiber(i)],
            lowest=list(low),
            highest=list(high),
            criterion_reducible=is_reducible(m, i),
            oracle_irreducible=orbit_irreducibility_oracle(m, i),
            representation_type=m.representation_type(i),
            split_dims=list(split.split_dims) if split.is_split else None,
            n1=[terms(v) for v in split.n1_basis] if split.is_split else None,
            n2=[terms(v) for v in split.n2_basis] if split.is_split else None,
        ))
    return DecomposeReport(
        diagram=str(m.flag.diagram),
        s_basis=[terms(v) for v in m.s_basis],
        k1_basis=[terms(v) for v in m.k1_basis],
        summands=summands,
        cross_couplings=[list(p) for p in cross_summand_couplings(m)],
    )


def cmd_check_go(cfg: RunConfig) -> VerdictReport:
    m = load_mspace(cfg)
    op = load_metric(cfg, m)
    return check_go_metric(m, op, ProbeSet(cfg.probes, cfg.seed)).to_report()


def cmd_graph(cfg: RunConfig) -> str:
    f = build_flag(cfg.diagram())
    return render_dot(connected_components(f), str(f.diagram))


# ============================================================================
# Commands
# ============================================================================


@app.command()
def describe(
    algebra: Optional[Path] = AlgebraOpt,
    family: Optional[str] = FamilyOpt,
    rank: Optional[int] = RankOpt,
    painted: str = PaintedOpt,
    output_format: OutputFormat = FormatOpt,
):
    """Dimensions, root counts, summands and reducibility of the M-space."""
    cfg = make_config(algebra_path=algebra, family=family, rank=rank, painted=painted,
                      output_format=output_format)
    report = cmd_describe(cfg)
    if cfg.output_format == OutputFormat.JSON:
        emit(report)
        return
    table = Table(title=f"M-space {report.diagram}")
    table.add_column("Quantity", style="cyan")
    table.add_column("Value")
    for key in ("dim_g", "rank", "R_K", "R_M", "s", "dim_s", "dim_k1", "dim_n"):
        table.add_row(key, str(getattr(report, key)))
    table.add_row("k1 nodes", report.k1 or "trivial")
    table.add_row("summand dims", ", ".join(str(d) for d in report.summand_dims))
    table.add_row("split", ", ".join("yes" if r else "no" for r in report.reducible))
    table.add_row("types", ", ".join(report.representation_types))
    console.print(table)


@app.command()
def troots(
    algebra: Optional[Path] = AlgebraOpt,
    family: Optional[str] = FamilyOpt,
    rank: Optional[int] = RankOpt,
    painted: str = PaintedOpt,
    output_format: OutputFormat = FormatOpt,
):
    """Positive t-roots with their fibers, t-basis and components of the t-root graph."""
    cfg = make_config(algebra_path=algebra, family=family, rank=rank, painted=painted,
                      output_format=output_format)
    try:
        report = cmd_troots(cfg)
    except (MSpaceGoError, ValueError) as e:
        raise usage_error(str(e))
    if cfg.output_format == OutputFormat.JSON:
        emit(report)
        return
    table = Table(title=f"t-roots of {report.diagram}")
    table.add_column("#", justify="right")
    table.add_column("ξ")
    table.add_column("simple")
    table.add_column("roots", justify="right")
    basis = {tuple(b) for b in report.t_basis}
    for i, fiber in enumerate(report.fibers, start=1):
        xi = fiber.troot
        table.add_row(str(i), _root(xi), "yes" if tuple(xi) in basis else "", str(len(fiber.roots)))
    console.print(table)
    state = "[green]connected[/green]" if report.connected else f"[yellow]{len(report.components)} components[/yellow]"
    console.print(f"t-root graph: {state}")


@app.command()
def decompose(
    algebra: Optional[Path] = AlgebraOpt,
    family: Optional[str] = FamilyOpt,
    rank: Optional[int] = RankOpt,
    painted: str = PaintedOpt,
    output_format: OutputFormat = FormatOpt,
):
    """Ad(K1)-decomposition of n with split halves and representation types."""
    cfg = make_config(algebra_path=algebra, family=family, rank=rank, painted=painted,
                      output_format=output_format)
    report = cmd_decompose(cfg)
    if cfg.output_format == OutputFormat.JSON:
        emit(report)
        return
    table = Table(title=f"Decomposition of {report.diagram}")
    for col in ("m_i", "ξ", "dim", "lowest", "highest", "criterion", "oracle", "type", "split"):
        table.add_column(col)
    for s in report.summands:
        table.add_row(
            str(s.index), _root(s.troot), str(s.dim), _root(s.lowest), _root(s.highest),
            "reducible" if s.criterion_reducible else "irreducible",
            "irreducible" if s.oracle_irreducible else "reducible",
            s.representation_type,
            "+".join(str(d) for d in s.split_dims) if s.split_dims else "-",
        )
    console.print(table)
    for p, q in report.cross_couplings:
        console.print(f"[yellow]note:[/yellow] {p} and {q} are equivalent Ad(K1)-modules")


@app.command("check-go")
def check_go(
    algebra: Optional[Path] = AlgebraOpt,
    family: Optional[str] = FamilyOpt,
    rank: Optional[int] = RankOpt,
    painted: str = PaintedOpt,
    metric: Optional[Path] = MetricOpt,
    probes: int = ProbesOpt,
    seed: int = SeedOpt,
    output_format: OutputFormat = FormatOpt,
):
    """Sample the g.o. property of a metric (standard metric if none given)."""
    cfg = make_config(algebra_path=algebra, family=family, rank=rank, painted=painted,
                      metric_path=metric, probes=probes, seed=seed, output_format=output_format)
    report = cmd_check_go(cfg)
    if cfg.output_format == OutputFormat.JSON:
        emit(report)
        return
    color = "green" if report.status == "PASSED_SAMPLES" else "red"
    console.print(f"[{color}]{report.status}[/{color}] after {report.probes_run} probes")
    if report.caveat:
        console.print(f"[yellow]{report.caveat}[/yellow]")
    if report.counterexample:
        console.print("counterexample x = " + " + ".join(f"{t.coeff}*{t.gen}" for t in report.counterexample))
        console.print("certificate r = " + " + ".join(f"{t.coeff}*{t.gen}" for t in report.certificate or []))
        console.print(f"rank A = {report.rank_coefficient}, rank [A|b] = {report.rank_augmented}")


@app.command("find-geodesic")
def find_geodesic_cmd(
    vector: str = typer.Option(..., "--vector", "-x", help="x in n, e.g. 'A[1,0]=1;A[0,1]=1/2'"),
    algebra: Optional[Path] = AlgebraOpt,
    family: Optional[str] = FamilyOpt,
    rank: Optional[int] = RankOpt,
    painted: str = PaintedOpt,
    metric: Optional[Path] = MetricOpt,
    output_format: OutputFormat = FormatOpt,
):
    """Geodesic vector a + x through x, or the certificate that none exists."""
    cfg = make_config(algebra_path=algebra, family=family, rank=rank, painted=painted,
                      metric_path=metric, output_format=output_format)
    m = load_mspace(cfg)
    op = load_metric(cfg, m)
    try:
        x = parse_vector(m, vector)
        verdict = find_geodesic(m, op, x)
    except (MSpaceGoError, ValueError) as e:
        raise usage_error(str(e))
    if cfg.output_format == OutputFormat.JSON:
        emit(verdict.to_report())
        return
    if verdict.ok:
        console.print(f"[green]GEODESIC[/green] {_terms_text(verdict.witness)}")
    else:
        console.print(f"[red]INFEASIBLE[/red] certificate {_terms_text(verdict.certificate)}")


@app.command()
def refute(
    theorem: str = typer.Option(..., "--theorem", "-t", help=f"One of {', '.join(THEOREMS)}"),
    algebra: Optional[Path] = AlgebraOpt,
    family: Optional[str] = FamilyOpt,
    rank: Optional[int] = RankOpt,
    painted: str = PaintedOpt,
    probes: int = ProbesOpt,
    seed: int = SeedOpt,
    reducibility: str = typer.Option(
        "effective", "--reducibility", help="Hypothesis reading: effective or criterion"
    ),
    output_format: OutputFormat = FormatOpt,
):
    """Run a theorem's metric grid; exit 1 if the outcome contradicts it."""
    if theorem not in THEOREMS:
        raise usage_error(f"Unknown theorem '{theorem}'; expected one of {', '.join(THEOREMS)}")
    if reducibility not in ("effective", "criterion"):
        raise usage_error(f"Unknown reducibility reading '{reducibility}'")
    cfg = make_config(algebra_path=algebra, family=family, rank=rank, painted=painted,
                      probes=probes, seed=seed, output_format=output_format)
    m = load_mspace(cfg)
    try:
        report = verify_theorem(m, theorem, ProbeSet(cfg.probes, cfg.seed), reducibility)
    except NotApplicable as e:
        report = not_applicable_report(m, theorem, e, reducibility)
    _print_theorem(report, cfg.output_format)
    if not report.consistent:
        raise typer.Exit(FINDING)


def _print_theorem(report: TheoremReport, output_format: OutputFormat) -> None:
    if output_format == OutputFormat.JSON:
        emit(report)
        return
    if not report.applicable:
        console.print(f"[yellow]{report.theorem} not applicable to {report.diagram}:[/yellow] {report.explanation}")
        return
    table = Table(title=f"{report.theorem} on {report.diagram} ({report.reducibility})")
    for col in ("metric", "expected", "status", "consistent", "note"):
        table.add_column(col)
    for row in report.rows:
        mark = "[green]yes[/green]" if row.consistent else "[red]NO[/red]"
        table.add_row(row.label, row.expected, row.status, mark, row.note or "")
    console.print(table)


@app.command()
def graph(
    algebra: Optional[Path] = AlgebraOpt,
    family: Optional[str] = FamilyOpt,
    rank: Optional[int] = RankOpt,
    painted: str = PaintedOpt,
):
    """DOT text of the t-root graph."""
    cfg = make_config(algebra_path=algebra, family=family, rank=rank, painted=painted,
                      output_format=OutputFormat.DOT)
    try:
        typer.echo(cmd_graph(cfg), nl=False)
    except (MSpaceGoError, ValueError) as e:
        raise usage_error(str(e))


@app.command()
def scan(
    max_rank: Optional[int] = typer.Option(None, "--max-rank", help="Only types of rank <= N"),
    include_f4: bool = typer.Option(False, "--f4", help="Include the F4 selections"),
    theorems: bool = typer.Option(False, "--theorems", help="Also run every applicable theorem grid"),
    probes: int = ProbesOpt,
    seed: int = SeedOpt,
    output_format: OutputFormat = FormatOpt,
):
    """Scan the catalog; exit 1 when any finding is recorded."""
    report = scan_catalog(
        probes=ProbeSet(probes, seed), theorems=theorems, max_rank=max_rank, include_f4=include_f4
    )
    if output_format == OutputFormat.JSON:
        emit(report)
    else:
        table = Table(title="Catalog scan")
        for col in ("diagram", "s", "r", "types", "standard", "PP3", "PP4"):
            table.add_column(col)
        for e in report.entries:
            table.add_row(
                e.diagram, str(e.s), str(e.components), ",".join(e.representation_types),
                e.standard_metric, str(e.pp3), str(e.pp4),
            )
        console.print(table)
        for f in report.findings:
            console.print(f"[red]finding[/red] {f.diagram} [{f.kind}] {f.message}")
        for n in report.notes:
            console.print(f"[yellow]note[/yellow] {n.diagram} [{n.kind}] {n.message}")
    if report.findings:
        raise typer.Exit(FINDING)


if __name__ == "__main__":
    app()
