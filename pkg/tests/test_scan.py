"""Tests for the catalog, catalog scans and DOT rendering of t-root graphs."""

import pytest

from mspace_go.generator.graph_dot import node_name, prepare_graph_context, render_dot
from mspace_go.geocheck import ProbeSet, check_go_metric, scan_catalog
from mspace_go.geometry.catalog import catalog_entries, painted_sets
from mspace_go.geometry.flag import build_flag, connected_components
from mspace_go.models.algebra import PaintedDiagram, RootSystemType

PROBES = ProbeSet(random_count=5)


def diagram(family, rank, painted):
    return PaintedDiagram.of(RootSystemType.of(family, rank), painted)


class TestCatalog:
    def test_painted_sets(self):
        assert painted_sets(2) == [(1,), (2,), (1, 2)]
        assert len(painted_sets(4)) == 15

    def test_small_catalog(self):
        labels = [d.label for d in catalog_entries(max_rank=2)]
        assert labels[:4] == ["A1{1}", "A2{1}", "A2{2}", "A2{1,2}"]
        assert len(labels) == 10
        assert not any(label.startswith("F4") for label in labels)

    def test_f4_selections(self):
        labels = [d.label for d in catalog_entries(include_f4=True)]
        assert "F4{1,2,3,4}" in labels
        assert "F4{1}" in labels


class TestScan:
    """Test findings and notes collected by scan_catalog."""

    def test_quaternionic_summand_is_a_finding(self):
        report = scan_catalog([diagram("A", 2, (1, 2)), diagram("A", 2, (1,))], probes=PROBES)
        assert [e.diagram for e in report.entries] == ["A2{1,2}", "A2{1}"]
        full, cp2 = report.entries
        assert full.components == 1
        assert full.standard_metric == "PASSED_SAMPLES"
        assert cp2.representation_types == ["quaternionic"]
        assert [(f.diagram, f.kind) for f in report.findings] == [("A2{1}", "reducibility")]

    def test_theorem_grids(self):
        report = scan_catalog([diagram("A", 2, (1, 2)), diagram("A", 1, (1,))], probes=PROBES, theorems=True)
        assert [(t.diagram, t.theorem) for t in report.theorems] == [("A2{1,2}", "T1"), ("A1{1}", "T3_2")]
        assert all(t.consistent for t in report.theorems)
        assert report.findings == []

    @pytest.mark.slow
    def test_rank_two_catalog(self):
        """Test that the only rank-2 findings are quaternionic summands."""
        report = scan_catalog(probes=PROBES, max_rank=2)
        assert len(report.entries) == 10
        assert all(e.standard_metric == "PASSED_SAMPLES" for e in report.entries)
        assert {f.kind for f in report.findings} <= {"reducibility"}
        assert all(e.pp3 and e.pp4 for e in report.entries)

    def test_lagrangian_grassmannian_pp3_finding(self):
        """Test that C4{4} is reported as a PP3 failure and nothing else."""
        report = scan_catalog([diagram("C", 4, (4,))], probes=PROBES)
        (entry,) = report.entries
        assert not entry.pp3
        assert entry.pp4
        assert entry.representation_types == ["complex"]
        assert entry.standard_metric == "PASSED_SAMPLES"
        assert [(f.diagram, f.kind) for f in report.findings] == [("C4{4}", "pp3")]

    def test_default_probes(self, monkeypatch):
        """Test that the standard-metric control defaults to 200 seeded probes."""
        seen = []

        def record(m, op, probes):
            seen.append(probes)
            return check_go_metric(m, op, ProbeSet(random_count=0))

        monkeypatch.setattr("mspace_go.geocheck.scan.check_go_metric", record)
        scan_catalog([diagram("A", 1, (1,))])
        assert seen == [ProbeSet(random_count=200, seed=42)]

    @pytest.mark.slow
    def test_standard_metric_control_on_catalog(self):
        """Test that the standard metric passes 200 probes on every catalog diagram."""
        report = scan_catalog(max_rank=4)
        assert len(report.entries) == 91
        assert all(e.standard_metric == "PASSED_SAMPLES" for e in report.entries)
        assert "standard-refuted" not in {f.kind for f in report.findings}
        assert "C4{4}" in [f.diagram for f in report.findings if f.kind == "pp3"]


class TestGraphDot:
    """Test the DOT template and its context."""

    def test_node_name(self):
        assert node_name((1, -2)) == "(1,-2)"

    def test_context(self):
        graph = connected_components(build_flag(diagram("A", 2, (1,))))
        context = prepare_graph_context(graph, "A2{1}")
        assert context["nodes"] == ["(1)", "(-1)"]
        assert context["components"] == [[
            {"name": "(1)", "positive": True}, {"name": "(-1)", "positive": False}
        ]]
        assert context["edges"] == [("(1)", "(-1)")]

    def test_render(self):
        graph = connected_components(build_flag(diagram("G", 2, (2,))))
        dot = render_dot(graph, "G2{2}")
        assert dot.count("subgraph cluster_") == 2
        assert '"(2)" [label="(2)", style=bold];' in dot
        assert dot.rstrip().endswith("}")

    def test_custom_template_dir(self, tmp_path):
        (tmp_path / "troot_graph.dot.j2").write_text("{{ nodes | join(' ') }}\n")
        graph = connected_components(build_flag(diagram("A", 2, (1,))))
        assert render_dot(graph, template_dir=tmp_path) == "(1) (-1)"
