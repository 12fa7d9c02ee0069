"""
Tests for flag manifolds G/K and their t-roots.

Validates:
- t-root enumeration, canonical ordering and fiber sizes
- Adjacency (including the ±2 multiple exception) and graph components
- Lowest/highest roots, t-basis and invariant ordering
"""

import pytest

from mspace_go.errors import EmptyPainted, IndexOutOfRange, NotATRoot
from mspace_go.geometry.catalog import catalog_entries
from mspace_go.geometry.flag import (
    adjacency,
    build_flag,
    connected_components,
    extremal_roots_unique,
    invariant_ordering_holds,
    lowest_highest,
    summand_basis,
    t_basis,
)
from mspace_go.models.algebra import PaintedDiagram, RootSystemType


def flag_of(family, rank, painted):
    return build_flag(PaintedDiagram.of(RootSystemType.of(family, rank), painted))


class TestDiagram:
    """Test painted diagram validation."""

    def test_empty_painted(self):
        with pytest.raises(EmptyPainted):
            PaintedDiagram.of(RootSystemType.of("A", 2), ())

    def test_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            PaintedDiagram.of(RootSystemType.of("A", 2), (3,))

    def test_label_is_sorted(self):
        assert PaintedDiagram.of(RootSystemType.of("A", 3), (3, 1)).label == "A3{1,3}"


class TestTRoots:
    """Test t-roots, summand counts and fibers."""

    @pytest.mark.parametrize(
        "family,rank,painted,s",
        [("A", 2, (1, 2), 3), ("A", 2, (1,), 1), ("G", 2, (1,), 3), ("G", 2, (2,), 2),
         ("B", 2, (2,), 2), ("B", 3, (3,), 2), ("C", 3, (1,), 2), ("D", 4, (2,), 2)],
    )
    def test_summand_count(self, family, rank, painted, s):
        assert flag_of(family, rank, painted).s_count == s

    def test_canonical_order(self):
        """Test ordering by t-height, then coefficients descending."""
        assert flag_of("A", 2, (1, 2)).troots_plus == ((1, 0), (0, 1), (1, 1))

    def test_g2_fibers(self):
        """Test G2{1}: fibers of sizes 2, 1, 2 over ξ = 1, 2, 3."""
        f = flag_of("G", 2, (1,))
        assert f.troots_plus == ((1,), (2,), (3,))
        assert [len(f.fiber(i)) for i in (1, 2, 3)] == [2, 1, 2]
        assert len(summand_basis(f, 2)) == 2

    def test_fibers_partition_r_m_plus(self):
        f = flag_of("C", 3, (2,))
        union = [a for i in range(1, f.s_count + 1) for a in f.fiber(i)]
        assert sorted(union) == sorted(f.R_M_plus)
        assert len(union) + len(f.R_K_plus) == len(f.rs.positive_roots)

    def test_summand_of_root(self):
        f = flag_of("A", 2, (1, 2))
        assert f.summand_of_root((1, 1)) == 3
        assert f.summand_of_root((0, -1)) == 2

    def test_summand_of_compact_root(self):
        with pytest.raises(NotATRoot):
            flag_of("A", 2, (1,)).summand_of_root((0, 1))

    def test_summand_index_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            flag_of("A", 2, (1,)).fiber(2)


class TestAdjacency:
    """Test the t-root graph."""

    def test_cp2_has_one_edge(self):
        """Test that ξ and −ξ are adjacent, giving 2 nodes and 1 edge."""
        graph = connected_components(flag_of("A", 2, (1,)))
        assert len(graph.nodes) == 2
        assert graph.edges == (((1,), (-1,)),)
        assert graph.is_connected

    def test_double_multiples_are_not_adjacent(self):
        f = flag_of("G", 2, (1,))
        assert not adjacency(f, (1,), (2,))
        assert adjacency(f, (1,), (3,))
        assert adjacency(f, (2,), (3,))

    def test_not_self_adjacent(self):
        assert not adjacency(flag_of("A", 2, (1, 2)), (1, 0), (1, 0))

    def test_g2_long_painted_is_disconnected(self):
        """Test G2{2}: ξ and 2ξ sit in different components."""
        graph = connected_components(flag_of("G", 2, (2,)))
        assert graph.r == 2
        assert ((1,), (-1,)) in graph.components

    def test_not_a_troot(self):
        with pytest.raises(NotATRoot):
            adjacency(flag_of("A", 2, (1,)), (1,), (2,))

    def test_full_flag_is_connected(self):
        graph = connected_components(flag_of("A", 2, (1, 2)))
        assert len(graph.nodes) == 6
        assert graph.is_connected

    @pytest.mark.slow
    def test_catalog_connected_when_three_summands(self):
        """Test connectedness of R_t for every catalog diagram with s ≥ 3."""
        for d in catalog_entries(max_rank=4, include_f4=False):
            f = build_flag(d)
            if f.s_count >= 3:
                assert connected_components(f).is_connected, str(d)


class TestExtremalRoots:
    """Test lowest/highest roots, t-basis and invariant ordering."""

    def test_cp2_lowest_highest(self):
        assert lowest_highest(flag_of("A", 2, (1,)), 1) == ((1, 0), (1, 1))

    def test_b2_lowest_highest(self):
        assert lowest_highest(flag_of("B", 2, (1,)), 1) == ((1, 0), (1, 2))

    def test_t_basis(self):
        assert t_basis(flag_of("A", 2, (1, 2))) == ((1, 0), (0, 1))
        assert t_basis(flag_of("G", 2, (1,))) == ((1,),)

    @pytest.mark.parametrize("painted", [(1,), (2,), (1, 3), (1, 2, 3)])
    def test_invariant_ordering(self, painted):
        assert invariant_ordering_holds(flag_of("A", 3, painted))

    @pytest.mark.slow
    def test_catalog_extremal_roots_unique(self):
        """Test that every fiber of every catalog diagram has one lowest and one highest root."""
        for d in catalog_entries(max_rank=4, include_f4=False):
            f = build_flag(d)
            for i in range(1, f.s_count + 1):
                assert extremal_roots_unique(f, i), f"{d} summand {i}"
