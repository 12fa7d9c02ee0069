"""
Tests for M-spaces G/K₁: the decomposition n = s ⊕ m_1 ⊕ … ⊕ m_s.

Validates:
- Dimensions of s, k₁ and n
- Projections and n coordinates
- Reducibility: root criterion, orbit oracle and the effective split
- Representation types, pieces and equivariant maps
"""

from fractions import Fraction

import pytest

from mspace_go.errors import IndexOutOfRange, NotReducible, OutOfSubspace
from mspace_go.geometry.mspace import (
    cross_summand_couplings,
    equivariant_map_dimension,
    is_reducible,
    orbit_irreducibility_oracle,
    pp3_check,
    pp4_check,
    reducibility_findings,
    split_summand,
)
from mspace_go.lie.chevalley import bracket, killing_form

from .conftest import mspace


class TestDimensions:
    """Test the sizes of the pieces of g = k₁ ⊕ n."""

    @pytest.mark.parametrize(
        "family,rank,painted,dim_s,dim_k1,dims",
        [
            ("A", 2, (1, 2), 2, 0, [2, 2, 2]),
            ("A", 2, (1,), 1, 3, [4]),
            ("G", 2, (1,), 1, 3, [4, 2, 4]),
            ("G", 2, (2,), 1, 3, [8, 2]),
            ("B", 2, (1,), 1, 3, [6]),
            ("C", 3, (2,), 1, 6, [8, 6]),
        ],
    )
    def test_dimensions(self, family, rank, painted, dim_s, dim_k1, dims):
        m = mspace(family, rank, painted)
        assert m.dim_s == dim_s
        assert len(m.k1_basis) == dim_k1
        assert [m.summand_dim(i) for i in range(1, m.s_count + 1)] == dims
        assert m.dim_n + dim_k1 == m.algebra.dim

    def test_summand_index(self, cp2):
        with pytest.raises(IndexOutOfRange):
            cp2.summand_dim(0)


class TestProjections:
    """Test B-orthogonal projections onto n and k₁."""

    def test_cartan_projection(self, cp2):
        """Test iH_1 = (3/2)·iH_{Λ_1} − (1/2)·iH_2 in A2{1}."""
        alg = cp2.algebra
        x = alg.ih(1)
        assert cp2.project_to_n(x) == alg.cartan_element((Fraction(1), Fraction(1, 2)))
        assert cp2.project_to_k1(x) == alg.ih(2) * Fraction(-1, 2)
        assert cp2.s_coordinates(x) == [Fraction(3, 2)]

    def test_projections_are_orthogonal(self, g2_1):
        alg = g2_1.algebra
        x = alg.ih(1) * 2 + alg.ih(2) + alg.A((0, 1)) + alg.B((1, 0)) * 3
        n_part = g2_1.project_to_n(x)
        k_part = g2_1.project_to_k1(x)
        assert n_part + k_part == x
        for k in g2_1.k1_basis:
            assert killing_form(n_part, k) == 0

    def test_n_vector_round_trip(self, b2_1):
        alg = b2_1.algebra
        x = b2_1.s_basis[0] * 2 + alg.A((1, 1)) - alg.B((1, 2)) * Fraction(1, 3)
        assert b2_1.from_n_vector(b2_1.n_vector(x)) == x

    def test_n_vector_rejects_k1(self, cp2):
        with pytest.raises(OutOfSubspace):
            cp2.n_vector(cp2.algebra.A((0, 1)))

    def test_s_commutes_with_k1(self, c3_2):
        for h in c3_2.s_basis:
            for k in c3_2.k1_basis:
                assert not bracket(h, k)


class TestReducibility:
    """Test the root criterion against actual splits."""

    def test_b2_splits_three_plus_three(self, b2_1):
        assert is_reducible(b2_1, 1)
        split = split_summand(b2_1, 1)
        assert split.split_dims == (3, 3)
        assert split.seed_low == (1, 0) and split.seed_high == (1, 2)
        assert b2_1.representation_type(1) == "real"

    def test_halves_are_orthogonal_and_swapped_by_j(self, b2_1):
        split = b2_1.effective_split(1)
        for u in split.n1_basis:
            for w in split.n2_basis:
                assert killing_form(u, w) == 0
            image = b2_1.J(1, u)
            assert image
            for v in split.n1_basis:
                assert killing_form(image, v) == 0

    def test_two_dimensional_summands_split(self, a2_full):
        for i in (1, 2, 3):
            assert a2_full.effective_split(i).split_dims == (1, 1)

    def test_c3_both_summands_split(self, c3_2):
        assert c3_2.effective_split(1).split_dims == (4, 4)
        assert c3_2.effective_split(2).split_dims == (3, 3)

    def test_cp2_is_quaternionic(self, cp2):
        """Test the criterion holding on an irreducible summand of A2{1}."""
        assert is_reducible(cp2, 1)
        assert orbit_irreducibility_oracle(cp2, 1)
        assert not cp2.is_effectively_split(1)
        assert cp2.representation_type(1) == "quaternionic"
        with pytest.raises(NotReducible):
            split_summand(cp2, 1)

    def test_cp2_finding(self, cp2):
        findings = reducibility_findings(cp2)
        assert len(findings) == 1
        assert findings[0].kind == "quaternionic"
        assert "orbit oracle says irreducible" in findings[0].describe()

    def test_b3_summands_are_complex(self, b3_3):
        for i in (1, 2):
            assert b3_3.summand_dim(i) == 6
            assert not is_reducible(b3_3, i)
            assert b3_3.representation_type(i) == "complex"
        assert reducibility_findings(b3_3) == []

    def test_g2_quaternionic_findings(self, g2_1):
        """Test that G2{1} reports spin-1/2 summands 1 and 3 but not m_2."""
        findings = reducibility_findings(g2_1)
        assert [f.summand_index for f in findings] == [1, 3]
        assert all(f.kind == "quaternionic" for f in findings)
        assert g2_1.is_effectively_split(2)

    def test_criterion_agrees_with_oracle_on_real_summands(self, c3_2, b2_1):
        for m in (c3_2, b2_1):
            assert reducibility_findings(m) == []

    @pytest.mark.parametrize("fixture", ["g2_1", "b2_1", "c3_2", "b3_3", "cp2"])
    def test_pp3_pp4(self, fixture, request):
        m = request.getfixturevalue(fixture)
        for i in range(1, m.s_count + 1):
            assert pp3_check(m, i)
            assert pp4_check(m, i)

    def test_lagrangian_grassmannian_breaks_pp3(self):
        """
        Test C4{4}: e1+e2 and e3+e4 restrict to opposite a₁-weights, yet the
        lowest root 2e4 and highest root 2e1 fail the criterion and m is of
        complex type (Sym² of the standard SU(4)-module).
        """
        m = mspace("C", 4, (4,))
        assert m.s_count == 1
        assert m.summand_dim(1) == 20
        assert m.flag.fiber(1)[0] == (0, 0, 0, 1)
        assert not is_reducible(m, 1)
        assert orbit_irreducibility_oracle(m, 1)
        assert m.representation_type(1) == "complex"
        assert not pp3_check(m, 1)
        assert pp4_check(m, 1)
        assert reducibility_findings(m) == []


class TestPieces:
    """Test pieces and equivariant maps between them."""

    def test_b2_pieces(self, b2_1):
        assert [p.label for p in b2_1.pieces()] == ["s", "n1^1", "n2^1"]
        assert cross_summand_couplings(b2_1) == []

    def test_real_halves_are_equivalent(self, b2_1):
        _, n1, n2 = b2_1.pieces()
        assert equivariant_map_dimension(b2_1, n1, n2) == 1

    def test_quaternionic_commutant(self, cp2):
        """Test that the commutant of a quaternionic summand has dimension 4."""
        s, m1 = cp2.pieces()
        assert equivariant_map_dimension(cp2, m1, m1) == 4
        assert equivariant_map_dimension(cp2, s, m1) == 0
