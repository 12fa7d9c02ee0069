"""Tests for exact linear algebra: row reduction, solving with certificates, spans."""

from fractions import Fraction as F

from mspace_go.lie import linalg
from mspace_go.lie.linalg import SpanReducer


class TestRowReduction:
    """Test rref, rank, nullspace and inverse."""

    def test_rank_of_dependent_rows(self):
        rows = [[F(1), F(2), F(3)], [F(2), F(4), F(6)], [F(0), F(1), F(1)]]
        assert linalg.rank(rows, 3) == 2

    def test_rref_empty(self):
        """Test that an empty matrix reduces to nothing."""
        assert linalg.rref([], 3) == ([], ())

    def test_nullspace_vectors_are_annihilated(self):
        """Test that every nullspace vector is killed by the matrix."""
        rows = [[F(1), F(1), F(0), F(-1)], [F(0), F(1), F(1), F(0)]]
        kernel = linalg.nullspace(rows, 4)
        assert len(kernel) == 2
        for v in kernel:
            assert linalg.mat_vec(rows, v) == [F(0), F(0)]

    def test_inverse(self):
        a = [[F(2), F(1)], [F(1), F(1)]]
        inv = linalg.inverse(a)
        assert linalg.mat_mul(a, inv) == [[F(1), F(0)], [F(0), F(1)]]

    def test_leading_principal_minors(self):
        a = [[F(2), F(1)], [F(1), F(1)]]
        assert linalg.leading_principal_minors(a) == [F(2), F(1)]


class TestSolve:
    """Test solve() on consistent and inconsistent systems."""

    def test_consistent_system(self):
        """Test that a consistent system returns a particular solution."""
        a = [[F(1), F(1)], [F(1), F(-1)]]
        b = [F(3), F(1)]
        result = linalg.solve(a, b, 2)
        assert result.feasible
        assert linalg.mat_vec(a, result.solution) == b
        assert result.certificate is None
        assert result.rank_a == result.rank_augmented == 2

    def test_inconsistent_system_has_certificate(self):
        """Test that y·A = 0 and y·b != 0 for the returned certificate."""
        a = [[F(1), F(2)], [F(2), F(4)]]
        b = [F(1), F(3)]
        result = linalg.solve(a, b, 2)
        assert not result.feasible
        y = result.certificate
        assert linalg.mat_vec(linalg.transpose(a), y) == [F(0), F(0)]
        assert sum(yi * bi for yi, bi in zip(y, b)) != 0
        assert result.rank_a < result.rank_augmented

    def test_no_rows_is_feasible(self):
        result = linalg.solve([], [], 3)
        assert result.feasible
        assert result.solution == [F(0)] * 3


class TestSpanReducer:
    """Test incremental span saturation."""

    def test_add_and_contains(self):
        span = SpanReducer()
        assert span.add({0: F(1), 1: F(1)})
        assert span.add({1: F(1), 2: F(-1)})
        assert not span.add({0: F(2), 1: F(3), 2: F(-1)})
        assert span.contains({0: F(1), 2: F(1)})
        assert not span.contains({2: F(1)})
        assert len(span) == 2

    def test_basis_is_reduced(self):
        """Test that each basis vector has a unit pivot absent from the others."""
        span = SpanReducer()
        span.add({0: F(2), 1: F(4)})
        span.add({0: F(1), 1: F(3)})
        basis = span.basis()
        assert basis == [{0: F(1)}, {1: F(1)}]

    def test_zero_vector_is_ignored(self):
        span = SpanReducer()
        assert not span.add({})
        assert len(span) == 0
