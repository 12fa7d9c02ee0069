"""
Tests for metric specs and their validation into operators Λ on n.

Validates:
- MetricSpec parsing (JSON/YAML) and model-level checks
- Compilation of scalar, split and root-weight summands
- Validation failures: shape, positivity, equivariance
"""

from fractions import Fraction

import pytest
from pydantic import ValidationError

from mspace_go.errors import NotEquivariant, NotPositiveDefinite, ShapeMismatch
from mspace_go.geometry.metric import (
    diagonal_metric,
    fibration_metric,
    metric_spec,
    standard_metric,
    standard_spec,
    validate,
)
from mspace_go.models.metric_spec import MetricSpec, ScalarSummand, SplitSummand


class TestMetricSpec:
    """Test the wire model of metric specs."""

    def test_from_json(self):
        spec = MetricSpec.from_json(
            '{"s_block": [["1/6"]], "summands": [{"id": 1, "kind": "scalar", "lambda": "2"}]}'
        )
        assert spec.s_block == [[Fraction(1, 6)]]
        assert isinstance(spec.summand(1), ScalarSummand)
        assert spec.summand(1).lam == 2

    def test_from_yaml_split(self):
        spec = MetricSpec.from_yaml(
            """
s_block: [["1"]]
summands:
  - id: 1
    kind: split
    mu1: "2"
    mu2: "1"
    coupling: "1/8"
"""
        )
        params = spec.summand(1)
        assert isinstance(params, SplitSummand)
        assert params.coupling == Fraction(1, 8)

    def test_json_round_trip(self, cp2):
        spec = standard_spec(cp2, Fraction(3, 2))
        assert MetricSpec.from_json(spec.to_json()) == spec

    def test_asymmetric_s_block(self):
        with pytest.raises(ValidationError, match="not symmetric"):
            MetricSpec.model_validate({
                "s_block": [["1", "1"], ["0", "1"]],
                "summands": [{"id": 1, "kind": "scalar", "lambda": "1"}],
            })

    def test_ids_without_gaps(self):
        with pytest.raises(ValidationError, match="without gaps"):
            MetricSpec.model_validate({
                "s_block": [["1"]],
                "summands": [{"id": 2, "kind": "scalar", "lambda": "1"}],
            })

    def test_float_rejected(self):
        with pytest.raises(ValidationError):
            MetricSpec.model_validate({
                "s_block": [[0.5]],
                "summands": [{"id": 1, "kind": "scalar", "lambda": "1"}],
            })


class TestCompile:
    """Test compiled operators."""

    def test_standard_is_identity(self, g2_1):
        op = standard_metric(g2_1)
        assert op.standard_scale() == 1
        assert op.is_standard_homothety
        for x in g2_1.n_basis:
            assert op.apply(x) == x

    def test_homothety(self, b2_1):
        op = validate(standard_spec(b2_1, Fraction(2)), b2_1)
        assert op.standard_scale() == 2

    def test_diagonal_eigenvalues(self, a2_full):
        op = diagonal_metric(a2_full, [Fraction(1), Fraction(2), Fraction(3)], s_scale=Fraction(5))
        alg = a2_full.algebra
        assert op.eigenvalue(alg.A((1, 0))) == 1
        assert op.eigenvalue(alg.B((0, 1))) == 2
        assert op.eigenvalue(alg.A((1, 1))) == 3
        assert op.eigenvalue(a2_full.s_basis[1]) == 5
        assert op.eigenvalue(alg.A((1, 0)) + alg.A((0, 1))) is None
        assert not op.is_standard_homothety

    def test_inner_product(self, cp2):
        op = fibration_metric(cp2, Fraction(2), Fraction(3))
        x = cp2.algebra.A((1, 0))
        h = cp2.s_basis[0]
        assert op.inner(x, x) == 3 * op.mspace.n_gram[1][1]
        assert op.inner(h, h) == 2 * cp2.s_gram[0][0]
        assert op.inner(x, h) == 0

    def test_split_summand(self, b2_1):
        """Test Λu = μ₁u + cJu on n₁ and Λw = μ₂w − cJw on n₂."""
        spec = metric_spec(
            b2_1, b2_1.s_gram, [{"kind": "split", "mu1": "2", "mu2": "1", "coupling": "1/8"}]
        )
        op = validate(spec, b2_1)
        split = b2_1.effective_split(1)
        c = Fraction(1, 8)
        for u in split.n1_basis:
            assert op.apply(u) == u * 2 + b2_1.J(1, u) * c
        for w in split.n2_basis:
            assert op.apply(w) == w - b2_1.J(1, w) * c

    def test_uncoupled_split_has_eigenvalues(self, c3_2):
        spec = metric_spec(
            c3_2, c3_2.s_gram,
            [{"kind": "split", "mu1": "3", "mu2": "1"}, {"kind": "scalar", "lambda": "2"}],
        )
        op = validate(spec, c3_2)
        split = c3_2.effective_split(1)
        assert all(op.eigenvalue(u) == 3 for u in split.n1_basis)
        assert all(op.eigenvalue(w) == 1 for w in split.n2_basis)

    def test_root_weights_equal_is_scalar(self, b2_1):
        spec = metric_spec(b2_1, b2_1.s_gram, [{"kind": "root_weights", "weights": ["2", "2", "2"]}])
        op = validate(spec, b2_1)
        assert op.eigenvalue(b2_1.algebra.A((1, 1))) == 2


class TestValidation:
    """Test rejected metrics."""

    def test_negative_lambda(self, cp2):
        with pytest.raises(NotPositiveDefinite):
            diagonal_metric(cp2, [Fraction(-1)])

    def test_negative_s_scale(self, a2_full):
        with pytest.raises(NotPositiveDefinite):
            diagonal_metric(a2_full, [Fraction(1)] * 3, s_scale=Fraction(-1))

    def test_wrong_summand_count(self, cp2):
        spec = metric_spec(cp2, cp2.s_gram, [{"kind": "scalar", "lambda": "1"}] * 2)
        with pytest.raises(ShapeMismatch):
            validate(spec, cp2)

    def test_wrong_s_block_size(self, cp2):
        spec = metric_spec(cp2, [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]],
                           [{"kind": "scalar", "lambda": "1"}])
        with pytest.raises(ShapeMismatch):
            validate(spec, cp2)

    def test_split_on_irreducible_summand(self, cp2):
        spec = metric_spec(cp2, cp2.s_gram, [{"kind": "split", "mu1": "1", "mu2": "2"}])
        with pytest.raises(ShapeMismatch, match="irreducible"):
            validate(spec, cp2)

    def test_root_weights_count(self, b2_1):
        spec = metric_spec(b2_1, b2_1.s_gram, [{"kind": "root_weights", "weights": ["1", "2"]}])
        with pytest.raises(ShapeMismatch):
            validate(spec, b2_1)

    def test_unequal_root_weights_not_equivariant(self, b2_1):
        """Test that su(2) mixes the three root spaces of B2{1}."""
        spec = metric_spec(b2_1, b2_1.s_gram, [{"kind": "root_weights", "weights": ["1", "2", "1"]}])
        with pytest.raises(NotEquivariant) as info:
            validate(spec, b2_1)
        assert info.value.pair is not None

    def test_root_weights_free_when_k1_is_abelian(self, a2_full):
        """Test that distinct weights per root are fine when K₁ is trivial."""
        spec = metric_spec(
            a2_full, a2_full.s_gram,
            [{"kind": "root_weights", "weights": [str(k)]} for k in (1, 2, 3)],
        )
        assert validate(spec, a2_full).eigenvalue(a2_full.algebra.A((1, 1))) == 3

    def test_lambda_count_for_diagonal(self, a2_full):
        with pytest.raises(ShapeMismatch):
            diagonal_metric(a2_full, [Fraction(1)])
