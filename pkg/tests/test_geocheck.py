"""
Tests for geodesic vectors, g.o. feasibility and the algebraic criteria.

Validates:
- Exact feasibility with replayed witnesses and certificates
- Sampling verdicts, their caveat and determinism
- Equivalent geodesic conditions, the eigenvector test and the fibration criterion
"""

import random
from fractions import Fraction
from itertools import combinations

import pytest

from mspace_go.errors import (
    BadChain,
    EqualEigenvalues,
    NotApplicable,
    NotEigenvectors,
    OutOfSubspace,
    ZeroVector,
)
from mspace_go.geocheck import (
    SAMPLING_CAVEAT,
    FibrationChain,
    ProbeSet,
    VerdictStatus,
    bracket_equation_37,
    check_go_metric,
    find_geodesic,
    go_feasibility,
    is_geodesic_vector,
    prop_p2_conditions,
    prop_p2_crosscheck,
    prop_p3_necessary,
    prop_p5_check,
    prop_p5_crossvalidate,
    two_summand_joint,
)
from mspace_go.geocheck.criteria import split_n_vector, summand_parts
from mspace_go.geocheck.probes import random_k1, random_probes, random_rational, structured_probes
from mspace_go.geometry.catalog import catalog_entries
from mspace_go.geometry.metric import apply, diagonal_metric, fibration_metric, standard_metric
from mspace_go.lie.chevalley import bracket, killing_form

from .conftest import mspace

ONE, TWO = Fraction(1), Fraction(2)
CATALOG = catalog_entries(max_rank=4, include_f4=False)


def space_of(d):
    return mspace(d.algebra.family, d.algebra.rank, d.painted)


def unequal_metric(m):
    """1/2·B on s and λ_i = i + 1 on m_i: every block has its own eigenvalue."""
    return diagonal_metric(m, [Fraction(i + 1) for i in range(1, m.s_count + 1)], s_scale=Fraction(1, 2))


def random_in(basis, rng):
    while True:
        v = sum((b * random_rational(rng) for b in basis[1:]), basis[0] * random_rational(rng))
        if v:
            return v


@pytest.fixture(scope="module")
def unequal(a2_full):
    """λ = (1, 2, 1) on A2{1,2}: not g.o."""
    return diagonal_metric(a2_full, [ONE, TWO, ONE])


class TestGoFeasibility:
    """Test the exact lift condition [a + x, Λx]_n = 0."""

    def test_standard_metric_lift_is_zero(self, a2_full):
        alg = a2_full.algebra
        verdict = go_feasibility(a2_full, standard_metric(a2_full), alg.A((1, 0)) + alg.A((0, 1)))
        assert verdict.status == VerdictStatus.FEASIBLE
        assert not verdict.witness

    def test_unequal_lambdas_infeasible(self, a2_full, unequal):
        """Test that A_α1 + A_α2 has no geodesic lift when λ_1 != λ_2."""
        alg = a2_full.algebra
        x = alg.A((1, 0)) + alg.A((0, 1))
        verdict = go_feasibility(a2_full, unequal, x)
        assert verdict.status == VerdictStatus.INFEASIBLE
        r = verdict.certificate
        assert killing_form(bracket(x, apply(unequal, x)), r) != 0
        assert verdict.rank_coefficient < verdict.rank_augmented

    def test_lift_in_k1(self, cp2):
        """Test a non-zero lift a ∈ k₁ on A2{1} with a non-standard metric."""
        op = fibration_metric(cp2, TWO, ONE)
        x = cp2.s_basis[0] + cp2.algebra.A((1, 0))
        verdict = go_feasibility(cp2, op, x)
        assert verdict.ok
        a = verdict.witness
        assert cp2.in_k1(a)
        assert not cp2.project_to_n(bracket(a + x, apply(op, x)))

    def test_zero_vector(self, cp2):
        with pytest.raises(ZeroVector):
            go_feasibility(cp2, standard_metric(cp2), cp2.algebra.zero())

    def test_out_of_subspace(self, cp2):
        with pytest.raises(OutOfSubspace):
            go_feasibility(cp2, standard_metric(cp2), cp2.algebra.A((0, 1)))


class TestGeodesicVectors:
    """Test the geodesic lemma and lifted vectors."""

    def test_s_vectors_are_geodesic(self, a2_full, unequal):
        verdict = is_geodesic_vector(a2_full, unequal, a2_full.s_basis[0])
        assert verdict.status == VerdictStatus.GEODESIC

    def test_not_geodesic_has_direction(self, a2_full, unequal):
        alg = a2_full.algebra
        verdict = is_geodesic_vector(a2_full, unequal, alg.A((1, 0)) + alg.A((0, 1)))
        assert verdict.status == VerdictStatus.NOT_GEODESIC
        assert verdict.certificate in a2_full.n_basis

    def test_zero(self, a2_full, unequal):
        with pytest.raises(ZeroVector):
            is_geodesic_vector(a2_full, unequal, a2_full.algebra.zero())

    def test_find_geodesic(self, cp2):
        op = fibration_metric(cp2, TWO, ONE)
        x = cp2.s_basis[0] + cp2.algebra.B((1, 1))
        verdict = find_geodesic(cp2, op, x)
        assert verdict.status == VerdictStatus.GEODESIC
        assert cp2.project_to_n(verdict.witness) == x
        assert is_geodesic_vector(cp2, op, verdict.witness).ok

    def test_find_geodesic_infeasible(self, a2_full, unequal):
        alg = a2_full.algebra
        verdict = find_geodesic(a2_full, unequal, alg.A((1, 0)) + alg.A((0, 1)))
        assert verdict.status == VerdictStatus.INFEASIBLE


class TestSampling:
    """Test check_go_metric and probe sets."""

    def test_standard_passes_with_caveat(self, b2_1):
        verdict = check_go_metric(b2_1, standard_metric(b2_1), ProbeSet(random_count=10))
        assert verdict.status == VerdictStatus.PASSED_SAMPLES
        assert verdict.caveat == SAMPLING_CAVEAT
        assert verdict.count == len(structured_probes(b2_1)) + 10
        assert verdict.to_report().caveat == SAMPLING_CAVEAT

    def test_refuted_with_counterexample(self, a2_full, unequal):
        verdict = check_go_metric(a2_full, unequal, ProbeSet(random_count=10))
        assert verdict.status == VerdictStatus.REFUTED
        assert go_feasibility(a2_full, unequal, verdict.counterexample).status == VerdictStatus.INFEASIBLE
        report = verdict.to_report()
        assert report.status == "REFUTED"
        assert report.counterexample

    def test_refutation_is_stable_under_more_probes(self, a2_full, unequal):
        """Test that enlarging the probe set keeps the same first counterexample."""
        small = check_go_metric(a2_full, unequal, ProbeSet(random_count=0))
        large = check_go_metric(a2_full, unequal, ProbeSet(random_count=40))
        assert small.status == large.status == VerdictStatus.REFUTED
        assert small.count == large.count
        assert small.counterexample == large.counterexample

    def test_probes_are_deterministic(self, g2_1):
        first = ProbeSet(random_count=8, seed=7).vectors(g2_1)
        second = ProbeSet(random_count=8, seed=7).vectors(g2_1)
        assert first == second
        assert all(x and g2_1.in_n(x) for x in first)
        assert random_probes(g2_1, 8, 7) != random_probes(g2_1, 8, 8)

    def test_random_prefix(self, cp2):
        assert random_probes(cp2, 12, 3)[:5] == random_probes(cp2, 5, 3)

    def test_cp2_berger_metrics_pass(self, cp2):
        """Test that every sampled vector of A2{1} lifts under g = 2B|_s + B|_m."""
        verdict = check_go_metric(cp2, fibration_metric(cp2, TWO, ONE), ProbeSet(random_count=20))
        assert verdict.status == VerdictStatus.PASSED_SAMPLES


class TestGeodesicConditions:
    """Test the three equivalent geodesic conditions."""

    def test_all_hold_for_standard(self, a2_full):
        alg = a2_full.algebra
        x = alg.A((1, 0)) + alg.B((1, 1))
        assert prop_p2_conditions(a2_full, standard_metric(a2_full), alg.zero(), x) == (True, True, True)

    def test_all_fail_together(self, a2_full, unequal):
        alg = a2_full.algebra
        x = alg.A((1, 0)) + alg.A((0, 1))
        assert prop_p2_conditions(a2_full, unequal, alg.zero(), x) == (False, False, False)

    def test_crosscheck_on_probes(self, cp2):
        op = fibration_metric(cp2, Fraction(3), ONE)
        k = cp2.k1_basis
        for x in ProbeSet(random_count=5).vectors(cp2):
            for a in (cp2.algebra.zero(), k[0], k[1] - k[2] * 2):
                assert prop_p2_crosscheck(cp2, op, a, x)

    def test_a_must_be_in_k1(self, a2_full, unequal):
        alg = a2_full.algebra
        with pytest.raises(OutOfSubspace):
            prop_p2_conditions(a2_full, unequal, alg.A((1, 0)), alg.A((0, 1)))

    @pytest.mark.slow
    @pytest.mark.parametrize("d", CATALOG, ids=str)
    def test_conditions_agree_on_seeded_pairs(self, d):
        """Test (2), (3), (4) on 1000 seeded random (a, x) pairs."""
        m = space_of(d)
        op = unequal_metric(m)
        rng = random.Random(42)
        for x in random_probes(m, 1000, 42):
            assert prop_p2_crosscheck(m, op, random_k1(m, rng), x)

    @pytest.mark.slow
    @pytest.mark.parametrize("d", CATALOG, ids=str)
    def test_conditions_hold_at_witnesses(self, d):
        """Test that all three conditions hold for the lift of every feasible probe."""
        m = space_of(d)
        op = unequal_metric(m)
        for x in ProbeSet(random_count=10).vectors(m):
            verdict = go_feasibility(m, op, x)
            if verdict.status == VerdictStatus.FEASIBLE:
                assert prop_p2_conditions(m, op, verdict.witness, x) == (True, True, True)


class TestEigenvectorCondition:
    """Test the necessary condition for eigenvectors with distinct eigenvalues."""

    def test_infeasible(self, a2_full, unequal):
        alg = a2_full.algebra
        verdict = prop_p3_necessary(a2_full, unequal, alg.A((1, 0)), alg.A((0, 1)))
        assert verdict.status == VerdictStatus.INFEASIBLE
        assert verdict.certificate

    def test_commuting_eigenvectors(self, a3_full):
        """Test orthogonal simple roots α1, α3: [X, Y] = 0 is trivially solvable."""
        op = diagonal_metric(a3_full, [ONE, ONE, TWO, ONE, ONE, ONE])
        alg = a3_full.algebra
        verdict = prop_p3_necessary(a3_full, op, alg.A((1, 0, 0)), alg.A((0, 0, 1)))
        assert verdict.status == VerdictStatus.FEASIBLE

    def test_not_eigenvectors(self, a2_full, unequal):
        alg = a2_full.algebra
        with pytest.raises(NotEigenvectors):
            prop_p3_necessary(a2_full, unequal, alg.A((1, 0)) + alg.A((0, 1)), alg.A((1, 1)))

    def test_equal_eigenvalues(self, a2_full, unequal):
        alg = a2_full.algebra
        with pytest.raises(EqualEigenvalues):
            prop_p3_necessary(a2_full, unequal, alg.A((1, 0)), alg.A((1, 1)))

    def test_infeasible_matches_lift_of_sum(self, a2_full, unequal):
        """Test that P3 decides exactly whether X + Y has a geodesic lift."""
        alg = a2_full.algebra
        for x, y in [(alg.A((1, 0)), alg.A((0, 1))), (alg.B((0, 1)), alg.A((1, 1)))]:
            p3 = prop_p3_necessary(a2_full, unequal, x, y)
            assert p3.status == go_feasibility(a2_full, unequal, x + y).status

    @pytest.mark.slow
    @pytest.mark.parametrize("d", CATALOG, ids=str)
    def test_infeasible_implies_refuted(self, d):
        """
        Test seeded eigenvector pairs from distinct blocks of a non-standard
        metric: P3 agrees with the lift of X + Y, and any INFEASIBLE comes with
        REFUTED from sampling.
        """
        m = space_of(d)
        op = unequal_metric(m)
        rng = random.Random(42)
        blocks = [list(m.s_basis)] + [m.summand_elements(i) for i in range(1, m.s_count + 1)]
        infeasible = False
        for p, q in combinations(range(len(blocks)), 2):
            for _ in range(3):
                x, y = random_in(blocks[p], rng), random_in(blocks[q], rng)
                verdict = prop_p3_necessary(m, op, x, y)
                assert verdict.status == go_feasibility(m, op, x + y).status
                infeasible = infeasible or verdict.status == VerdictStatus.INFEASIBLE
        if infeasible:
            refuted = check_go_metric(m, op, ProbeSet(random_count=20))
            assert refuted.status == VerdictStatus.REFUTED
            assert go_feasibility(m, op, refuted.counterexample).status == VerdictStatus.INFEASIBLE


class TestFibrationCriterion:
    """Test the criterion for g = aB|_s + bB|_m through k₁ ⊂ k ⊂ g."""

    def test_cp2_feasible(self, cp2):
        alg = cp2.algebra
        verdict = prop_p5_check(cp2, cp2.s_basis[0], alg.A((1, 0)))
        assert verdict.status == VerdictStatus.FEASIBLE
        X = verdict.witness
        assert not bracket(X + cp2.s_basis[0], alg.A((1, 0)))

    def test_trivial_k1_infeasible(self, a2_full):
        verdict = prop_p5_check(a2_full, a2_full.s_basis[0], a2_full.algebra.A((1, 0)))
        assert verdict.status == VerdictStatus.INFEASIBLE

    def test_vectors_must_lie_in_the_chain(self, cp2):
        alg = cp2.algebra
        with pytest.raises(BadChain):
            prop_p5_check(cp2, alg.A((1, 0)), alg.A((1, 1)))
        with pytest.raises(BadChain):
            prop_p5_check(cp2, cp2.s_basis[0], cp2.s_basis[0])

    def test_bad_chain(self, cp2):
        chain = FibrationChain.for_mspace(cp2)
        broken = FibrationChain(
            k1_basis=chain.k1_basis,
            h_basis=chain.fiber_basis,
            fiber_basis=chain.fiber_basis,
            base_basis=chain.base_basis,
        )
        with pytest.raises(BadChain, match="does not contain k1"):
            broken.check()
        chain.check()

    def test_split_n_vector(self, b2_1):
        x = b2_1.s_basis[0] * 3 + b2_1.algebra.A((1, 1))
        v_F, v_C = split_n_vector(b2_1, x)
        assert v_F == b2_1.s_basis[0] * 3
        assert v_C == b2_1.algebra.A((1, 1))

    @pytest.mark.parametrize("fixture", ["cp2", "b2_1"])
    def test_crossvalidation_agrees(self, fixture, request):
        m = request.getfixturevalue(fixture)
        result = prop_p5_crossvalidate(m, ONE, TWO, ProbeSet(random_count=10))
        assert result.consistent
        assert result.probes_run == len(structured_probes(m)) + 10

    def test_equal_scales_not_applicable(self, cp2):
        with pytest.raises(NotApplicable):
            prop_p5_crossvalidate(cp2, ONE, ONE)


class TestTwoSummandEquations:
    """Test summand parts and the two-summand bracket systems."""

    def test_summand_parts(self, a2_full):
        alg = a2_full.algebra
        s = a2_full.s_basis[0]
        x = s + alg.A((1, 0)) + alg.B((1, 1)) * 2
        assert summand_parts(a2_full, x) == [s, alg.A((1, 0)), alg.zero(), alg.B((1, 1)) * 2]

    def test_zero_parts_are_trivially_solvable(self, b2_2):
        alg = b2_2.algebra
        V = b2_2.s_basis[0]
        X1 = alg.A(b2_2.flag.fiber(1)[0])
        zero = alg.zero()
        assert bracket_equation_37(b2_2, zero, X1, zero).status == VerdictStatus.FEASIBLE
        verdict = two_summand_joint(b2_2, ONE, ONE, ONE, V, zero, zero)
        assert verdict.status == VerdictStatus.FEASIBLE
        assert not verdict.witness
