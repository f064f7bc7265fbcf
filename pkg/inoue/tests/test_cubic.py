# Licensed under a 3-clause BSD style license - see LICENSE.rst
from fractions import Fraction

import numpy as np
import pytest
from numpy.testing import assert_allclose

from inoue import (BoundOverflowError, InadmissibleError, NonSquareRatioError)
from inoue.cubic import (CubicInput, companion_matrix, cubic_disc, admissible_cubic,
                         stable_ideals, colon_lattice, similarity_invariant,
                         are_equivalent, ideal_classes, classify_type1,
                         order_index_ratio, _embedding, _lll)
from inoue.helpers import ideal_search
from inoue.intmat import IMat, hermite_normal_form


@pytest.fixture
def default_search(monkeypatch):
    monkeypatch.delenv('INOUE_NORM_BOUND', raising=False)
    ideal_search.set()
    yield ideal_search
    ideal_search.set()


@pytest.mark.parametrize('theta2, theta1, disc', [(2, -2, -83), (8, 0, -2075),
                                                  (0, 0, -27), (3, -1, -176),
                                                  (5, 5, 48), (-1, -1, 0)])
def test_cubic_disc(theta2, theta1, disc):
    assert cubic_disc(theta2, theta1) == disc
    assert CubicInput(theta2, theta1).disc == disc


def test_companion_matrix():
    M = companion_matrix(2, -2)
    assert M == IMat([[0, 1, 0], [0, 0, 1], [1, 2, 2]])
    P = CubicInput(2, -2)
    alpha, beta = P.roots()
    # Rows act on (1, α, α²).
    powers = np.array([1., alpha, alpha ** 2])
    assert_allclose(np.array(M.tolist(), dtype=float) @ powers, alpha * powers)
    assert_allclose(alpha * abs(beta) ** 2, 1.)
    assert alpha > 1 and beta.imag > 0


class TestAdmissible:
    @pytest.mark.parametrize('theta2, theta1', [(2, -2), (8, 0), (3, -1), (4, 1)])
    def test_admissible(self, theta2, theta1):
        verdict = admissible_cubic(theta2, theta1)
        assert verdict.admissible
        assert verdict.reason == ''
        assert verdict.rational_roots == ()

    def test_three_real_roots(self):
        verdict = admissible_cubic(5, 5)
        assert not verdict.admissible
        assert verdict.disc == 48
        assert verdict.reason.startswith('discriminant 48 is not negative')
        assert verdict.rational_roots == (1,)

    def test_double_root(self):
        verdict = admissible_cubic(-1, -1)
        assert not verdict.admissible
        assert verdict.rational_roots == (1, -1)

    def test_p1_not_negative(self):
        verdict = admissible_cubic(2, 3)
        assert not verdict.admissible
        assert 'P(1) = 1' in verdict.reason

    @pytest.mark.parametrize('func', [ideal_classes, classify_type1])
    def test_raises(self, func):
        with pytest.raises(InadmissibleError, match='not admissible'):
            func(0, 0)


class TestIdeals:
    def test_unit_ideal(self):
        ideals = stable_ideals(2, -2, 1)
        assert len(ideals) == 1
        assert ideals[0].hnf_basis == IMat.identity(3)
        assert ideals[0].action_matrix() == companion_matrix(2, -2)

    @pytest.mark.parametrize('theta2, theta1', [(2, -2), (8, 0)])
    def test_stable(self, theta2, theta1):
        ideals = stable_ideals(theta2, theta1, 12)
        assert [ideal.norm for ideal in ideals] == sorted(ideal.norm for ideal in ideals)
        for ideal in ideals:
            assert ideal.is_stable()
            assert ideal.hnf_basis.det() == ideal.norm
            ideal.action_matrix()

    def test_norm_two(self):
        # P ≡ (X + 1)(X² + X + 1) mod 2: one prime of norm 2.
        ideals = [ideal for ideal in stable_ideals(2, -2, 2) if ideal.norm == 2]
        assert len(ideals) == 1
        assert (1, 1, 0) in ideals[0]
        assert (1, 0, 0) not in ideals[0]

    def test_primitive(self):
        doubled = IMat.identity(3) * 2
        assert doubled not in [i.hnf_basis for i in stable_ideals(2, -2, 8)]
        assert doubled in [i.hnf_basis for i in stable_ideals(2, -2, 8, primitive=False)]

    def test_overflow(self, default_search):
        with pytest.raises(BoundOverflowError):
            stable_ideals(2, -2, ideal_search.max_norm_bound + 1)

    def test_colon_unit(self):
        unit = stable_ideals(2, -2, 1)[0]
        colon = colon_lattice(unit, unit)
        assert colon.basis == IMat.identity(3)
        assert colon.denominator == 1


class TestEquivalence:
    def test_lll_same_lattice(self):
        P = CubicInput(8, 0)
        for I in stable_ideals(8, 0, 13):
            colon = colon_lattice(I, stable_ideals(8, 0, 1)[0])
            rows = colon.basis.tolist()
            reduced = _lll(rows, _embedding(P))
            assert abs(IMat(reduced).det()) == abs(IMat(rows).det())
            assert hermite_normal_form(IMat(reduced)) == hermite_normal_form(IMat(rows))

    def test_identical(self):
        unit = stable_ideals(2, -2, 1)[0]
        verdict = are_equivalent(unit, unit)
        assert verdict.equivalent
        assert verdict.method == 'identical'
        assert verdict.multiplier == (Fraction(1), Fraction(0), Fraction(0))

    def test_principal(self, default_search):
        unit, prime = stable_ideals(2, -2, 2)
        assert similarity_invariant(unit) == similarity_invariant(prime)
        verdict = are_equivalent(unit, prime)
        assert verdict.equivalent
        assert verdict.method == 'search'
        assert all(x.denominator == 1 for x in verdict.multiplier)

    def test_exhaustive_principal(self, default_search):
        unit, prime = stable_ideals(2, -2, 2)
        verdict = are_equivalent(unit, prime, height=0)
        assert verdict.equivalent
        assert verdict.method == 'exhaustive'
        w0, w1, w2 = (int(x) for x in verdict.multiplier)
        M = companion_matrix(2, -2)
        multiplication = IMat.identity(3) * w0 + M * w1 + (M @ M) * w2
        assert abs(multiplication.det()) == prime.norm

    def test_box_guard(self, default_search):
        unit, prime = stable_ideals(2, -2, 2)
        ideal_search.set(max_box=1)
        verdict = are_equivalent(unit, prime, height=0)
        assert verdict.equivalent is None
        assert verdict.method == 'exhausted'

    def test_symmetric(self, default_search):
        ideals = stable_ideals(3, -1, 6)
        for I in ideals:
            for J in ideals:
                assert (are_equivalent(I, J).equivalent
                        == are_equivalent(J, I).equivalent)

    def test_different_orders(self):
        with pytest.raises(InadmissibleError):
            are_equivalent(stable_ideals(2, -2, 1)[0], stable_ideals(8, 0, 1)[0])


class TestClassify:
    def test_minkowski_bound(self, default_search):
        assert ideal_search.norm_bound_for(-83) == 3
        assert ideal_search.norm_bound_for(-2075) == 13

    def test_class_number_one(self, default_search):
        result = ideal_classes(2, -2)
        assert result.h == 1
        assert result.bound == 3
        assert result.stable is True
        assert result.conclusive
        assert result.representatives[0].norm == 1

    def test_explicit_bound(self, default_search):
        result = ideal_classes(2, -2, norm_bound=2, check_stability=False)
        assert result.h == 1
        assert result.bound == 2
        assert result.stable is None
        assert len(result.classes[0]) == 2

    def test_classify(self, default_search):
        report = classify_type1(2, -2)
        assert report.admissible
        assert report.disc == -83
        assert report.h == 1
        assert report.count == 2
        assert [c.beta_label for c in report.classes] == ['beta', 'beta_bar']

    @pytest.mark.parametrize('func', [ideal_classes, classify_type1])
    @pytest.mark.parametrize('bound', [0, -3, 2.5])
    def test_bad_bound(self, default_search, func, bound):
        with pytest.raises(InadmissibleError, match='positive integer'):
            func(2, -2, norm_bound=bound)

    def test_class_number_two(self, default_search):
        result = ideal_classes(3, -1)
        assert result.h == 2
        assert result.stable is True
        assert result.conclusive
        report = classify_type1(3, -1)
        assert report.count == 4


class TestClassStability:
    """Class counts under re-doubled bounds, and consistency of the
    partition with the pairwise equivalence test."""

    @pytest.mark.parametrize('theta2, theta1', [(2, -2), (8, 0)])
    def test_redoubling(self, default_search, theta2, theta1):
        result = ideal_classes(theta2, theta1)
        assert result.stable is True
        assert result.conclusive
        assert result.representatives[0].hnf_basis == IMat.identity(3)
        quadrupled = ideal_classes(theta2, theta1, norm_bound=4 * result.bound,
                                   check_stability=False)
        assert quadrupled.conclusive
        assert quadrupled.h == result.h

    @pytest.mark.parametrize('theta2, theta1', [(2, -2), (8, 0), (3, -1)])
    def test_partition_consistent(self, default_search, theta2, theta1):
        result = ideal_classes(theta2, theta1, check_stability=False)
        label = {ideal: i for i, members in enumerate(result.classes)
                 for ideal in members}
        ideals = list(label)
        for a, I in enumerate(ideals):
            for J in ideals[a + 1:]:
                verdict = are_equivalent(I, J)
                assert verdict.equivalent is not None
                assert verdict.equivalent == (label[I] == label[J])
                if verdict.equivalent:
                    w = verdict.multiplier
                    assert w is not None and any(w)

    def test_type1_count(self, default_search):
        report = classify_type1(8, 0)
        assert report.conclusive
        assert report.count == 2 * report.h


class TestOrderIndex:
    def test_suborder(self):
        assert order_index_ratio(8, 0, 2, -2) == 5

    def test_same(self):
        assert order_index_ratio(2, -2, 2, -2) == 1

    def test_non_square(self):
        with pytest.raises(NonSquareRatioError):
            order_index_ratio(2, -2, 3, -1)
