# Licensed under a 3-clause BSD style license - see LICENSE.rst
from fractions import Fraction
import itertools

import pytest

from inoue import DegenerateDiscriminantError, InoueError, RadicandMismatchError
from inoue.exact_arith import (QuadElem, ComplexPair, cf_expand, fundamental_unit,
                               squarefree_part, as_fraction)


PHI = QuadElem('1/2', '1/2', 5)
ALPHA3 = QuadElem('3/2', '1/2', 5)


class TestQuadElem:
    def test_golden_ratio_norm(self):
        assert PHI * PHI.conjugate() == -1
        assert PHI.norm() == -1
        assert PHI.trace() == 1

    def test_identity(self):
        x = QuadElem(2, -3, 7)
        assert x + 0 == x
        assert 0 + x == x
        assert x * 1 == x

    def test_alpha_plus_inverse(self):
        total = ALPHA3 + ALPHA3.inverse()
        assert total == 3
        assert total.is_integer()
        assert total.to_integer() == 3

    def test_field_axioms(self):
        values = [QuadElem(a, b, 3) for a, b in itertools.product((-2, 1, '1/3'),
                                                                  (-1, '2/5', 4))]
        for x, y in itertools.product(values, repeat=2):
            assert (x * y) / y == x
            assert x + y == y + x
            assert x - y == -(y - x)
            assert x * (y + 1) == x * y + x

    def test_power(self):
        assert PHI ** 2 == PHI + 1
        assert PHI ** -1 == PHI - 1
        assert ALPHA3 == PHI ** 2
        assert QuadElem.sqrt(5) ** 0 == 1

    def test_sqrt(self):
        x = QuadElem.sqrt(12)
        assert x.d == 3
        assert x.b == 2
        assert x * x == 12

    @pytest.mark.parametrize('n', [0, 1, 4, 9])
    def test_sqrt_degenerate(self, n):
        with pytest.raises(DegenerateDiscriminantError):
            QuadElem.sqrt(n)

    @pytest.mark.parametrize('d', [None, 1, 4, 12])
    def test_bad_radicand(self, d):
        with pytest.raises(ValueError, match='squarefree'):
            QuadElem(1, 1, d)

    def test_radicand_mismatch(self):
        with pytest.raises(RadicandMismatchError):
            QuadElem(0, 1, 2) + QuadElem(0, 1, 3)
        with pytest.raises(RadicandMismatchError):
            QuadElem(0, 1, 2) * QuadElem(1, 1, 5)

    def test_rational_adopts_radicand(self):
        assert QuadElem(3, 0, 2) + QuadElem(0, 1, 3) == QuadElem(3, 1, 3)

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            QuadElem(1, 1, 2) / QuadElem(0, 0, 2)
        with pytest.raises(ZeroDivisionError):
            QuadElem(0, 0, 2).inverse()

    def test_str_repr(self):
        assert str(PHI) == '1/2 + 1/2·√5'
        assert str(QuadElem(0, -1, 2)) == '-√2'
        assert str(QuadElem(2, 0, 2)) == '2'
        assert repr(PHI) == "QuadElem('1/2', '1/2', d=5)"

    def test_hash(self):
        assert hash(QuadElem(3, 0, 5)) == hash(3)
        assert len({PHI, QuadElem(Fraction(1, 2), Fraction(1, 2), 5)}) == 1


class TestCompare:
    def test_alpha_greater_than_one(self):
        assert ALPHA3 > 1
        assert 1 < ALPHA3

    def test_conjugate_root_negative(self):
        assert PHI.conjugate() < 0
        assert PHI.conjugate().sign() == -1

    def test_across_fields(self):
        assert QuadElem(2, 1, 3) > ALPHA3
        assert ALPHA3 < QuadElem(2, 1, 3)
        assert QuadElem.sqrt(2) < QuadElem.sqrt(3)
        assert QuadElem(0, -1, 2) > QuadElem(0, -1, 3)
        assert QuadElem.sqrt(2) != QuadElem.sqrt(3)

    def test_sign_near_zero(self):
        # 99² − 70²·2 = 1, so 99 − 70√2 is tiny but positive.
        x = QuadElem(99, -70, 2)
        assert x.sign() == 1
        assert (-x).sign() == -1
        assert QuadElem(0, 0, 2).sign() == 0

    def test_total_order(self):
        values = [QuadElem(a, b, 2) for a in (-3, 0, 2) for b in (-2, 0, 1)]
        ordered = sorted(values)
        floats = [float(x) for x in ordered]
        assert floats == sorted(floats)

    @pytest.mark.parametrize('x, expected', [
        (QuadElem(0, 1, 2), 1),
        (QuadElem(0, -1, 2), -2),
        (QuadElem('1/2', '1/2', 5), 1),
        (QuadElem(99, -70, 2), 0),
        (QuadElem(-3, 0, 2), -3)])
    def test_floor(self, x, expected):
        assert x.floor() == expected


class TestComplexPair:
    def test_rational_arithmetic_stays_exact(self):
        z = ComplexPair(1, 2)
        inv = z.inverse()
        assert inv.re == Fraction(1, 5)
        assert inv.im == Fraction(-2, 5)
        assert z * inv == 1

    def test_quadratic_parts(self):
        z = ComplexPair(PHI, 1)
        assert (z * z.conjugate()).im == 0
        assert z.abs2() == PHI * PHI + 1
        assert z / z == 1

    def test_power(self):
        i = ComplexPair(0, 1)
        assert i ** 2 == -1
        assert i ** -1 == ComplexPair(0, -1)

    def test_zero_division(self):
        with pytest.raises(ZeroDivisionError):
            ComplexPair(0, 0).inverse()


class TestContinuedFraction:
    @pytest.mark.parametrize('x, preperiod, period', [
        (QuadElem.sqrt(5), (2,), (4,)),
        (PHI, (), (1,)),
        (QuadElem.sqrt(3), (1,), (1, 2)),
        (QuadElem.sqrt(7), (2,), (1, 1, 1, 4))])
    def test_expansion(self, x, preperiod, period):
        cf = cf_expand(x)
        assert cf.preperiod == preperiod
        assert cf.period == period
        assert cf.evaluate() == x

    def test_convergents_approach(self):
        x = QuadElem.sqrt(7)
        convergents = cf_expand(x).convergents(12)
        errors = [abs(float(x) - float(c)) for c in convergents]
        assert errors[-1] < 1e-6
        # Convergents alternate around x.
        for c0, c1 in zip(convergents, convergents[1:]):
            assert (c0 < x) != (c1 < x)

    def test_rational_input(self):
        with pytest.raises(InoueError, match='rational'):
            cf_expand(QuadElem(3, 0, 2))


class TestFundamentalUnit:
    @pytest.mark.parametrize('t, n, expected', [
        (1, -1, (1, 0, -1)),
        (3, 1, (1, -1, -1)),
        (4, 1, (1, 0, 1)),
        (0, -2, (1, 1, -1))])
    def test_examples(self, t, n, expected):
        assert tuple(fundamental_unit(t, n)) == expected

    @pytest.mark.parametrize('t, n', [(3, 1), (4, 1), (5, 1), (1, -1), (6, 2), (0, -3)])
    def test_minimal(self, t, n):
        x, y, norm = fundamental_unit(t, n)
        disc = t * t - 4 * n
        B = (t + QuadElem.sqrt(disc)) / 2
        unit = x * B + y
        assert unit > 1
        assert unit.norm() == norm
        # No unit of Z[B] lies strictly between 1 and the fundamental one.
        for u, v in itertools.product(range(-60, 61), repeat=2):
            if u == 0 and v == 0:
                continue
            candidate = u * B + v
            if abs(candidate.norm()) == 1 and 1 < candidate:
                assert candidate >= unit

    @pytest.mark.parametrize('t, n', [(2, 1), (3, 2), (1, 1), (0, 1)])
    def test_degenerate(self, t, n):
        with pytest.raises(DegenerateDiscriminantError):
            fundamental_unit(t, n)


@pytest.mark.parametrize('n, expected', [(1, (1, 1)), (12, (2, 3)), (72, (6, 2)),
                                         (49, (7, 1)), (30, (1, 30))])
def test_squarefree_part(n, expected):
    assert squarefree_part(n) == expected


def test_as_fraction():
    assert as_fraction('2/6') == Fraction(1, 3)
    assert as_fraction(4) == Fraction(4)
    with pytest.raises(TypeError):
        as_fraction(True)
    with pytest.raises(TypeError):
        as_fraction(0.5)
