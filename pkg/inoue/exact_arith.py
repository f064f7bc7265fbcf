# Licensed under a 3-clause BSD style license - see LICENSE.rst
"""
Exact arithmetic in real quadratic fields Q(√d).

Rational scalars are `fractions.Fraction` throughout.  `QuadElem` holds an
element a + b√d, with √d taken positive, and compares exactly, without
ever going through floating point.  Continued fractions of quadratic
surds and fundamental units of quadratic orders are built on top of it.
"""
from fractions import Fraction
from functools import total_ordering
from math import gcd, isqrt
from numbers import Rational
from typing import NamedTuple, Tuple

from .errors import (RadicandMismatchError, DegenerateDiscriminantError,
                     InoueError, InvariantError)

__all__ = ['QuadElem', 'ComplexPair', 'CFExpansion', 'UnitSolution',
           'squarefree_part', 'cf_expand', 'fundamental_unit', 'as_fraction']


def as_fraction(x):
    """Convert an integer, Fraction or rational string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rational numbers")
    if isinstance(x, (int, Rational, str)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {type(x).__name__} as a rational number")


def squarefree_part(n):
    """Write a positive integer as m²·d with d squarefree.

    Returns
    -------
    m, d : int
    """
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}.")
    m, d = 1, 1
    p = 2
    while p * p <= n:
        k = 0
        while n % p == 0:
            n //= p
            k += 1
        m *= p ** (k // 2)
        if k % 2:
            d *= p
        p += 1 if p == 2 else 2
    return m, d * n


def _is_square(n):
    return n >= 0 and isqrt(n) ** 2 == n


@total_ordering
class QuadElem:
    """Element a + b√d of the real quadratic field Q(√d).

    Parameters
    ----------
    a, b : int, `~fractions.Fraction` or str
        Rational and irrational coefficients.
    d : int
        Squarefree radicand, > 1.

    Examples
    --------
    >>> phi = QuadElem('1/2', '1/2', 5)
    >>> phi * phi.conjugate()
    QuadElem(-1, 0, d=5)
    >>> phi > 1
    True
    """
    __slots__ = ('_a', '_b', '_d')

    def __init__(self, a=0, b=0, d=None):
        if d is None or d < 2 or squarefree_part(d)[0] != 1:
            raise ValueError(f"radicand should be a squarefree integer > 1, got {d!r}.")
        self._a = as_fraction(a)
        self._b = as_fraction(b)
        self._d = int(d)

    @classmethod
    def _new(cls, a, b, d):
        self = object.__new__(cls)
        self._a = a
        self._b = b
        self._d = d
        return self

    @classmethod
    def sqrt(cls, n):
        """√n for a positive non-square integer n."""
        if n < 2 or _is_square(n):
            raise DegenerateDiscriminantError(
                f"cannot take a quadratic irrational square root of {n}.")
        m, d = squarefree_part(n)
        return cls._new(Fraction(0), Fraction(m), d)

    @property
    def a(self):
        return self._a

    @property
    def b(self):
        return self._b

    @property
    def d(self):
        return self._d

    def __repr__(self):
        def fmt(x):
            return str(x) if x.denominator == 1 else f"'{x}'"
        return f"QuadElem({fmt(self._a)}, {fmt(self._b)}, d={self._d})"

    def __str__(self):
        if self._b == 0:
            return str(self._a)
        sqrt = f"√{self._d}"
        b = '' if abs(self._b) == 1 else f"{abs(self._b)}·"
        if self._a == 0:
            return f"{'-' if self._b < 0 else ''}{b}{sqrt}"
        return f"{self._a} {'-' if self._b < 0 else '+'} {b}{sqrt}"

    def _coerce(self, other):
        """Bring other into the field of self; returns (other, d).

        Rational values adopt the radicand of the irrational operand.
        """
        if isinstance(other, QuadElem):
            if other._d == self._d or other._b == 0:
                return other, self._d
            if self._b == 0:
                return other, other._d
            raise RadicandMismatchError(
                f"cannot combine elements of Q(√{self._d}) and Q(√{other._d}).")
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._new(Fraction(other), Fraction(0), self._d), self._d
        return NotImplemented, None

    def __add__(self, other):
        other, d = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._new(self._a + other._a, self._b + other._b, d)

    __radd__ = __add__

    def __neg__(self):
        return self._new(-self._a, -self._b, self._d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other, d = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._new(self._a - other._a, self._b - other._b, d)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other, d = self._coerce(other)
        if other is NotImplemented:
            return other
        a = self._a * other._a + self._b * other._b * d
        b = self._a * other._b + self._b * other._a
        return self._new(a, b, d)

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse, via the conjugate."""
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(√{})".format(self._d))
        return self._new(self._a / n, -self._b / n, self._d)

    def __truediv__(self, other):
        other, d = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = self._new(Fraction(1), Fraction(0), self._d)
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self):
        """The Galois conjugate a − b√d."""
        return self._new(self._a, -self._b, self._d)

    def norm(self):
        """Field norm a² − b²d, a Fraction."""
        return self._a * self._a - self._b * self._b * self._d

    def trace(self):
        """Field trace 2a, a Fraction."""
        return 2 * self._a

    def is_rational(self):
        return self._b == 0

    def is_integer(self):
        return self._b == 0 and self._a.denominator == 1

    def to_integer(self):
        """The value as an int; raises if it is not a rational integer."""
        if not self.is_integer():
            raise InoueError(f"{self} is not a rational integer.")
        return self._a.numerator

    def to_fraction(self):
        """The value as a Fraction; raises if it is irrational."""
        if self._b != 0:
            raise InoueError(f"{self} is irrational.")
        return self._a

    def sign(self):
        """Exact sign (-1, 0 or 1) under the embedding with √d > 0."""
        sa = (self._a > 0) - (self._a < 0)
        sb = (self._b > 0) - (self._b < 0)
        if sb == 0 or sa == sb:
            return sa or sb
        if sa == 0:
            return sb
        # Opposite signs: the larger of a² and b²d wins; never equal.
        if self._a * self._a > self._b * self._b * self._d:
            return sa
        return sb

    def floor(self):
        """Exact floor, an int."""
        den = self._a.denominator * self._b.denominator // gcd(
            self._a.denominator, self._b.denominator)
        A = (self._a * den).numerator
        B = (self._b * den).numerator
        radicand = B * B * self._d
        root = isqrt(radicand)
        if B < 0:
            root = -root if _is_square(radicand) else -root - 1
        return (A + root) // den

    def __eq__(self, other):
        if isinstance(other, QuadElem):
            if self._b == 0 and other._b == 0:
                return self._a == other._a
            return (self._d == other._d and self._a == other._a
                    and self._b == other._b)
        if isinstance(other, (int, Fraction)):
            return self._b == 0 and self._a == other
        return NotImplemented

    def __hash__(self):
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b, self._d))

    def __lt__(self, other):
        if (isinstance(other, QuadElem) and other._d != self._d
                and self._b != 0 and other._b != 0):
            return _cross_sign(self, other) < 0
        diff = self - other
        if diff is NotImplemented:
            return NotImplemented
        return diff.sign() < 0

    def __bool__(self):
        return self._a != 0 or self._b != 0

    def __float__(self):
        return float(self._a) + float(self._b) * self._d ** 0.5

    def to_mpf(self):
        """Value as an `mpmath.mpf` at the current mpmath precision."""
        import mpmath
        return (mpmath.mpf(self._a.numerator) / self._a.denominator
                + mpmath.mpf(self._b.numerator) / self._b.denominator
                * mpmath.sqrt(self._d))


def _cross_sign(x, y):
    """Sign of x − y for irrationals from different fields Q(√d), Q(√f).

    With A = x − a' in Q(√d) and B = b'√f, the sign of A − B follows from
    those of A and B, or else from A² − b'²f, which is never zero.
    """
    A = x - y._a
    B = y._b
    sa, sb = A.sign(), (B > 0) - (B < 0)
    if sa != sb:
        return sa or -sb
    return sa * (A * A - B * B * y._d).sign()


def _div(x, y):
    """x / y, staying rational when both are integers."""
    if isinstance(x, int) and isinstance(y, int):
        return Fraction(x, y)
    return x / y


class ComplexPair:
    """Complex number as a (real, imaginary) pair over a real domain.

    The parts can be `QuadElem`, rationals, or `mpmath.iv.mpf` intervals;
    arithmetic only relies on their ring operations.  Real scalars combine
    with a pair as if their imaginary part were zero.
    """
    __slots__ = ('re', 'im')

    def __init__(self, re, im=0):
        self.re = re
        self.im = im

    def __repr__(self):
        return f"ComplexPair({self.re!r}, {self.im!r})"

    def __str__(self):
        return f"({self.re}) + ({self.im})i"

    @staticmethod
    def _split(other):
        if isinstance(other, ComplexPair):
            return other.re, other.im
        return other, 0

    def __add__(self, other):
        re, im = self._split(other)
        return ComplexPair(self.re + re, self.im + im)

    __radd__ = __add__

    def __neg__(self):
        return ComplexPair(-self.re, -self.im)

    def __sub__(self, other):
        re, im = self._split(other)
        return ComplexPair(self.re - re, self.im - im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        re, im = self._split(other)
        return ComplexPair(self.re * re - self.im * im,
                           self.re * im + self.im * re)

    __rmul__ = __mul__

    def conjugate(self):
        return ComplexPair(self.re, -self.im)

    def abs2(self):
        """|z|², an element of the real domain."""
        return self.re * self.re + self.im * self.im

    def inverse(self):
        n = self.abs2()
        if isinstance(n, (int, Fraction, QuadElem)) and n == 0:
            raise ZeroDivisionError("division by zero complex value")
        return ComplexPair(_div(self.re, n), _div(-self.im, n))

    def __truediv__(self, other):
        if isinstance(other, ComplexPair):
            return self * other.inverse()
        return ComplexPair(_div(self.re, other), _div(self.im, other))

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        result = ComplexPair(1, 0)
        for _ in range(abs(n)):
            result = result * base
        return result

    def __eq__(self, other):
        re, im = self._split(other)
        return bool(self.re == re) and bool(self.im == im)

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))


class CFExpansion(NamedTuple):
    """Eventually periodic continued fraction [pre-period; (period)]."""
    preperiod: Tuple[int, ...]
    period: Tuple[int, ...]

    def terms(self, n):
        """The first ``n`` partial quotients."""
        out = list(self.preperiod[:n])
        while len(out) < n:
            out.extend(self.period[:n - len(out)])
        return out

    def convergents(self, n):
        """The first ``n`` convergents, as Fractions."""
        h0, h1 = 0, 1
        k0, k1 = 1, 0
        out = []
        for a in self.terms(n):
            h0, h1 = h1, a * h1 + h0
            k0, k1 = k1, a * k1 + k0
            out.append(Fraction(h1, k1))
        return out

    def evaluate(self):
        """Reconstruct the quadratic irrational exactly."""
        p, p_, q, q_ = _continuant(self.period)
        # y = (p y + p_)/(q y + q_), the positive root.
        disc = (q_ - p) ** 2 + 4 * q * p_
        y = (QuadElem.sqrt(disc) + (p - q_)) / (2 * q)
        P, P_, Q, Q_ = _continuant(self.preperiod)
        return (P * y + P_) / (Q * y + Q_)


def _continuant(terms):
    p, p_, q, q_ = 1, 0, 0, 1
    for a in terms:
        p, p_ = a * p + p_, p
        q, q_ = a * q + q_, q
    return p, p_, q, q_


def _surd_state(x):
    """Write x = (P + √D)/Q with integers and Q | D − P²."""
    den = x.a.denominator * x.b.denominator // gcd(x.a.denominator, x.b.denominator)
    P = (x.a * den).numerator
    B = (x.b * den).numerator
    Q = den
    if B < 0:
        P, Q, B = -P, -Q, -B
    D = B * B * x.d
    if (D - P * P) % Q:
        P, D, Q = P * abs(Q), D * Q * Q, Q * abs(Q)
    return P, Q, D


def _surd_quotients(P, Q, D):
    """Iterate the surd recurrence; yields (state, partial quotient)."""
    s = isqrt(D)
    while True:
        a = (P + s) // Q if Q > 0 else (P + s + 1) // Q
        yield (P, Q), a
        P = a * Q - P
        Q = (D - P * P) // Q


def _expand_states(P, Q, D):
    seen = {}
    states = []
    terms = []
    for state, a in _surd_quotients(P, Q, D):
        if state in seen:
            return states, terms, seen[state]
        seen[state] = len(terms)
        states.append(state)
        terms.append(a)


def cf_expand(x):
    """Continued fraction expansion of an irrational quadratic number.

    Parameters
    ----------
    x : `QuadElem`
        Must be irrational.

    Returns
    -------
    expansion : `CFExpansion`

    Raises
    ------
    InoueError
        If ``x`` is rational.

    Examples
    --------
    >>> cf_expand(QuadElem.sqrt(3))
    CFExpansion(preperiod=(1,), period=(1, 2))
    """
    if x.is_rational():
        raise InoueError(f"{x} is rational; its continued fraction does not recur.")
    _, terms, start = _expand_states(*_surd_state(x))
    return CFExpansion(tuple(terms[:start]), tuple(terms[start:]))


class UnitSolution(NamedTuple):
    """Unit x·B + y of Z[B], with its norm y² + txy + nx²."""
    x: int
    y: int
    norm: int


def fundamental_unit(t, n):
    """Smallest unit > 1 of Z[B], where B² = t·B − n.

    B is taken as the larger root (t + √(t²−4n))/2.  The unit is the
    product of the complete quotients over one period of the continued
    fraction of B.

    Parameters
    ----------
    t, n : int
        Trace and norm of B.

    Returns
    -------
    unit : `UnitSolution`
        ``(x, y, norm)`` with x·B + y > 1 minimal and norm = ±1.

    Raises
    ------
    DegenerateDiscriminantError
        If t² − 4n is not positive or is a perfect square.

    Examples
    --------
    >>> fundamental_unit(3, 1)
    UnitSolution(x=1, y=-1, norm=-1)
    >>> fundamental_unit(4, 1)
    UnitSolution(x=1, y=0, norm=1)
    """
    disc = t * t - 4 * n
    if disc <= 0 or _is_square(disc):
        raise DegenerateDiscriminantError(
            f"discriminant {disc} of x² - {t}x + {n} is not a positive non-square.")
    root = QuadElem.sqrt(disc)
    states, _, start = _expand_states(t, 2, disc)
    unit = QuadElem._new(Fraction(1), Fraction(0), root.d)
    for P, Q in states[start:]:
        unit = unit * ((root + P) / Q)

    m = root.b
    x = 2 * unit.b / m
    y = unit.a - x * Fraction(t, 2)
    if x.denominator != 1 or y.denominator != 1 or unit.norm() not in (1, -1):
        raise InvariantError(f"continued fraction of disc {disc} gave non-unit {unit}.")
    return UnitSolution(int(x), int(y), int(unit.norm()))
