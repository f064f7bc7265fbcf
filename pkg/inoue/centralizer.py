# Licensed under a 3-clause BSD style license - see LICENSE.rst
"""
Centralisers of hyperbolic 2×2 integer matrices.

Integer matrices commuting with N form the lattice Z·I₂ + Z·B, with
B = (N − n₁₁I₂)/g and g = gcd(n₁₂, n₂₁, n₂₂ − n₁₁).  Its unimodular
elements are the units of the quadratic order Z[B], so the positive
centraliser (those K with Ka a positive multiple of the expanding
eigenvector a) is generated by the fundamental unit of Z[B].
"""
import logging
from math import gcd
from typing import NamedTuple, Optional, Tuple

import numpy as np

from .conjugacy import associated_form
from .errors import (InadmissibleError, InvariantError, NotCommutingError,
                     NotUnimodularError)
from .exact_arith import QuadElem, fundamental_unit
from .intmat import IMat

__all__ = ['CentralizerLattice', 'CentralizerGen', 'centralizer_lattice',
           'expanding_eigenvalue', 'expanding_eigenvector', 'eigenvalue_on',
           'positive_centralizer_generator', 'power_expand',
           'unit_minimality_witness']

log = logging.getLogger(__name__)


class CentralizerLattice(NamedTuple):
    """Basis (I₂, B) of the integer matrices commuting with N."""
    basis: Tuple[IMat, IMat]
    g: int
    trace_B: int
    det_B: int

    @property
    def B(self):
        return self.basis[1]


class CentralizerGen(NamedTuple):
    """Generator of the positive centraliser Z⁺(N)."""
    K: IMat
    eps: int
    """det K."""
    theta_eig: QuadElem
    """Eigenvalue of K on the expanding eigenvector of N, > 1."""
    power_to_N: Optional[int]
    """Exponent e with K**e == N."""


def centralizer_lattice(N):
    """Lattice of integer matrices commuting with N.

    Parameters
    ----------
    N : `~inoue.intmat.IMat`
        2×2 with irrational real eigenvalues.

    Returns
    -------
    lattice : `CentralizerLattice`

    Raises
    ------
    DegenerateDiscriminantError
        If N has rational or non-real spectrum.

    Examples
    --------
    >>> centralizer_lattice(IMat([[1, 2], [1, 3]])).B
    IMat([[0, 2], [1, 2]])
    """
    N = IMat(N)
    associated_form(N)
    (n11, n12), (n21, n22) = N.tolist()
    g = gcd(gcd(n12, n21), n22 - n11)
    B = IMat([[0, n12 // g], [n21 // g, (n22 - n11) // g]])
    return CentralizerLattice((IMat.identity(2), B), g, B.trace(), B.det())


def expanding_eigenvalue(N):
    """The eigenvalue of N of largest absolute value, exactly."""
    N = IMat(N)
    theta, det = N.trace(), N.det()
    return (QuadElem.sqrt(theta * theta - 4 * det) + theta) / 2


def expanding_eigenvector(N, eigenvalue=None):
    """Eigenvector (1, (λ − n₁₁)/n₁₂) of N for λ, the expanding one by default."""
    N = IMat(N)
    if eigenvalue is None:
        eigenvalue = expanding_eigenvalue(N)
    (n11, n12), _ = N.tolist()
    return eigenvalue ** 0, (eigenvalue - n11) / n12


def eigenvalue_on(K, a):
    """ϑ(K): the scalar with K·a = ϑ(K)·a.

    Raises
    ------
    NotCommutingError
        If ``a`` is not an eigenvector of K.
    """
    image = IMat(K).apply(a)
    i = next(i for i, x in enumerate(a) if x != 0)
    value = image[i] / a[i]
    if any(y != value * x for x, y in zip(a, image)):
        raise NotCommutingError(f"{a} is not an eigenvector of {IMat(K).tolist()}.")
    return value


def positive_centralizer_generator(N):
    """Generator of Z⁺(N) = {K ∈ GL(2,Z) | KN = NK, Ka ∈ R₊a}.

    The generator is x·B + y·I₂ for the fundamental unit x·β + y of the
    order Z[B], where β is the eigenvalue of B on the expanding
    eigenvector a, so ϑ(K) = x·β + y > 1 is minimal.

    For det N = 1 and gcd(n₁₂, n₂₁, n₂₂ − n₁₁) = 1, the generator is N
    itself when the trace exceeds 3, and a square root of N of
    determinant −1 for trace 3; this is checked.

    Parameters
    ----------
    N : `~inoue.intmat.IMat`
        Hyperbolic, with determinant ±1.

    Returns
    -------
    generator : `CentralizerGen`

    Examples
    --------
    >>> gen = positive_centralizer_generator(IMat([[1, 1], [1, 2]]))
    >>> gen.K, gen.eps, gen.power_to_N
    (IMat([[0, 1], [1, 1]]), -1, 2)
    """
    N = IMat(N)
    lattice = centralizer_lattice(N)
    det = N.det()
    if det not in (1, -1):
        raise NotUnimodularError(f"expected determinant ±1, got {det}.")
    theta = N.trace()
    if det == 1 and theta < 3 or det == -1 and theta < 1:
        raise InadmissibleError(
            f"expanding eigenvalue of N with trace {theta} and det {det} is not > 1.")

    x, y, norm = fundamental_unit(lattice.trace_B, lattice.det_B)
    K = lattice.B * x + IMat.identity(2) * y
    a = expanding_eigenvector(N)
    theta_eig = eigenvalue_on(K, a)
    if theta_eig <= 1 or K.det() != norm:
        raise InvariantError(f"unit {x}·B + {y} does not give a positive generator.")

    alpha = expanding_eigenvalue(N)
    power, e = theta_eig, 1
    while power < alpha:
        power, e = power * theta_eig, e + 1
    power_to_N = e if power == alpha and K ** e == N else None
    if power_to_N is None:
        raise InvariantError(f"N is not a power of the generator {K.tolist()}.")

    if det == 1 and lattice.g == 1:
        expected = (2, -1) if theta == 3 else (1, 1)
        if (power_to_N, norm) != expected:
            raise InvariantError(
                f"generator {K.tolist()} of trace-{theta} matrix has "
                f"(power, det) = {(power_to_N, norm)}, expected {expected}.")

    log.debug("Z+ of %s generated by %s (det %d, K^%d = N)",
              N.tolist(), K.tolist(), norm, power_to_N)
    return CentralizerGen(K, norm, theta_eig, power_to_N)


def power_expand(N, k):
    """Coefficients (a_k, b_k) with N**k == a_k·N + b_k·I₂.

    Uses N² = θN − δI₂ with θ = tr N and δ = det N = ±1.

    Examples
    --------
    >>> N = IMat([[1, 1], [1, 2]])
    >>> power_expand(N, 2), power_expand(N, -1)
    ((3, -1), (-1, 3))
    """
    N = IMat(N)
    theta, delta = N.trace(), N.det()
    if delta not in (1, -1):
        raise NotUnimodularError(f"expected determinant ±1, got {delta}.")
    a, b = 0, 1
    for _ in range(abs(k)):
        if k > 0:
            a, b = theta * a + b, -delta * a
        else:
            a, b = -delta * b, a + delta * theta * b
    return a, b


def unit_minimality_witness(N, gen, limit=1000):
    """Search for units of Z[B] between 1 and ϑ(gen.K).

    Scans x·B + y·I₂ with |x|, |y| ≤ limit for determinant ±1 and returns
    the (x, y) whose eigenvalue on the expanding eigenvector lies strictly
    between 1 and ϑ(K).  An empty list certifies minimality in the box.
    """
    lattice = centralizer_lattice(N)
    t, n = lattice.trace_B, lattice.det_B
    values = np.arange(-limit, limit + 1, dtype=np.int64)
    x, y = np.meshgrid(values, values, indexing='ij')
    det = y * y + t * x * y + n * x * x
    xs, ys = np.nonzero(np.abs(det) == 1)
    beta = eigenvalue_on(lattice.B, expanding_eigenvector(N))
    found = []
    for i, j in zip(xs, ys):
        xi, yj = int(values[i]), int(values[j])
        value = beta * xi + yj
        if 1 < value < gen.theta_eig:
            found.append((xi, yj))
    return found
