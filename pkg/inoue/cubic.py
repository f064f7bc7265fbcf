# Licensed under a 3-clause BSD style license - see LICENSE.rst
"""
Type I data: the cubic P(X) = X³ − θ₂X² + θ₁X − 1 and the ideal classes
of the order Z[α] generated by its real root.

Ideals are full sublattices of Z[α] ≅ Z³ (basis 1, α, α²) stable under
multiplication by α, written as rows of a Hermite normal form.  An
element with coordinates v multiplies another with coordinates w as
v·(w₀I + w₁M + w₂M²), with M the companion matrix of P, so that
multiplication by α is v ↦ v·M.
"""
import functools
import logging
from fractions import Fraction
from math import gcd, isqrt
from typing import NamedTuple, Optional, Tuple
from warnings import warn

import mpmath
import numpy as np
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix

from .errors import (BoundOverflowError, FieldIdentificationError, InadmissibleError,
                     InoueWarning, InvariantError, NonSquareRatioError)
from .helpers import ideal_search
from .intmat import IMat, hermite_normal_form, rational_inverse, smith_normal_form

__all__ = ['CubicInput', 'CubicVerdict', 'OrderIdeal', 'EquivalenceVerdict',
           'IdealClasses', 'TypeIClass', 'TypeIReport',
           'companion_matrix', 'cubic_disc', 'admissible_cubic', 'stable_ideals',
           'colon_lattice', 'similarity_invariant', 'are_equivalent',
           'ideal_classes', 'classify_type1', 'order_index_ratio']

log = logging.getLogger(__name__)


def companion_matrix(theta2, theta1):
    """Matrix of multiplication by α on the basis (1, α, α²), acting on rows."""
    return IMat([[0, 1, 0], [0, 0, 1], [1, -theta1, theta2]])


def cubic_disc(theta2, theta1):
    """Discriminant of X³ − θ₂X² + θ₁X − 1.

    Examples
    --------
    >>> cubic_disc(2, -2), cubic_disc(8, 0), cubic_disc(0, 0)
    (-83, -2075, -27)
    """
    return (18 * theta1 * theta2 - 4 * theta2 ** 3 + theta1 ** 2 * theta2 ** 2
            - 4 * theta1 ** 3 - 27)


class CubicInput(NamedTuple):
    """The polynomial P(X) = X³ − θ₂X² + θ₁X − 1."""
    theta2: int
    theta1: int

    def __call__(self, x):
        return ((x - self.theta2) * x + self.theta1) * x - 1

    @property
    def coefficients(self):
        """Coefficients, highest degree first."""
        return (1, -self.theta2, self.theta1, -1)

    @property
    def disc(self):
        return cubic_disc(self.theta2, self.theta1)

    @property
    def M(self):
        return companion_matrix(self.theta2, self.theta1)

    def roots(self):
        """Real root α and complex root β (Im β > 0), as numpy scalars."""
        roots = np.roots(self.coefficients)
        real = roots[np.argmin(np.abs(roots.imag))].real
        beta = roots[np.argmax(roots.imag)]
        return real, beta


class CubicVerdict(NamedTuple):
    """Outcome of `admissible_cubic`."""
    admissible: bool
    disc: int
    reason: str
    rational_roots: Tuple[int, ...]


def admissible_cubic(theta2, theta1):
    """Whether (θ₂, θ₁) define an Inoue surface of type I.

    The polynomial must have one real root α > 1 and two non-real ones,
    i.e., a negative discriminant and P(1) = θ₁ − θ₂ < 0.  Such a P has no
    rational root; this is checked too (only ±1 are candidates).

    Returns
    -------
    verdict : `CubicVerdict`
        With a diagnosis in ``reason`` (empty if admissible).

    Examples
    --------
    >>> admissible_cubic(2, -2).admissible
    True
    >>> admissible_cubic(0, 0).reason
    'P(1) = 0 is not negative (need θ₁ < θ₂); rational root 1'
    """
    P = CubicInput(int(theta2), int(theta1))
    disc = P.disc
    rational_roots = tuple(x for x in (1, -1) if P(x) == 0)
    problems = []
    if disc >= 0:
        problems.append(f"discriminant {disc} is not negative")
    if P(1) >= 0:
        problems.append(f"P(1) = {P(1)} is not negative (need θ₁ < θ₂)")
    admissible = not problems
    if rational_roots:
        if admissible:
            raise InvariantError(f"admissible cubic {P} has rational roots {rational_roots}.")
        problems.append("rational root " + ", ".join(map(str, rational_roots)))
    return CubicVerdict(admissible, disc, '; '.join(problems), rational_roots)


def _check_admissible(theta2, theta1):
    verdict = admissible_cubic(theta2, theta1)
    if not verdict.admissible:
        raise InadmissibleError(f"cubic ({theta2}, {theta1}) is not admissible: "
                                f"{verdict.reason}.")
    return CubicInput(int(theta2), int(theta1))


def _times(v, M):
    """Row vector v times the 3×3 nested list M."""
    return tuple(v[0] * M[0][j] + v[1] * M[1][j] + v[2] * M[2][j] for j in range(3))


def _elem_mul(v, w, M):
    vm = _times(v, M)
    vmm = _times(vm, M)
    return tuple(w[0] * x + w[1] * y + w[2] * z for x, y, z in zip(v, vm, vmm))


def _mult_matrix(w, M):
    """Integer matrix of multiplication by the element w."""
    M = IMat(M)
    return IMat.identity(3) * w[0] + M * w[1] + (M @ M) * w[2]


def _in_hnf(v, H):
    """Membership of v in the row lattice of an upper triangular H."""
    v = list(v)
    for i in range(3):
        q, rem = divmod(v[i], H[i][i])
        if rem:
            return False
        v = [x - q * y for x, y in zip(v, H[i])]
    return True


class OrderIdeal(NamedTuple):
    """An α-stable full sublattice of Z[α] in Hermite normal form."""
    hnf_basis: IMat
    norm: int
    """Index in Z[α]."""
    cubic: CubicInput

    def __contains__(self, v):
        return _in_hnf(v, self.hnf_basis.tolist())

    def is_stable(self):
        M = self.cubic.M.tolist()
        return all(_times(row, M) in self for row in self.hnf_basis.tolist())

    def action_matrix(self):
        """Matrix of multiplication by α in the basis of the ideal."""
        H = self.hnf_basis
        columns = list(zip(*rational_inverse(H.tolist())))
        X = [[sum(x * y for x, y in zip(row, col)) for col in columns]
             for row in (H @ self.cubic.M).tolist()]
        if any(Fraction(x).denominator != 1 for row in X for x in row):
            raise InvariantError(f"{H.tolist()} is not stable under α.")
        return IMat([[int(x) for x in row] for row in X])


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def stable_ideals(theta2, theta1, bound, primitive=True):
    """Enumerate the ideals of Z[α] of index at most ``bound``.

    Parameters
    ----------
    theta2, theta1 : int
        The cubic.
    bound : int
        Largest index.
    primitive : bool
        Skip lattices contained in mZ[α] for some m > 1; each of those is
        m times an ideal of smaller index and hence in the same class.

    Returns
    -------
    ideals : list of `OrderIdeal`
        Sorted by index, then basis.

    Raises
    ------
    BoundOverflowError
        If ``bound`` exceeds ``ideal_search.max_norm_bound``.
    """
    if bound > ideal_search.max_norm_bound:
        raise BoundOverflowError(f"norm bound {bound} exceeds the guard "
                                 f"{ideal_search.max_norm_bound}.")
    P = CubicInput(int(theta2), int(theta1))
    M = P.M.tolist()
    ideals = []
    for n in range(1, bound + 1):
        count = 0
        for h11 in _divisors(n):
            for h22 in _divisors(n // h11):
                h33 = n // (h11 * h22)
                # α²·α = 1 − θ₁α + θ₂α² forces h₁₁ | h₃₃.
                if h33 % h11:
                    continue
                for h12 in range(h22):
                    for h13 in range(h33):
                        for h23 in range(h33):
                            H = ((h11, h12, h13), (0, h22, h23), (0, 0, h33))
                            if primitive and gcd(h11, h12, h13, h22, h23, h33) > 1:
                                continue
                            if all(_in_hnf(_times(row, M), H) for row in H):
                                ideals.append(OrderIdeal(IMat(H), n, P))
                                count += 1
        if count:
            log.debug("%d ideals of index %d in Z[α] for %s", count, n, P)
    ideals.sort(key=lambda ideal: (ideal.norm, ideal.hnf_basis.astuple()))
    return ideals


class ColonLattice(NamedTuple):
    """(J : I) = {x | xI ⊆ J} as the row lattice of ``basis`` / ``denominator``."""
    basis: IMat
    denominator: int


def colon_lattice(J, I):
    """The colon lattice (J : I) of two ideals of the same order.

    Since the index n of I lies in I, n·(J : I) ⊆ J ⊆ Z³; it is found as
    the integer vectors v with v·i ∈ n·J for the basis elements i of I.
    """
    M = I.cubic.M
    n = I.norm
    target = J.hnf_basis * n
    det = target.det()
    adjugate = [[int(x * det) for x in row] for row in rational_inverse(target.tolist())]
    blocks = [(_mult_matrix(i, M) @ IMat(adjugate)).tolist() for i in I.hnf_basis.tolist()]
    rows = []
    for k in range(3):
        rows.append(blocks[0][k] + blocks[1][k] + blocks[2][k] + [int(k == j) for j in range(3)])
    for k in range(9):
        rows.append([det * int(k == j) for j in range(9)] + [0, 0, 0])
    hnf = hermite_normal_form(IMat(rows)).tolist()
    kernel = [row[9:] for row in hnf if not any(row[:9])]
    if len(kernel) != 3:
        raise InvariantError(f"colon lattice of rank {len(kernel)} != 3.")
    return ColonLattice(IMat(kernel), n)


@functools.lru_cache(maxsize=4096)
def similarity_invariant(I, shifts=range(-3, 4)):
    """Elementary divisors of A − kI₃ for the action matrix A of α on I.

    Equivalent ideals have GL(3,Z)-similar action matrices, so equal
    invariants.
    """
    A = I.action_matrix()
    return tuple(smith_normal_form(A - IMat.identity(3) * k).divisors for k in shifts)


def _embedding(P):
    alpha, beta = P.roots()
    s = np.sqrt(2.)
    return np.array([[1., s, 0.],
                     [alpha, s * beta.real, s * beta.imag],
                     [alpha ** 2, s * (beta ** 2).real, s * (beta ** 2).imag]])


_LLL_SCALE = 2 ** 20


def _lll(rows, embedding):
    """LLL reduction of integer rows for the metric of their embedding.

    Each row is extended by its scaled, rounded embedding, so that sympy's
    integer LLL sees (almost) the Minkowski metric while the first three
    coordinates keep the exact lattice vector.
    """
    scaled = np.rint(np.array(rows, dtype=float) @ embedding * _LLL_SCALE)
    extended = [list(row) + [int(x) for x in image] for row, image in zip(rows, scaled)]
    reduced = DomainMatrix.from_list(extended, ZZ).lll()
    return [[int(x) for x in row[:3]] for row in reduced.to_list()]


def _roots(P):
    """Real root α and complex root β (Im β > 0) at the working precision."""
    roots = mpmath.polyroots(P.coefficients, maxsteps=200, extraprec=2 * mpmath.mp.prec)
    alpha = mpmath.re(min(roots, key=lambda x: abs(mpmath.im(x))))
    beta = max(roots, key=lambda x: mpmath.im(x))
    return alpha, beta


class EquivalenceVerdict(NamedTuple):
    """Outcome of `are_equivalent`."""
    equivalent: Optional[bool]
    """`None` if the search was inconclusive."""
    multiplier: Optional[Tuple[Fraction, Fraction, Fraction]]
    """Coordinates of λ with λI = J."""
    method: str


def _shells(height):
    heights = sorted({h for h in (2, 6, 16) if h < height} | {height})
    previous = -1
    for h in heights:
        yield previous, h
        previous = h


def _certify(w, I, J, n, target):
    """Whether w/n maps I onto J, checked exactly."""
    M = I.cubic.M.tolist()
    if abs(_mult_matrix(w, M).det()) != target:
        return False
    images = [_elem_mul(w, row, M) for row in I.hnf_basis.tolist()]
    if any(y % n for image in images for y in image):
        return False
    image = IMat([[y // n for y in image] for image in images])
    return hermite_normal_form(image) == J.hnf_basis


def _norm_candidates(y, basis, powers_a, powers_b, target):
    v = y @ basis
    norms = np.abs((v @ powers_a) * np.abs(v @ powers_b) ** 2)
    return np.nonzero(np.isclose(norms, target, rtol=1e-3))[0]


def _unit_bounds(P, basis, target):
    """Coefficient bounds containing an element of every unit orbit.

    α is a unit of Z[α], so any w of norm ±T can be multiplied by a power
    of u = max(α, 1/α) until its real embedding lies in [T^⅓, u·T^⅓).  Then
    |w_β| ≤ T^⅓, and the Minkowski embedding of w has length at most
    T^⅓·√(u² + 2).
    Coordinate i in ``basis`` is bounded by that length times the norm of
    column i of the inverse embedding matrix.
    """
    with mpmath.workdps(40):
        alpha, beta = _roots(P)
        sqrt2 = mpmath.sqrt(2)
        E = mpmath.matrix(3, 3)
        for i, row in enumerate(basis):
            at_alpha = row[0] + row[1] * alpha + row[2] * alpha ** 2
            at_beta = row[0] + row[1] * beta + row[2] * beta ** 2
            E[i, 0] = at_alpha
            E[i, 1] = sqrt2 * mpmath.re(at_beta)
            E[i, 2] = sqrt2 * mpmath.im(at_beta)
        D = mpmath.inverse(E)
        unit = max(abs(alpha), 1 / abs(alpha))
        radius = mpmath.cbrt(target) * mpmath.sqrt(unit ** 2 + 2)
        return [int(mpmath.floor(radius * mpmath.sqrt(mpmath.fsum(D[j, i] ** 2
                                                                  for j in range(3))))) + 1
                for i in range(3)]


def are_equivalent(I, J, height=None):
    """Decide whether λI = J for some λ in the field of fractions.

    Ideals with different `similarity_invariant` are inequivalent.
    Otherwise λ is searched in the colon lattice (J : I) among elements
    with |N(λ)| = [Z[α] : J]/[Z[α] : I], after LLL reduction of its basis
    for the Minkowski embedding: first on coefficient boxes of growing
    height, then, if that finds nothing, on the box of `_unit_bounds`,
    which contains a solution if there is any.  A candidate is accepted
    only after checking λI = J exactly.

    Parameters
    ----------
    I, J : `OrderIdeal`
    height : int, optional
        Largest coefficient tried in the quick search;
        ``ideal_search.height`` by default.

    Returns
    -------
    verdict : `EquivalenceVerdict`
        ``method`` is 'identical', 'invariants', 'search' or 'exhaustive';
        ``equivalent`` is `None` (with method 'exhausted') only if the
        exhaustive box exceeds ``ideal_search.max_box``.
    """
    if I.cubic != J.cubic:
        raise InadmissibleError("ideals belong to different orders.")
    if I.hnf_basis == J.hnf_basis:
        return EquivalenceVerdict(True, (Fraction(1), Fraction(0), Fraction(0)), 'identical')
    if similarity_invariant(I) != similarity_invariant(J):
        return EquivalenceVerdict(False, None, 'invariants')

    height = ideal_search.height if height is None else height
    P = I.cubic
    colon = colon_lattice(J, I)
    n = colon.denominator
    target = n * n * J.norm
    reduced = _lll(colon.basis.tolist(), _embedding(P))
    basis = np.array(reduced, dtype=float)
    alpha, beta = P.roots()
    powers_a = np.array([1., alpha, alpha ** 2])
    powers_b = np.array([1., beta, beta ** 2])

    def found(y):
        w = tuple(sum(int(c) * row[j] for c, row in zip(y, reduced)) for j in range(3))
        return w if _certify(w, I, J, n, target) else None

    for inner, h in _shells(height):
        grid = np.arange(-h, h + 1)
        x = np.stack(np.meshgrid(grid, grid, grid, indexing='ij'), axis=-1).reshape(-1, 3)
        x = x[np.abs(x).max(axis=1) > inner]
        candidates = _norm_candidates(x, basis, powers_a, powers_b, target)
        log.debug("height %d: %d candidates for %s ~ %s", h, len(candidates),
                  I.hnf_basis.tolist(), J.hnf_basis.tolist())
        for index in candidates:
            w = found(x[index])
            if w is not None:
                return EquivalenceVerdict(True, tuple(Fraction(y, n) for y in w), 'search')

    bounds = _unit_bounds(P, reduced, target)
    box = (2 * bounds[0] + 1) * (2 * bounds[1] + 1) * (2 * bounds[2] + 1)
    log.debug("exhaustive box %s (%d points) for %s ~ %s", bounds, box,
              I.hnf_basis.tolist(), J.hnf_basis.tolist())
    if box > ideal_search.max_box:
        return EquivalenceVerdict(None, None, 'exhausted')
    g1, g2 = np.meshgrid(np.arange(-bounds[1], bounds[1] + 1),
                         np.arange(-bounds[2], bounds[2] + 1), indexing='ij')
    tail = np.column_stack([g1.ravel(), g2.ravel()])
    for y0 in range(-bounds[0], bounds[0] + 1):
        y = np.column_stack([np.full(len(tail), y0), tail])
        for index in _norm_candidates(y, basis, powers_a, powers_b, target):
            w = found(y[index])
            if w is not None:
                return EquivalenceVerdict(True, tuple(Fraction(v, n) for v in w),
                                          'exhaustive')
    return EquivalenceVerdict(False, None, 'exhaustive')


class IdealClasses(NamedTuple):
    """Outcome of `ideal_classes`."""
    h: int
    representatives: Tuple[OrderIdeal, ...]
    classes: Tuple[Tuple[OrderIdeal, ...], ...]
    bound: int
    stable: Optional[bool]
    """h unchanged at twice the bound; `None` if not checked."""
    conclusive: bool
    """No pair of ideals was left undecided."""


def _partition(ideals, height):
    classes = []
    conclusive = True
    for ideal in ideals:
        for members in classes:
            verdict = are_equivalent(members[0], ideal, height)
            if verdict.equivalent:
                members.append(ideal)
                break
            if verdict.equivalent is None:
                conclusive = False
        else:
            classes.append([ideal])
    return classes, conclusive


def ideal_classes(theta2, theta1, norm_bound=None, check_stability=True):
    """Ideal classes of Z[α] among ideals of bounded index.

    Parameters
    ----------
    theta2, theta1 : int
        An admissible cubic.
    norm_bound : int, optional
        Largest index enumerated; by default from `~inoue.helpers.ideal_search`
        (explicit setting, ``INOUE_NORM_BOUND``, or the Minkowski bound).
    check_stability : bool
        Whether to recount at twice the bound.

    Returns
    -------
    classes : `IdealClasses`
        The first class is that of Z[α] itself.

    Raises
    ------
    InadmissibleError
        If the cubic is not admissible, or ``norm_bound`` is not a positive
        integer.
    BoundOverflowError
        If the bound exceeds the configured guard.

    Warns
    -----
    InoueWarning
        If the count changes at twice the bound, or some pair of ideals
        could not be decided.
    """
    P = _check_admissible(theta2, theta1)
    bound = ideal_search.norm_bound_for(P.disc, norm_bound)
    height = ideal_search.height
    classes, conclusive = _partition(stable_ideals(P.theta2, P.theta1, bound), height)
    h = len(classes)
    stable = None
    if check_stability:
        if 2 * bound <= ideal_search.max_norm_bound:
            doubled, conclusive2 = _partition(
                stable_ideals(P.theta2, P.theta1, 2 * bound), height)
            stable = len(doubled) == h
            conclusive = conclusive and conclusive2
            if not stable:
                warn(f"ideal class count of {P} changes from {h} to {len(doubled)} "
                     f"when doubling the norm bound {bound}.", InoueWarning)
        else:
            log.warning("stability of %s not checked: %d exceeds the guard", P, 2 * bound)
    if not conclusive:
        warn(f"some ideals of {P} could not be compared; h = {h} is an upper bound.",
             InoueWarning)
    log.debug("h = %d for %s at bound %d (stable: %s)", h, P, bound, stable)
    return IdealClasses(h, tuple(members[0] for members in classes),
                        tuple(tuple(members) for members in classes),
                        bound, stable, conclusive)


class TypeIClass(NamedTuple):
    """One biholomorphism class: an ideal class with a choice of β."""
    ideal: OrderIdeal
    beta_label: str
    """'beta' or 'beta_bar'."""


class TypeIReport(NamedTuple):
    """Type I classification for one admissible cubic."""
    theta2: int
    theta1: int
    admissible: bool
    disc: int
    h: int
    bound: int
    stable: Optional[bool]
    conclusive: bool
    classes: Tuple[TypeIClass, ...]

    @property
    def count(self):
        return len(self.classes)


def classify_type1(theta2, theta1, norm_bound=None):
    """Biholomorphism classes of type I surfaces for the cubic (θ₂, θ₁).

    Each ideal class of Z[α] gives two surfaces, one for each of the
    complex roots β, β̄, which are never isomorphic; so there are 2h
    classes.

    Raises
    ------
    InadmissibleError
        If the cubic is not admissible, or ``norm_bound`` is not a positive
        integer.
    """
    P = _check_admissible(theta2, theta1)
    result = ideal_classes(P.theta2, P.theta1, norm_bound)
    classes = tuple(TypeIClass(ideal, label) for ideal in result.representatives
                    for label in ('beta', 'beta_bar'))
    if len(classes) != 2 * result.h:
        raise InvariantError("type I class count is not twice the ideal class count.")
    return TypeIReport(P.theta2, P.theta1, True, P.disc, result.h, result.bound,
                       result.stable, result.conclusive, classes)


def _rational_sqrt(q):
    q = Fraction(q)
    if q < 0:
        return None
    num, den = isqrt(q.numerator), isqrt(q.denominator)
    if num * num != q.numerator or den * den != q.denominator:
        return None
    return Fraction(num, den)


def _real_root(P):
    return _roots(P)[0]


def _identify_field(P, Q):
    """Coordinates of the real root of Q in Q(α), α the real root of P."""
    with mpmath.workprec(256):
        alpha, root = _real_root(P), _real_root(Q)
        relation = mpmath.pslq([root, 1, alpha, alpha ** 2], maxcoeff=10**8, maxsteps=10**5)
    if relation is None or relation[0] == 0:
        raise FieldIdentificationError(f"no relation found between the roots of {P} and {Q}.")
    c0 = relation[0]
    x = tuple(Fraction(-c, c0) for c in relation[1:])
    M = P.M.tolist()
    one = (Fraction(1), Fraction(0), Fraction(0))
    value = _elem_mul(x, x, M)
    value = tuple(y - Q.theta2 * z for y, z in zip(value, x))
    value = _elem_mul(value, x, M)
    value = tuple(y + Q.theta1 * z - w for y, z, w in zip(value, x, one))
    if any(value):
        raise FieldIdentificationError(f"relation {relation} does not give a root of {Q} "
                                       f"in Q(α) for {P}.")
    return x


def order_index_ratio(theta2, theta1, theta2p, theta1p):
    """Relative index √(disc P / disc P') of two orders of one cubic field.

    Returns
    -------
    ratio : `~fractions.Fraction`

    Raises
    ------
    NonSquareRatioError
        If the ratio of discriminants is not the square of a rational.
    FieldIdentificationError
        If the real root of P' could not be certified to lie in Q(α).

    Examples
    --------
    >>> order_index_ratio(8, 0, 2, -2)
    Fraction(5, 1)
    """
    P, Q = CubicInput(int(theta2), int(theta1)), CubicInput(int(theta2p), int(theta1p))
    ratio = Fraction(P.disc, Q.disc)
    root = _rational_sqrt(ratio)
    if root is None:
        raise NonSquareRatioError(f"disc ratio {P.disc}/{Q.disc} is not a rational square.")
    _identify_field(Q, P)
    return root
