# Licensed under a 3-clause BSD style license - see LICENSE.rst
"""
Classification of type II and type III Inoue surfaces.

For an admissible α and r ≥ 1 the surfaces are classified by the
similarity classes [N] of integer matrices with eigenvalue α, and, over
each class, by the orbits of the positive centraliser Z⁺(N) on the finite
group Z_{N,r} = Z²/((I₂∓N)Z² + rZ²) (minus sign for type II, plus sign for
type III).  This module computes the exact eigen-data, the bijection
between compatible vectors c and integer vectors p, the Z² action on both,
the star action of Z⁺(N), and assembles everything into a `ClassReport`.

Conventions: for type II the scale is w = b∧a, for type III it is
w = a∧b, where x∧y = x₁y₂ − x₂y₁; e = (a₁b₁, a₂b₂) and for a 2×2 matrix
X, prod(X) = (x₁₁x₁₂, x₂₁x₂₂).
"""
import enum
import logging
from fractions import Fraction
from typing import NamedTuple, Optional, Tuple

from .centralizer import CentralizerGen, positive_centralizer_generator
from .conjugacy import similarity_classes
from .errors import (InadmissibleError, InvariantError, NotCommutingError,
                     NotCompatibleError)
from .exact_arith import QuadElem
from .intmat import FiniteQuotient, IMat, quotient_group, rational_inverse

__all__ = ['Kind', 'Component', 'AdmissibleAlpha', 'EigenPair', 'CompatClass',
           'OrbitRecord', 'ClassEntry', 'ClassReport',
           'admissible_alpha', 'canonical_eigenpair', 'relation_matrix',
           'compat_c_from_p', 'compat_p_from_c', 'compat_class',
           'k_dot_c', 'k_dot_t', 'star_action', 'star_offset', 'mod2_defect',
           'action_period', 'orbits', 'component_type', 'classify']

log = logging.getLogger(__name__)


class Kind(enum.Enum):
    """Sign of the admissibility condition: α + α⁻¹ or α − α⁻¹ integral."""
    plus = 'plus'
    minus = 'minus'

    @property
    def det(self):
        """Determinant of the matrices N with eigenvalue α."""
        return 1 if self is Kind.plus else -1

    @property
    def surface_type(self):
        return 'II' if self is Kind.plus else 'III'


class Component(enum.Enum):
    """Biholomorphism type of a connected component of a type II fibre."""
    C = 'C'
    Cstar = 'Cstar'

    @property
    def moduli(self):
        if self is Component.C:
            return "C: the t-circle C/(b∧a/r)Z modulo a group containing t ↦ −t"
        return "C*: the t-circle C/(b∧a/r)Z modulo a finite group of translations"


class AdmissibleAlpha(NamedTuple):
    """An admissible α > 1, root of X² − θX ± 1."""
    theta: int
    kind: Kind
    alpha: QuadElem
    alpha_conj: QuadElem
    """The other root: α⁻¹ for plus, −α⁻¹ for minus."""
    d: int
    """Squarefree radicand of Q(α)."""
    scale: int
    """m with θ² ∓ 4 = m²·d."""


class EigenPair(NamedTuple):
    """Normalised eigenvectors a (for α) and b (for the other root) of N."""
    a: Tuple[QuadElem, QuadElem]
    b: Tuple[QuadElem, QuadElem]
    wedge: QuadElem
    """b∧a = b₁a₂ − b₂a₁."""
    alpha: QuadElem


class CompatClass(NamedTuple):
    """Integer vector p = π(c) with a compatible c mapping to it."""
    p: Tuple[int, int]
    c_representative: Tuple[QuadElem, QuadElem]


class OrbitRecord(NamedTuple):
    """One Z⁺(N)-orbit on Z_{N,r}."""
    representatives: Tuple[Tuple[int, int], ...]
    component: Optional[Component]
    """`None` for type III."""
    compat: CompatClass
    """Compatible vector for the first representative."""


class ClassEntry(NamedTuple):
    """Classification over one similarity class."""
    N: IMat
    generator: CentralizerGen
    eigenpair: EigenPair
    quotient: FiniteQuotient
    orbits: Tuple[OrbitRecord, ...]

    @property
    def quotient_order(self):
        return self.quotient.order


class ClassReport(NamedTuple):
    """Classification of type II (plus) or type III (minus) surfaces."""
    theta: int
    r: int
    kind: Kind
    alpha: AdmissibleAlpha
    classes: Tuple[ClassEntry, ...]

    @property
    def count(self):
        """Deformation classes (type II) or biholomorphism classes (type III)."""
        return sum(len(entry.orbits) for entry in self.classes)

    @property
    def count_label(self):
        return ('deformation_classes' if self.kind is Kind.plus
                else 'biholomorphism_classes')


def _kind(kind):
    try:
        return Kind(kind.value if isinstance(kind, Kind) else kind)
    except ValueError:
        raise ValueError(f"kind should be 'plus' or 'minus', got {kind!r}.") from None


def _prod(X):
    (x11, x12), (x21, x22) = IMat(X).tolist()
    return x11 * x12, x21 * x22


def admissible_alpha(theta, kind):
    """The admissible α > 1 with α + α⁻¹ = θ (plus) or α − α⁻¹ = θ (minus).

    Raises
    ------
    InadmissibleError
        If θ < 3 for plus or θ < 1 for minus.

    Examples
    --------
    >>> admissible_alpha(4, 'plus').alpha
    QuadElem(2, 1, d=3)
    """
    kind = _kind(kind)
    if int(theta) != theta:
        raise InadmissibleError(f"θ should be an integer, got {theta!r}.")
    theta = int(theta)
    minimum = 3 if kind is Kind.plus else 1
    if theta < minimum:
        raise InadmissibleError(
            f"θ should be at least {minimum} for kind {kind.value}, got {theta}.")
    root = QuadElem.sqrt(theta * theta - 4 * kind.det)
    alpha = (root + theta) / 2
    return AdmissibleAlpha(theta, kind, alpha, alpha.conjugate(), root.d, int(root.b))


def canonical_eigenpair(N, alpha):
    """Eigenvectors of N normalised to first coordinate 1.

    Parameters
    ----------
    N : `~inoue.intmat.IMat`
        2×2 with α as eigenvalue.
    alpha : `AdmissibleAlpha`

    Raises
    ------
    InadmissibleError
        If α is not an eigenvalue of N.
    """
    N = IMat(N)
    a_ = alpha.alpha
    if a_ * a_ - N.trace() * a_ + N.det() != 0:
        raise InadmissibleError(f"{a_} is not an eigenvalue of {N.tolist()}.")
    (n11, n12), _ = N.tolist()
    one = a_ ** 0
    a = (one, (a_ - n11) / n12)
    b = (one, (alpha.alpha_conj - n11) / n12)
    if N.apply(a) != tuple(a_ * x for x in a) or N.apply(b) != tuple(
            alpha.alpha_conj * x for x in b):
        raise InvariantError(f"eigenvectors of {N.tolist()} are not exact.")
    return EigenPair(a, b, b[0] * a[1] - b[1] * a[0], a_)


def relation_matrix(N, kind):
    """I₂ − N for type II, I₂ + N for type III."""
    N = IMat(N)
    return IMat.identity(2) - N if _kind(kind) is Kind.plus else IMat.identity(2) + N


def _scale(ep, kind):
    return ep.wedge if _kind(kind) is Kind.plus else -ep.wedge


def _half_e(ep):
    return tuple(x * y / 2 for x, y in zip(ep.a, ep.b))


def compat_c_from_p(ep, N, r, p, kind):
    """The compatible c with π(c) = p.

    Solves (I₂∓N)(c − e/2) − (w/2)·prod(N) = (w/r)·p.

    Examples
    --------
    >>> N = IMat([[1, 1], [1, 2]])
    >>> ep = canonical_eigenpair(N, admissible_alpha(3, 'plus'))
    >>> compat_c_from_p(ep, N, 1, (0, 0), 'plus')
    (QuadElem('1/2', '-1/2', d=5), QuadElem('-1/2', '-1/2', d=5))
    """
    w = _scale(ep, kind)
    rhs = [w * Fraction(n, 2) + w * Fraction(int(q), r) for n, q in zip(_prod(N), p)]
    inverse = rational_inverse(relation_matrix(N, kind).tolist())
    return tuple(h + sum((x * y for x, y in zip(row, rhs)), 0)
                 for h, row in zip(_half_e(ep), inverse))


def compat_p_from_c(ep, N, r, c, kind):
    """π(c) = (r/w)·[(I₂∓N)(c − e/2) − (w/2)·prod(N)].

    Raises
    ------
    NotCompatibleError
        If the result is not an integer vector.
    """
    w = _scale(ep, kind)
    shifted = tuple(x - h for x, h in zip(c, _half_e(ep)))
    image = relation_matrix(N, kind).apply(shifted)
    p = tuple((x - w * Fraction(n, 2)) * r / w for x, n in zip(image, _prod(N)))
    if not all(x.is_integer() for x in p):
        raise NotCompatibleError(f"c = ({', '.join(map(str, c))}) is not compatible.")
    return tuple(x.to_integer() for x in p)


def compat_class(ep, N, r, p, kind):
    """`CompatClass` for p, with its c verified by the inverse map."""
    c = compat_c_from_p(ep, N, r, p, kind)
    p = tuple(int(x) for x in p)
    if compat_p_from_c(ep, N, r, c, kind) != p:
        raise InvariantError(f"c ↦ p does not invert p ↦ c at p = {p}.")
    return CompatClass(p, c)


def _dot(k, v):
    return k[0] * v[0] + k[1] * v[1]


def k_dot_c(ep, N, r, c, k, kind, closed_form=False):
    """Action of k ∈ Z² on compatible vectors.

    Type II: k·c = c − α(ka)/(α−1)·b − (kb)/(α−1)·a.
    Type III: k·c = c + (kb)/(1+α)·a + α(ka)/(1−α)·b.
    With ``closed_form=True`` evaluates c + (b∧a)(I₂∓N)⁻¹(−k₂, k₁) instead.
    On p = π(c) this adds r(−k₂, k₁) for type II and r(k₂, −k₁) for type III.
    """
    kind = _kind(kind)
    k1, k2 = (int(x) for x in k)
    if closed_form:
        inverse = rational_inverse(relation_matrix(N, kind).tolist())
        shift = [ep.wedge * (row[0] * -k2 + row[1] * k1) for row in inverse]
        return tuple(x + s for x, s in zip(c, shift))

    alpha = ep.alpha
    ka, kb = _dot((k1, k2), ep.a), _dot((k1, k2), ep.b)
    if kind is Kind.plus:
        fa, fb = -kb / (alpha - 1), -alpha * ka / (alpha - 1)
    else:
        fa, fb = kb / (alpha + 1), alpha * ka / (1 - alpha)
    return tuple(x + fa * ai + fb * bi for x, ai, bi in zip(c, ep.a, ep.b))


def _binom2(k):
    return k * (k - 1) // 2


def k_dot_t(ep, N, r, c, t, k, closed_form=False):
    """The twisted action k·_c t on the type II parameter t.

    Evaluates t + α(ka)(kb)/(1−α) + kc + C(k₁)a₁b₁ + C(k₂)a₂b₂ + k₁k₂b₁a₂
    with C(k) = k(k−1)/2, or, with ``closed_form=True``, the equivalent
    t + b∧a·(k(I₂−N)⁻¹(½(n₁₁n₁₂ − k₂, n₂₁n₂₂ + k₁) + p/r) + k₁k₂/2) with
    p = π(c).  ``t`` may be real (`QuadElem`) or a
    `~inoue.exact_arith.ComplexPair`.

    Raises
    ------
    InadmissibleError
        If N does not have determinant 1 (type III groups have no t).
    """
    N = IMat(N)
    if N.det() != 1:
        raise InadmissibleError("k·t is only defined for type II data (det N = 1).")
    k1, k2 = (int(x) for x in k)
    if closed_form:
        p = compat_p_from_c(ep, N, r, c, Kind.plus)
        nn = _prod(N)
        v = (Fraction(nn[0] - k2, 2) + Fraction(p[0], r),
             Fraction(nn[1] + k1, 2) + Fraction(p[1], r))
        inverse = rational_inverse(relation_matrix(N, Kind.plus).tolist())
        u = [row[0] * v[0] + row[1] * v[1] for row in inverse]
        return t + ep.wedge * (k1 * u[0] + k2 * u[1] + Fraction(k1 * k2, 2))

    alpha = ep.alpha
    (a1, a2), (b1, b2) = ep.a, ep.b
    ka, kb = _dot((k1, k2), ep.a), _dot((k1, k2), ep.b)
    shift = (alpha * ka * kb / (1 - alpha) + _dot((k1, k2), c)
             + a1 * b1 * _binom2(k1) + a2 * b2 * _binom2(k2) + b1 * a2 * (k1 * k2))
    return t + shift


def _commutes(K, relations):
    K = IMat(K)
    if K @ relations != relations @ K:
        raise NotCommutingError(f"{K.tolist()} does not commute with N.")
    return K


def star_action(K, p, Q):
    """K*[p] = [ε_K·K·p] on the quotient Q = Z²/((I₂∓N)Z² + rZ²).

    Raises
    ------
    NotCommutingError
        If K does not commute with N.
    """
    K = _commutes(K, Q.relations)
    eps = K.det()
    return Q.reduce(tuple(eps * x for x in K.apply(p)))


def star_offset(K, N, kind='plus'):
    """Integer vector (ε_K·K − I₂)·prod(N) + ε_K(I₂∓N)·prod(K).

    Multiplied by r/2 this is the first term of K*[p] before passing to
    the quotient; it always lies in 2Z² for type II.
    """
    N = IMat(N)
    relations = relation_matrix(N, kind)
    K = _commutes(K, relations)
    eps = K.det()
    first = (K * eps - IMat.identity(2)).apply(_prod(N))
    second = relations.apply(_prod(K))
    return tuple(x + eps * y for x, y in zip(first, second))


def mod2_defect(K, L):
    """L·prod(K) + det(K)·prod(L) − prod(LK), an element of 2Z²."""
    K, L = IMat(K), IMat(L)
    det = K.det()
    return tuple(x + det * y - z for x, y, z in
                 zip(L.apply(_prod(K)), _prod(L), _prod(L @ K)))


def action_period(K, Q):
    """Least m ≥ 1 such that K**m acts trivially on Q."""
    reps = Q.representatives
    images = list(reps)
    m = 0
    while True:
        images = [star_action(K, p, Q) for p in images]
        m += 1
        if images == reps:
            return m
        if m > len(reps) * 4 + 4:
            raise InvariantError(f"action of {IMat(K).tolist()} on {Q!r} does not recur.")


def orbits(Q, K):
    """Orbits of the cyclic group ⟨K⟩ acting on Q by the star action.

    Returns a list of sorted tuples of representatives, ordered by their
    smallest element.
    """
    seen = set()
    result = []
    for p in Q.representatives:
        if p in seen:
            continue
        orbit = {p}
        q = star_action(K, p, Q)
        while q not in orbit:
            orbit.add(q)
            q = star_action(K, q, Q)
        seen |= orbit
        result.append(tuple(sorted(orbit)))
    return result


def component_type(N, r, orbit, gen, Q=None, period=None):
    """Whether the fibre component of an orbit is C or C*.

    It is C exactly when some L in Z⁺(N) with det L = −1 satisfies
    (I₂ + L)p ∈ rZ² + (I₂ − N)Z², i.e. fixes [p] under the star action.
    Such L are the odd powers of the generator, which act through a
    finite cyclic group, so one period suffices.
    """
    if gen.eps == 1:
        return Component.Cstar
    if Q is None:
        Q = quotient_group(relation_matrix(N, Kind.plus), r)
    if period is None:
        period = action_period(gen.K, Q)
    p = orbit[0]
    for m in range(1, 2 * period, 2):
        L = gen.K ** m
        if Q.contains(tuple(x + y for x, y in zip(p, L.apply(p)))):
            return Component.C
    return Component.Cstar


def classify(theta, r, kind):
    """Classify type II (plus) or type III (minus) surfaces for (θ, r).

    Returns
    -------
    report : `ClassReport`

    Raises
    ------
    InadmissibleError
        If θ is not admissible for the kind or r is not a positive integer.

    Examples
    --------
    >>> report = classify(4, 2, 'plus')
    >>> len(report.classes), report.count
    (1, 2)
    """
    alpha = admissible_alpha(theta, kind)
    kind = alpha.kind
    if int(r) != r or r < 1:
        raise InadmissibleError(f"r should be a positive integer, got {r!r}.")
    r = int(r)

    entries = []
    for cls in similarity_classes(alpha.theta, kind.det):
        N = cls.representative
        gen = positive_centralizer_generator(N)
        ep = canonical_eigenpair(N, alpha)
        Q = quotient_group(relation_matrix(N, kind), r)
        period = action_period(gen.K, Q)
        records = []
        for orbit in orbits(Q, gen.K):
            component = (component_type(N, r, orbit, gen, Q, period)
                         if kind is Kind.plus else None)
            records.append(OrbitRecord(orbit, component,
                                       compat_class(ep, N, r, orbit[0], kind)))
        if sum(len(o.representatives) for o in records) != Q.order:
            raise InvariantError(f"orbits of {N.tolist()} do not partition Z_(N,{r}).")
        log.debug("type %s, θ=%d, r=%d, N=%s: |Z_N,r|=%d, %d orbits",
                  kind.surface_type, alpha.theta, r, N.tolist(), Q.order, len(records))
        entries.append(ClassEntry(N, gen, ep, Q, tuple(records)))

    return ClassReport(alpha.theta, r, kind, alpha, tuple(entries))
