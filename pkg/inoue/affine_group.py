# Licensed under a 3-clause BSD style license - see LICENSE.rst
"""
Affine transformations of H×C and the groups defining Inoue surfaces.

An `AffineMap` is (w, z) ↦ (μw + u, λw + νz + ζ) with μ > 0 and u real.
For types II and III all coefficients are exact, in Q(√d) with complex
values as `~inoue.exact_arith.ComplexPair`; for type I they are
`mpmath.iv` intervals, and identities are accepted when every coefficient
of the difference lies within 2⁻¹²⁸.

The generators g₀, …, g₃ of each type are built by `build_generators`;
`verify_relations` checks their commutation relations by composition and
reads back the exponents; `normal_form` rewrites words symbolically and
`verify_tau_conjugation` checks the conjugation criterion for two
parameter sets to define the same surface.
"""
import contextlib
import logging
from fractions import Fraction
from typing import NamedTuple, Optional, Tuple

import mpmath

from .conjugacy import similarity_classes
from .cubic import admissible_cubic, companion_matrix
from .errors import DomainMismatchError, InadmissibleError, InvariantError
from .exact_arith import ComplexPair, QuadElem, _div
from .intmat import IMat, gl_inverse
from .moduli_core import (Kind, admissible_alpha, canonical_eigenpair,
                          compat_c_from_p, compat_p_from_c, k_dot_t)

__all__ = ['AffineMap', 'GeneratorSet', 'Finding', 'RelationReport', 'TauReport',
           'certified_precision', 'affine_generators', 'type1_generators',
           'type2_generators', 'type3_generators', 'build_generators',
           'verify_relations', 'normal_form', 'expand_normal_form', 'evaluate_word',
           'k_transform', 'verify_gl_action', 'verify_tau_conjugation',
           'compat_generators']

log = logging.getLogger(__name__)

PRECISION = 256
"""Working precision in bits of the certified (type I) path."""
ACCEPT_BITS = 128
"""Certified identities hold when all coefficients agree within 2**-ACCEPT_BITS."""


@contextlib.contextmanager
def certified_precision(prec=PRECISION):
    """Temporarily set the precision of `mpmath.iv` and `mpmath.mp`."""
    old = mpmath.iv.prec, mpmath.mp.prec
    mpmath.iv.prec = prec
    mpmath.mp.prec = prec
    try:
        yield
    finally:
        mpmath.iv.prec, mpmath.mp.prec = old


def _complex(x):
    return x if isinstance(x, ComplexPair) else ComplexPair(x, 0)


class AffineMap:
    """The affine map (w, z) ↦ (μw + u, λw + νz + ζ) of H×C.

    Parameters
    ----------
    mu : real scalar
        Positive.
    lam, nu, zeta : complex scalars
        Real scalars or `~inoue.exact_arith.ComplexPair`; ν nonzero.
    u : real scalar
    certified : bool
        Whether the coefficients are `mpmath.iv` intervals.
    """
    __slots__ = ('mu', 'lam', 'nu', 'u', 'zeta', 'certified')

    def __init__(self, mu=1, lam=0, nu=1, u=0, zeta=0, certified=False):
        self.mu = mu
        self.u = u
        self.lam = _complex(lam)
        self.nu = _complex(nu)
        self.zeta = _complex(zeta)
        self.certified = certified
        if not certified:
            if not mu > 0:
                raise InadmissibleError(f"μ = {mu} is not positive.")
            if self.nu == 0:
                raise InadmissibleError("ν should be nonzero.")

    @classmethod
    def identity(cls, certified=False):
        if certified:
            one, zero = mpmath.iv.mpf(1), mpmath.iv.mpf(0)
            return cls(one, zero, one, zero, zero, certified=True)
        return cls()

    @classmethod
    def translation(cls, u=0, zeta=0, certified=False):
        one = mpmath.iv.mpf(1) if certified else 1
        return cls(one, 0, one, u, zeta, certified=certified)

    def __repr__(self):
        return (f"AffineMap(mu={self.mu}, lam={self.lam}, nu={self.nu}, "
                f"u={self.u}, zeta={self.zeta})")

    def __call__(self, w, z):
        return self.mu * w + self.u, self.lam * w + self.nu * z + self.zeta

    def _check_domain(self, other):
        if self.certified != other.certified:
            raise DomainMismatchError("cannot combine exact and certified affine maps.")

    def compose(self, other):
        """The map self∘other."""
        self._check_domain(other)
        f, g = self, other
        return AffineMap(f.mu * g.mu,
                         f.lam * g.mu + f.nu * g.lam,
                         f.nu * g.nu,
                         f.mu * g.u + f.u,
                         f.lam * g.u + f.nu * g.zeta + f.zeta,
                         certified=f.certified)

    __matmul__ = compose

    def inverse(self):
        mu_inv = _div(1, self.mu)
        nu_inv = 1 / self.nu
        return AffineMap(mu_inv,
                         -self.lam * mu_inv * nu_inv,
                         nu_inv,
                         -self.u * mu_inv,
                         (self.lam * self.u * mu_inv - self.zeta) * nu_inv,
                         certified=self.certified)

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        result = AffineMap.identity(self.certified)
        for _ in range(abs(n)):
            result = result @ base
        return result

    def _coefficients(self):
        return (self.mu, self.lam.re, self.lam.im, self.nu.re, self.nu.im,
                self.u, self.zeta.re, self.zeta.im)

    def __eq__(self, other):
        if not isinstance(other, AffineMap):
            return NotImplemented
        self._check_domain(other)
        if self.certified:
            return self.matches(other)
        return all(x == y for x, y in zip(self._coefficients(), other._coefficients()))

    def __hash__(self):
        return hash(self._coefficients()) if not self.certified else id(self)

    def matches(self, other, bits=ACCEPT_BITS):
        """Certified equality: all coefficient differences within 2**-bits."""
        self._check_domain(other)
        if not self.certified:
            return self == other
        radius = mpmath.iv.mpf(2) ** -bits
        return all((mpmath.iv.absmax(x - y) <= radius) is True
                   for x, y in zip(self._coefficients(), other._coefficients()))

    def in_aff1(self):
        """ν = 1."""
        return self.nu == 1

    def in_aff11(self):
        """μ = 1 and ν = 1."""
        return self.mu == 1 and self.nu == 1

    def is_translation(self):
        """Element of T(U): linear part the identity."""
        return self.in_aff11() and self.lam == 0

    def in_t0(self):
        """Translation of the z coordinate only."""
        return self.is_translation() and self.u == 0


class GeneratorSet(NamedTuple):
    """Generators g₀, …, g₃ of the group defining an Inoue surface."""
    g0: AffineMap
    g1: AffineMap
    g2: AffineMap
    g3: AffineMap
    type_tag: str
    params: dict

    @property
    def generators(self):
        return (self.g0, self.g1, self.g2, self.g3)


def affine_generators(alpha, a, b, c, r, kind, t=0):
    """Exact generators for compatible data (α, a, b, c, r).

    g₀ is (αw, z + t) for type II and (αw, −z) for type III;
    gᵢ is (w + aᵢ, bᵢw + z + cᵢ) and g₃ shifts z by (b∧a)/r.
    """
    kind = Kind(kind.value if isinstance(kind, Kind) else kind)
    wedge = b[0] * a[1] - b[1] * a[0]
    if kind is Kind.plus:
        g0 = AffineMap(alpha, 0, 1, 0, t)
    else:
        g0 = AffineMap(alpha, 0, -1, 0, 0)
    g1 = AffineMap(1, b[0], 1, a[0], c[0])
    g2 = AffineMap(1, b[1], 1, a[1], c[1])
    g3 = AffineMap.translation(0, wedge / r)
    return g0, g1, g2, g3


def _exact_generators(theta, r, kind, p, t, N):
    alpha = admissible_alpha(theta, kind)
    if N is None:
        N = similarity_classes(alpha.theta, alpha.kind.det)[0].representative
    N = IMat(N)
    if int(r) != r or r < 1:
        raise InadmissibleError(f"r should be a positive integer, got {r!r}.")
    ep = canonical_eigenpair(N, alpha)
    p = tuple(int(x) for x in p)
    c = compat_c_from_p(ep, N, r, p, alpha.kind)
    if alpha.kind is Kind.minus:
        t = 0
    params = dict(theta=alpha.theta, r=int(r), kind=alpha.kind, N=N, alpha=alpha.alpha,
                  ep=ep, a=ep.a, b=ep.b, c=c, p=p, t=t, wedge=ep.wedge)
    return GeneratorSet(*affine_generators(alpha.alpha, ep.a, ep.b, c, r, alpha.kind, t),
                        alpha.kind.surface_type, params)


def type2_generators(theta, r, p=(0, 0), t=0, N=None):
    """Generators of G(α, a, b, c, r, t) with c the compatible vector of p.

    N defaults to the first similarity class representative of trace θ.
    """
    return _exact_generators(theta, r, Kind.plus, p, t, N)


def type3_generators(theta, r, p=(0, 0), N=None):
    """Generators of G(α, a, b, c, r) for det N = −1."""
    return _exact_generators(theta, r, Kind.minus, p, 0, N)


def _real_root_interval(theta2, theta1):
    """Certified enclosure of the real root of X³ − θ₂X² + θ₁X − 1."""
    coeffs = [1, -theta2, theta1, -1]
    roots = mpmath.polyroots(coeffs, maxsteps=200, extraprec=2 * PRECISION)
    # polyroots sorts by |Im|, so the real root comes first.
    root = mpmath.re(roots[0])
    eps = mpmath.mpf(2) ** (-PRECISION + 32)
    lo, hi = root - eps, root + eps

    def value(x):
        x = mpmath.iv.mpf(x)
        return ((x - theta2) * x + theta1) * x - 1

    # The polynomial is increasing through its only real root.
    if not ((value(lo) < 0) is True and (value(hi) > 0) is True):
        raise InvariantError(f"could not certify the real root of {coeffs}.")
    return mpmath.iv.mpf([lo, hi])


def type1_generators(theta2, theta1):
    """Generators g₀(β), gᵢ(a, b) for P(X) = X³ − θ₂X² + θ₁X − 1.

    With α the real root and β, β̄ the complex ones (Im β > 0), g₀ is
    (αw, βz), where α = |β|⁻², and gᵢ translates by (aᵢ, bᵢ) for
    a = (1, α, α²), b = (1, β, β²), eigenvectors of the companion matrix M.
    The coefficients are `mpmath.iv` enclosures at 256 bits; compose them
    inside `certified_precision` to keep that precision.
    """
    with certified_precision():
        return _type1_generators(theta2, theta1)


def _type1_generators(theta2, theta1):
    verdict = admissible_cubic(theta2, theta1)
    if not verdict.admissible:
        raise InadmissibleError(f"cubic ({theta2}, {theta1}) is not admissible: "
                                f"{verdict.reason}.")
    alpha = _real_root_interval(theta2, theta1)
    s = theta2 - alpha
    beta = ComplexPair(s / 2, mpmath.iv.sqrt(1 / alpha - s * s / 4))
    one, zero = mpmath.iv.mpf(1), mpmath.iv.mpf(0)
    a = (one, alpha, alpha * alpha)
    b = (ComplexPair(one, zero), beta, beta * beta)
    g0 = AffineMap(alpha, zero, beta, zero, zero, certified=True)
    gs = [AffineMap.translation(x, y, certified=True) for x, y in zip(a, b)]
    params = dict(theta2=theta2, theta1=theta1, M=companion_matrix(theta2, theta1),
                  alpha=alpha, beta=beta, a=a, b=b)
    return GeneratorSet(g0, *gs, 'I', params)


def build_generators(params, type_tag):
    """Build the generators of a surface of the given type.

    Parameters
    ----------
    params : dict
        For 'I': ``theta2``, ``theta1``.  For 'II': ``theta``, ``r`` and
        optionally ``p``, ``t``, ``N``.  For 'III': ``theta``, ``r`` and
        optionally ``p``, ``N``.
    type_tag : {'I', 'II', 'III'}

    Returns
    -------
    gs : `GeneratorSet`
    """
    if type_tag == 'I':
        return type1_generators(params['theta2'], params['theta1'])
    if type_tag == 'II':
        return type2_generators(params['theta'], params['r'], params.get('p', (0, 0)),
                                params.get('t', 0), params.get('N'))
    if type_tag == 'III':
        return type3_generators(params['theta'], params['r'], params.get('p', (0, 0)),
                                params.get('N'))
    raise ValueError(f"type should be 'I', 'II' or 'III', got {type_tag!r}.")


class Finding(NamedTuple):
    relation: str
    holds: bool
    detail: str = ''


class RelationReport(NamedTuple):
    """Outcome of `verify_relations`."""
    type_tag: str
    findings: Tuple[Finding, ...]
    exponents: Tuple[Tuple[int, ...], ...]
    """Rows (n_i1, n_i2) for types II/III, (m_i1, m_i2, m_i3) for type I."""
    p: Optional[Tuple[int, int]]
    """Exponents of g₃ in g₀gᵢg₀⁻¹, types II/III."""

    @property
    def ok(self):
        return all(f.holds for f in self.findings)


def _integral(x):
    return x.to_integer() if isinstance(x, QuadElem) else int(Fraction(x))


def _readback_h(gs, X):
    """Exponents (n₁, n₂, k) with X = g₁^n₁ g₂^n₂ g₃^k, or None."""
    if not (X.in_aff11() and X.lam.im == 0):
        return None
    (a1, a2), (b1, b2) = gs.params['a'], gs.params['b']
    u, lam = X.u, X.lam.re
    det = a1 * b2 - a2 * b1
    n1, n2 = (u * b2 - a2 * lam) / det, (a1 * lam - u * b1) / det
    if not (_is_int(n1) and _is_int(n2)):
        return None
    n1, n2 = _integral(n1), _integral(n2)
    Y = (gs.g1 ** n1 @ gs.g2 ** n2).inverse() @ X
    if not Y.in_t0():
        return None
    k = Y.zeta * gs.params['r'] / gs.params['wedge']
    if k.im != 0 or not _is_int(k.re):
        return None
    return n1, n2, _integral(k.re)


def _is_int(x):
    if isinstance(x, QuadElem):
        return x.is_integer()
    return Fraction(x).denominator == 1


def _verify_exact(gs):
    g0, g1, g2, g3 = gs.generators
    r = gs.params['r']
    findings = [
        Finding('[g1,g2] = g3^r', g1.inverse() @ g2.inverse() @ g1 @ g2 == g3 ** r),
        Finding('g1 g3 = g3 g1', g1 @ g3 == g3 @ g1),
        Finding('g2 g3 = g3 g2', g2 @ g3 == g3 @ g2),
    ]
    if gs.type_tag == 'II':
        findings.append(Finding('g0 g3 = g3 g0', g0 @ g3 == g3 @ g0))
    else:
        findings.append(Finding('g0 g3 g0^-1 = g3^-1', g0 @ g3 @ g0.inverse() == g3.inverse()))

    rows, p = [], []
    for i, g in ((1, g1), (2, g2)):
        X = g0 @ g @ g0.inverse()
        exps = _readback_h(gs, X)
        name = f'g0 g{i} g0^-1 = g1^n g2^n g3^p'
        if exps is None:
            findings.append(Finding(name, False, 'not in <g1, g2, g3>'))
            rows.append((0, 0))
            p.append(0)
            continue
        n1, n2, k = exps
        findings.append(Finding(name, X == g1 ** n1 @ g2 ** n2 @ g3 ** k,
                                f'n = ({n1}, {n2}), p = {k}'))
        rows.append((n1, n2))
        p.append(k)
    N = gs.params['N']
    findings.append(Finding('exponents n equal N', tuple(rows) == N.astuple(),
                            f'{rows} vs {N.tolist()}'))
    findings.append(Finding('exponents p equal π(c)', tuple(p) == gs.params['p'],
                            f'{tuple(p)} vs {gs.params["p"]}'))
    return RelationReport(gs.type_tag, tuple(findings), tuple(rows), tuple(p))


def _translation_coords(gs, X):
    """Real coordinates of a type I translation in the basis (aᵢ, bᵢ)."""
    a, b = gs.params['a'], gs.params['b']
    mp = mpmath.mp
    A = mp.matrix([[x.mid for x in a],
                   [y.re.mid for y in b],
                   [y.im.mid for y in b]])
    rhs = mp.matrix([X.u.mid, X.zeta.re.mid, X.zeta.im.mid])
    coords = mp.lu_solve(A, rhs)
    return [int(mp.nint(coords[i])) for i in range(3)]


def _verify_certified(gs):
    g0, *gi = gs.generators
    findings = []
    for i in range(3):
        for j in range(i + 1, 3):
            findings.append(Finding(f'g{i + 1} g{j + 1} = g{j + 1} g{i + 1}',
                                    (gi[i] @ gi[j]).matches(gi[j] @ gi[i])))
    rows = []
    for i, g in enumerate(gi):
        X = g0 @ g @ g0.inverse()
        m = _translation_coords(gs, X)
        product = gi[0] ** m[0] @ gi[1] ** m[1] @ gi[2] ** m[2]
        findings.append(Finding(f'g0 g{i + 1} g0^-1 = g1^m g2^m g3^m', X.matches(product),
                                f'm = {tuple(m)}'))
        rows.append(tuple(m))
    M = gs.params['M']
    findings.append(Finding('exponents m equal M', tuple(rows) == M.astuple(),
                            f'{rows} vs {M.tolist()}'))
    return RelationReport('I', tuple(findings), tuple(rows), None)


def verify_relations(gs):
    """Check the commutation relations of a generator set by composition.

    Types II/III: [g₁, g₂] = g₃^r, g₃ central in ⟨g₁, g₂, g₃⟩, g₀ commuting
    with g₃ (II) or inverting it (III), and g₀gᵢg₀⁻¹ = g₁^{nᵢ₁}g₂^{nᵢ₂}g₃^{pᵢ}
    with (nᵢⱼ) = N and p = π(c).  Type I: the gᵢ commute and
    g₀gᵢg₀⁻¹ = Πⱼ gⱼ^{mᵢⱼ} with (mᵢⱼ) the companion matrix.

    Returns
    -------
    report : `RelationReport`
    """
    if gs.type_tag == 'I':
        with certified_precision():
            report = _verify_certified(gs)
    else:
        report = _verify_exact(gs)
    for f in report.findings:
        if not f.holds:
            log.warning("relation %s fails for type %s: %s", f.relation, gs.type_tag, f.detail)
    return report


# Symbolic normal forms.  Types II/III: elements g₀^l·h with h = (n₁, n₂, k)
# standing for g₁^n₁ g₂^n₂ g₃^k in the Heisenberg group ⟨g₁, g₂, g₃⟩.

def _h_mul(x, y, r):
    return (x[0] + y[0], x[1] + y[1], x[2] + y[2] - r * x[1] * y[0])


def _h_pow(x, n, r):
    return (n * x[0], n * x[1], n * x[2] - r * x[0] * x[1] * (n * (n - 1) // 2))


class _Heisenberg:
    def __init__(self, N, p, r, sigma):
        self.r = r
        self.sigma = sigma
        self.images = tuple((row[0], row[1], q) for row, q in zip(N.tolist(), p))
        self.N_inv = gl_inverse(N)

    def phi(self, h):
        """g₀·h·g₀⁻¹."""
        x = _h_mul(_h_pow(self.images[0], h[0], self.r),
                   _h_pow(self.images[1], h[1], self.r), self.r)
        return (x[0], x[1], x[2] + self.sigma * h[2])

    def phi_inv(self, h):
        v = self.N_inv.T.apply(h[:2])
        kappa = self.phi((v[0], v[1], 0))[2]
        return (v[0], v[1], self.sigma * (h[2] - kappa))

    def conj(self, h, m):
        """g₀^{-m}·h·g₀^m."""
        for _ in range(abs(m)):
            h = self.phi_inv(h) if m > 0 else self.phi(h)
        return h


def _letters(word):
    for index, exponent in word:
        if index not in (0, 1, 2, 3):
            raise ValueError(f"generator index should be 0..3, got {index!r}.")
        step = 1 if exponent > 0 else -1
        for _ in range(abs(int(exponent))):
            yield index, step


def normal_form(word, gs):
    """Rewrite a word in the generators to its unique normal form.

    Parameters
    ----------
    word : list of (int, int)
        Pairs (generator index, exponent), read left to right.
    gs : `GeneratorSet`

    Returns
    -------
    exponents : tuple of int
        (l, n₁, n₂, k) with g = g₀^l g₁^n₁ g₂^n₂ g₃^k for types II/III;
        (k₃, k₂, k₁, k₀) with g = g₃^k₃ g₂^k₂ g₁^k₁ g₀^k₀ for type I.
    """
    if gs.type_tag == 'I':
        Mt = gs.params['M'].T
        x, k = (0, 0, 0), 0
        for index, step in _letters(word):
            if index == 0:
                k += step
            else:
                y = [0, 0, 0]
                y[index - 1] = step
                y = (Mt ** k).apply(y)
                x = tuple(p + q for p, q in zip(x, y))
        return x[2], x[1], x[0], k

    r = gs.params['r']
    group = _Heisenberg(gs.params['N'], gs.params['p'], r,
                        1 if gs.type_tag == 'II' else -1)
    l, h = 0, (0, 0, 0)
    for index, step in _letters(word):
        if index == 0:
            l, h = l + step, group.conj(h, step)
        else:
            y = [0, 0, 0]
            y[index - 1] = step
            h = _h_mul(h, tuple(y), r)
    return (l,) + h


def expand_normal_form(exponents, gs):
    """Compose the map of a normal form returned by `normal_form`."""
    g0, g1, g2, g3 = gs.generators
    if gs.type_tag == 'I':
        k3, k2, k1, k0 = exponents
        return g3 ** k3 @ g2 ** k2 @ g1 ** k1 @ g0 ** k0
    l, n1, n2, k = exponents
    return g0 ** l @ g1 ** n1 @ g2 ** n2 @ g3 ** k


def evaluate_word(word, gs):
    """Compose the generators along a word of (index, exponent) pairs."""
    result = AffineMap.identity(gs.g0.certified)
    for index, exponent in word:
        result = result @ gs.generators[index] ** int(exponent)
    return result


def _prod(X):
    (x11, x12), (x21, x22) = IMat(X).tolist()
    return x11 * x12, x21 * x22


def k_transform(K, a, b, c):
    """GL(2,Z) action on triples: (A, B, C) = K·(a, b, c).

    A = Ka, B = Kb and C = ½(A₁B₁, A₂B₂) + K(c − ½(a₁b₁, a₂b₂)) + ½(b∧a)·prod(K).
    """
    K = IMat(K)
    A, B = K.apply(a), K.apply(b)
    wedge = b[0] * a[1] - b[1] * a[0]
    shifted = K.apply(tuple(ci - ai * bi / 2 for ci, ai, bi in zip(c, a, b)))
    C = tuple(Ai * Bi / 2 + s + wedge * Fraction(q, 2)
              for Ai, Bi, s, q in zip(A, B, shifted, _prod(K)))
    return A, B, C


def verify_gl_action(gs, K):
    """Check g₁^k₁₁g₂^k₁₂ = g₁(A,B,C), g₁^k₂₁g₂^k₂₂ = g₂(A,B,C), g₃^det K = g₃(A,B,r)."""
    K = IMat(K)
    p = gs.params
    A, B, C = k_transform(K, p['a'], p['b'], p['c'])
    _, h1, h2, h3 = affine_generators(p['alpha'], A, B, C, p['r'], p['kind'], p['t'])
    (k11, k12), (k21, k22) = K.tolist()
    findings = (
        Finding('G1 = g1(A,B,C)', gs.g1 ** k11 @ gs.g2 ** k12 == h1),
        Finding('G2 = g2(A,B,C)', gs.g1 ** k21 @ gs.g2 ** k22 == h2),
        Finding('G3 = g3(A,B,r)', gs.g3 ** K.det() == h3),
    )
    return RelationReport(gs.type_tag, findings, K.astuple(), None)


class TauReport(NamedTuple):
    """Outcome of `verify_tau_conjugation`."""
    conjugation_holds: bool
    """The identities τg'ᵢτ⁻¹ checked by composition."""
    formulas_hold: bool
    """The closed formulas for (a', b', c', t') in terms of (a, b, c, t)."""
    failures: Tuple[str, ...]
    tau: AffineMap

    @property
    def consistent(self):
        return self.conjugation_holds == self.formulas_hold


def _binom2(k):
    return k * (k - 1) // 2


def verify_tau_conjugation(gs, k=(0, 0), s0=0, s=(0, 0), gs_prime=None, zeta=0):
    """Check the conjugation criterion on one instance.

    For k ∈ Z² and s₀, s = (s₁, s₂) ∈ Z, τ = (w + u, λw + z + ζ) with
    u = α(ka)/(1−α) and λ = (kb)/(α−1) for type II, λ = −(kb)/(1+α) and
    2ζ = λu(1+α) − [kc + k₁k₂b₁a₂ + C(k₁)a₁b₁ + C(k₂)a₂b₂ + s₀(b∧a)/r]
    for type III, conjugates the primed generators into
    (g₀g₁^k₁g₂^k₂g₃^s₀, g₁g₃^s₁, g₂g₃^s₂, g₃) exactly when a' = a, b' = b,
    c' = c − λa + u·b + (b∧a/r)s and, for type II, t' = k·_c t + s₀(b∧a)/r.

    Parameters
    ----------
    gs : `GeneratorSet`
        Type II or III.
    gs_prime : `GeneratorSet`, optional
        The primed data; by default it is built from the formulas, so that
        both sides should hold.
    zeta : scalar
        ζ for type II, where it is free.

    Returns
    -------
    report : `TauReport`
        Both booleans agree when the criterion is verified on the instance.
    """
    if gs.type_tag not in ('II', 'III'):
        raise InadmissibleError("the conjugation criterion applies to types II and III.")
    p = gs.params
    r, alpha, wedge = p['r'], p['alpha'], p['wedge']
    (a1, a2), (b1, b2), c = p['a'], p['b'], p['c']
    k1, k2 = (int(x) for x in k)
    s1, s2 = (int(x) for x in s)
    ka, kb = k1 * a1 + k2 * a2, k1 * b1 + k2 * b2
    u = alpha * ka / (1 - alpha)
    if gs.type_tag == 'II':
        lam = kb / (alpha - 1)
    else:
        lam = -kb / (alpha + 1)
        K0 = (k1 * c[0] + k2 * c[1] + b1 * a2 * (k1 * k2) + a1 * b1 * _binom2(k1)
              + a2 * b2 * _binom2(k2) + wedge * Fraction(s0, r))
        zeta = (lam * u * (1 + alpha) - K0) / 2
    tau = AffineMap(1, lam, 1, u, zeta)

    c_new = tuple(ci - lam * ai + u * bi + wedge * Fraction(si, r)
                  for ci, ai, bi, si in zip(c, p['a'], p['b'], (s1, s2)))
    t_new = 0
    if gs.type_tag == 'II':
        t_new = k_dot_t(p['ep'], p['N'], r, c, p['t'], (k1, k2)) + wedge * Fraction(s0, r)

    if gs_prime is None:
        pi_new = compat_p_from_c(p['ep'], p['N'], r, c_new, p['kind'])
        generators = affine_generators(alpha, p['a'], p['b'], c_new, r, p['kind'], t_new)
        gs_prime = GeneratorSet(*generators, gs.type_tag,
                                dict(p, c=c_new, p=pi_new, t=t_new))

    q = gs_prime.params
    formulas = (tuple(q['a']) == tuple(p['a']) and tuple(q['b']) == tuple(p['b'])
                and tuple(q['c']) == c_new
                and (gs.type_tag == 'III' or _complex(q['t']) == _complex(t_new)))

    g0, g1, g2, g3 = gs.generators
    tau_inv = tau.inverse()
    targets = (('g0', g0 @ g1 ** k1 @ g2 ** k2 @ g3 ** int(s0)),
               ('g1', g1 @ g3 ** s1), ('g2', g2 @ g3 ** s2), ('g3', g3))
    failures = tuple(name for (name, target), g in zip(targets, gs_prime.generators)
                     if tau @ g @ tau_inv != target)
    return TauReport(not failures, formulas, failures, tau)


def compat_generators(gs, c, t=None):
    """Generator set with the same (α, a, b, r) as ``gs`` and a new c (and t).

    Raises
    ------
    NotCompatibleError
        If c is not compatible.
    """
    p = gs.params
    t = p['t'] if t is None else t
    pi = compat_p_from_c(p['ep'], p['N'], p['r'], c, p['kind'])
    generators = affine_generators(p['alpha'], p['a'], p['b'], c, p['r'], p['kind'], t)
    return GeneratorSet(*generators, gs.type_tag, dict(p, c=tuple(c), p=pi, t=t))

