# Licensed under a 3-clause BSD style license - see LICENSE.rst
"""
GL(2,Z)-similarity classes of hyperbolic integer 2×2 matrices.

A matrix N is attached to the binary quadratic form
f_N(v) = det[v | Nv] = n₂₁x² + (n₂₂−n₁₁)xy − n₁₂y², and conjugation by K
acts as f_{KNK⁻¹} = det(K)·f_N∘K⁻¹.  Similarity classes with a given trace
and determinant therefore correspond to cycles of reduced indefinite
forms, merged in pairs by the involution (a, b, c) ↦ (−a, b, −c), which is
the form of JNJ⁻¹ for J = diag(1, −1).
"""
import logging
from collections import deque
from math import isqrt
from typing import NamedTuple, Optional, Tuple

from .errors import (DegenerateDiscriminantError, InadmissibleError,
                     InvariantError, InvariantMismatchError)
from .helpers import conjugacy_search
from .intmat import IMat, gl_inverse

__all__ = ['BQForm', 'SimilarityClass', 'SimilarityVerdict', 'associated_form',
           'reduce_form', 'reduction_cycle', 'reduced_forms', 'similarity_classes',
           'are_similar', 'conjugate_word_search', 'conjugacy_orbit',
           'form_matrix', 'GL2_GENERATORS']

log = logging.getLogger(__name__)

J = IMat([[1, 0], [0, -1]])

GL2_GENERATORS = (('J', J),
                  ('S', IMat([[0, -1], [1, 0]])),
                  ('T', IMat([[1, 1], [0, 1]])),
                  ('Ti', IMat([[1, -1], [0, 1]])))
"""Named generators of GL(2,Z), in the order the word search tries them."""


class BQForm(tuple):
    """Binary quadratic form ax² + bxy + cy²."""

    def __new__(cls, a, b, c):
        return tuple.__new__(cls, (int(a), int(b), int(c)))

    def __repr__(self):
        return f"BQForm{tuple(self)}"

    @property
    def a(self):
        return self[0]

    @property
    def b(self):
        return self[1]

    @property
    def c(self):
        return self[2]

    def discriminant(self):
        return self.b ** 2 - 4 * self.a * self.c

    def __call__(self, x, y):
        return self.a * x * x + self.b * x * y + self.c * y * y

    def transform(self, M):
        """The form f∘M, i.e. (x, y) ↦ f(M(x, y))."""
        (p, q), (r, s) = M.tolist()
        a, b, c = self
        return BQForm(a * p * p + b * p * r + c * r * r,
                      2 * a * p * q + b * (p * s + q * r) + 2 * c * r * s,
                      a * q * q + b * q * s + c * s * s)

    def improper(self):
        """The form −f∘J, which is f_{JNJ⁻¹} when f = f_N."""
        return BQForm(-self.a, self.b, -self.c)

    def _check_hyperbolic(self):
        disc = self.discriminant()
        if disc <= 0 or isqrt(disc) ** 2 == disc:
            raise DegenerateDiscriminantError(
                f"form {tuple(self)} has discriminant {disc}, "
                "which is not a positive non-square.")
        return disc

    def is_reduced(self):
        """Whether 0 < b < √Δ and √Δ − b < 2|a| < √Δ + b."""
        s = isqrt(self.discriminant())
        a2 = 2 * abs(self.a)
        return 0 < self.b <= s and a2 + self.b > s and a2 - self.b <= s

    def rho(self):
        """One reduction step; returns (form, R) with form = f∘R."""
        disc = self.discriminant()
        s = isqrt(disc)
        a, b, c = self
        m = 2 * abs(c)
        if abs(c) > s:
            new_b = (-b) % m
            if new_b > abs(c):
                new_b -= m
        else:
            new_b = s - (s + b) % m
        t = (new_b + b) // (2 * c)
        R = IMat([[0, -1], [1, t]])
        new = BQForm(c, new_b, a - b * t + c * t * t)
        return new, R


def associated_form(N):
    """The form f_N(x, y) = det[(x, y) | N(x, y)] of a hyperbolic matrix.

    Examples
    --------
    >>> associated_form(IMat([[1, 2], [1, 3]]))
    BQForm(1, 2, -2)
    """
    N = IMat(N)
    if N.shape != (2, 2):
        raise ValueError(f"expected a 2×2 matrix, got shape {N.shape}.")
    (n11, n12), (n21, n22) = N.tolist()
    f = BQForm(n21, n22 - n11, -n12)
    try:
        f._check_hyperbolic()
    except DegenerateDiscriminantError:
        raise DegenerateDiscriminantError(
            f"matrix {N.tolist()} is not hyperbolic with irrational spectrum.") from None
    return f


def form_matrix(f, trace):
    """Matrix with associated form f and the given trace.

    Raises
    ------
    InvariantError
        If b and the trace have different parity.
    """
    a, b, c = f
    if (trace - b) % 2:
        raise InvariantError(f"form {tuple(f)} has b of parity different from trace {trace}.")
    return IMat([[(trace - b) // 2, -c], [a, (trace + b) // 2]])


def reduce_form(f):
    """Reduce a form, keeping track of the transformation.

    Returns
    -------
    reduced : `BQForm`
    M : `~inoue.intmat.IMat`
        In SL(2,Z), with ``f.transform(M) == reduced``.
    """
    f = BQForm(*f)
    disc = f._check_hyperbolic()
    M = IMat.identity(2)
    steps = 0
    while not f.is_reduced():
        f, R = f.rho()
        M = M @ R
        steps += 1
        if steps > 64 + 4 * disc.bit_length() + sum(map(abs, f)).bit_length() * 4:
            raise InvariantError(f"reduction of a form of discriminant {disc} does not end.")
    return f, M


def _walk_cycle(f):
    """Forms of the reduction cycle of a reduced f, with f∘W for each."""
    forms = [(f, IMat.identity(2))]
    g, W = f, IMat.identity(2)
    while True:
        g, R = g.rho()
        W = W @ R
        if g == f:
            return forms
        forms.append((g, W))


def _rotate_min(cycle):
    start = cycle.index(min(cycle))
    return tuple(cycle[start:] + cycle[:start])


def reduction_cycle(f):
    """The cycle of reduced forms properly equivalent to f.

    The cycle starts at its lexicographically smallest form, so two forms
    are properly equivalent exactly when their cycles are equal.

    Examples
    --------
    >>> reduction_cycle(BQForm(1, 1, -1))
    (BQForm(-1, 1, 1), BQForm(1, 1, -1))
    """
    reduced, _ = reduce_form(f)
    return _rotate_min([g for g, _ in _walk_cycle(reduced)])


def reduced_forms(disc):
    """All reduced forms of a positive non-square discriminant, sorted."""
    BQForm(1, disc % 2, -(disc // 4))._check_hyperbolic()
    s = isqrt(disc)
    forms = []
    for b in range(1, s + 1):
        if (b - disc) % 2:
            continue
        ac = (b * b - disc) // 4
        for a in range(1, abs(ac) + 1):
            if ac % a:
                continue
            for sa in (a, -a):
                f = BQForm(sa, b, ac // sa)
                if f.is_reduced():
                    forms.append(f)
    return sorted(forms)


class SimilarityClass(NamedTuple):
    """A GL(2,Z)-similarity class of matrices with given trace and det."""
    representative: IMat
    trace: int
    det: int
    cycle: Tuple[BQForm, ...]
    """Reduction cycle of the representative's associated form."""
    cycles: Tuple[Tuple[BQForm, ...], ...]
    """All proper cycles merged into the class (one or two)."""


def _check_family(trace, det):
    if det not in (1, -1):
        raise InadmissibleError(f"determinant should be +1 or -1, got {det}.")
    if det == 1 and trace < 3:
        raise InadmissibleError(f"trace should be at least 3 for determinant 1, got {trace}.")
    if det == -1 and trace < 1:
        raise InadmissibleError(f"trace should be at least 1 for determinant -1, got {trace}.")
    return trace * trace - 4 * det


def similarity_classes(trace, det, sl_only=False):
    """All similarity classes of integer matrices with given trace and det.

    Parameters
    ----------
    trace : int
        θ ≥ 3 for det = 1, θ ≥ 1 for det = −1.
    det : int
        +1 or −1.
    sl_only : bool, optional
        If `True`, return SL(2,Z)-classes (proper form cycles) without
        merging improperly equivalent ones.  For diagnostics.

    Returns
    -------
    classes : list of `SimilarityClass`
        Sorted by the associated form of the representative, which is the
        form in the class with a > 0 and (a, b) smallest.

    Examples
    --------
    >>> [c.representative for c in similarity_classes(4, 1)]
    [IMat([[1, 2], [1, 3]])]
    """
    disc = _check_family(trace, det)
    seen = set()
    cycles = []
    for f in reduced_forms(disc):
        if f not in seen:
            cycle = _rotate_min([g for g, _ in _walk_cycle(f)])
            seen.update(cycle)
            cycles.append(cycle)

    groups = []
    if sl_only:
        groups = [(c,) for c in cycles]
    else:
        done = set()
        for cycle in cycles:
            if cycle in done:
                continue
            mirror = _rotate_min([f.improper() for f in cycle])
            group = (cycle,) if mirror == cycle else tuple(sorted((cycle, mirror)))
            done.update(group)
            groups.append(group)

    classes = []
    for group in groups:
        best = min((f for cycle in group for f in cycle if f.a > 0),
                   key=lambda f: (f.a, f.b, f.c))
        cycle = next(c for c in group if best in c)
        classes.append(SimilarityClass(form_matrix(best, trace), trace, det, cycle, group))
    classes.sort(key=lambda cls: associated_form(cls.representative))
    log.debug("trace %d, det %d: %d classes from %d cycles",
              trace, det, len(classes), len(cycles))
    return classes


class SimilarityVerdict(NamedTuple):
    """Outcome of `are_similar`.

    ``similar`` is `True` with a certificate K (K·N·K⁻¹ = N₂), `False` with
    the two distinct cycle invariants as witness, or `None` if a word
    search ran out of its bound.
    """
    similar: Optional[bool]
    certificate: Optional[IMat]
    witness: Optional[Tuple[Tuple[BQForm, ...], Tuple[BQForm, ...]]]
    method: str


def _proper_certificate(N, N2):
    f1, M1 = reduce_form(associated_form(N))
    f2, M2 = reduce_form(associated_form(N2))
    for g, W in _walk_cycle(f1):
        if g == f2:
            return M2 @ gl_inverse(W) @ gl_inverse(M1)
    return None


def are_similar(N, N2, bound=None, method='cycle'):
    """Decide whether two hyperbolic matrices are GL(2,Z)-similar.

    Parameters
    ----------
    N, N2 : `~inoue.intmat.IMat`
        2×2 matrices with equal trace and determinant.
    bound : int, optional
        Word length bound for ``method='bfs'``; default from
        `~inoue.helpers.conjugacy_search`.
    method : {'cycle', 'bfs'}
        Decide via reduction cycles (always conclusive), or search for a
        conjugating word (may be inconclusive).

    Returns
    -------
    verdict : `SimilarityVerdict`

    Raises
    ------
    InvariantMismatchError
        If the traces or determinants differ.
    """
    N, N2 = IMat(N), IMat(N2)
    if N.trace() != N2.trace() or N.det() != N2.det():
        raise InvariantMismatchError(
            f"trace/det ({N.trace()}, {N.det()}) and ({N2.trace()}, {N2.det()}) differ.")

    if method == 'bfs':
        found = conjugate_word_search(N, N2, max_length=bound)
        if found is None:
            return SimilarityVerdict(None, None, None, 'bfs')
        return SimilarityVerdict(True, found[0], None, 'bfs')
    if method != 'cycle':
        raise ValueError(f"method should be 'cycle' or 'bfs', got {method!r}.")

    K = _proper_certificate(N, N2)
    if K is None:
        K = _proper_certificate(J @ N @ J, N2)
        if K is not None:
            K = K @ J
    if K is None:
        witness = (reduction_cycle(associated_form(N)),
                   reduction_cycle(associated_form(N2)))
        return SimilarityVerdict(False, None, witness, 'cycle')
    if K @ N != N2 @ K:
        raise InvariantError(f"certificate {K.tolist()} does not conjugate N to N2.")
    return SimilarityVerdict(True, K, None, 'cycle')


def _max_entry(M):
    return max(abs(x) for row in M.tolist() for x in row)


def conjugate_word_search(N, N2, max_length=None, entry_cap=None):
    """Breadth-first search for K with K·N·K⁻¹ = N2 over generator words.

    States are the conjugated matrices; generators are tried in the order
    of `GL2_GENERATORS`, so the first hit is the shortlex-least word.

    Returns
    -------
    found : tuple or None
        ``(K, word)`` with ``word`` the generator names in order of
        application, or `None` if not found within the limits.
    """
    limits = conjugacy_search.get()
    max_length = limits['max_length'] if max_length is None else max_length
    entry_cap = limits['entry_cap'] if entry_cap is None else entry_cap
    N, N2 = IMat(N), IMat(N2)
    inverses = {name: gl_inverse(G) for name, G in GL2_GENERATORS}
    start = N.astuple()
    parents = {start: None}
    queue = deque([(N, 0)])
    target = N2.astuple()
    while queue:
        X, depth = queue.popleft()
        if X.astuple() == target:
            word = []
            key = target
            while parents[key] is not None:
                key, name = parents[key]
                word.append(name)
            word.reverse()
            K = IMat.identity(2)
            for name in word:
                K = dict(GL2_GENERATORS)[name] @ K
            return K, tuple(word)
        if depth >= max_length or len(parents) > limits['max_states']:
            continue
        for name, G in GL2_GENERATORS:
            Y = G @ X @ inverses[name]
            key = Y.astuple()
            if key in parents or _max_entry(Y) > entry_cap:
                continue
            parents[key] = (X.astuple(), name)
            queue.append((Y, depth + 1))
    return None


def conjugacy_orbit(N, max_length, max_size=400):
    """Matrices K·N·K⁻¹ for generator words K of length ≤ max_length.

    Returns a dict mapping each matrix (as nested tuples) to a K reaching
    it, with at most ``max_size`` entries.
    """
    N = IMat(N)
    orbit = {N.astuple(): IMat.identity(2)}
    frontier = [(N, IMat.identity(2))]
    for _ in range(max_length):
        new = []
        for X, K in frontier:
            for _, G in GL2_GENERATORS:
                Y = G @ X @ gl_inverse(G)
                if Y.astuple() not in orbit:
                    orbit[Y.astuple()] = G @ K
                    new.append((Y, G @ K))
                    if len(orbit) >= max_size:
                        return orbit
        frontier = new
    return orbit
