# Licensed under a 3-clause BSD style license - see LICENSE.rst
"""
Exact integer matrices.

`IMat` wraps a two-dimensional numpy array of Python integers (object
dtype), so entries never overflow.  Determinants, characteristic
polynomials, inverses and the Smith and Hermite normal forms are computed
by sympy's `~sympy.polys.matrices.DomainMatrix` over the integers; on top
of these this module provides inverses in GL(n,Z) and the finite abelian
groups Zⁿ/(AZⁿ + rZⁿ).
"""
import itertools
from fractions import Fraction
from typing import NamedTuple, Tuple

import numpy as np
from sympy.polys.domains import QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import (hermite_normal_form as hermite_column_form,
                                              smith_normal_decomp)

from .errors import InadmissibleError, InvariantError, NotSquareError, NotUnimodularError

__all__ = ['IMat', 'SNFResult', 'MatrixInvariants', 'FiniteQuotient',
           'matrix_invariants', 'smith_normal_form', 'hermite_normal_form',
           'quotient_group', 'gl_inverse', 'rational_inverse']


class IMat:
    """Integer matrix with arbitrary-precision entries.

    Parameters
    ----------
    entries : array_like
        Two-dimensional nested sequence (or array) of integers.

    Examples
    --------
    >>> N = IMat([[1, 1], [1, 2]])
    >>> N @ N
    IMat([[2, 3], [3, 5]])
    >>> N.det()
    1
    """
    __slots__ = ('_array',)

    def __init__(self, entries):
        if isinstance(entries, IMat):
            array = entries._array.copy()
        else:
            rows = [[int(x) for x in row] for row in np.asarray(entries, dtype=object)]
            array = np.empty((len(rows), len(rows[0]) if rows else 0), dtype=object)
            for i, row in enumerate(rows):
                if len(row) != array.shape[1]:
                    raise ValueError("rows of an integer matrix should have equal length.")
                array[i, :] = row
        if array.ndim != 2 or 0 in array.shape:
            raise ValueError("an integer matrix needs at least one row and column.")
        self._array = array

    @classmethod
    def _wrap(cls, array):
        self = object.__new__(cls)
        self._array = array
        return self

    @classmethod
    def identity(cls, n):
        array = np.zeros((n, n), dtype=object)
        for i in range(n):
            array[i, i] = 1
        return cls._wrap(array)

    @classmethod
    def zeros(cls, rows, cols):
        array = np.empty((rows, cols), dtype=object)
        array.fill(0)
        return cls._wrap(array)

    @property
    def shape(self):
        return self._array.shape

    @property
    def rows(self):
        return self._array.shape[0]

    @property
    def cols(self):
        return self._array.shape[1]

    @property
    def array(self):
        """A copy of the entries as an object array."""
        return self._array.copy()

    @property
    def T(self):
        return self._wrap(self._array.T.copy())

    def is_square(self):
        return self.rows == self.cols

    def tolist(self):
        return [[int(x) for x in row] for row in self._array]

    def astuple(self):
        return tuple(tuple(int(x) for x in row) for row in self._array)

    def __getitem__(self, item):
        value = self._array[item]
        if isinstance(value, np.ndarray):
            if value.ndim == 2:
                return self._wrap(value.copy())
            return tuple(int(x) for x in value)
        return value

    def __repr__(self):
        return f"IMat({self.tolist()})"

    def __str__(self):
        width = max(len(str(x)) for x in self._array.flat)
        return '\n'.join('[' + ' '.join(f"{x:>{width}}" for x in row) + ']'
                         for row in self.tolist())

    def __eq__(self, other):
        if isinstance(other, IMat):
            return self.shape == other.shape and bool(np.all(self._array == other._array))
        return NotImplemented

    def __hash__(self):
        return hash(self.astuple())

    def __add__(self, other):
        if not isinstance(other, IMat):
            return NotImplemented
        return self._wrap(self._array + other._array)

    def __sub__(self, other):
        if not isinstance(other, IMat):
            return NotImplemented
        return self._wrap(self._array - other._array)

    def __neg__(self):
        return self._wrap(-self._array)

    def __mul__(self, scalar):
        if isinstance(scalar, int) and not isinstance(scalar, bool):
            return self._wrap(self._array * scalar)
        return NotImplemented

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, IMat):
            if self.cols != other.rows:
                raise ValueError(f"cannot multiply {self.shape} by {other.shape} matrices.")
            return self._wrap(self._array.dot(other._array))
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        self._require_square()
        base = self if n >= 0 else gl_inverse(self)
        result = IMat.identity(self.rows)
        n = abs(n)
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def apply(self, vector):
        """Matrix times column vector, for entries of any ring.

        The vector entries may be ints, Fractions or `~inoue.exact_arith.QuadElem`;
        the result is a tuple of the same kind.
        """
        if len(vector) != self.cols:
            raise ValueError(f"vector of length {len(vector)} does not fit {self.shape}.")
        return tuple(sum((int(a) * v for a, v in zip(row, vector)), 0)
                     for row in self._array)

    def _require_square(self):
        if not self.is_square():
            raise NotSquareError(f"expected a square matrix, got shape {self.shape}.")

    def trace(self):
        self._require_square()
        return int(sum(self._array[i, i] for i in range(self.rows)))

    def to_domain_matrix(self):
        """The matrix as a sympy `~sympy.polys.matrices.DomainMatrix` over ZZ."""
        return DomainMatrix.from_list(self.tolist(), ZZ)

    @classmethod
    def from_domain_matrix(cls, M):
        return cls([[int(x) for x in row] for row in M.to_list()])

    def det(self):
        """Exact determinant."""
        self._require_square()
        if self.rows == 2:
            (a, b), (c, d) = self.tolist()
            return a * d - b * c
        return int(self.to_domain_matrix().det())

    def charpoly(self):
        """Monic characteristic polynomial, highest degree first."""
        self._require_square()
        return [int(c) for c in self.to_domain_matrix().charpoly()]


class MatrixInvariants(NamedTuple):
    det: int
    trace: int
    charpoly: Tuple[int, ...]


def matrix_invariants(A):
    """Determinant, trace and characteristic polynomial of a square matrix.

    Examples
    --------
    >>> matrix_invariants(IMat([[1, 1], [1, 2]]))
    MatrixInvariants(det=1, trace=3, charpoly=(1, -3, 1))
    """
    A = IMat(A)
    return MatrixInvariants(A.det(), A.trace(), tuple(A.charpoly()))


class SNFResult(NamedTuple):
    """Smith normal form ``U @ A @ V == D``."""
    U: IMat
    D: IMat
    V: IMat

    @property
    def divisors(self):
        """Diagonal of D, d₁ | d₂ | ..."""
        return tuple(self.D[i, i] for i in range(min(self.D.shape)))


def smith_normal_form(A):
    """Smith normal form of an integer matrix.

    Parameters
    ----------
    A : `IMat` or array_like
        Any m×n integer matrix.

    Returns
    -------
    snf : `SNFResult`
        ``U`` (m×m) and ``V`` (n×n) unimodular with ``U @ A @ V == D``,
        ``D`` diagonal with non-negative entries each dividing the next.

    Raises
    ------
    InvariantError
        If the decomposition does not reproduce ``D``.

    Examples
    --------
    >>> smith_normal_form(IMat([[2, 4], [6, 8]])).divisors
    (2, 4)
    """
    A = IMat(A)
    D, U, V = smith_normal_decomp(A.to_domain_matrix())
    snf = SNFResult(IMat.from_domain_matrix(U), IMat.from_domain_matrix(D),
                    IMat.from_domain_matrix(V))
    if snf.U @ A @ snf.V != snf.D:
        raise InvariantError(f"Smith decomposition of {A.tolist()} is inconsistent.")
    return snf


def hermite_normal_form(A):
    """Row-style Hermite normal form of the lattice spanned by the rows of A.

    Returns the nonzero rows, in echelon form with positive pivots and
    entries above each pivot reduced into [0, pivot).

    Examples
    --------
    >>> hermite_normal_form(IMat([[0, -2], [-1, -2], [3, 0], [0, 3]]))
    IMat([[1, 0], [0, 1]])
    """
    A = IMat(A)
    n = A.cols
    # The column form of A·J (J reversing coordinates) is upper triangular
    # with reduced rows; transposing and undoing J gives the row form.
    flipped = [list(column) for column in zip(*(row[::-1] for row in A.tolist()))]
    W = hermite_column_form(DomainMatrix.from_list(flipped, ZZ))
    rank = W.shape[1]
    if rank == 0:
        return IMat.zeros(1, n)
    columns = W.to_list()
    rows = [[int(columns[i][c]) for i in range(n)][::-1] for c in range(rank)]
    return IMat(rows[::-1])


def rational_inverse(rows):
    """Inverse of a square rational matrix.

    Parameters
    ----------
    rows : sequence of sequences
        Entries convertible to `~fractions.Fraction`.

    Returns
    -------
    inverse : list of lists of `~fractions.Fraction`

    Raises
    ------
    ZeroDivisionError
        If the matrix is singular.
    """
    entries = [[(Fraction(x).numerator, Fraction(x).denominator) for x in row]
               for row in rows]
    M = DomainMatrix.from_list(entries, QQ)
    if M.det() == 0:
        raise ZeroDivisionError("singular matrix has no inverse.")
    return [[Fraction(int(QQ.numer(x)), int(QQ.denom(x))) for x in row]
            for row in M.inv().to_list()]


def gl_inverse(A):
    """Inverse in GL(n,Z).

    Raises
    ------
    NotUnimodularError
        If the determinant is not ±1.

    Examples
    --------
    >>> gl_inverse(IMat([[0, 1], [1, 1]]))
    IMat([[-1, 1], [1, 0]])
    """
    A = IMat(A)
    det = A.det()
    if det not in (1, -1):
        raise NotUnimodularError(f"matrix with determinant {det} is not invertible over Z.")
    inverse = rational_inverse(A.tolist())
    return IMat([[int(x) for x in row] for row in inverse])


class FiniteQuotient:
    """The finite abelian group Zⁿ/(A·Zⁿ + r·Zⁿ).

    Cosets are represented by their canonical vectors: the residues
    modulo the Hermite basis of the relation lattice, with coordinate i in
    [0, hᵢᵢ).  Do not instantiate directly; use `quotient_group`.
    """

    def __init__(self, relations, r):
        self.relations = relations
        self.r = r
        n = relations.rows
        generators = IMat(np.hstack([relations.array, (IMat.identity(n) * r).array]))
        self.snf = smith_normal_form(generators)
        self.hnf = hermite_normal_form(generators.T)
        self._box = tuple(self.hnf[i, i] for i in range(n))

    @property
    def divisors(self):
        """Elementary divisors of (A | rI), each ≥ 1."""
        return self.snf.divisors

    @property
    def invariants(self):
        """Nontrivial elementary divisors, i.e., the group structure."""
        return tuple(d for d in self.divisors if d != 1)

    @property
    def order(self):
        order = 1
        for d in self.divisors:
            order *= d
        return order

    def __len__(self):
        return self.order

    def __repr__(self):
        return (f"<FiniteQuotient of Z^{self.relations.rows} by {self.relations.tolist()}"
                f" and r={self.r}: invariants {self.invariants}>")

    def reduce(self, vector):
        """Canonical representative of the coset of an integer vector."""
        v = [int(x) for x in vector]
        for i, row in enumerate(self.hnf.tolist()):
            q = v[i] // row[i]
            if q:
                v = [x - q * y for x, y in zip(v, row)]
        return tuple(v)

    @property
    def representatives(self):
        """All canonical representatives, in lexicographic order."""
        return list(itertools.product(*(range(h) for h in self._box)))

    def index(self, vector):
        """Position of the coset of ``vector`` in `representatives`."""
        index = 0
        for x, h in zip(self.reduce(vector), self._box):
            index = index * h + x
        return index

    def contains(self, vector):
        """Whether ``vector`` lies in the relation lattice A·Zⁿ + r·Zⁿ.

        Decided independently of `reduce`, via the Smith form.
        """
        image = self.snf.U.apply(tuple(int(x) for x in vector))
        return all((x == 0) if d == 0 else (x % d == 0)
                   for x, d in zip(image, self.divisors))


def quotient_group(A, r):
    """Build Z²/(A·Z² + r·Z²) (or its n-dimensional analogue).

    Parameters
    ----------
    A : `IMat`
        Square relation matrix, e.g. I₂ − N.
    r : int
        Positive integer.

    Returns
    -------
    quotient : `FiniteQuotient`

    Raises
    ------
    InadmissibleError
        If r is not a positive integer.

    Examples
    --------
    >>> N = IMat([[1, 2], [1, 3]])
    >>> quotient_group(IMat.identity(2) - N, 2).order
    2
    """
    A = IMat(A)
    A._require_square()
    if int(r) != r or r < 1:
        raise InadmissibleError(f"r should be a positive integer, got {r!r}.")
    return FiniteQuotient(A, int(r))
