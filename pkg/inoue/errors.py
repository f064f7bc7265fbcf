# Licensed under a 3-clause BSD style license - see LICENSE.rst
"""
Exception and warning classes used throughout inoue.

Anything that is wrong with the input raises a subclass of `InoueError`,
which itself is a `ValueError`.  An `InvariantError` means a computation
produced something it never should, i.e., a bug rather than bad input.
"""

__all__ = ['InoueError', 'RadicandMismatchError', 'DegenerateDiscriminantError',
           'NotSquareError', 'NotUnimodularError', 'InadmissibleError',
           'InvariantMismatchError', 'NotCommutingError', 'NotCompatibleError',
           'DomainMismatchError', 'BoundOverflowError', 'FieldIdentificationError',
           'NonSquareRatioError', 'InvariantError', 'InoueWarning']


class InoueError(ValueError):
    """Base class for invalid input to any inoue computation."""


class RadicandMismatchError(InoueError):
    """Quadratic field elements with different radicands were combined."""


class DegenerateDiscriminantError(InoueError):
    """A discriminant is non-positive or a perfect square."""


class NotSquareError(InoueError):
    """A square matrix was required."""


class NotUnimodularError(InoueError):
    """A matrix does not have determinant +1 or -1."""


class InadmissibleError(InoueError):
    """Parameters outside the admissible range of a surface type."""


class InvariantMismatchError(InoueError):
    """Two matrices cannot be similar since trace or determinant differ."""


class NotCommutingError(InoueError):
    """A matrix does not commute with the one it should centralise."""


class NotCompatibleError(InoueError):
    """Compatibility data does not map to an integer vector."""


class DomainMismatchError(InoueError):
    """Exact and certified affine maps were combined."""


class BoundOverflowError(InoueError):
    """A search bound exceeds the configured guard."""


class FieldIdentificationError(InoueError):
    """Two cubic polynomials could not be shown to define the same field."""


class NonSquareRatioError(InoueError):
    """A ratio of discriminants is not the square of a rational."""


class InvariantError(RuntimeError):
    """An internal invariant was violated."""


class InoueWarning(UserWarning):
    """Warning for results that are usable but not certified."""
