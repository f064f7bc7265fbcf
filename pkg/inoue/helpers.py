# Licensed under a 3-clause BSD style license - see LICENSE.rst
"""
Helpers to configure the searches done by inoue, in particular the
norm bound and height used for ideal classes of cubic orders.
"""
import os
import functools
import threading
from warnings import warn

import mpmath

from .errors import InadmissibleError, InoueWarning


__all__ = ['classproperty', 'ideal_search', 'conjugacy_search']

_NotFound = object()


class classproperty(property):
    """
    Similar to `property`, but for class-level, read-only properties.

    With ``lazy=True`` the value returned by the first call is cached per
    class, so that it is computed only once (guarded by a lock, so it is
    safe in threaded code).

    Examples
    --------

    ::

        >>> class Search:
        ...     _height = 50
        ...     @classproperty
        ...     def height(cls):
        ...         return cls._height
        ...
        >>> Search.height
        50
        >>> class Constant:
        ...     @classproperty(lazy=True)
        ...     def value(cls):
        ...         print("Computing")
        ...         return 1
        ...
        >>> Constant.value
        Computing
        1
        >>> Constant.value
        1
    """

    def __new__(cls, fget=None, lazy=False):
        if fget is None:
            # Used as a decorator with arguments.
            return functools.partial(cls, lazy=lazy)

        return super().__new__(cls)

    def __init__(self, fget, lazy=False):
        self._lazy = lazy
        if lazy:
            self._lock = threading.RLock()
            self._cache = {}
        super().__init__(fget=fget, doc=fget.__doc__)

    def __get__(self, obj, objtype=None):
        if objtype is None:
            objtype = type(obj)
        if not self._lazy:
            return self.fget(objtype)

        val = self._cache.get(objtype, _NotFound)
        if val is _NotFound:
            with self._lock:
                val = self._cache.get(objtype, _NotFound)
                if val is _NotFound:
                    val = self.fget(objtype)
                    self._cache[objtype] = val
        return val


class ideal_search:
    """Limits for the ideal class enumeration of cubic orders.

    This singleton class holds the norm bound used to enumerate ideals,
    the coefficient height of the quick search for elements realising an
    equivalence, and the largest box of the exhaustive search that follows
    it, using the methods 'get', 'set' and 'norm_bound_for'.

    The norm bound is taken from, in order of preference, an explicit
    `set`, the ``INOUE_NORM_BOUND`` environment variable, or the
    Minkowski bound of the discriminant.
    """
    _norm_bound = None
    """Explicit norm bound; `None` to use the environment or Minkowski."""
    _height = 50
    """Largest absolute coefficient tried in the quick element search."""
    _max_norm_bound = 4096
    """Guard against accidentally huge enumerations."""
    _max_box = 10**7
    """Most lattice points enumerated by the exhaustive element search."""

    _DEFAULTS = {'height': 50, 'max_norm_bound': 4096, 'max_box': 10**7}

    def __init__(self):
        raise RuntimeError("This class is a singleton.  Do not instantiate.")

    @classproperty(lazy=True)
    def minkowski_constant(cls):
        """(4/π)·(3!/3³), the Minkowski constant of a cubic field with one
        real and one pair of complex embeddings."""
        with mpmath.workdps(50):
            return 4 / mpmath.pi * mpmath.mpf(6) / 27

    @classproperty
    def env_norm_bound(cls):
        """Norm bound from ``INOUE_NORM_BOUND``, or `None` if not set."""
        value = os.environ.get('INOUE_NORM_BOUND', '').strip()
        if not value:
            return None
        try:
            return cls.validate(norm_bound=int(value))['norm_bound']
        except ValueError as exc:
            warn(f"ignoring INOUE_NORM_BOUND={value!r}: {exc}", InoueWarning)
            return None

    @classproperty
    def height(cls):
        """Coefficient height of the quick element search."""
        return cls._height

    @classproperty
    def max_norm_bound(cls):
        """Largest norm bound accepted."""
        return cls._max_norm_bound

    @classproperty
    def max_box(cls):
        """Largest number of points of the exhaustive element search."""
        return cls._max_box

    @classmethod
    def get(cls):
        """Get the current settings as a dict."""
        return {'norm_bound': cls._norm_bound, 'height': cls._height,
                'max_norm_bound': cls._max_norm_bound, 'max_box': cls._max_box}

    @classmethod
    def validate(cls, **settings):
        """Validate search settings.

        Parameters
        ----------
        **settings : int or None
            Any of ``norm_bound``, ``height``, ``max_norm_bound`` and
            ``max_box``; `None` entries are skipped.

        Returns
        -------
        settings : dict
            The validated settings, as integers.

        Raises
        ------
        InadmissibleError
            If any of the settings is not a positive integer.
        """
        validated = {}
        for name, value in settings.items():
            if name != 'norm_bound' and name not in cls._DEFAULTS:
                raise TypeError(f"unknown ideal search setting {name!r}.")
            if value is None:
                continue
            if int(value) != value or value < 1:
                raise InadmissibleError(f"{name} should be a positive integer, "
                                        f"got {value!r}.")
            validated[name] = int(value)
        return validated

    @classmethod
    def set(cls, norm_bound=None, height=None, max_norm_bound=None, max_box=None):
        """Set the search limits.

        Calling without arguments resets everything to the defaults.

        Parameters
        ----------
        norm_bound : int or None
            Explicit norm bound; `None` to fall back to the environment
            variable or the Minkowski bound.
        height : int or None
            Quick element search height; `None` resets to 50.
        max_norm_bound : int or None
            Overflow guard; `None` resets to 4096.
        max_box : int or None
            Exhaustive search guard; `None` resets to 10⁷.
        """
        settings = cls.validate(norm_bound=norm_bound, height=height,
                                max_norm_bound=max_norm_bound, max_box=max_box)
        cls._norm_bound = settings.get('norm_bound')
        cls._height = settings.get('height', cls._DEFAULTS['height'])
        cls._max_norm_bound = settings.get('max_norm_bound', cls._DEFAULTS['max_norm_bound'])
        cls._max_box = settings.get('max_box', cls._DEFAULTS['max_box'])

    @classmethod
    def default_norm_bound(cls, disc):
        """The Minkowski bound ceil(c·√|disc|) for a cubic discriminant."""
        with mpmath.workdps(50):
            return int(mpmath.ceil(cls.minkowski_constant * mpmath.sqrt(abs(disc))))

    @classmethod
    def norm_bound_for(cls, disc, norm_bound=None):
        """Norm bound to use for an order of discriminant ``disc``.

        An explicit ``norm_bound`` is validated and takes precedence.

        Raises
        ------
        InadmissibleError
            If ``norm_bound`` is not a positive integer.
        """
        if norm_bound is not None:
            return cls.validate(norm_bound=norm_bound)['norm_bound']
        if cls._norm_bound is not None:
            return cls._norm_bound
        env = cls.env_norm_bound
        if env is not None:
            return env
        return cls.default_norm_bound(disc)


class conjugacy_search:
    """Limits of the breadth-first conjugator search in GL(2,Z).

    Singleton like `ideal_search`; use 'get' and 'set'.
    """
    _max_length = 20
    """Longest generator word tried."""
    _entry_cap = 10**6
    """States with a larger matrix entry are not expanded."""
    _max_states = 200000
    """Visited states after which the search gives up."""

    def __init__(self):
        raise RuntimeError("This class is a singleton.  Do not instantiate.")

    @classmethod
    def get(cls):
        """Get the current limits as a dict."""
        return {'max_length': cls._max_length, 'entry_cap': cls._entry_cap,
                'max_states': cls._max_states}

    @classmethod
    def set(cls, max_length=20, entry_cap=10**6, max_states=200000):
        """Set the search limits; without arguments, reset to defaults."""
        for name, value in (('max_length', max_length), ('entry_cap', entry_cap),
                            ('max_states', max_states)):
            if int(value) != value or value < 1:
                raise InadmissibleError(f"{name} should be a positive integer, "
                                        f"got {value!r}.")
        cls._max_length = int(max_length)
        cls._entry_cap = int(entry_cap)
        cls._max_states = int(max_states)
