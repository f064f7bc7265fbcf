# Licensed under a 3-clause BSD style license - see LICENSE.rst
"""Exact classification of Inoue surfaces of types I, II and III."""

from .version import version as __version__  # noqa
from .errors import *  # noqa
from .exact_arith import QuadElem, ComplexPair, fundamental_unit, cf_expand  # noqa
from .intmat import (IMat, smith_normal_form, hermite_normal_form,  # noqa
                     quotient_group, matrix_invariants)
from .conjugacy import similarity_classes, are_similar  # noqa
from .centralizer import positive_centralizer_generator  # noqa
from .moduli_core import classify  # noqa
from .cubic import classify_type1, ideal_classes, order_index_ratio  # noqa
from .affine_group import (AffineMap, build_generators, verify_relations,  # noqa
                           normal_form, verify_tau_conjugation)
from .helpers import ideal_search, conjugacy_search  # noqa
