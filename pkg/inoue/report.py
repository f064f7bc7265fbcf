# Licensed under a 3-clause BSD style license - see LICENSE.rst
"""
Rendering of classification reports.

Every report is first turned into a plain value, a nested structure of
dicts, lists, strings, integers, booleans and `~inoue.exact_arith.QuadElem`.
The text format renders that value with the jinja2 templates in
``inoue/templates``; the machine format is JSON with sorted keys, all
integers written as decimal strings and quadratic irrationals as
``{"d", "a_num", "a_den", "b_num", "b_den"}``.  `parse_machine` inverts the
machine format back to the value.
"""
import functools
import json
import os
import re
from fractions import Fraction

from .affine_group import RelationReport, TauReport
from .centralizer import CentralizerGen
from .conjugacy import SimilarityClass
from .cubic import TypeIReport
from .exact_arith import QuadElem
from .intmat import IMat
from .moduli_core import ClassReport
from .version import schema_version

__all__ = ['report_value', 'emit', 'emit_batch', 'parse_machine', 'TEMPLATE_DIR']

TEMPLATE_DIR = os.path.join(os.path.dirname(__file__), 'templates')

_QUAD_KEYS = frozenset(('d', 'a_num', 'a_den', 'b_num', 'b_den'))
_INTEGER = re.compile(r'-?\d+\Z')
_TEMPLATES = {'typeI': 'type1.txt.templ', 'typeII': 'surfaces.txt.templ',
              'typeIII': 'surfaces.txt.templ', 'classes': 'classes.txt.templ',
              'centralizer': 'centralizer.txt.templ', 'verify': 'verify.txt.templ',
              'tau': 'tau.txt.templ'}


def _matrix(M):
    return IMat(M).tolist()


def _class_report_value(report):
    classes = []
    for entry in report.classes:
        orbits = [{'size': len(orbit.representatives),
                   'component': orbit.component.value if orbit.component else None,
                   'representatives': [list(p) for p in orbit.representatives],
                   'p': list(orbit.compat.p),
                   'c': list(orbit.compat.c_representative)}
                  for orbit in entry.orbits]
        classes.append({
            'representative': _matrix(entry.N),
            'generator': _generator_value(entry.generator),
            'quotient': {'divisors': list(entry.quotient.divisors),
                         'order': entry.quotient.order},
            'orbits': orbits})
    return {'report': 'type' + report.kind.surface_type,
            'theta': report.theta, 'r': report.r, 'kind': report.kind.value,
            'alpha': report.alpha.alpha,
            report.count_label: report.count,
            'classes': classes}


def _generator_value(gen):
    return {'K': _matrix(gen.K), 'det': gen.eps, 'eigenvalue': gen.theta_eig,
            'power_to_N': gen.power_to_N}


def _type1_value(report):
    return {'report': 'typeI', 'theta2': report.theta2, 'theta1': report.theta1,
            'admissible': report.admissible, 'disc': report.disc,
            'ideal_classes': report.h, 'norm_bound': report.bound,
            'stable': report.stable, 'conclusive': report.conclusive,
            'biholomorphism_classes': report.count,
            'classes': [{'ideal': _matrix(c.ideal.hnf_basis), 'norm': c.ideal.norm,
                         'beta': c.beta_label} for c in report.classes]}


def _similarity_value(classes, trace=None, det=None):
    if classes:
        trace, det = classes[0].trace, classes[0].det
    return {'report': 'classes', 'theta': trace, 'det': det, 'count': len(classes),
            'classes': [{'representative': _matrix(c.representative),
                         'cycle': [list(f) for f in c.cycle],
                         'cycles': len(c.cycles)} for c in classes]}


def _relations_value(report):
    return {'report': 'verify', 'type': report.type_tag, 'ok': report.ok,
            'findings': [{'relation': f.relation, 'holds': f.holds, 'detail': f.detail}
                         for f in report.findings],
            'exponents': [list(row) for row in report.exponents],
            'p': None if report.p is None else list(report.p)}


def _tau_value(report):
    return {'report': 'tau', 'ok': report.consistent and report.conjugation_holds,
            'conjugation_holds': report.conjugation_holds,
            'formulas_hold': report.formulas_hold,
            'failures': list(report.failures)}


def report_value(report, **context):
    """Plain value of a report.

    Parameters
    ----------
    report : `~inoue.moduli_core.ClassReport`, `~inoue.cubic.TypeIReport`,
             `~inoue.affine_group.RelationReport`, `~inoue.affine_group.TauReport`,
             `~inoue.centralizer.CentralizerGen` or list of
             `~inoue.conjugacy.SimilarityClass`
    **context
        ``matrix`` for a centraliser generator; ``trace`` and ``det`` for
        an empty list of similarity classes.

    Returns
    -------
    value : dict
        Always with ``schema_version`` and ``report`` keys.
    """
    if isinstance(report, ClassReport):
        value = _class_report_value(report)
    elif isinstance(report, TypeIReport):
        value = _type1_value(report)
    elif isinstance(report, RelationReport):
        value = _relations_value(report)
    elif isinstance(report, TauReport):
        value = _tau_value(report)
    elif isinstance(report, CentralizerGen):
        value = dict(_generator_value(report), report='centralizer',
                     matrix=_matrix(context['matrix']))
    elif isinstance(report, (list, tuple)) and all(isinstance(c, SimilarityClass)
                                                   for c in report):
        value = _similarity_value(list(report), context.get('trace'), context.get('det'))
    else:
        raise TypeError(f"cannot report on {type(report).__name__}.")
    value['schema_version'] = schema_version
    return value


def _encode(value):
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, QuadElem):
        a, b = value.a, value.b
        return {'d': str(value.d), 'a_num': str(a.numerator), 'a_den': str(a.denominator),
                'b_num': str(b.numerator), 'b_den': str(b.denominator)}
    if isinstance(value, dict):
        return {key: _encode(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_encode(item) for item in value]
    raise TypeError(f"cannot encode {type(value).__name__}.")


def _decode(value):
    if isinstance(value, str):
        return int(value) if _INTEGER.match(value) else value
    if isinstance(value, dict):
        if set(value) == _QUAD_KEYS:
            return QuadElem(Fraction(int(value['a_num']), int(value['a_den'])),
                            Fraction(int(value['b_num']), int(value['b_den'])),
                            int(value['d']))
        return {key: item if key == 'schema_version' else _decode(item)
                for key, item in value.items()}
    if isinstance(value, list):
        return [_decode(item) for item in value]
    return value


def _format_matrix(rows):
    return '[' + ', '.join('[' + ', '.join(str(x) for x in row) + ']' for row in rows) + ']'


def _format_vector(values):
    return '(' + ', '.join(str(x) for x in values) + ')'


def _dumps(value):
    return json.dumps(_encode(value), sort_keys=True, indent=2, ensure_ascii=False) + '\n'


@functools.lru_cache()
def _environment():
    from jinja2 import Environment, FileSystemLoader

    env = Environment(loader=FileSystemLoader(TEMPLATE_DIR), keep_trailing_newline=True,
                      trim_blocks=True, lstrip_blocks=True)
    env.filters['matrix'] = _format_matrix
    env.filters['vector'] = _format_vector
    return env


def emit(report, format='text', list_orbits=False, **context):
    """Render a report.

    Parameters
    ----------
    report : report object
        Anything accepted by `report_value`.
    format : {'text', 'machine'}
        Fixed-width text tables, or the versioned JSON document.
    list_orbits : bool
        Whether the text format lists the members of each orbit.
    **context
        Passed on to `report_value`.

    Returns
    -------
    output : str
        Ending in a newline; identical for identical input.
    """
    value = report_value(report, **context)
    if format == 'machine':
        return _dumps(value)
    if format != 'text':
        raise ValueError(f"format should be 'text' or 'machine', got {format!r}.")
    template = _environment().get_template(_TEMPLATES[value['report']])
    return template.render(doc=value, list_orbits=list_orbits)


def emit_batch(reports, format='text', list_orbits=False):
    """Render several reports, in order, as one output.

    The machine format wraps the report values in a document with
    ``"report": "batch"``.
    """
    if format == 'machine':
        return _dumps({'report': 'batch', 'schema_version': schema_version,
                       'reports': [report_value(report) for report in reports]})
    return '\n'.join(emit(report, format, list_orbits) for report in reports)


def parse_machine(text):
    """Reconstruct the value of a report from its machine format.

    Raises
    ------
    ValueError
        If the document has an unknown ``schema_version``.
    """
    value = _decode(json.loads(text))
    version = value.get('schema_version')
    if version != schema_version:
        raise ValueError(f"unsupported schema_version {version!r}.")
    return value
