# Licensed under a 3-clause BSD style license - see LICENSE.rst
"""
Command line interface: ``inoue <verb> [options]``.

Verbs
-----
type1
    Classify type I surfaces for ``--theta2``/``--theta1``.
type2, type3
    Classify type II or III surfaces for every pair of ``--theta`` and
    ``--r`` values, optionally in ``--jobs`` processes.
classes
    Similarity classes of GL(2,Z) with trace ``--theta`` and ``--det``.
centralizer
    Generator of the positive centraliser of ``--matrix``.
verify
    Check the group relations of the generators of a surface, or with
    ``--tau`` the conjugation criterion.

Exit status is 0 on success, 2 for usage errors, 3 for inadmissible
parameters and 4 when an internal check fails.
"""
import argparse
import itertools
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import report as _report
from .affine_group import build_generators, verify_relations, verify_tau_conjugation
from .centralizer import positive_centralizer_generator
from .conjugacy import similarity_classes
from .cubic import classify_type1
from .errors import InoueError, InvariantError
from .intmat import IMat
from .moduli_core import classify
from .version import version

__all__ = ['main', 'build_parser', 'dispatch']

log = logging.getLogger(__name__)

EXIT_OK, EXIT_USAGE, EXIT_INADMISSIBLE, EXIT_INVARIANT = 0, 2, 3, 4


def _int_list(text, length=None):
    try:
        values = [int(x) for x in text.replace(' ', '').split(',')]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if length is not None and len(values) != length:
        raise argparse.ArgumentTypeError(f"expected {length} integers, got {len(values)}")
    return values


def _matrix(text):
    values = _int_list(text, 4)
    return IMat([values[:2], values[2:]])


def _pair(text):
    return tuple(_int_list(text, 2))


def _tau(text):
    return tuple(_int_list(text, 5))


def build_parser():
    """The argument parser of the ``inoue`` command."""
    parser = argparse.ArgumentParser(
        prog='inoue', description='Classify Inoue surfaces with exact arithmetic.')
    parser.add_argument('--version', action='version', version=f'%(prog)s {version}')

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=('text', 'machine'), default='text',
                        help='fixed-width text tables or versioned JSON (default: text)')
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument('-v', '--verbose', action='store_true',
                           help='log progress on stderr')
    verbosity.add_argument('-q', '--quiet', action='store_true',
                           help='only log errors')

    verbs = parser.add_subparsers(dest='verb', metavar='verb')
    verbs.required = True

    p = verbs.add_parser('type1', parents=[common], help='type I surfaces')
    p.add_argument('--theta2', type=int, required=True)
    p.add_argument('--theta1', type=int, required=True)
    p.add_argument('--bound', type=int, default=None,
                   help='norm bound of the ideal enumeration (default: Minkowski, '
                        'or INOUE_NORM_BOUND)')

    for verb, name in (('type2', 'II'), ('type3', 'III')):
        p = verbs.add_parser(verb, parents=[common], help=f'type {name} surfaces')
        p.add_argument('--theta', type=int, action='append', required=True,
                       help='trace; may be repeated')
        p.add_argument('--r', type=int, action='append', required=True,
                       help='positive integer; may be repeated')
        p.add_argument('--list-orbits', action='store_true',
                       help='list the members of every orbit')
        p.add_argument('--jobs', type=int, default=1,
                       help='number of processes for several (theta, r) pairs')

    p = verbs.add_parser('classes', parents=[common], help='similarity classes in GL(2,Z)')
    p.add_argument('--theta', type=int, required=True)
    p.add_argument('--det', type=int, choices=(1, -1), default=1)

    p = verbs.add_parser('centralizer', parents=[common], help='positive centraliser')
    p.add_argument('--matrix', type=_matrix, required=True, help='entries n11,n12,n21,n22')

    p = verbs.add_parser('verify', parents=[common], help='check generator relations')
    p.add_argument('--type', choices=('I', 'II', 'III'), required=True, dest='type_tag')
    p.add_argument('--theta', type=int)
    p.add_argument('--r', type=int)
    p.add_argument('--p', type=_pair, default=(0, 0), help='compatibility vector p1,p2')
    p.add_argument('--t', type=Fraction, default=Fraction(0),
                   help='rational twist parameter (type II)')
    p.add_argument('--matrix', type=_matrix, default=None, help='entries n11,n12,n21,n22')
    p.add_argument('--theta2', type=int)
    p.add_argument('--theta1', type=int)
    p.add_argument('--tau', type=_tau, default=None, metavar='K1,K2,S0,S1,S2',
                   help='check the conjugation criterion for k, s0 and s instead')
    return parser


def _validate(parser, args):
    if args.verb in ('type2', 'type3'):
        if args.jobs < 1:
            parser.error('--jobs should be at least 1')
    elif args.verb == 'verify':
        if args.type_tag == 'I':
            if args.theta2 is None or args.theta1 is None:
                parser.error('verify --type I needs --theta2 and --theta1')
            if args.tau is not None:
                parser.error('--tau only applies to types II and III')
        elif args.theta is None or args.r is None:
            parser.error(f'verify --type {args.type_tag} needs --theta and --r')


def _classify_pair(pair):
    kind, theta, r = pair
    return classify(theta, r, kind)


def dispatch(args):
    """Run the computation selected by parsed arguments.

    Returns
    -------
    output : str
        The rendered report(s).
    ok : bool
        False if a verification failed.
    """
    fmt = args.format
    if args.verb == 'type1':
        return _report.emit(classify_type1(args.theta2, args.theta1, args.bound), fmt), True

    if args.verb in ('type2', 'type3'):
        kind = 'plus' if args.verb == 'type2' else 'minus'
        pairs = [(kind, theta, r) for theta, r in itertools.product(args.theta, args.r)]
        if args.jobs > 1 and len(pairs) > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as executor:
                reports = list(executor.map(_classify_pair, pairs))
        else:
            reports = [_classify_pair(pair) for pair in pairs]
        if len(reports) == 1:
            return _report.emit(reports[0], fmt, list_orbits=args.list_orbits), True
        return _report.emit_batch(reports, fmt, list_orbits=args.list_orbits), True

    if args.verb == 'classes':
        classes = similarity_classes(args.theta, args.det)
        return _report.emit(classes, fmt, trace=args.theta, det=args.det), True

    if args.verb == 'centralizer':
        gen = positive_centralizer_generator(args.matrix)
        return _report.emit(gen, fmt, matrix=args.matrix), True

    if args.type_tag == 'I':
        params = {'theta2': args.theta2, 'theta1': args.theta1}
    else:
        params = {'theta': args.theta, 'r': args.r, 'p': args.p, 'N': args.matrix}
        if args.type_tag == 'II':
            params['t'] = args.t
    gs = build_generators(params, args.type_tag)
    if args.tau is not None:
        k1, k2, s0, s1, s2 = args.tau
        result = verify_tau_conjugation(gs, (k1, k2), s0, (s1, s2))
        return _report.emit(result, fmt), result.consistent and result.conjugation_holds
    result = verify_relations(gs)
    return _report.emit(result, fmt), result.ok


def main(argv=None):
    """Entry point of the ``inoue`` command; returns the exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _validate(parser, args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    level = logging.INFO if args.verbose else logging.ERROR if args.quiet else logging.WARNING
    logging.basicConfig(level=level, stream=sys.stderr,
                        format='%(name)s: %(levelname)s: %(message)s')
    try:
        output, ok = dispatch(args)
    except InvariantError as exc:
        print(f'{parser.prog}: error: {exc}', file=sys.stderr)
        return EXIT_INVARIANT
    except InoueError as exc:
        print(f'{parser.prog}: error: {exc}', file=sys.stderr)
        return EXIT_INADMISSIBLE
    sys.stdout.write(output)
    if not ok:
        log.error("verification failed")
        return EXIT_INVARIANT
    return EXIT_OK
