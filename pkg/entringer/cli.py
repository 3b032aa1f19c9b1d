#-*- coding:utf-8 -*-

import sys
import json
import logging
import argparse
import contextlib

from . import util
from .core import Word, make_word, parse_entries
from .errors import EntringerError, GuardExceeded
from .families import FamilyTag, iter_family
from .triangles import (TriangleKind, entringer_table, arnold_table,
    DEFAULT_N_MAX, SCHEMA_VERSION)
from .bijections import MAPS, EntringerChain, psi_c, psi_inv
from .tree import SignedIncreasingTree, tree_from_literal
from .verify import CHECKS, run_checks, check_conjecture

__all__ = ['build_parser', 'dispatch', 'main', 'EXIT_OK', 'EXIT_FAIL',
    'EXIT_USAGE', 'EXIT_CONJECTURE']

logger = logging.getLogger(__name__)


### Exit codes ###
EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_CONJECTURE = 3

# maps reading a tree literal, all others read a word
TREE_INPUT = {'omega', 'omega-signed', 'psi-inv', 'chuang-phi'}


### Argument parsing ###
def build_parser():
    parser = argparse.ArgumentParser(prog='entringer',
        description='Entringer and Arnold families: triangles, enumeration, '
        'bijections and exhaustive verification.')
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('-v', '--verbose', action='count', default=0,
        help='Log progress to stderr (-vv for debug output).')
    common.add_argument('-o', '--output', metavar='PATH', type=str,
        help='Write to PATH instead of stdout.')
    common.add_argument('--force', action='store_true',
        help='Ignore the size guards.')
    sub = parser.add_subparsers(dest='command', metavar='COMMAND')
    sub.required = True

    triangle = sub.add_parser('triangle', parents=[common],
        help='Print the Entringer or Arnold triangle.')
    triangle.add_argument('kind', choices=[k.value for k in TriangleKind])
    triangle.add_argument('--n', type=int, default=10,
        help='Number of rows. DEFAULT: 10')
    triangle.add_argument('--format', default='text',
        choices=['text', 'json', 'csv', 'boustrophedon'])
    triangle.add_argument('--twin', type=int, choices=[1, 2], default=1,
        help='Which Arnold triangle to draw in boustrophedon format.')

    enum_ = sub.add_parser('enumerate', parents=[common],
        help='List the members of a family, one per line.')
    enum_.add_argument('family', choices=[tag.value for tag in FamilyTag])
    enum_.add_argument('--n', type=int, required=True)
    enum_.add_argument('--k', type=int, default=None,
        help='Refinement: first entry, last entry or pleaf.')
    enum_.add_argument('--format', default='text', choices=['text', 'json'])

    map_ = sub.add_parser('map', parents=[common],
        help='Apply a bijection.')
    map_.add_argument('name', choices=sorted(MAPS))
    map_.add_argument('--input', required=True, metavar='LITERAL',
        help='Permutation text (e.g. 684512937, "3 -2 1") or tree literal '
        '(e.g. "1(2,3(4))").')
    map_.add_argument('--trace', action='store_true',
        help='Print the grafting steps (psi only).')
    map_.add_argument('--format', default='text', choices=['text', 'json'])

    verify = sub.add_parser('verify', parents=[common],
        help='Run exhaustive checks, print a JSON report.')
    verify.add_argument('--checks', type=str, default=None, metavar='LIST',
        help='Comma separated check ids. Known: {}'.format(', '.join(CHECKS)))
    verify.add_argument('--n-max', type=int, default=None,
        help='Largest n for checks on unsigned objects.')
    verify.add_argument('--n-max-b', type=int, default=None,
        help='Largest n for checks on signed objects.')
    verify.add_argument('--jobs', type=int, default=1,
        help='Worker processes. DEFAULT: 1')

    conjecture = sub.add_parser('conjecture', parents=[common],
        help='Compare Arnold numbers with Hetyei signed André counts.')
    conjecture.add_argument('--n-max', type=int, default=None)
    return parser


### Output ###
@contextlib.contextmanager
def _open_output(path):
    if path is None:
        yield sys.stdout
        sys.stdout.flush()
    else:
        with open(util.cleanpath(path), 'w') as f:
            yield f

def _render(obj):
    if isinstance(obj, SignedIncreasingTree):
        return obj.to_literal()
    if isinstance(obj, Word):
        return str(obj)
    if isinstance(obj, EntringerChain):
        return '\n'.join(_render(x) for x in obj)
    return str(obj)

def _jsonable(obj):
    if isinstance(obj, SignedIncreasingTree):
        return obj.to_dict()
    if isinstance(obj, Word):
        return list(obj)
    if isinstance(obj, EntringerChain):
        return {key: _jsonable(value) for key, value in obj._asdict().items()}
    return obj


### Commands ###
def _cmd_triangle(ns, out):
    if ns.n > DEFAULT_N_MAX and not ns.force:
        msg = 'triangle with n = {} exceeds the guard n <= {} (use --force)'
        raise GuardExceeded(msg.format(ns.n, DEFAULT_N_MAX))
    build = entringer_table if ns.kind == TriangleKind.ENTRINGER.value else arnold_table
    table = build(ns.n)
    if ns.format == 'csv':
        out.write(table.to_csv())
    elif ns.format == 'json':
        out.write(table.to_json() + '\n')
    elif ns.format == 'boustrophedon':
        out.write(table.to_boustrophedon(ns.twin))
    else:
        out.write(table.to_text())
    return EXIT_OK

def _cmd_enumerate(ns, out):
    objects = iter_family(ns.family, ns.n, ns.k, ns.force)
    if ns.format == 'json':
        doc = {'schema_version': SCHEMA_VERSION, 'family': ns.family,
            'n': ns.n, 'k': ns.k, 'objects': [_jsonable(x) for x in objects]}
        out.write(json.dumps(doc) + '\n')
        return EXIT_OK
    with util.ignored(BrokenPipeError):
        for obj in objects:
            out.write(_render(obj) + '\n')
    return EXIT_OK

def _read_input(name, text):
    if name in TREE_INPUT:
        return tree_from_literal(text)
    return make_word(parse_entries(text))

def _cmd_map(ns, out):
    obj = _read_input(ns.name, ns.input)
    trace = None
    if ns.name == 'psi-inv':
        result = psi_inv(obj, force=ns.force)
    elif ns.name == 'psi' and ns.trace:
        result, trace = psi_c(obj)
    else:
        result = MAPS[ns.name](obj)
    if ns.format == 'json':
        doc = {'schema_version': SCHEMA_VERSION, 'map': ns.name,
            'input': _jsonable(obj), 'output': _jsonable(result)}
        if trace is not None:
            doc['trace'] = trace.to_dict()
        out.write(json.dumps(doc) + '\n')
    else:
        out.write(_render(result) + '\n')
        if trace is not None:
            out.write(str(trace) + '\n')
    return EXIT_OK

def _cmd_verify(ns, out):
    selection = None
    if ns.checks:
        selection = [item.strip() for item in ns.checks.split(',') if item.strip()]
    reports = run_checks(selection, ns.n_max, ns.n_max_b, ns.jobs, ns.force)
    out.write(json.dumps([r.to_dict() for r in reports], indent=2) + '\n')
    failed = [r.check_id for r in reports if not r.passed]
    if failed:
        logger.warning('failed checks: %s', ', '.join(failed))
        return EXIT_FAIL
    return EXIT_OK

def _cmd_conjecture(ns, out):
    reports = check_conjecture(ns.n_max, ns.force)
    out.write(json.dumps([r.to_dict() for r in reports], indent=2) + '\n')
    for report in reports:
        if not report.passed:
            logger.warning('counterexample: %s', report.counterexample)
            return EXIT_CONJECTURE
    return EXIT_OK

COMMANDS = {
    'triangle': _cmd_triangle,
    'enumerate': _cmd_enumerate,
    'map': _cmd_map,
    'verify': _cmd_verify,
    'conjecture': _cmd_conjecture,
}


def _join_input(argv):
    '''Glue ``--input VALUE`` into ``--input=VALUE`` so that signed words and
    trees with a negative root are not read as options.
    '''
    result = []
    args = iter(argv)
    for arg in args:
        if arg == '--input':
            value = next(args, None)
            if value is not None:
                arg = '--input=' + value
        result.append(arg)
    return result

def dispatch(argv=None):
    '''Run the command line `argv` and return the exit code.

    Exit codes: 0 success, 1 failed verification, 2 usage error or size
    guard, 3 counterexample to the conjecture.
    '''
    if argv is None:
        argv = sys.argv[1:]
    parser = build_parser()
    try:
        ns = parser.parse_args(_join_input(argv))
    except SystemExit as err:
        return err.code if isinstance(err.code, int) else EXIT_USAGE
    level = [logging.WARNING, logging.INFO, logging.DEBUG][min(ns.verbose, 2)]
    logging.basicConfig(level=level, stream=sys.stderr,
        format='%(levelname)s %(name)s: %(message)s')
    try:
        with _open_output(ns.output) as out:
            return COMMANDS[ns.command](ns, out)
    except (EntringerError, ValueError, KeyError) as err:
        # guards, malformed input and maps outside their domain
        sys.stderr.write('entringer: {}\n'.format(err))
        return EXIT_USAGE

def main():
    sys.exit(dispatch(sys.argv[1:]))
