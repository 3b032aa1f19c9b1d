#-*- coding:utf-8 -*-

import time
import logging
import collections
import dataclasses
import multiprocessing

import numpy

from . import util
from .core import Word, order_relabel
from .errors import GuardExceeded, UnknownCheck
from .families import (FamilyTag, MAX_N_TYPE_A, MAX_N_TYPE_B, iter_family,
    iter_permutations, iter_trees, iter_signed_trees, refinement_value,
    count_hetyei_fast, is_andre, is_andre_valley, is_simsun,
    is_signed_andre_b, is_signed_simsun)
from .triangles import entringer_table, arnold_table
from .bijections import (omega, omega_inv, omega_signed, phi, phi_inv,
    phi_signed, phi_signed_inv, psi, psi_b, psi_c, psi_inv, psi_signed,
    chuang_phi)
from .cdindex import reduced_variation_andre, reduced_variation_simsun, cd_weight
from .tree import SignedIncreasingTree

__all__ = ['CheckReport', 'PASS', 'FAIL', 'CHECKS', 'run_checks',
    'check_conjecture', 'DEFAULT_N_MAX_A', 'DEFAULT_N_MAX_B',
    'DEFAULT_N_MAX_CONJECTURE']

logger = logging.getLogger(__name__)


### Constants ###
DEFAULT_N_MAX_A = util.getenv_int('ENTRINGER_VERIFY_N_A', 8)
DEFAULT_N_MAX_B = util.getenv_int('ENTRINGER_VERIFY_N_B', 6)
DEFAULT_N_MAX_CONJECTURE = util.getenv_int('ENTRINGER_VERIFY_N_CONJ', 6)

PASS = 'PASS'
FAIL = 'FAIL'


@dataclasses.dataclass
class CheckReport:
    '''Outcome of one exhaustive check.

    A failing report carries either a `counterexample` (the smallest
    offending object, smallest n first) or a `mismatch` triple
    ``(key, expected, actual)``.
    '''
    check_id: str
    params: dict
    status: str
    counterexample: dict = None
    mismatch: tuple = None
    counts: dict = dataclasses.field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def passed(self):
        return self.status == PASS

    def to_dict(self):
        result = dataclasses.asdict(self)
        if self.mismatch is not None:
            result['mismatch'] = list(self.mismatch)
        return result


class _Failure(Exception):
    '''Aborts a check at its first (smallest) failure.'''
    def __init__(self, counterexample=None, mismatch=None):
        super().__init__(counterexample or mismatch)
        self.counterexample = counterexample
        self.mismatch = mismatch

def _serialize(obj):
    if isinstance(obj, SignedIncreasingTree):
        return obj.to_literal()
    if isinstance(obj, Word):
        return str(obj)
    return repr(obj)

def _witness(obj, reason, n):
    return _Failure(counterexample={'n': n, 'object': _serialize(obj), 'reason': reason})


### Check registry ###
# check id -> (function, type); type 'A' checks read n_max_a, 'B' n_max_b
CHECKS = collections.OrderedDict()

def _register(check_id, kind):
    def decorator(func):
        CHECKS[check_id] = (func, kind)
        return func
    return decorator


### Family counts against the triangles ###
def _tally(tag, n):
    '''Counter of the refinement statistic over a family.'''
    counts = collections.Counter(refinement_value(tag, x) for x in iter_family(tag, n, force=True))
    logger.debug('%s n=%d: %d objects', tag.value, n, sum(counts.values()))
    return counts

def _compare_rows(label, n, ks, expected, actual):
    expected = numpy.array(expected, dtype=object)
    actual = numpy.array(actual, dtype=object)
    if not numpy.array_equal(expected, actual):
        i = int(numpy.flatnonzero(expected != actual)[0])
        key = '{} n={} k={}'.format(label, n, ks[i])
        raise _Failure(mismatch=(key, int(expected[i]), int(actual[i])))

@_register('entringer-families', 'A')
def _check_entringer_families(n_max):
    table = entringer_table(n_max)
    counts = {tag: [] for tag in ('alt', 'tree', 'andre', 'simsun')}
    simsun = _tally(FamilyTag.SIMSUN, 0)
    for n in range(1, n_max + 1):
        ks = table.ks(n)
        expected = [table[n, k] for k in ks]
        rows = {
            'alt': _tally(FamilyTag.ALT, n),
            'tree': _tally(FamilyTag.TREE, n),
            'andre': _tally(FamilyTag.ANDRE, n),
        }
        for name in ('alt', 'tree', 'andre'):
            actual = [rows[name][k] for k in ks]
            counts[name].append(actual)
            _compare_rows(name, n, ks, expected, actual)
        # Simsun permutations of [n-1] ending with k-1
        actual = [simsun[k - 1] for k in ks]
        counts['simsun'].append(actual)
        _compare_rows('simsun', n - 1, [k - 1 for k in ks], expected, actual)
        if n < n_max:
            simsun = _tally(FamilyTag.SIMSUN, n)
    return counts

@_register('arnold-families', 'B')
def _check_arnold_families(n_max):
    table = arnold_table(n_max)
    counts = {tag: [] for tag in ('alt-b', 'snake', 'tree-b', 'andre-b', 'simsun-b', 'andre-h')}
    simsun = _tally(FamilyTag.SIMSUN_B, 0)
    for n in range(1, n_max + 1):
        ks = table.ks(n)
        positive = [k for k in ks if k > 0]
        expected = [table[n, k] for k in ks]
        for tag in (FamilyTag.ALT_B, FamilyTag.TREE_B, FamilyTag.ANDRE_B):
            tally = _tally(tag, n)
            actual = [tally[k] for k in ks]
            counts[tag.value].append(actual)
            _compare_rows(tag.value, n, ks, expected, actual)
        tally = _tally(FamilyTag.SNAKE, n)
        actual = [tally[k] for k in positive]
        counts['snake'].append(actual)
        _compare_rows('snake', n, positive, [table[n, k] for k in positive], actual)
        # signed Simsun of [n-1] ending with k-1 against Hetyei of [n] ending with k
        hetyei = _tally(FamilyTag.ANDRE_H, n)
        left = [simsun[k - 1] for k in positive]
        right = [hetyei[k] for k in positive]
        counts['simsun-b'].append(left)
        counts['andre-h'].append(right)
        _compare_rows('simsun-b/andre-h', n, positive, right, left)
        if n < n_max:
            simsun = _tally(FamilyTag.SIMSUN_B, n)
    return counts

@_register('tree-generation', 'A')
def _check_tree_generation(n_max):
    table = entringer_table(n_max)
    counts = {'trees': [], 'signed_trees': []}
    for n in range(1, n_max + 1):
        direct = list(iter_trees(n))
        oracle = sorted(omega_inv(p) for p in iter_family(FamilyTag.ANDRE, n, force=True))
        counts['trees'].append(len(direct))
        if len(direct) != table.row_sum(n):
            raise _Failure(mismatch=('trees n={}'.format(n), table.row_sum(n), len(direct)))
        if len(oracle) != len(direct):
            raise _Failure(mismatch=('trees from André n={}'.format(n), len(direct), len(oracle)))
        for generated, expected in zip(direct, oracle):
            if generated != expected:
                raise _witness(min(generated, expected), 'generators disagree', n)
        if n <= min(n_max, DEFAULT_N_MAX_B):
            signed = sum(1 for _ in iter_signed_trees(n))
            counts['signed_trees'].append(signed)
            if signed != 2 ** n * len(direct):
                raise _Failure(mismatch=('signed trees n={}'.format(n), 2 ** n * len(direct), signed))
    return counts

@_register('triangle-identities', 'A')
def _check_triangle_identities(n_max):
    entringer, arnold = entringer_table(n_max), arnold_table(n_max)
    for n in range(3, n_max + 1):
        if entringer[n, n] != entringer[n, n - 1]:
            raise _Failure(mismatch=('E n={} k=n'.format(n), entringer[n, n - 1], entringer[n, n]))
    for n in range(1, n_max + 1):
        if arnold[n, 1] != arnold[n, -1]:
            raise _Failure(mismatch=('S n={} k=1'.format(n), arnold[n, -1], arnold[n, 1]))
        if n >= 2 and arnold[n, -n] != 0:
            raise _Failure(mismatch=('S n={} k=-n'.format(n), 0, arnold[n, -n]))
    return {'euler': entringer.row_sums, 'springer': arnold.row_sums}


### Bijections ###
def _bijection_sweep(ns, domain, image, codomain, checks=(), inverse=None):
    '''Check that `image` maps every `domain(n)` one to one onto
    `codomain(n)`, with the extra statistic `checks` and an optional
    inverse. Returns the number of objects mapped.
    '''
    compared = 0
    for n in ns:
        preimage = {}
        for x in domain(n):
            y = image(x)
            for reason, ok in checks:
                if not ok(x, y):
                    raise _witness(x, reason, n)
            if y in preimage:
                first, second = sorted([x, preimage[y]])
                reason = 'same image as {}'.format(_serialize(second))
                raise _witness(first, reason, n)
            preimage[y] = x
            if inverse is not None and inverse(y) != x:
                raise _witness(x, 'inverse does not return it', n)
            compared += 1
        target = set(codomain(n))
        missed = [y for y in target if y not in preimage]
        if missed:
            raise _witness(min(missed), 'not in the image', n)
        extra = [x for y, x in preimage.items() if y not in target]
        if extra:
            raise _witness(min(extra), 'image outside the codomain', n)
        logger.debug('n=%d: %d objects mapped', n, len(preimage))
    return compared

def _family(tag, shift=0):
    return lambda n: iter_family(tag, n + shift, force=True)

@_register('omega-bijection', 'A')
def _check_omega(n_max):
    compared = _bijection_sweep(range(1, n_max + 1), iter_trees, omega,
        _family(FamilyTag.ANDRE),
        checks=[('image is not André', lambda t, p: is_andre(p)),
                ('last entry differs from pleaf', lambda t, p: p[-1] == t.pleaf)],
        inverse=omega_inv)
    return {'compared': compared}

@_register('phi-bijection', 'A')
def _check_phi(n_max):
    compared = _bijection_sweep(range(1, n_max + 1), _family(FamilyTag.ANDRE), phi,
        _family(FamilyTag.SIMSUN, -1),
        checks=[('image is not Simsun', lambda p, s: is_simsun(s)),
                ('last entry not decreased by one',
                 lambda p, s: refinement_value(FamilyTag.SIMSUN, s) == p[-1] - 1)],
        inverse=phi_inv)
    return {'compared': compared}

@_register('psi-bijection', 'A')
def _check_psi(n_max):
    compared = _bijection_sweep(range(1, n_max + 1), _family(FamilyTag.ALT), psi,
        iter_trees,
        checks=[('pleaf differs from first entry', lambda p, t: t.pleaf == p[0])],
        inverse=psi_inv)
    return {'compared': compared}

@_register('psi-signed-bijection', 'B')
def _check_psi_signed(n_max):
    compared = _bijection_sweep(range(1, n_max + 1), _family(FamilyTag.ALT_B),
        psi_signed, iter_signed_trees,
        checks=[('pleaf differs from first entry', lambda p, t: t.pleaf == p[0])])
    return {'compared': compared}

@_register('omega-signed-bijection', 'B')
def _check_omega_signed(n_max):
    compared = _bijection_sweep(range(1, n_max + 1), iter_signed_trees,
        omega_signed, _family(FamilyTag.ANDRE_B),
        checks=[('image is not signed André', lambda t, p: is_signed_andre_b(p)),
                ('last entry differs from pleaf', lambda t, p: p[-1] == t.pleaf)],
        inverse=omega_inv)
    return {'compared': compared}

@_register('phi-signed-bijection', 'B')
def _check_phi_signed(n_max):
    compared = _bijection_sweep(range(1, n_max + 1), _family(FamilyTag.ANDRE_H),
        phi_signed, _family(FamilyTag.SIMSUN_B, -1),
        checks=[('image is not signed Simsun', lambda p, s: is_signed_simsun(s)),
                ('last entry not decreased by one',
                 lambda p, s: refinement_value(FamilyTag.SIMSUN_B, s) == p[-1] - 1)],
        inverse=phi_signed_inv)
    return {'compared': compared}

@_register('psi-equality', 'A')
def _check_psi_equality(n_max):
    compared = 0
    for n in range(2, n_max + 1):
        for p in iter_family(FamilyTag.ALT, n, force=True):
            tree, trace = psi_c(p)
            if psi_b(p) != tree:
                raise _witness(p, 'recursive and grafting constructions differ', n)
            for step in trace.steps:
                if step.leaf != p.at(2 * step.i - 1):
                    reason = 'minimal leaf after step {} is {}'.format(step.i, step.leaf)
                    raise _witness(p, reason, n)
            compared += 1
    return {'compared': compared}

@_register('chuang-factorization', 'A')
def _check_chuang(n_max):
    compared = 0
    for n in range(1, n_max + 1):
        for t in iter_trees(n):
            if chuang_phi(t) != phi(omega(t)):
                raise _witness(t, 'direct reading differs from phi(omega(t))', n)
            compared += 1
    return {'compared': compared}

@_register('cd-preservation', 'A')
def _check_cd(n_max):
    compared = 0
    for n in range(1, n_max + 1):
        for p in iter_family(FamilyTag.ANDRE, n, force=True):
            cd = reduced_variation_andre(p)
            if cd != reduced_variation_simsun(phi(p)):
                raise _witness(p, 'cd-word changes under phi', n)
            if cd_weight(cd) != n - 1:
                raise _witness(p, 'cd-word of degree {}'.format(cd_weight(cd)), n)
            compared += 1
    return {'compared': compared}

@_register('andre-simsun', 'A')
def _check_andre_simsun(n_max):
    andre = 0
    for n in range(1, n_max + 1):
        for p in iter_permutations(n):
            if is_andre(p):
                andre += 1
                if not is_simsun(p):
                    raise _witness(p, 'André but not Simsun', n)
    return {'andre': andre}

@_register('andre-valley', 'A')
def _check_andre_valley(n_max):
    compared = 0
    for n in range(1, n_max + 1):
        for p in iter_permutations(n):
            if is_andre(p) != is_andre_valley(p):
                raise _witness(p, 'subword and valley definitions disagree', n)
            compared += 1
    return {'compared': compared}

@_register('conjugation', 'B')
def _check_conjugation(n_max):
    compared = 0
    for n in range(1, n_max + 1):
        span = range(1, n + 1)
        for p in iter_family(FamilyTag.ALT_B, n, force=True):
            if order_relabel(psi_signed(p), span) != psi(order_relabel(p, span)):
                raise _witness(p, 'psi does not commute with relabeling', n)
            compared += 1
        for t in iter_signed_trees(n):
            if order_relabel(omega_signed(t), span) != omega(order_relabel(t, span)):
                raise _witness(t, 'omega does not commute with relabeling', n)
            compared += 1
    return {'compared': compared}


### Runner ###
def _check_guard(n_max, limit, force):
    if n_max > limit and not force:
        msg = 'n_max = {} exceeds the guard n <= {} (use force)'
        raise GuardExceeded(msg.format(n_max, limit))

def _run_one(check_id, n_max):
    func, kind = CHECKS[check_id]
    params = {'n_max': n_max, 'type': kind}
    start = time.perf_counter()
    try:
        counts = func(n_max)
        report = CheckReport(check_id, params, PASS, counts=counts)
    except _Failure as failure:
        report = CheckReport(check_id, params, FAIL,
            counterexample=failure.counterexample, mismatch=failure.mismatch)
    report.elapsed = time.perf_counter() - start
    logger.info('%s: %s (%.2fs)', check_id, report.status, report.elapsed)
    return report

def run_checks(selection=None, n_max_a=None, n_max_b=None, jobs=1, force=False):
    '''Run exhaustive checks.

    Parameters
    ----------
    selection: iterable of str, optional
        Check ids (keys of `CHECKS`), all checks by default.
    n_max_a: int, optional
        Largest size for checks on permutations and trees of [n].
    n_max_b: int, optional
        Largest size for checks on signed objects.
    jobs: int, optional
        Number of worker processes, checks run in the calling process if 1.
    force: bool, optional
        Ignore the enumeration guards.

    Returns
    -------
    list of CheckReport
        Sorted by check id.

    Raises
    ------
    UnknownCheck
        If `selection` names an unregistered check.
    GuardExceeded
        If a size is above the guard and `force` is false.
    '''
    n_max_a = DEFAULT_N_MAX_A if n_max_a is None else n_max_a
    n_max_b = DEFAULT_N_MAX_B if n_max_b is None else n_max_b
    selection = sorted(set(CHECKS if selection is None else selection))
    for check_id in selection:
        if check_id not in CHECKS:
            msg = 'unknown check {!r}, known: {}'
            raise UnknownCheck(msg.format(check_id, ', '.join(CHECKS)))
    _check_guard(n_max_a, MAX_N_TYPE_A, force)
    _check_guard(n_max_b, MAX_N_TYPE_B, force)
    tasks = [(check_id, n_max_a if CHECKS[check_id][1] == 'A' else n_max_b)
        for check_id in selection]
    if jobs > 1 and len(tasks) > 1:
        with multiprocessing.Pool(processes=jobs) as pool:
            reports = pool.starmap(_run_one, tasks)
    else:
        reports = [_run_one(*task) for task in tasks]
    return sorted(reports, key=lambda r: r.check_id)

def check_conjecture(n_max=None, force=False):
    '''Compare S_{n,k} with the number of Hetyei signed André permutations of
    [n+1] ending with n+2-k, for 1 <= k <= n <= n_max.

    An open statement: a failing report is a finding, not a defect.

    Returns
    -------
    list of CheckReport
        One report per n, id ``'conjecture'``.

    Raises
    ------
    GuardExceeded
        If n_max + 1 is above the type A guard and `force` is false.
    '''
    n_max = DEFAULT_N_MAX_CONJECTURE if n_max is None else n_max
    _check_guard(n_max + 1, MAX_N_TYPE_A, force)
    table = arnold_table(max(n_max, 1))
    reports = []
    for n in range(1, n_max + 1):
        start = time.perf_counter()
        arnold, hetyei = [], []
        report = CheckReport('conjecture', {'n': n}, PASS)
        for k in range(1, n + 1):
            expected = table[n, k]
            actual = count_hetyei_fast(n + 1, n + 2 - k, force=True)
            arnold.append(expected)
            hetyei.append(actual)
            if expected != actual and report.passed:
                report.status = FAIL
                report.counterexample = {'n': n, 'k': k, 'arnold': expected, 'hetyei': actual}
                report.mismatch = ('S n={} k={}'.format(n, k), expected, actual)
        report.counts = {'arnold': arnold, 'hetyei': hetyei}
        report.elapsed = time.perf_counter() - start
        logger.info('conjecture n=%d: %s', n, report.status)
        reports.append(report)
    return reports
