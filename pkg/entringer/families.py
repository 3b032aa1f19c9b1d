#-*- coding:utf-8 -*-

import enum
import logging
import itertools

from . import util
from .core import (Permutation, SignedPermutation, subword_smallest,
    has_double_descent, ends_with_ascent, rtl_min_positions, order_relabel)
from .tree import IncreasingTree
from .errors import GuardExceeded, RangeError

__all__ = ['FamilyTag', 'MAX_N_TYPE_A', 'MAX_N_TYPE_B', 'is_alternating',
    'is_snake', 'is_andre', 'is_andre_valley', 'is_simsun',
    'is_signed_andre_b', 'is_hetyei_andre', 'is_signed_simsun',
    'iter_permutations', 'iter_signed_permutations', 'iter_trees',
    'iter_signed_trees', 'iter_family', 'enumerate_family', 'count_family',
    'count_hetyei_fast', 'refinement_value']

logger = logging.getLogger(__name__)


### Constants ###
# Size guards of the exhaustive enumerators, overridable with force=True
MAX_N_TYPE_A = util.getenv_int('ENTRINGER_MAX_N_A', 12)
MAX_N_TYPE_B = util.getenv_int('ENTRINGER_MAX_N_B', 8)


class FamilyTag(enum.Enum):
    '''The object families, valued by their command line names.'''
    ALT = 'alt'
    ALT_B = 'alt-b'
    SNAKE = 'snake'
    TREE = 'tree'
    TREE_B = 'tree-b'
    ANDRE = 'andre'
    SIMSUN = 'simsun'
    ANDRE_B = 'andre-b'
    ANDRE_H = 'andre-h'
    SIMSUN_B = 'simsun-b'

    @property
    def signed(self):
        '''True for the type B families.'''
        return self in _SIGNED

    @property
    def refinement(self):
        '''Statistic refined by k: 'first', 'last' or 'pleaf'.'''
        if self in (FamilyTag.ALT, FamilyTag.ALT_B, FamilyTag.SNAKE):
            return 'first'
        if self in (FamilyTag.TREE, FamilyTag.TREE_B):
            return 'pleaf'
        return 'last'

_SIGNED = frozenset([FamilyTag.ALT_B, FamilyTag.SNAKE, FamilyTag.TREE_B,
    FamilyTag.ANDRE_B, FamilyTag.ANDRE_H, FamilyTag.SIMSUN_B])
_EMPTY_OK = frozenset([FamilyTag.SIMSUN, FamilyTag.SIMSUN_B])


### Membership predicates ###
def _zigzag_tail(word):
    '''The last pair of `word` continues a down-up pattern.'''
    if len(word) < 2:
        return True
    if len(word) % 2:
        return word[-2] < word[-1]
    return word[-2] > word[-1]

def _no_double_descent_tail(word):
    return len(word) < 3 or not word[-3] > word[-2] > word[-1]

def _abs_no_double_descent_tail(word):
    return len(word) < 3 or not abs(word[-3]) > abs(word[-2]) > abs(word[-1])

def is_alternating(p):
    '''True iff ``p_1 > p_2 < p_3 > ...``. Words of length <= 1 are
    alternating.
    '''
    return all(a > b if i % 2 == 0 else a < b
        for i, (a, b) in enumerate(util.pairs(p)))

def is_snake(p):
    '''Alternating with a positive first entry.'''
    return is_alternating(p) and (len(p) == 0 or p[0] > 0)

def _andre_condition(p):
    for k in range(1, len(p) + 1):
        sub = subword_smallest(p, k)
        if has_double_descent(sub) or not ends_with_ascent(sub):
            return False
    return True

def _simsun_condition(p):
    return not any(has_double_descent(subword_smallest(p, k))
        for k in range(1, len(p) + 1))

def is_andre(p):
    '''True iff every subword of the k smallest entries is free of double
    descents and ends with an ascent.

    Examples
    --------
    >>> is_andre(Permutation('31245'))
    True
    >>> is_andre(Permutation('43512'))
    False
    '''
    return _andre_condition(p)

def is_andre_valley(p):
    '''André test through valleys.

    `p` qualifies iff it has no double descent, ends with an ascent and at
    every valley ``p_{i-1} > p_i < p_{i+1}`` the run of entries larger than
    ``p_i`` directly left of it has a larger minimum than the run directly
    right of it.
    '''
    w = tuple(p)
    if has_double_descent(w) or not ends_with_ascent(w):
        return False
    for i in range(1, len(w) - 1):
        if not w[i - 1] > w[i] < w[i + 1]:
            continue
        left = list(itertools.takewhile(lambda x: x > w[i], reversed(w[:i])))
        right = list(itertools.takewhile(lambda x: x > w[i], w[i + 1:]))
        if not min(left) > min(right):
            return False
    return True

def is_simsun(p):
    '''True iff every subword of the k smallest entries is free of double
    descents.
    '''
    return _simsun_condition(p)

def is_signed_andre_b(p):
    '''André condition with subwords taken in signed integer order.'''
    return _andre_condition(p)

def _suffix_minima_positive(p):
    absolute = [abs(x) for x in p]
    return all(p[i - 1] > 0 for i in rtl_min_positions(absolute))

def is_hetyei_andre(p):
    '''The absolute-value word is André and every entry whose absolute
    value is a right-to-left minimum of it is positive.
    '''
    return _andre_condition([abs(x) for x in p]) and _suffix_minima_positive(p)

def is_signed_simsun(p):
    '''The absolute-value word is Simsun and every entry whose absolute value
    is a right-to-left minimum of it is positive.
    '''
    return _simsun_condition([abs(x) for x in p]) and _suffix_minima_positive(p)


### Generators ###
def _iter_words(n, signed, prefix_ok=None, first=None):
    '''Lexicographic permutations (signed: signed permutations) of [n] whose
    every prefix passes `prefix_ok`, optionally with a fixed first entry.
    '''
    cls = SignedPermutation if signed else Permutation

    def candidates(unused):
        if signed:
            return sorted(itertools.chain.from_iterable((-a, a) for a in unused))
        return sorted(unused)

    def extend(prefix, unused):
        if not unused:
            yield cls._trusted(prefix)
            return
        if not prefix and first is not None:
            values = [first] if abs(first) in unused and (signed or first > 0) else []
        else:
            values = candidates(unused)
        for value in values:
            word = prefix + (value,)
            if prefix_ok is None or prefix_ok(word):
                yield from extend(word, unused - {abs(value)})

    return extend((), frozenset(range(1, n + 1)))

def iter_permutations(n):
    '''All permutations of [n] in lexicographic order.'''
    return _iter_words(n, False)

def iter_signed_permutations(n):
    '''All signed permutations of [n] in lexicographic (signed) order.'''
    return _iter_words(n, True)

def _iter_parent_maps(n):
    # insert m as a child of any node with fewer than two children
    parents = {}
    counts = [0] * (n + 1)

    def extend(m):
        if m > n:
            yield dict(parents)
            return
        for v in range(1, m):
            if counts[v] < 2:
                parents[m] = v
                counts[v] += 1
                yield from extend(m + 1)
                counts[v] -= 1
                del parents[m]

    return extend(2) if n else iter(())

def iter_trees(n):
    '''All increasing 1-2 trees on [n], sorted by `sort_key`.'''
    trees = sorted(IncreasingTree(1, parents) for parents in _iter_parent_maps(n))
    logger.debug('generated %d trees on %d labels', len(trees), n)
    return iter(trees)

def iter_signed_trees(n):
    '''All signed increasing 1-2 trees with absolute labels [n], sorted.

    Each sign vector fixes a label set, each tree on [n] is moved onto it by
    the order isomorphism.
    '''
    trees = list(iter_trees(n))
    result = []
    for signs in itertools.product((-1, 1), repeat=n):
        labels = [s * a for s, a in zip(signs, range(1, n + 1))]
        result.extend(order_relabel(t, labels) for t in trees)
    result.sort()
    logger.debug('generated %d signed trees on %d labels', len(result), n)
    return iter(result)


### Family enumeration ###
def _check_size(tag, n, force):
    if n < 0 or (n == 0 and tag not in _EMPTY_OK):
        msg = '{} needs n >= 1, got {}'
        raise RangeError(msg.format(tag.value, n))
    limit = MAX_N_TYPE_B if tag.signed else MAX_N_TYPE_A
    if n > limit and not force:
        msg = '{} with n = {} exceeds the guard n <= {} (use force)'
        raise GuardExceeded(msg.format(tag.value, n, limit))

def _check_refinement(tag, n, k):
    if k is None:
        return
    if n == 0:
        if k != 0:
            msg = 'k must be 0 for n = 0, got {}'
            raise RangeError(msg.format(k))
        return
    valid = 1 <= abs(k) <= n if tag.signed else 1 <= k <= n
    if not valid:
        bound = '1 <= |k| <= {}' if tag.signed else '1 <= k <= {}'
        msg = 'k out of range for {}: need ' + bound + ', got {}'
        raise RangeError(msg.format(tag.value, n, k))

def refinement_value(tag, obj):
    '''The statistic `tag` is refined by, evaluated on `obj`.'''
    if tag.refinement == 'pleaf':
        return obj.pleaf
    if not len(obj):
        return 0
    return obj[0] if tag.refinement == 'first' else obj[-1]

def _alternating_prefix(word):
    return _zigzag_tail(word)

def _snake_prefix(word):
    return word[0] > 0 and _zigzag_tail(word)

_WORD_FAMILIES = {
    # tag: (signed, prefix pruning, full predicate)
    FamilyTag.ALT: (False, _alternating_prefix, None),
    FamilyTag.ALT_B: (True, _alternating_prefix, None),
    FamilyTag.SNAKE: (True, _snake_prefix, None),
    FamilyTag.ANDRE: (False, _no_double_descent_tail, is_andre),
    FamilyTag.SIMSUN: (False, _no_double_descent_tail, is_simsun),
    FamilyTag.ANDRE_B: (True, _no_double_descent_tail, is_signed_andre_b),
    FamilyTag.ANDRE_H: (True, _abs_no_double_descent_tail, is_hetyei_andre),
    FamilyTag.SIMSUN_B: (True, _abs_no_double_descent_tail, is_signed_simsun),
}

def iter_family(tag, n, k=None, force=False):
    '''Stream the members of a family in lexicographic order.

    Parameters
    ----------
    tag: FamilyTag or str
    n: int
        Size, >= 1 (>= 0 for the Simsun families).
    k: int, optional
        Refinement: first entry (alternating families), last entry (André
        and Simsun families) or pleaf (trees).
    force: bool, optional
        Ignore the size guard.

    Returns
    -------
    iterator of Permutation, SignedPermutation or trees

    Raises
    ------
    GuardExceeded
        If `n` is larger than the guard and `force` is false.
    RangeError
        If `n` or `k` is out of range.
    '''
    tag = FamilyTag(tag)
    _check_size(tag, n, force)
    _check_refinement(tag, n, k)
    logger.debug('enumerating %s n=%d k=%s', tag.value, n, k)
    if tag in (FamilyTag.TREE, FamilyTag.TREE_B):
        trees = iter_signed_trees(n) if tag.signed else iter_trees(n)
        if k is None:
            return trees
        return (t for t in trees if t.pleaf == k)
    signed, prefix_ok, predicate = _WORD_FAMILIES[tag]
    first = k if tag.refinement == 'first' else None
    words = _iter_words(n, signed, prefix_ok, first)
    if predicate is not None:
        words = (w for w in words if predicate(w))
    if k is not None and tag.refinement == 'last' and n:
        words = (w for w in words if w[-1] == k)
    return words

def enumerate_family(tag, n, k=None, force=False):
    '''List version of `iter_family`.

    Examples
    --------
    >>> [str(p) for p in enumerate_family('andre', 4)]
    ['1234', '1423', '3124', '3412', '4123']
    '''
    return list(iter_family(tag, n, k, force))

def count_family(tag, n, k=None, force=False):
    '''Number of members of a family (see `iter_family`).'''
    return sum(1 for _ in iter_family(tag, n, k, force))

def count_hetyei_fast(n, k=None, force=False):
    '''Count Hetyei signed André permutations without enumerating signs.

    Signs are forced at the right-to-left minima of the absolute-value word
    and free elsewhere, so each André permutation with last entry `k`
    contributes 2^(n - number of right-to-left minima).

    Raises
    ------
    GuardExceeded
        If `n` is above the type A guard and `force` is false.
    '''
    total = 0
    for p in iter_family(FamilyTag.ANDRE, n, k, force):
        total += 2 ** (n - len(rtl_min_positions(p)))
    return total
