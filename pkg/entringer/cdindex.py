#-*- coding:utf-8 -*-

from .errors import PreconditionError
from .util import pairs

__all__ = ['variation', 'reduced_variation_andre', 'reduced_variation_simsun',
    'cd_weight']


def variation(w):
    '''ab-word of ascents (a) and descents (b) of `w`.

    Examples
    --------
    >>> variation([6, 8, 4, 5, 1, 2, 9, 3, 7])
    'ababaaba'
    '''
    if not len(w):
        raise PreconditionError('variation of an empty word')
    return ''.join('a' if x < y else 'b' for x, y in pairs(w))

def _reduce(ab, pair):
    # greedy left to right: each `pair` becomes d, every other a becomes c
    result = []
    i = 0
    while i < len(ab):
        if ab.startswith(pair, i):
            result.append('d')
            i += 2
        elif ab[i] == 'a':
            result.append('c')
            i += 1
        else:
            msg = 'unpaired b at position {} of {!r}'
            raise PreconditionError(msg.format(i + 1, ab))
    return ''.join(result)

def reduced_variation_andre(p):
    '''cd-word of an André permutation: each ba of the variation becomes d,
    each remaining a becomes c.

    Raises
    ------
    PreconditionError
        If a b is left over (`p` is not André).

    Examples
    --------
    >>> reduced_variation_andre([6, 8, 4, 5, 1, 2, 9, 3, 7])
    'cddcd'
    '''
    return _reduce(variation(p), 'ba')

def reduced_variation_simsun(s):
    '''cd-word of a Simsun permutation: a 0 is put in front, then each ab of
    the variation becomes d and each remaining a becomes c.

    Raises
    ------
    PreconditionError
        If a b is left over (`s` is not Simsun).

    Examples
    --------
    >>> reduced_variation_simsun([5, 7, 3, 4, 1, 2, 8, 6])
    'cddcd'
    '''
    return _reduce(variation([0] + list(s)), 'ab')

def cd_weight(cd):
    '''Degree of a cd-word, c counting 1 and d counting 2.'''
    return cd.count('c') + 2 * cd.count('d')
