#-*- coding:utf-8 -*-

import re
import numbers
import functools
import collections.abc

import numpy

from .errors import (DuplicateValue, DuplicateAbsValue, InvalidPermutation,
    ParseError, RangeError, RelabelError)
from .util import triples

__all__ = ['Word', 'SignedPermutation', 'Permutation', 'perm_from_sequence',
    'signed_perm_from_sequence', 'make_word', 'parse_entries',
    'format_entries', 'subword_smallest', 'has_double_descent',
    'ends_with_ascent', 'rtl_min_positions', 'order_relabel']


### Text format ###
_SEPARATORS = re.compile(r'[\s,]+')
_COMPACT = re.compile(r'^(?:-?[1-9])+$')
_DIGIT = re.compile(r'-?[1-9]')

def parse_entries(text):
    '''Read a list of integers from text.

    Entries are separated by whitespace or commas. A single token made only
    of the digits 1-9 (each optionally preceded by a minus sign) is read
    digit by digit, so ``'684512937'`` and ``'3-21'`` are valid.

    Parameters
    ----------
    text: str

    Returns
    -------
    list of int

    Raises
    ------
    ParseError
        If a token is not an integer.

    Examples
    --------
    >>> parse_entries('3-21')
    [3, -2, 1]
    >>> parse_entries('6, -3, 10')
    [6, -3, 10]
    '''
    if not isinstance(text, str):
        msg = 'parse_entries() str expected, got {}'
        raise TypeError(msg.format(type(text)))
    tokens = [token for token in _SEPARATORS.split(text.strip()) if token]
    if len(tokens) == 1 and _COMPACT.match(tokens[0]):
        return [int(digit) for digit in _DIGIT.findall(tokens[0])]
    try:
        return [int(token) for token in tokens]
    except ValueError:
        msg = 'malformed permutation text {!r}'
        raise ParseError(msg.format(text))

def format_entries(entries):
    '''Inverse of `parse_entries`: compact when every entry is a positive
    single digit, space separated otherwise.
    '''
    entries = list(entries)
    if all(0 < x < 10 for x in entries):
        return ''.join(str(x) for x in entries)
    return ' '.join(str(x) for x in entries)


### Helpers for argument checking ###
def _as_int(pos, value):
    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        msg = 'entry {}: Integer argument expected, got {}'
        raise TypeError(msg.format(pos + 1, type(value)))
    return int(value)

def _first_repeat(values):
    seen = set()
    for value in values:
        if value in seen:
            return value
        seen.add(value)
    return None

def _argcheck_distinct(entries):
    repeat = _first_repeat(entries)
    if repeat is not None:
        msg = 'entry {} occurs more than once'
        raise DuplicateValue(msg.format(repeat))

def _argcheck_nonzero(entries):
    if 0 in entries:
        msg = 'signed permutation entries must be nonzero, got {}'
        raise InvalidPermutation(msg.format(list(entries)))

def _argcheck_abs_distinct(entries):
    repeat = _first_repeat(abs(x) for x in entries)
    if repeat is not None:
        msg = 'absolute value {} occurs more than once'
        raise DuplicateAbsValue(msg.format(repeat))

def _argcheck_abs_cover(entries):
    if set(abs(x) for x in entries) != set(range(1, len(entries) + 1)):
        msg = 'absolute values of {} are not 1..{}'
        raise InvalidPermutation(msg.format(list(entries), len(entries)))

def _argcheck_cover(entries):
    if set(entries) != set(range(1, len(entries) + 1)):
        msg = 'entries of {} are not 1..{}'
        raise InvalidPermutation(msg.format(list(entries), len(entries)))


### Words ###
@functools.total_ordering
class Word(collections.abc.Sequence):
    '''An immutable sequence of pairwise distinct integers.

    Words carry subwords and tree readings whose values need not form a
    permutation. They compare lexicographically by their entries and are
    equal to any non-string sequence with the same entries.

    Indexing follows python (0-based); use `at` for the 1-based positions
    used by permutation statistics.

    Parameters
    ----------
    entries: iterable of int or str
        The entries, or their text form (see `parse_entries`).

    Raises
    ------
    DuplicateValue
        If an entry repeats.
    TypeError
        If an entry is not an integer.

    Examples
    --------
    >>> Word([5, -2, 9])
    Word('5 -2 9')
    >>> Word('312')[0]
    3
    '''
    __slots__ = ('_entries',)

    _ARGCHECKS = (_argcheck_distinct,)

    def __init__(self, entries=()):
        if isinstance(entries, str):
            entries = parse_entries(entries)
        entries = tuple(_as_int(i, x) for i, x in enumerate(entries))
        for check in self._ARGCHECKS:
            check(entries)
        self._entries = entries

    @classmethod
    def _trusted(cls, entries):
        '''Alternate constructor for already validated entries.'''
        obj = cls.__new__(cls)
        obj._entries = tuple(entries)
        return obj

    def __getitem__(self, key):
        if isinstance(key, slice):
            return Word._trusted(self._entries[key])
        return self._entries[key]

    def __len__(self):
        return len(self._entries)

    def __iter__(self):
        return iter(self._entries)

    # Inherits:
    # __contains__
    # __reversed__
    # index
    # count

    def __hash__(self):
        return hash(self._entries)

    def __eq__(self, other):
        if isinstance(other, Word):
            return self._entries == other._entries
        if isinstance(other, collections.abc.Sequence) and not isinstance(other, str):
            return self._entries == tuple(other)
        return NotImplemented

    def __lt__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self._entries < other._entries

    def __str__(self):
        return format_entries(self._entries)

    def __repr__(self):
        return "{}('{}')".format(self.__class__.__name__, str(self))

    def __getstate__(self):
        return {'entries': self._entries}

    def __setstate__(self, state):
        self._entries = state['entries']

    @property
    def entries(self):
        '''The entries as a tuple.'''
        return self._entries

    @property
    def n(self):
        return len(self._entries)

    @property
    def labels(self):
        '''The entries in increasing order.'''
        return tuple(sorted(self._entries))

    @property
    def first(self):
        '''First entry, None for the empty word.'''
        return self._entries[0] if self._entries else None

    @property
    def last(self):
        '''Last entry, None for the empty word.'''
        return self._entries[-1] if self._entries else None

    def at(self, position):
        '''Entry at the 1-based `position`.'''
        if not 1 <= position <= len(self._entries):
            msg = 'position must be in 1..{}, got {}'
            raise RangeError(msg.format(len(self._entries), position))
        return self._entries[position - 1]

    def reverse(self):
        '''The reverse word, same type.'''
        return type(self)._trusted(reversed(self._entries))

    def relabel(self, mapping):
        '''Apply `mapping` entrywise, the result is retyped by `make_word`.'''
        return make_word(mapping[x] for x in self._entries)


class SignedPermutation(Word):
    '''A sequence of nonzero integers whose absolute values are exactly
    {1..n}. Bars are written as minus signs.

    Signed entries compare in ordinary integer order, so -4 < -1 < 2.

    Raises
    ------
    InvalidPermutation
        If an entry is zero or the absolute values do not cover 1..n.
    DuplicateAbsValue
        If an absolute value repeats.

    Examples
    --------
    >>> SignedPermutation([1, -2, 3])
    SignedPermutation('1 -2 3')
    >>> SignedPermutation('3-21').absolute()
    Permutation('321')
    '''
    __slots__ = ()

    _ARGCHECKS = (_argcheck_nonzero, _argcheck_abs_distinct, _argcheck_abs_cover)

    @property
    def signs(self):
        '''Tuple of +1/-1 per position.'''
        return tuple(1 if x > 0 else -1 for x in self._entries)

    def absolute(self):
        '''The permutation of absolute values.'''
        return Permutation._trusted(abs(x) for x in self._entries)


class Permutation(SignedPermutation):
    '''A permutation of {1..n}, n >= 0.

    Raises
    ------
    DuplicateValue
        If an entry repeats.
    InvalidPermutation
        If the entries are not 1..n.

    Examples
    --------
    >>> Permutation([2, 1, 4, 3])
    Permutation('2143')
    >>> Permutation('2143').at(3)
    4
    '''
    __slots__ = ()

    _ARGCHECKS = (_argcheck_distinct, _argcheck_cover)

    def absolute(self):
        return self


def perm_from_sequence(values):
    '''Validate `values` as a `Permutation`.'''
    return Permutation(values)

def signed_perm_from_sequence(values):
    '''Validate `values` as a `SignedPermutation`.'''
    return SignedPermutation(values)

def make_word(entries):
    '''Build the most specific word type for `entries`.

    Returns a `Permutation` if the entries are 1..n, a `SignedPermutation` if
    their absolute values are, and a `Word` otherwise.
    '''
    entries = tuple(int(x) for x in entries)
    _argcheck_distinct(entries)
    span = set(range(1, len(entries) + 1))
    absolute = set(abs(x) for x in entries)
    if len(absolute) == len(entries) and absolute == span:
        if all(x > 0 for x in entries):
            return Permutation._trusted(entries)
        return SignedPermutation._trusted(entries)
    return Word._trusted(entries)


### Statistics ###
def subword_smallest(w, k):
    '''Subword of the `k` smallest entries of `w` in their original order.

    Parameters
    ----------
    w: sequence of int
    k: int
        1 <= k <= len(w)

    Returns
    -------
    Word

    Raises
    ------
    RangeError
        If `k` is out of range.

    Examples
    --------
    >>> subword_smallest(Permutation('31245'), 3)
    Word('312')
    >>> subword_smallest(SignedPermutation([2, -4, -1, 3, 5]), 1)
    Word('-4')
    '''
    if not 1 <= k <= len(w):
        msg = 'k must be in 1..{}, got {}'
        raise RangeError(msg.format(len(w), k))
    threshold = sorted(w)[k - 1]
    return Word._trusted(x for x in w if x <= threshold)

def has_double_descent(w):
    '''True iff three consecutive entries strictly decrease.'''
    return any(a > b > c for a, b, c in triples(w))

def ends_with_ascent(w):
    '''True iff the last two entries increase. Words of length <= 1 count
    as ending with an ascent.
    '''
    return len(w) <= 1 or w[-2] < w[-1]

def rtl_min_positions(w):
    '''1-based positions i with w_i = min(w_i, ..., w_n), increasing.

    Examples
    --------
    >>> rtl_min_positions(Permutation('684512937'))
    [5, 6, 8, 9]
    '''
    values = numpy.asarray(tuple(w), dtype=numpy.int64)
    if not values.size:
        return []
    suffix_min = numpy.minimum.accumulate(values[::-1])[::-1]
    return (numpy.flatnonzero(values == suffix_min) + 1).tolist()


### Relabeling ###
def order_relabel(obj, target_labels):
    '''Apply the unique order isomorphism from the labels of `obj` onto
    `target_labels`.

    Parameters
    ----------
    obj: Word or tree
        Anything with a ``labels`` attribute and a ``relabel(mapping)``
        method.
    target_labels: iterable of int
        Pairwise distinct, as many as `obj` has labels.

    Returns
    -------
    Relabeled object. Words are retyped by `make_word`, trees by their
    label set.

    Raises
    ------
    DuplicateValue
        If `target_labels` repeats a value.
    RelabelError
        If the sizes differ.

    Examples
    --------
    >>> order_relabel(SignedPermutation('6-39-82-17-45'), range(1, 10))
    Permutation('739154826')
    '''
    targets = sorted(int(x) for x in target_labels)
    _argcheck_distinct(targets)
    source = sorted(obj.labels)
    if len(source) != len(targets):
        msg = 'cannot relabel {} labels onto {} targets'
        raise RelabelError(msg.format(len(source), len(targets)))
    return obj.relabel(dict(zip(source, targets)))
