#-*- coding:utf-8 -*-

import io
import csv
import enum
import json
import functools

import numpy

from .errors import RangeError

__all__ = ['TriangleKind', 'TriangleTable', 'entringer_table', 'arnold_table',
    'euler_number', 'springer_number', 'DEFAULT_N_MAX', 'SCHEMA_VERSION']


### Constants ###
# Default size of the command line tables
DEFAULT_N_MAX = 50
# Version of the JSON export layout
SCHEMA_VERSION = 1


class TriangleKind(enum.Enum):
    ENTRINGER = 'entringer'
    ARNOLD = 'arnold'


class TriangleTable(object):
    '''Exact table of Entringer numbers E_{n,k} (1 <= k <= n) or Arnold
    numbers S_{n,k} (1 <= |k| <= n).

    Entries are python integers held in a read-only numpy object array, so
    there is no overflow at any size.

    Parameters
    ----------
    kind: TriangleKind
    values: numpy.ndarray
        Indexed by ``[n, k]`` (Entringer) or ``[n, k + n_max]`` (Arnold).

    Attributes
    ----------
    kind: TriangleKind
    n_max: int
    row_sums: list of int
        E_n, respectively S_n (sum over positive k), for n = 1..n_max.

    Examples
    --------
    >>> t = entringer_table(7)
    >>> t[5, 3]
    4
    >>> t.row_sum(7)
    272
    '''
    def __init__(self, kind, values):
        self.kind = TriangleKind(kind)
        self.n_max = values.shape[0] - 1
        self._values = values
        self._values.flags.writeable = False

    def _column(self, k):
        return k + self.n_max if self.kind is TriangleKind.ARNOLD else k

    def ks(self, n):
        '''Valid refinements of row `n`, ascending.'''
        self._check_row(n)
        if self.kind is TriangleKind.ARNOLD:
            return list(range(-n, 0)) + list(range(1, n + 1))
        return list(range(1, n + 1))

    def _check_row(self, n):
        if not 1 <= n <= self.n_max:
            msg = 'n must be in 1..{}, got {}'
            raise RangeError(msg.format(self.n_max, n))

    def __getitem__(self, key):
        n, k = key
        self._check_row(n)
        valid = 1 <= abs(k) <= n if self.kind is TriangleKind.ARNOLD else 1 <= k <= n
        if not valid:
            msg = 'k = {} out of range for row {} of the {} triangle'
            raise RangeError(msg.format(k, n, self.kind.value))
        return int(self._values[n, self._column(k)])

    def row(self, n):
        '''List of (k, value) pairs of row `n`, k ascending.'''
        return [(k, self[n, k]) for k in self.ks(n)]

    def row_sum(self, n):
        '''E_n, respectively S_n.'''
        self._check_row(n)
        start = self._column(1)
        return int(self._values[n, start:start + n].sum())

    @property
    def row_sums(self):
        return [self.row_sum(n) for n in range(1, self.n_max + 1)]

    def items(self):
        '''Iterate over (n, k, value), row by row, k ascending.'''
        for n in range(1, self.n_max + 1):
            for k, value in self.row(n):
                yield n, k, value

    def __eq__(self, other):
        if not isinstance(other, TriangleTable):
            return NotImplemented
        return self.kind is other.kind and numpy.array_equal(self._values, other._values)

    def __repr__(self):
        return '{}({}, n_max={})'.format(self.__class__.__name__, self.kind.value, self.n_max)

    ### Export ###
    def to_csv(self):
        '''CSV text with header ``n,k,value``.'''
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator='\n')
        writer.writerow(['n', 'k', 'value'])
        writer.writerows(self.items())
        return buf.getvalue()

    def to_json_obj(self):
        rows = []
        for n in range(1, self.n_max + 1):
            ks = self.ks(n)
            rows.append({'n': n, 'k': ks, 'values': [self[n, k] for k in ks],
                'sum': self.row_sum(n)})
        return {'schema_version': SCHEMA_VERSION, 'kind': self.kind.value,
            'n_max': self.n_max, 'rows': rows}

    def to_json(self):
        return json.dumps(self.to_json_obj(), indent=2)

    def to_text(self):
        '''One row per line: ``n: v_1 v_2 ... | sum``.'''
        lines = []
        for n in range(1, self.n_max + 1):
            values = ' '.join(str(v) for _, v in self.row(n))
            lines.append('{}: {} | {}'.format(n, values, self.row_sum(n)))
        return '\n'.join(lines) + '\n'

    def to_boustrophedon(self, twin=1):
        '''Zigzag rendering with the summation direction of each row.

        For the Arnold triangle `twin` selects which of the two interleaved
        triangles is drawn: 1 starts with S_{1,-1}, 2 with S_{1,1}.
        '''
        if twin not in (1, 2):
            msg = 'twin must be 1 or 2, got {}'
            raise ValueError(msg.format(twin))
        lines = [self._zigzag_row(n, twin) for n in range(1, self.n_max + 1)]
        width = max(len(line) for line in lines)
        return '\n'.join(line.center(width).rstrip() for line in lines) + '\n'

    def _zigzag_row(self, n, twin):
        odd = n % 2 == 1
        if self.kind is TriangleKind.ENTRINGER:
            ks = list(range(1, n + 1))
            if odd:
                ks.reverse()
            arrow = ' <- ' if odd else ' -> '
        elif odd == (twin == 1):
            ks = list(range(-n, 0))
            if not odd:
                ks.reverse()
            arrow = ' -> ' if odd else ' <- '
        else:
            ks = list(range(1, n + 1))
            if not odd:
                ks.reverse()
            arrow = ' -> ' if odd else ' <- '
        return arrow.join(str(self[n, k]) for k in ks)


### Construction ###
def entringer_table(n_max):
    '''Entringer numbers by the recurrence E_{n,k} = E_{n,k-1} + E_{n-1,n+1-k}
    with E_{1,1} = 1 and E_{n,1} = 0.

    Parameters
    ----------
    n_max: int
        Last row, >= 1.

    Returns
    -------
    TriangleTable

    Raises
    ------
    RangeError
        If `n_max` < 1.
    '''
    if n_max < 1:
        msg = 'n_max must be >= 1, got {}'
        raise RangeError(msg.format(n_max))
    values = numpy.zeros((n_max + 1, n_max + 1), dtype=object)
    values[1, 1] = 1
    for n in range(2, n_max + 1):
        for k in range(2, n + 1):
            values[n, k] = values[n, k - 1] + values[n - 1, n + 1 - k]
    return TriangleTable(TriangleKind.ENTRINGER, values)

def arnold_table(n_max):
    '''Arnold numbers S_{n,k}, 1 <= |k| <= n.

    Each row is filled from k = -n up to -1, then k = 1, then k = 2 up to n::

        S_{n,-n} = 0
        S_{n,k} = S_{n,k-1} + S_{n-1,-k}      (-1 >= k > -n)
        S_{n,1} = S_{n,-1}
        S_{n,k} = S_{n,k-1} + S_{n-1,-k+1}    (n >= k > 1)

    with S_{1,1} = S_{1,-1} = 1.

    Raises
    ------
    RangeError
        If `n_max` < 1.
    '''
    if n_max < 1:
        msg = 'n_max must be >= 1, got {}'
        raise RangeError(msg.format(n_max))
    off = n_max
    values = numpy.zeros((n_max + 1, 2 * n_max + 1), dtype=object)
    values[1, 1 + off] = values[1, -1 + off] = 1
    for n in range(2, n_max + 1):
        values[n, -n + off] = 0
        for k in range(-n + 1, 0):
            values[n, k + off] = values[n, k - 1 + off] + values[n - 1, -k + off]
        values[n, 1 + off] = values[n, -1 + off]
        for k in range(2, n + 1):
            values[n, k + off] = values[n, k - 1 + off] + values[n - 1, -k + 1 + off]
    return TriangleTable(TriangleKind.ARNOLD, values)

@functools.lru_cache(maxsize=None)
def euler_number(n):
    '''E_n, the row sum of the Entringer triangle.

    Examples
    --------
    >>> euler_number(6)
    61
    '''
    return entringer_table(n).row_sum(n)

@functools.lru_cache(maxsize=None)
def springer_number(n):
    '''S_n, the sum of the positive-k Arnold numbers of row `n`.

    Examples
    --------
    >>> springer_number(5)
    361
    '''
    return arnold_table(n).row_sum(n)
