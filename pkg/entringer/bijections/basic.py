#!/usr/bin/env python
#-*- coding:utf-8 -*-

import logging
import functools
import collections

from ..core import Permutation, make_word, rtl_min_positions, order_relabel
from ..errors import PreconditionError
from ..families import (FamilyTag, iter_family, is_alternating, is_andre,
    is_simsun, is_signed_andre_b, is_hetyei_andre, is_signed_simsun)
from ..tree import IncreasingTree, lowlevel, make_tree
from ..tree.lowlevel import Node
from .algorithms import psi_c

__all__ = ['omega', 'omega_inv', 'omega_signed', 'phi', 'phi_inv',
    'phi_signed', 'phi_signed_inv', 'psi', 'psi_inv', 'psi_signed',
    'EntringerChain', 'entringer_chain']

logger = logging.getLogger(__name__)


def _require(predicate, obj, what):
    if not predicate(obj):
        msg = '{} is not {}'
        raise PreconditionError(msg.format(obj, what))


### Trees and André permutations ###
def omega(t):
    '''Reverse inorder reading of a tree.

    Maps trees on [n] with pleaf k onto André permutations of [n] ending
    with k.

    Examples
    --------
    >>> str(omega(IncreasingTree.from_literal('1(2(3(7,9)),4(5,6(8)))')))
    '684512937'
    '''
    return make_word(reversed(t.inorder()))

def omega_signed(t):
    '''Reverse inorder reading of a signed tree, a signed André
    permutation with last entry ``t.pleaf``.
    '''
    return make_word(reversed(t.inorder()))

def omega_inv(p):
    '''Rebuild the tree whose reverse inorder reading is `p`.

    The root is the minimum of the reversed word, its left and right
    subtrees come from the parts before and after it. Signed André
    permutations give signed trees.

    Raises
    ------
    PreconditionError
        If `p` is not (signed) André.
    '''
    _require(is_signed_andre_b, p, 'an André permutation')
    if not len(p):
        raise PreconditionError('cannot build a tree without labels')
    # min-rooted cartesian tree of the reversed word
    stack = []
    for x in reversed(tuple(p)):
        last = None
        while stack and stack[-1].label > x:
            last = stack.pop()
        node = Node(x, last)
        if stack:
            stack[-1].right = node
        stack.append(node)
    root = stack[0]
    return make_tree(root.label, lowlevel.parent_map(root))


### André and Simsun permutations ###
def phi(p):
    '''Send an André permutation of [n] to a Simsun permutation of [n-1].

    With right-to-left minima at positions i_1 < ... < i_l: position
    i_{t-1} receives ``p_{i_t} - 1``, every other position ``p_i - 1``, and
    the last position is dropped. The last entry decreases by one.

    Raises
    ------
    PreconditionError
        If `p` is not André.

    Examples
    --------
    >>> str(phi(Permutation('684512937')))
    '57341286'
    '''
    _require(is_andre, p, 'an André permutation')
    if not len(p):
        raise PreconditionError('phi needs n >= 1')
    return Permutation._trusted(_phi_entries(tuple(p)))

def _phi_entries(sigma):
    positions = rtl_min_positions(sigma)
    result = [x - 1 for x in sigma]
    for prev, cur in zip(positions, positions[1:]):
        result[prev - 1] = sigma[cur - 1] - 1
    del result[-1]
    return result

def phi_inv(s):
    '''Inverse of `phi`.

    With right-to-left minima of `s` at j_1 < ... < j_m and j_{m+1} = n:
    ``p_{j_1} = 1``, ``p_{j_t} = s_{j_{t-1}} + 1`` and ``p_i = s_i + 1``
    elsewhere.

    Raises
    ------
    PreconditionError
        If `s` is not Simsun.
    '''
    _require(is_simsun, s, 'a Simsun permutation')
    return Permutation._trusted(_phi_inv_entries(tuple(s)))

def _phi_inv_entries(s):
    n = len(s) + 1
    positions = rtl_min_positions(s) + [n]
    result = [x + 1 for x in s] + [None]
    result[positions[0] - 1] = 1
    for prev, cur in zip(positions, positions[1:]):
        result[cur - 1] = s[prev - 1] + 1
    return result

def phi_signed(p):
    '''Signed analogue of `phi` on Hetyei signed André permutations.

    `phi` is applied to the absolute values, the signs of `p` are kept at
    every position that is not a right-to-left minimum of the absolute
    values. The result is a signed Simsun permutation of [n-1].

    Raises
    ------
    PreconditionError
        If `p` is not Hetyei signed André.

    Examples
    --------
    >>> from entringer.core import SignedPermutation
    >>> str(phi_signed(SignedPermutation('-3124')))
    '-2 1 3'
    '''
    _require(is_hetyei_andre, p, 'a Hetyei signed André permutation')
    if not len(p):
        raise PreconditionError('phi_signed needs n >= 1')
    absolute = tuple(abs(x) for x in p)
    forced = set(rtl_min_positions(absolute))
    entries = _phi_entries(absolute)
    return make_word(x if i + 1 in forced or p[i] > 0 else -x
        for i, x in enumerate(entries))

def phi_signed_inv(s):
    '''Inverse of `phi_signed`.

    Raises
    ------
    PreconditionError
        If `s` is not signed Simsun.
    '''
    _require(is_signed_simsun, s, 'a signed Simsun permutation')
    entries = _phi_inv_entries(tuple(abs(x) for x in s))
    signs = [1 if x > 0 else -1 for x in s] + [1]
    return make_word(sign * x for sign, x in zip(signs, entries))


### Alternating permutations and trees ###
def psi(p):
    '''Tree of an alternating permutation, see `algorithms.psi_c`.'''
    return psi_c(p)[0]

@functools.lru_cache(maxsize=None)
def _psi_table(n, force):
    table = {psi(p): p for p in iter_family(FamilyTag.ALT, n, force=force)}
    logger.debug('psi inverse table for n=%d holds %d trees', n, len(table))
    return table

def psi_inv(t, force=False):
    '''Alternating permutation mapped to `t` by `psi`.

    Found through a table of the forward map over all alternating
    permutations of the same size, built once per size.

    Raises
    ------
    PreconditionError
        If `t` is not an `IncreasingTree`.
    GuardExceeded
        If the size is above the type A guard and `force` is false.
    '''
    if not isinstance(t, IncreasingTree):
        msg = 'psi_inv() IncreasingTree expected, got {!r}'
        raise PreconditionError(msg.format(t))
    return _psi_table(t.n, force)[t]

def psi_signed(p):
    '''Signed tree of a signed alternating permutation.

    `p` is moved onto [n] by the order isomorphism of its entries, mapped by
    `psi` and moved back. The pleaf of the result is ``p_1``.

    Raises
    ------
    PreconditionError
        If `p` is not alternating.

    Examples
    --------
    >>> from entringer.core import SignedPermutation
    >>> str(psi_signed(SignedPermutation('1-23')))
    '-2(1,3)'
    '''
    _require(is_alternating, p, 'alternating')
    if not len(p):
        raise PreconditionError('psi_signed needs n >= 1')
    return order_relabel(psi(order_relabel(p, range(1, len(p) + 1))), p.labels)


### Chain of images ###
EntringerChain = collections.namedtuple('EntringerChain', ['alternating', 'tree', 'andre', 'simsun'])

def entringer_chain(p):
    '''Images of an alternating permutation of [n] with first entry k along
    psi, omega and phi: a tree with pleaf k, an André permutation ending
    with k and a Simsun permutation of [n-1] ending with k-1.
    '''
    tree = psi(p)
    andre = omega(tree)
    return EntringerChain(p, tree, andre, phi(andre))
