#!/usr/bin/env python
#-*- coding:utf-8 -*-

import collections

from ..core import Permutation
from ..errors import PreconditionError
from ..families import is_alternating
from ..tree import IncreasingTree, lowlevel
from ..tree.lowlevel import Node

__all__ = ['AlgoCStep', 'AlgoCTrace', 'psi_c', 'psi_b', 'chuang_phi']


### Grafting construction ###
AlgoCStep = collections.namedtuple('AlgoCStep', ['i', 'a', 'b', 'case', 'leaf', 'literal'])
AlgoCStep.__doc__ = '''One grafting step of `psi_c`.

Attributes
----------
i: int
    Step index, m-1 down to 1.
a: int
    First label on the minimal path larger than the bottom of the pair.
b: int or None
    Last label of the right chain from `a` below the top of the pair (case
    'C1'), None in case 'C2'.
case: {'C1', 'C2'}
leaf: int
    Minimal leaf of the tree after the step.
literal: str
    Canonical literal of the tree after the step.
'''


class AlgoCTrace(collections.namedtuple('AlgoCTrace', ['initial', 'steps'])):
    '''Record of a `psi_c` run: the literal of the starting tree and the
    steps in execution order.
    '''
    __slots__ = ()

    def step(self, i):
        for step in self.steps:
            if step.i == i:
                return step
        msg = 'no step {} in trace'
        raise KeyError(msg.format(i))

    def a(self, i):
        return self.step(i).a

    def b(self, i):
        return self.step(i).b

    def to_dict(self):
        return {'initial': self.initial, 'steps': [step._asdict() for step in self.steps]}

    def __str__(self):
        lines = ['T({}) = {}'.format(len(self.steps) + 1, self.initial)]
        for s in self.steps:
            b = '-' if s.b is None else s.b
            lines.append('i={} a={} b={} {} T({}) = {}'.format(
                s.i, s.a, b, s.case, s.i, s.literal))
        return '\n'.join(lines)


def _check_alternating(p):
    if not len(p):
        raise PreconditionError('an alternating permutation of n >= 1 expected')
    if not is_alternating(p):
        msg = '{} is not alternating'
        raise PreconditionError(msg.format(p))

def _graft_pair(root, top, bottom):
    '''Graft the pair (top, bottom) onto the ordered tree, returns the new
    root and the (a, b, case) of the step.
    '''
    path = lowlevel.left_path(root)
    for pos, a in enumerate(path):
        if a.label > bottom:
            break
    parent = path[pos - 1] if pos else None
    if a.label < top:
        vs = []
        for v in lowlevel.right_chain(a):
            if not v.label < top:
                break
            vs.append(v)
        j = len(vs)
        subtrees = [v.left for v in vs] + [vs[-1].right]
        new = Node(bottom, vs[0], subtrees[0])
        for t in range(j - 1):
            vs[t].left = vs[t + 1]
            vs[t].right = subtrees[t + 1]
        vs[-1].left = Node(top)
        vs[-1].right = subtrees[j]
        step = (a.label, vs[-1].label, 'C1')
    else:
        new = Node(bottom, Node(top), a)
        step = (a.label, None, 'C2')
    if parent is None:
        root = new
    else:
        parent.left = new
    return root, step

def psi_c(p):
    '''Map an alternating permutation to an increasing 1-2 tree by grafting
    its descent pairs from right to left.

    The pairs are ``d_i = (p_{2i-1}, p_{2i})``. The run starts from the
    last pair, a single node if n is odd, then grafts d_{m-1}, ..., d_1.
    The minimal leaf of the tree after step i is p_{2i-1}, so the final
    tree has pleaf ``p_1``.

    Parameters
    ----------
    p: Permutation
        Alternating, n >= 1.

    Returns
    -------
    tree: IncreasingTree
    trace: AlgoCTrace

    Raises
    ------
    PreconditionError
        If `p` is not alternating.

    Examples
    --------
    >>> tree, trace = psi_c(Permutation('748591623'))
    >>> [trace.a(i) for i in (4, 3, 2, 1)]
    [3, 2, 9, 5]
    >>> trace.b(2) is None
    True
    '''
    _check_alternating(p)
    sigma = tuple(p)
    n = len(sigma)
    m = (n + 1) // 2
    if n % 2:
        root = Node(sigma[n - 1])
    else:
        root = Node(sigma[n - 1], Node(sigma[n - 2]))
    initial = lowlevel.node_to_literal(root)
    steps = []
    for i in range(m - 1, 0, -1):
        top, bottom = sigma[2 * i - 2], sigma[2 * i - 1]
        root, (a, b, case) = _graft_pair(root, top, bottom)
        view = lowlevel.canonicalize(lowlevel.copy_nodes(root))
        leaf = lowlevel.left_path(view)[-1].label
        steps.append(AlgoCStep(i, a, b, case, leaf, lowlevel.node_to_literal(view)))
    return IncreasingTree.from_node(root), AlgoCTrace(initial, tuple(steps))


### Recursive construction ###
def _replace_on_left_path(root, old, new):
    '''Put `new` where `old` sits on the left path of `root`.'''
    path = lowlevel.left_path(root)
    pos = path.index(old)
    if pos == 0:
        return new
    path[pos - 1].left = new
    return root

def _psi_b_nodes(pi):
    n = len(pi)
    if n == 1:
        return Node(1)
    if n == 2:
        return Node(1, Node(2))
    k = pi[0]
    if pi[1] == k - 1:
        # drop k-1 and k, solve the rest, reinsert k-1 with left child k
        rest = tuple(x if x < k - 1 else x - 2 for x in pi[2:])
        root = _psi_b_nodes(rest)
        lowlevel.relabel_nodes(root, lambda j: j if j <= k - 2 else j + 2)
        m = next(v for v in lowlevel.left_path(root) if v.label > k)
        root = _replace_on_left_path(root, m, Node(k - 1, Node(k), m))
    else:
        # solve for (k-1 k) pi, whose tree has minimal leaf k-1
        swap = {k - 1: k, k: k - 1}
        root = _psi_b_nodes(tuple(swap.get(x, x) for x in pi))
        path = lowlevel.left_path(root)
        leaf, ell = path[-1], path[-2]
        if ell.right is not None and ell.right.label == k:
            knode = ell.right
            ell.right = knode.left
            leaf.left = Node(k)
            leaf.right = knode.right
        else:
            for v in lowlevel.iter_nodes(root):
                if v.label == k:
                    v.label = k - 1
                    break
            leaf.label = k
    return lowlevel.canonicalize(root)

def psi_b(p):
    '''Recursive construction of the same map as `psi_c`.

    With ``k = p_1``: if ``p_2 = k-1`` the entries k-1 and k are removed, the
    smaller tree is built and k-1 is inserted on the minimal path with
    left child k. Otherwise the tree of ``(k-1 k) p`` is built and k-1 and k
    are exchanged, regrafting the subtrees of k when it is the sibling of
    the minimal leaf.

    Raises
    ------
    PreconditionError
        If `p` is not alternating.

    Examples
    --------
    >>> str(psi_b(Permutation('2143')))
    '1(2,3(4))'
    '''
    _check_alternating(p)
    return IncreasingTree.from_node(_psi_b_nodes(tuple(p)))


### Direct reading ###
def chuang_phi(t):
    '''Read a tree on [n+1] directly into a Simsun permutation of [n].

    Starting at the root: when the current node has two children the
    subtree of the larger one is read in reverse inorder, then the smaller
    (or unique) child is read and becomes the current node. The word is
    shifted down by one.

    Parameters
    ----------
    t: IncreasingTree

    Returns
    -------
    Permutation
        Equal to ``phi(omega(t))``.

    Examples
    --------
    >>> str(chuang_phi(IncreasingTree.from_literal('1(2(3(7,9)),4(5,6(8)))')))
    '57341286'
    '''
    word = []
    node = t.to_node()
    while not node.is_leaf():
        if node.right is not None:
            word.extend(reversed(lowlevel.inorder_labels(node.right)))
        node = node.left
        word.append(node.label)
    return Permutation._trusted(x - 1 for x in word)
