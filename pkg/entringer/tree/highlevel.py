#!/usr/bin/env python
#-*- coding:utf-8 -*-

import functools
import numbers

from . import lowlevel
from ..core import Word
from ..errors import TreeError

__all__ = ['SignedIncreasingTree', 'IncreasingTree', 'make_tree']


### Helpers for argument checking ###
def _argcheck_abs_cover(labels):
    if set(abs(x) for x in labels) != set(range(1, len(labels) + 1)) or 0 in labels:
        msg = 'absolute values of labels {} are not 1..{}'
        raise TreeError(msg.format(sorted(labels), len(labels)))

def _argcheck_cover(labels):
    if set(labels) != set(range(1, len(labels) + 1)):
        msg = 'labels {} are not 1..{}'
        raise TreeError(msg.format(sorted(labels), len(labels)))


@functools.total_ordering
class SignedIncreasingTree(object):
    '''An increasing 1-2 tree with signed labels.

    Labels are nonzero integers whose absolute values are exactly {1..n}.
    Every node has at most two children and labels increase (as signed
    integers) from the root to the leaves.

    The tree is stored as a parent map; orientation is derived: the left
    child of a node is its unique child or the smaller of its two children.

    Parameters
    ----------
    root: int
    parents: dict of int -> int
        Maps every non-root label to its parent.

    Raises
    ------
    TreeError
        If a node has more than two children, an edge decreases, the tree is
        not connected or the label set is wrong.

    Attributes
    ----------
    root: int
    labels: tuple of int
        Sorted labels.
    n: int
        Number of nodes.

    Examples
    --------
    >>> t = SignedIncreasingTree.from_literal('-2(1,3)')
    >>> t.minimal_path()
    [-2, 1]
    '''
    __slots__ = ('_root', '_parents', '_children')

    _ARGCHECKS = (_argcheck_abs_cover,)

    def __init__(self, root, parents):
        parents = dict(parents)
        labels = set(parents) | {root}
        for label in labels:
            if isinstance(label, bool) or not isinstance(label, numbers.Integral):
                msg = 'Integer label expected, got {!r}'
                raise TypeError(msg.format(label))
        if root in parents:
            msg = 'root {} cannot have a parent'
            raise TreeError(msg.format(root))
        children = {label: [] for label in labels}
        for child, parent in parents.items():
            if parent not in children:
                msg = 'parent {} of {} is not a label of the tree'
                raise TreeError(msg.format(parent, child))
            if not parent < child:
                msg = 'edge {} -> {} is not increasing'
                raise TreeError(msg.format(parent, child))
            children[parent].append(child)
        for label, kids in children.items():
            if len(kids) > 2:
                msg = 'node {} has {} children, at most 2 allowed'
                raise TreeError(msg.format(label, len(kids)))
        for check in self._ARGCHECKS:
            check(labels)
        # increasing edges and a single parentless label make it connected
        self._root = root
        self._parents = parents
        self._children = {label: tuple(sorted(kids)) for label, kids in children.items()}

    ### Alternate constructors ###
    @classmethod
    def from_node(cls, root):
        '''Build from a `lowlevel.Node` view, re-deriving orientation.'''
        return cls(root.label, lowlevel.parent_map(root))

    @classmethod
    def from_literal(cls, text):
        '''Parse the literal form. Two-child forms must list the smaller
        child first.
        '''
        root = lowlevel.parse_literal(text)
        _argcheck_literal_order(root)
        return cls.from_node(root)

    @classmethod
    def from_dict(cls, obj):
        '''Parse the JSON object form.'''
        root = lowlevel.node_from_dict(obj)
        _argcheck_literal_order(root)
        return cls.from_node(root)

    ### Access ###
    @property
    def root(self):
        return self._root

    @property
    def labels(self):
        return tuple(sorted(self._children))

    @property
    def n(self):
        return len(self._children)

    def __len__(self):
        return len(self._children)

    def __contains__(self, label):
        return label in self._children

    def _require(self, label):
        if label not in self._children:
            msg = '{} is not a label of the tree'
            raise TreeError(msg.format(label))

    def parent(self, label):
        '''Parent of `label`, None for the root.'''
        self._require(label)
        return self._parents.get(label)

    def children(self, label):
        '''Children of `label`, smaller first.'''
        self._require(label)
        return self._children[label]

    def left(self, label):
        '''Unique or smaller child, None for a leaf.'''
        kids = self.children(label)
        return kids[0] if kids else None

    def right(self, label):
        '''Larger of two children, None otherwise.'''
        kids = self.children(label)
        return kids[1] if len(kids) == 2 else None

    def is_leaf(self, label):
        return not self.children(label)

    ### Paths and readings ###
    def minimal_path(self):
        '''Labels from the root following left children down to a leaf.'''
        path = [self._root]
        while self._children[path[-1]]:
            path.append(self._children[path[-1]][0])
        return path

    @property
    def pleaf(self):
        '''Last label of the minimal path.'''
        return self.minimal_path()[-1]

    def maximal_path_from(self, label):
        '''Labels from `label` following right children. The last label may
        still have a (left) child.
        '''
        self._require(label)
        path = [label]
        while len(self._children[path[-1]]) == 2:
            path.append(self._children[path[-1]][1])
        return path

    def to_node(self):
        '''Fresh `lowlevel.Node` view in canonical orientation.'''
        nodes = {label: lowlevel.Node(label) for label in self._children}
        for label, kids in self._children.items():
            if kids:
                nodes[label].left = nodes[kids[0]]
            if len(kids) == 2:
                nodes[label].right = nodes[kids[1]]
        return nodes[self._root]

    def inorder(self):
        '''Word read in inorder: left subtree, node, right subtree.'''
        return Word._trusted(lowlevel.inorder_labels(self.to_node()))

    def relabel(self, mapping):
        '''Apply `mapping` nodewise, the result is retyped by `make_tree`.'''
        try:
            parents = {mapping[c]: mapping[p] for c, p in self._parents.items()}
            return make_tree(mapping[self._root], parents)
        except KeyError as err:
            msg = 'no image for label {}'
            raise TreeError(msg.format(err.args[0]))

    ### Serialization ###
    def to_literal(self):
        return lowlevel.node_to_literal(self.to_node())

    def to_dict(self):
        return lowlevel.node_to_dict(self.to_node())

    ### Comparison ###
    def sort_key(self):
        '''Sorted labels, then the parents of the non-root labels in label
        order.
        '''
        labels = self.labels
        return (labels, tuple(self._parents[x] for x in labels if x != self._root))

    def __eq__(self, other):
        if not isinstance(other, SignedIncreasingTree):
            return NotImplemented
        return self._root == other._root and self._parents == other._parents

    def __lt__(self, other):
        if not isinstance(other, SignedIncreasingTree):
            return NotImplemented
        return self.sort_key() < other.sort_key()

    def __hash__(self):
        return hash(self.sort_key())

    def __str__(self):
        return self.to_literal()

    def __repr__(self):
        return "{}('{}')".format(self.__class__.__name__, self.to_literal())

    def __getstate__(self):
        return (self._root, self._parents, self._children)

    def __setstate__(self, state):
        self._root, self._parents, self._children = state


class IncreasingTree(SignedIncreasingTree):
    '''An increasing 1-2 tree on {1..n}, rooted at 1.

    Examples
    --------
    >>> t = IncreasingTree.from_literal('1(2(3(7,9)),4(5,6(8)))')
    >>> t.minimal_path()
    [1, 2, 3, 7]
    >>> str(t.inorder())
    '739215486'
    '''
    __slots__ = ()

    _ARGCHECKS = (_argcheck_cover,)


def _argcheck_literal_order(root):
    for node in lowlevel.iter_nodes(root):
        if node.left is None and node.right is not None:
            msg = 'the only child {} of {} must be the left one'
            raise TreeError(msg.format(node.right.label, node.label))
        if node.left is not None and node.right is not None \
                and not node.left.label < node.right.label:
            msg = 'children of {} must be listed smaller first, got {}, {}'
            raise TreeError(msg.format(node.label, node.left.label, node.right.label))

def make_tree(root, parents):
    '''Build an `IncreasingTree` if the labels are 1..n, a
    `SignedIncreasingTree` otherwise.
    '''
    labels = set(parents) | {root}
    if labels == set(range(1, len(labels) + 1)):
        return IncreasingTree(root, parents)
    return SignedIncreasingTree(root, parents)
