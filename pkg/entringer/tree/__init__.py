#!/usr/bin/env python
#-*- coding:utf-8 -*-

from . import lowlevel, highlevel
from .highlevel import SignedIncreasingTree, IncreasingTree, make_tree

__all__ = ['SignedIncreasingTree', 'IncreasingTree', 'make_tree',
    'tree_from_literal', 'tree_to_literal', 'tree_from_dict', 'tree_to_dict',
    'inorder', 'minimal_path', 'pleaf', 'maximal_path_from']


def tree_from_literal(text):
    '''Parse a tree literal.

    Grammar: ``T ::= LABEL | LABEL(T) | LABEL(T,T)`` with possibly negative
    integer labels. The one-child form is a left child, the two-child form
    lists the smaller (left) child first.

    Parameters
    ----------
    text: str

    Returns
    -------
    tree: IncreasingTree or SignedIncreasingTree
        `IncreasingTree` if the labels are 1..n.

    Raises
    ------
    ParseError
        If `text` does not follow the grammar.
    TreeError
        If the tree is not an increasing 1-2 tree, or the two children of a
        node are listed larger first.

    See also
    --------
    tree_to_literal: Inverse operation.

    Examples
    --------
    >>> tree_from_literal('-8(-4(-3(6,9)),-1(2,5(7)))').pleaf
    6
    '''
    root = lowlevel.parse_literal(text)
    highlevel._argcheck_literal_order(root)
    return make_tree(root.label, lowlevel.parent_map(root))

def tree_to_literal(tree):
    '''Canonical literal of `tree` (left child = unique or smaller child).

    See also
    --------
    tree_from_literal: Inverse operation.
    '''
    return tree.to_literal()

def tree_from_dict(obj):
    '''Build a tree from its JSON object form
    ``{"label": int, "left": obj or null, "right": obj or null}``.

    Raises
    ------
    ParseError
        If a field is missing or a label is not an integer.
    TreeError
        If the tree is not an increasing 1-2 tree or is not in canonical
        orientation: a lone child given as ``right`` or two children listed
        larger first.
    '''
    root = lowlevel.node_from_dict(obj)
    highlevel._argcheck_literal_order(root)
    return make_tree(root.label, lowlevel.parent_map(root))

def tree_to_dict(tree):
    '''JSON object form of `tree` in canonical orientation.'''
    return tree.to_dict()

def inorder(tree):
    '''Word of the labels in inorder.'''
    return tree.inorder()

def minimal_path(tree):
    '''Labels of the path from the root following left children.'''
    return tree.minimal_path()

def pleaf(tree):
    '''Terminal leaf of the minimal path.'''
    return tree.pleaf

def maximal_path_from(tree, label):
    '''Labels of the chain from `label` following right children.

    Raises
    ------
    TreeError
        If `label` is not in `tree`.
    '''
    return tree.maximal_path_from(label)
