#!/usr/bin/env python
#-*- coding:utf-8 -*-

import re
import numbers

from ..errors import ParseError, TreeError


### Ordered binary view ###
class Node(object):
    '''A mutable node of an ordered binary tree.

    Nodes are the working representation of the tree algorithms: they may
    hold a right child without a left one or two children in either order.
    `highlevel` trees are built from them and re-derive the orientation from
    the labels.
    '''
    __slots__ = ('label', 'left', 'right')

    def __init__(self, label, left=None, right=None):
        self.label = label
        self.left = left
        self.right = right

    def __repr__(self):
        return 'Node({!r})'.format(node_to_literal(self))

    def children(self):
        return [child for child in (self.left, self.right) if child is not None]

    def is_leaf(self):
        return self.left is None and self.right is None


def iter_nodes(root):
    '''All nodes below and including `root`, preorder.'''
    stack = [root] if root is not None else []
    while stack:
        node = stack.pop()
        yield node
        if node.right is not None:
            stack.append(node.right)
        if node.left is not None:
            stack.append(node.left)

def inorder_labels(root):
    '''Labels in inorder: left subtree, node, right subtree.'''
    result = []
    stack = []
    node = root
    while stack or node is not None:
        while node is not None:
            stack.append(node)
            node = node.left
        node = stack.pop()
        result.append(node.label)
        node = node.right
    return result

def left_path(root):
    '''Nodes from `root` following left children to a node without one.'''
    path = [root]
    while path[-1].left is not None:
        path.append(path[-1].left)
    return path

def right_chain(node):
    '''Nodes from `node` following right children.'''
    chain = [node]
    while chain[-1].right is not None:
        chain.append(chain[-1].right)
    return chain

def copy_nodes(root):
    '''Deep copy of an ordered binary tree.'''
    if root is None:
        return None
    clone = Node(root.label)
    stack = [(root, clone)]
    while stack:
        node, copy = stack.pop()
        if node.left is not None:
            copy.left = Node(node.left.label)
            stack.append((node.left, copy.left))
        if node.right is not None:
            copy.right = Node(node.right.label)
            stack.append((node.right, copy.right))
    return clone

def relabel_nodes(root, mapping):
    '''Replace every label with ``mapping(label)`` in place.'''
    for node in iter_nodes(root):
        node.label = mapping(node.label)
    return root

def canonicalize(root):
    '''Reorder children in place: a unique child moves to the left, two
    children are ordered smaller first.
    '''
    for node in iter_nodes(root):
        if node.left is None and node.right is not None:
            node.left, node.right = node.right, None
        elif node.right is not None and node.left.label > node.right.label:
            node.left, node.right = node.right, node.left
    return root

def parent_map(root):
    '''Map child label -> parent label, raises TreeError on repeated labels.'''
    parents = {}
    seen = set()
    for node in iter_nodes(root):
        if node.label in seen:
            msg = 'label {} occurs more than once'
            raise TreeError(msg.format(node.label))
        seen.add(node.label)
        for child in node.children():
            parents[child.label] = node.label
    return parents


### Literal codec ###
_TOKEN = re.compile(r'-?\d+|[(),]|\S+')

def _tokenize(text):
    tokens = _TOKEN.findall(text)
    for token in tokens:
        if token not in '(),' and not re.match(r'^-?\d+$', token):
            msg = 'unexpected {!r} in tree literal {!r}'
            raise ParseError(msg.format(token, text))
    return tokens

def parse_literal(text):
    '''Parse ``T ::= LABEL | LABEL(T) | LABEL(T,T)`` into nodes.

    The one-child form is a left child, the two-child form lists left then
    right. Orientation is not checked here.

    Raises
    ------
    ParseError
        If `text` does not follow the grammar.
    '''
    if not isinstance(text, str):
        msg = 'parse_literal() str expected, got {}'
        raise TypeError(msg.format(type(text)))
    tokens = _tokenize(text)
    pos = 0

    def expect_label():
        nonlocal pos
        if pos >= len(tokens) or tokens[pos] in '(),':
            found = tokens[pos] if pos < len(tokens) else 'end of input'
            msg = 'label expected at token {} of {!r}, got {!r}'
            raise ParseError(msg.format(pos, text, found))
        pos += 1
        return int(tokens[pos - 1])

    def peek(token):
        return pos < len(tokens) and tokens[pos] == token

    # explicit stack of [node, children read so far] for every open '('
    root = None
    stack = []
    while True:
        node = Node(expect_label())
        if not stack:
            root = node
        elif stack[-1][1]:
            stack[-1][0].right = node
        else:
            stack[-1][0].left = node
        if stack:
            stack[-1][1] += 1
        if peek('('):
            pos += 1
            stack.append([node, 0])
            continue
        while stack and not (stack[-1][1] == 1 and peek(',')):
            if not peek(')'):
                msg = "')' expected at token {} of {!r}"
                raise ParseError(msg.format(pos, text))
            pos += 1
            stack.pop()
        if not stack:
            break
        pos += 1
    if pos != len(tokens):
        msg = 'trailing input after token {} of {!r}'
        raise ParseError(msg.format(pos, text))
    return root

def node_to_literal(root):
    '''Inverse of `parse_literal`. A lone right child prints like a left
    one, so non-canonical views lose their orientation.
    '''
    # iterative to stay clear of the recursion limit on long chains
    parts = []
    stack = [root]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            parts.append(item)
            continue
        parts.append(str(item.label))
        children = item.children()
        if not children:
            continue
        stack.append(')')
        for i, child in reversed(list(enumerate(children))):
            stack.append(child)
            if i:
                stack.append(',')
        stack.append('(')
    return ''.join(parts)


### JSON codec ###
def node_to_dict(root):
    '''Nested ``{'label', 'left', 'right'}`` objects, absent children None.'''
    if root is None:
        return None
    result = {'label': root.label, 'left': None, 'right': None}
    stack = [(root, result)]
    while stack:
        node, obj = stack.pop()
        for side in ('left', 'right'):
            child = getattr(node, side)
            if child is not None:
                obj[side] = {'label': child.label, 'left': None, 'right': None}
                stack.append((child, obj[side]))
    return result

def _node_from_fields(obj):
    if not isinstance(obj, dict) or 'label' not in obj:
        msg = "tree object with a 'label' field expected, got {!r}"
        raise ParseError(msg.format(obj))
    label = obj['label']
    if isinstance(label, bool) or not isinstance(label, numbers.Integral):
        msg = 'integer label expected, got {!r}'
        raise ParseError(msg.format(label))
    unknown = set(obj) - {'label', 'left', 'right'}
    if unknown:
        msg = 'unknown tree fields {}'
        raise ParseError(msg.format(sorted(unknown)))
    return Node(int(label))

def node_from_dict(obj):
    '''Inverse of `node_to_dict`.

    Raises
    ------
    ParseError
        If a field is missing or a label is not an integer.
    '''
    root = _node_from_fields(obj)
    stack = [(obj, root)]
    while stack:
        obj, node = stack.pop()
        for side in ('left', 'right'):
            child = obj.get(side)
            if child is not None:
                setattr(node, side, _node_from_fields(child))
                stack.append((child, getattr(node, side)))
    return root
