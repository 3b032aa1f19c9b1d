#!/usr/bin/env python
#-*- coding:utf-8 -*-

import entringer as en

# An alternating permutation starting with 7
p = en.Permutation('748591623')

# The grafting construction, step by step
tree, trace = en.psi_c(p)
print(trace)
assert tree.pleaf == p.first

# The same tree from the recursive construction
assert en.psi_b(p) == tree

# Reverse inorder reading gives an André permutation ending with 7, phi a
# Simsun permutation ending with 6
andre = en.omega(tree)
simsun = en.phi(andre)
print(andre, simsun)
assert en.chuang_phi(tree) == simsun

# Both sides carry the same cd-word
print(en.reduced_variation_andre(andre), en.reduced_variation_simsun(simsun))

# Signed version: the tree keeps the first entry as its pleaf
q = en.SignedPermutation('6-39-82-17-45')
signed_tree = en.psi_signed(q)
print(signed_tree, en.omega_signed(signed_tree))
