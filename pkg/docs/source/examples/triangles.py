#!/usr/bin/env python
#-*- coding:utf-8 -*-

import entringer as en

# The first rows of both triangles
entringer = en.entringer_table(8)
arnold = en.arnold_table(6)
print(entringer.to_text())
print(arnold.to_boustrophedon(1))

# Every family of the Entringer row n=5 has E(5, k) members with statistic k
for tag in ('alt', 'tree', 'andre'):
    counts = [en.count_family(tag, 5, k) for k in entringer.ks(5)]
    print(tag, counts, [entringer[5, k] for k in entringer.ks(5)])

# Simsun permutations of [4] ending with k-1 are counted by E(5, k) too
print([en.count_family('simsun', 4, k - 1) for k in range(2, 6)])

# Arnold numbers and their families
for tag in ('alt-b', 'tree-b', 'andre-b'):
    print(tag, [en.count_family(tag, 4, k) for k in arnold.ks(4)])
