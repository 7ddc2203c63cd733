#!/usr/bin/env python3
# coding: utf-8

# # Domino insertion
#
# A signed permutation is inserted letter by letter: positive letters enter
# the first row as horizontal dominoes and negative ones the first column as
# vertical dominoes.  The result is a pair of tableaux of the same shape.

# In[1]:

import json

from domino_cells.rs import g_r, g_r_inverse
from domino_cells.weyl import SignedPermutation, all_elements, longest_element

w = SignedPermutation.parse("2 -1 3")
for r in range(3):
    pair = g_r(w, r)
    print("rank", r)
    print(pair.left.render())
    print("--")
    print(pair.right.render())
    print()


# The trace keeps a snapshot per step.

# In[2]:

trace = []
g_r(w, 1, trace)
for step in trace:
    print(step["step"], step["letter"], json.dumps(step["recording"]["shape"]))


# The map is a bijection onto same-shape pairs, and the inverse undoes it.

# In[3]:

for r in range(3):
    pairs = {g_r(x, r) for x in all_elements(3)}
    print("rank", r, "distinct pairs", len(pairs))
print(all(g_r_inverse(g_r(x, 2)) == x for x in all_elements(3)))


# Multiplying by the longest element transposes the recording tableau.

# In[4]:

w0 = longest_element(3)
print(g_r(w * w0, 1).right == g_r(w, 1).right.transpose())
