#!/usr/bin/env python3
# coding: utf-8

# # Domino tableaux, cycles and moving through
#
# A partition has a rank: strip dominoes until nothing more comes off and
# what is left is a staircase (r, r-1, ..., 1).

# In[1]:

from domino_cells import partitions as P
from domino_cells.tableaux import (
    cycles,
    enumerate_all_tableaux,
    enumerate_tableaux,
    move_through,
    open_cycles,
    representing_set,
)

print(P.rank_and_core((4, 3, 3, 1)))
print(P.enumerate_rank_partitions(2, 1))


# Standard domino tableaux of a shape. The core is drawn with dots.

# In[2]:

for T in enumerate_tableaux((4, 3, 2), 1):
    print(T.render())
    print()


# Each tableau splits its labels into cycles. Open cycles trade one boundary
# square for another when you move through them; core-open ones would leave
# the rank, so they are never moved.

# In[3]:

T = max(enumerate_all_tableaux(6, 0), key=lambda T: len(open_cycles(T)))
print(T.render())
for c in cycles(T):
    print(sorted(c.labels), c.kind, "core" if c.core_open else "", c.s_b, c.s_f)


# Moving through one cycle, then through the matching cycle of the image,
# gets the original back.

# In[4]:

c = open_cycles(T)[0]
U = move_through(T, c)
print(U.render())
back = next(d for d in cycles(U) if d.labels == c.labels)
print(move_through(U, back) == T)


# All subsets of the open cycles give the representing set, one shape each.

# In[5]:

for V in sorted(representing_set(T), key=lambda V: V.shape, reverse=True):
    print(P.fmt(V.shape))
