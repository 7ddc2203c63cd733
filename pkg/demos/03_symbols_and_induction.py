#!/usr/bin/env python3
# coding: utf-8

# # Symbols, bipartitions and induced shapes
#
# Every rank-r partition has a symbol, and through it a bipartition.  The
# residue only shows up in how the top row is displayed.

# In[1]:

from fractions import Fraction

from domino_cells import partitions as P
from domino_cells.symbols import (
    WeightParams,
    bipartition_to_partition,
    constructible_set,
    partition_to_bipartition,
    partition_to_symbol,
    sign_on_bipartition,
    truncated_induction_shapes,
)

p = (4, 3, 2, 2)
sym = partition_to_symbol(p, Fraction(1, 2))
print(sym, sym.defect)
bp = partition_to_bipartition(p)
print(bp)


# Tensoring with sign is the transpose on partitions and (f^t, d^t) on
# bipartitions.

# In[2]:

print(P.transpose(p), partition_to_bipartition(P.transpose(p)), sign_on_bipartition(bp))
print(bipartition_to_partition(sign_on_bipartition(bp), 2))


# Truncated induction from W_m x S_l adds l dominoes.  When the parameter is
# integral and two parts meet the right way, a second shape appears.

# In[3]:

print(truncated_induction_shapes((4, 3, 2, 2, 2), 4, WeightParams(1, 3)))
print(truncated_induction_shapes((4, 3, 2, 2), 1, WeightParams(2, 5)))


# The constructible modules of W_3 at s = 2, as multisets of shapes.

# In[4]:

for E in sorted(constructible_set(3, WeightParams(1, 2))):
    print(" + ".join(P.fmt(q) for q in E))
