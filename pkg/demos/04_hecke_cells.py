#!/usr/bin/env python3
# coding: utf-8

# # Kazhdan-Lusztig cells with unequal parameters
#
# The weights are L(t) = b and L(s_i) = a.  Everything is exact: polynomials
# in v with integer coefficients.

# In[1]:

from fractions import Fraction

from domino_cells.cells import cells_for_weight, verify_conjecture
from domino_cells.kl import asymptotic_data, cells, check_properties, h_constants, kl_basis
from domino_cells.weyl import SignedPermutation

table = kl_basis(2, (1, 2))
for w in table.group.elements:
    terms = ", ".join(f"{y}: {c}" for y, c in table.c_basis(w).items())
    print(f"C[{w}] = {{{terms}}}")


# A structure constant.

# In[2]:

t = SignedPermutation((-1, 2))
print(h_constants(table, t, t))


# Left cells, compared with the combinatorial cells picked out by s = b/a.

# In[3]:

for a, b in [(2, 1), (1, 1), (2, 3), (1, 2), (1, 3)]:
    table = kl_basis(3, (a, b))
    left = cells(table, "left")
    comb = cells_for_weight(3, (a, b))
    rep = verify_conjecture(3, (a, b))
    print(f"s={Fraction(b, a)}: {len(left.blocks)} left cells, {len(comb)} combinatorial, match={rep.conjecture['pass']}")


# The a-function, the Duflo involutions and the property checks.

# In[4]:

table = kl_basis(2, (1, 1))
data = asymptotic_data(table)
print({str(w): a for w, a in data.a_val.items()})
print(sorted(str(d) for d in data.duflo))
print({k: v["pass"] for k, v in check_properties(table, data=data).items()})
