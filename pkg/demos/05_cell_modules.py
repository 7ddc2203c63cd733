#!/usr/bin/env python3
# coding: utf-8

# # What the cell modules are
#
# Each left cell gives a W_n-module at v = 1.  Its character splits into
# irreducibles labelled by bipartitions, and those match the shapes of the
# tableaux in the cell.

# In[1]:

from domino_cells import characters as ch
from domino_cells import kl
from domino_cells.cells import combinatorial_cells, verify_hom_dims, verify_module_structure
from domino_cells.symbols import bipartition_to_partition

print(ch.character_table(2).to_csv())


# In[2]:

n, a, b = 3, 1, 2
table = kl.kl_basis(n, (a, b))
CT = ch.character_table(n)
for block in kl.cells(table).blocks:
    chi = ch.module_character(kl.cell_module_matrices(table, block), n)
    parts = ch.decompose(chi, CT)
    print(min(block), len(block), [bipartition_to_partition(bp, 1) for bp in parts])


# The same thing as a report, plus the hom dimensions between cells.

# In[3]:

rep = verify_module_structure(n, (a, b))
print(rep.modules["pass"])
hom = verify_hom_dims(n, (a, b)).hom
for row in hom["hom"]:
    print(row)
print(hom["involutions"], hom["total"])


# Reducible combinatorial cells and their shapes at rank 1.

# In[4]:

for c in combinatorial_cells(3, 1, "reducible"):
    print(len(c.members), c.shapes())
