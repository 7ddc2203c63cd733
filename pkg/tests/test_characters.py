from fractions import Fraction
from math import comb

import numpy as np
import pytest

from domino_cells import partitions as P
from domino_cells.characters import (
    RelationError,
    character_table,
    check_relations,
    class_representative,
    conjugacy_classes,
    decompose,
    degree,
    inner_product,
    module_character,
)
from domino_cells.kl import cell_module_matrices, cells, kl_basis
from domino_cells.partitions import Bipartition
from domino_cells.symbols import bipartition_to_partition
from domino_cells.tableaux import count_tableaux
from domino_cells.weyl import SignedPermutation, all_elements, generator, length_stats

ORDER = {1: 2, 2: 8, 3: 48, 4: 384, 5: 3840, 6: 46080}


def natural_matrix(w):
    n = w.n
    M = np.zeros((n, n), dtype=np.int64)
    for i, x in enumerate(w.window):
        M[abs(x) - 1, i] = 1 if x > 0 else -1
    return M


def brute_force_classes(n):
    elems = list(all_elements(n))
    seen, out = set(), []
    for w in elems:
        if w in seen:
            continue
        orbit = {g * w * g.inverse() for g in elems}
        seen |= orbit
        out.append(orbit)
    return out


def test_class_counts_and_sizes():
    assert [c.size for c in conjugacy_classes(1)] == [1, 1]
    assert len(conjugacy_classes(2)) == 5
    for n in range(1, 6):
        classes = conjugacy_classes(n)
        assert sum(c.size for c in classes) == ORDER[n]
        assert classes[0].positive_type == (1,) * n and classes[0].negative_type == ()
        assert len(classes) == len(P.enumerate_bipartitions(n))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_classes_against_brute_force(n):
    orbits = brute_force_classes(n)
    classes = conjugacy_classes(n)
    assert sorted(len(o) for o in orbits) == sorted(c.size for c in classes)
    for c in classes:
        rep = c.representative(n)
        assert rep == class_representative(c.positive_type, c.negative_type, n)
        orbit = next(o for o in orbits if rep in o)
        assert len(orbit) == c.size
        word = SignedPermutation.identity(n)
        for s in c.representative_word:
            word = word * generator(s, n)
        assert word in orbit


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_orthogonality_and_degrees(n):
    t = character_table(n)
    sizes = np.array([c.size for c in t.classes], dtype=object)
    X = t.values.astype(object)
    assert (X @ np.diag(sizes) @ X.T == ORDER[n] * np.eye(len(t.labels), dtype=object)).all()
    for j, c in enumerate(t.classes):
        col = X[:, j]
        assert col @ col * c.size == ORDER[n]
    assert sum(t.degree(bp) ** 2 for bp in t.labels) == ORDER[n]
    assert (X[:, 0] > 0).all()


def test_trivial_and_sign_rows():
    for n in range(1, 6):
        t = character_table(n)
        assert (t.row(Bipartition((n,), ())) == 1).all()
        sign = [(-1) ** length_stats(c.representative(n))[0] for c in t.classes]
        assert list(t.row(Bipartition((), (1,) * n))) == sign


def test_natural_representation():
    for n in range(1, 6):
        t = character_table(n)
        values = [int(np.trace(natural_matrix(c.representative(n)))) for c in t.classes]
        assert list(t.row(Bipartition(P.partition((n - 1,)), (1,)))) == values


def test_degree_formula_and_tableau_counts():
    assert degree(Bipartition((1, 1, 1), (1,))) == 4
    for n in range(1, 7):
        t = character_table(n) if n <= 5 else None
        for bp in P.enumerate_bipartitions(n):
            d, f = bp
            expected = comb(n, sum(d)) * P.count_standard_young(d) * P.count_standard_young(f)
            assert degree(bp) == expected
            if t is not None:
                assert t.degree(bp) == expected
            for r in range(4):
                assert count_tableaux(bipartition_to_partition(bp, r)) == expected


def test_regular_and_trivial_decompositions():
    for n in range(1, 5):
        t = character_table(n)
        regular = np.zeros(len(t.classes), dtype=np.int64)
        regular[0] = ORDER[n]
        assert decompose(regular, t) == {bp: t.degree(bp) for bp in t.labels}
        assert decompose(t.row(Bipartition((n,), ())), t) == {Bipartition((n,), ()): 1}


def test_decompose_rejects_non_characters():
    t = character_table(2)
    with pytest.raises(ValueError):
        decompose(np.array([1, 0, 0, 0, 0]), t)
    with pytest.raises(ValueError):
        decompose(-t.row(Bipartition((2,), ())), t)
    assert inner_product(t.values[0], t.values[0], 2) == Fraction(1)


def test_cell_module_characters_at_rank_one():
    table = kl_basis(1, (1, 1))
    chi = module_character(cell_module_matrices(table, {SignedPermutation((-1,))}), 1)
    assert list(chi) == [1, -1]
    assert decompose(chi, character_table(1)) == {Bipartition((), (1,)): 1}


def test_sum_of_cell_modules_is_regular():
    for wf in ((1, 1), (1, 2), (2, 5)):
        table = kl_basis(3, wf)
        total = sum(module_character(cell_module_matrices(table, b), 3) for b in cells(table).blocks)
        assert total[0] == 48 and not total[1:].any()


def test_relation_check_catches_bad_matrices():
    good = {0: [[-1]], 1: [[1]]}
    check_relations(good, 2)
    with pytest.raises(RelationError):
        check_relations({0: [[2]], 1: [[1]]}, 2)
    # two reflections of order-3 product satisfy the quadratic relations but not (ts)^4 = 1
    with pytest.raises(RelationError):
        check_relations({0: [[-1, 1], [0, 1]], 1: [[1, 0], [1, -1]]}, 2)


def test_csv_export():
    text = character_table(2).to_csv().splitlines()
    assert text[0].startswith("class,")
    assert text[1] == "size,1,2,2,2,1"
    assert text[2] == "(2);(),1,1,1,1,1"
    assert len(text) == 2 + 5
