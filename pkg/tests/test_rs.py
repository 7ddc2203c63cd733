import pytest

from domino_cells import partitions as P
from domino_cells.rs import TableauPair, g_r, g_r_inverse, left_tableau, right_tableau
from domino_cells.tableaux import DominoTableau, count_tableaux, validate
from domino_cells.weyl import SignedPermutation, all_elements, longest_element


def sp(*w):
    return SignedPermutation(w)


def test_empty_window_gives_the_core():
    for r in range(4):
        pair = g_r(SignedPermutation(()), r)
        assert pair.left == pair.right == DominoTableau.core_only(r)
        assert g_r_inverse(pair) == SignedPermutation(())


def test_two_positive_letters():
    pair = g_r(sp(1, 2), 0)
    expected = {1: ((1, 1), (1, 2)), 2: ((1, 3), (1, 4))}
    assert pair.left.dominoes == pair.right.dominoes == expected


def test_negative_letter_is_vertical():
    pair = g_r(sp(-1), 0)
    assert pair.left.dominoes == pair.right.dominoes == {1: ((1, 1), (2, 1))}


def test_positive_letter_next_to_a_core():
    pair = g_r(sp(1), 2)
    assert pair.right.dominoes == {1: ((1, 3), (1, 4))}
    assert pair.left.shape == (4, 1)


def test_pair_rejects_shape_mismatch():
    a = g_r(sp(1), 0).left
    b = g_r(sp(-1), 0).left
    with pytest.raises(ValueError):
        TableauPair(a, b)


def test_inverse_rejects_invalid_pairs():
    bad = DominoTableau(0, [[2, 2, 1, 1]])
    with pytest.raises(ValueError):
        g_r_inverse(TableauPair(bad, bad))


@pytest.mark.parametrize("n", range(1, 6))
def test_bijectivity(n):
    order = 2 ** n * [1, 1, 2, 6, 24, 120][n]
    for r in range(5):
        pairs = {g_r(w, r) for w in all_elements(n)}
        assert len(pairs) == order
        assert sum(count_tableaux(p) ** 2 for p in P.enumerate_rank_partitions(n, r)) == order
        for pair in pairs:
            assert validate(pair.left) and validate(pair.right)
            assert pair.left.rank == r and P.rank(pair.shape) == r


def test_inverse_roundtrip():
    for n in range(5):
        elems = all_elements(n) if n else [SignedPermutation(())]
        for r in range(4):
            for w in elems:
                assert g_r_inverse(g_r(w, r)) == w


def test_inverse_element_swaps_the_tableaux():
    for r in range(4):
        for w in all_elements(4):
            pair = g_r(w, r)
            assert g_r(w.inverse(), r) == TableauPair(pair.right, pair.left)


def test_longest_element_transposes_the_right_tableau():
    w0 = longest_element(4)
    for r in range(3):
        for w in all_elements(4):
            assert right_tableau(w * w0, r) == right_tableau(w, r).transpose()


def test_appending_a_decreasing_run_adds_first_row_dominoes():
    # w = (w', n, n-1, ..., m+1): the new labels sit at the ends of the first rows
    for r in range(3):
        for m in range(4):
            for ell in (1, 2):
                n = m + ell
                for w1 in (all_elements(m) if m else [SignedPermutation(())]):
                    w = SignedPermutation(w1.window + tuple(range(n, m, -1)))
                    doms = dict(right_tableau(w1, r).dominoes)
                    T = DominoTableau.from_dominoes(r, doms)
                    for k in range(1, ell + 1):
                        end = len(T.grid[k - 1]) if k <= len(T.grid) else 0
                        doms[m + k] = ((k, end + 1), (k, end + 2))
                        T = DominoTableau.from_dominoes(r, doms)
                    assert right_tableau(w, r) == T


def test_trace_records_every_step():
    trace = []
    pair = g_r(sp(2, -1, 3), 1, trace=trace)
    assert [t["step"] for t in trace] == [1, 2, 3]
    assert [t["letter"] for t in trace] == [2, -1, 3]
    assert DominoTableau.from_json(trace[-1]["recording"]) == pair.right
    assert DominoTableau.from_json(trace[-1]["insertion"]) == pair.left
    assert left_tableau(sp(2, -1, 3), 1) == pair.left
