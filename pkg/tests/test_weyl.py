import random
from itertools import combinations

import pytest

from domino_cells.weyl import (
    SignedPermutation,
    all_elements,
    bruhat_leq,
    cayley_distances,
    compose,
    generator,
    length_stats,
    longest_element,
    weyl_group,
)


def sp(*w):
    return SignedPermutation(w)


def test_rejects_bad_windows():
    with pytest.raises(ValueError):
        sp(1, 1)
    with pytest.raises(ValueError):
        sp(0)


def test_parse_and_str():
    w = SignedPermutation.parse("-3 1 -2")
    assert w.window == (-3, 1, -2)
    assert str(w) == "-3 1 -2"
    assert SignedPermutation.parse("").n == 0


def test_inverse_and_identity():
    for w in all_elements(3):
        assert w * w.inverse() == SignedPermutation.identity(3)
        assert w.inverse() * w == SignedPermutation.identity(3)
    assert sp(-1) * sp(-1) == sp(1)


def test_compose_size_mismatch():
    with pytest.raises(ValueError):
        compose(sp(1), sp(1, 2))


def test_compose_is_associative():
    rng = random.Random(7)
    elems = list(all_elements(3))
    for _ in range(200):
        x, y, z = rng.choice(elems), rng.choice(elems), rng.choice(elems)
        assert (x * y) * z == x * (y * z)


def test_generators_close_up_to_the_group():
    for n in range(1, 5):
        assert len(cayley_distances(n)) == 2 ** n * [1, 1, 2, 6, 24][n]


def test_length_stats_examples():
    assert length_stats(SignedPermutation.identity(3)) == (0, 0, 0)
    assert length_stats(sp(-1)) == (1, 1, 0)
    assert length_stats(longest_element(2)) == (4, 2, 2)
    assert longest_element(1) == sp(-1)
    assert longest_element(3) * longest_element(3) == SignedPermutation.identity(3)


def test_length_stats_match_breadth_first_search():
    for n in range(1, 5):
        for w, (ell, nt) in cayley_distances(n).items():
            assert length_stats(w) == (ell, nt, ell - nt)


def test_longest_element_maximises_length():
    for n in range(1, 5):
        W = weyl_group(n)
        assert max(W.length) == W.length[W.index[longest_element(n)]] == n * n


def test_reduced_words_multiply_back():
    W = weyl_group(3)
    for x, w in enumerate(W.elements):
        word = W.reduced_word(x)
        assert len(word) == W.length[x]
        prod = SignedPermutation.identity(3)
        for s in word:
            prod = prod * generator(s, 3)
        assert prod == w
        assert W.weight(x, 2, 3) == 2 * W.length_s[x] + 3 * W.length_t[x]


def _subword_bruhat(W):
    """Bruhat order by the subword property on one reduced word per element."""
    gens = W.generators
    below = {}
    for x, w in enumerate(W.elements):
        word = W.reduced_word(x)
        found = set()
        for k in range(len(word) + 1):
            for idx in combinations(range(len(word)), k):
                prod = SignedPermutation.identity(W.n)
                for i in idx:
                    prod = prod * gens[word[i]]
                found.add(prod)
        below[w] = found
    return below


@pytest.mark.parametrize("n", [1, 2, 3])
def test_bruhat_matches_subword_property(n):
    W = weyl_group(n)
    below = _subword_bruhat(W)
    for x in W.elements:
        for y in W.elements:
            assert bruhat_leq(y, x) == (y in below[x])


def test_bruhat_relation_count_w2():
    W = weyl_group(2)
    count = sum(1 for x in W.elements for y in W.elements if bruhat_leq(y, x))
    # dihedral of order 8: everything strictly shorter lies below, 8 + 2 + 6 + 10 + 7
    assert count == 33


def test_bruhat_basic_properties():
    W = weyl_group(3)
    e = W.elements[0]
    for x in W.elements:
        assert bruhat_leq(x, x)
        assert bruhat_leq(e, x)
        for y in W.elements:
            if y != x and bruhat_leq(y, x):
                assert length_stats(y)[0] < length_stats(x)[0]
                assert not bruhat_leq(x, y)
