import random

import pytest

from domino_cells.hecke import HeckeElement, WeightFunction, as_weight, bar, t_multiply
from domino_cells.laurent import ONE, LaurentPolynomial, v
from domino_cells.symbols import WeightParams
from domino_cells.weyl import SignedPermutation, all_elements, generator, length_stats

WEIGHTS = [(1, 1), (2, 1), (1, 2), (2, 3)]


def T(w, coeff=ONE):
    return HeckeElement.basis(w, coeff)


def random_element(rng, elems, k=3):
    out = T(rng.choice(elems), LaurentPolynomial({rng.randint(-2, 2): rng.randint(1, 3)}))
    for _ in range(k - 1):
        out = out + T(rng.choice(elems), LaurentPolynomial({rng.randint(-2, 2): rng.randint(-3, 3)}))
    return out


def test_weight_function():
    wf = WeightFunction(2, 3)
    assert wf.generator_weight(0) == 3 and wf.generator_weight(1) == 2
    assert wf.L(SignedPermutation((-1, -2))) == 2 * 2 + 3 * 2
    assert wf.params() == WeightParams(2, 3)
    assert as_weight((2, 3)) == wf and as_weight(WeightParams(2, 3)) == wf


@pytest.mark.parametrize("a, b", WEIGHTS)
def test_quadratic_relation(a, b):
    t = generator(0, 1)
    e = SignedPermutation.identity(1)
    assert t_multiply(T(t), T(t), (a, b)) == T(e) + T(t, v(b) - v(-b))
    s = generator(1, 2)
    assert t_multiply(T(s), T(s), (a, b)) == T(s * s) + T(s, v(a) - v(-a))


def test_identity_is_neutral():
    rng = random.Random(1)
    elems = list(all_elements(3))
    e = T(SignedPermutation.identity(3))
    for _ in range(20):
        h = random_element(rng, elems)
        assert t_multiply(e, h, (1, 2)) == h == t_multiply(h, e, (1, 2))


def test_length_additive_products_are_basis_elements():
    elems = list(all_elements(3))
    for x in elems:
        for y in elems:
            if length_stats(x * y)[0] == length_stats(x)[0] + length_stats(y)[0]:
                assert t_multiply(T(x), T(y), (2, 3)) == T(x * y)


@pytest.mark.parametrize("a, b", WEIGHTS)
def test_associativity(a, b):
    rng = random.Random(a * 10 + b)
    elems = list(all_elements(3))
    for _ in range(125):
        x, y, z = (T(rng.choice(elems)) for _ in range(3))
        assert t_multiply(t_multiply(x, y, (a, b)), z, (a, b)) == t_multiply(x, t_multiply(y, z, (a, b)), (a, b))


def test_bar_examples():
    t = generator(0, 1)
    e = SignedPermutation.identity(1)
    assert bar(T(e), (1, 3)) == T(e)
    assert bar(T(t), (1, 3)) == T(t) - T(e, v(3) - v(-3))
    # C_t = T_t + v^-b T_e is fixed by the involution
    ct = T(t) + T(e, v(-3))
    assert bar(ct, (1, 3)) == ct


@pytest.mark.parametrize("a, b", WEIGHTS)
def test_bar_is_a_multiplicative_involution(a, b):
    rng = random.Random(b * 10 + a)
    elems = list(all_elements(2))
    for _ in range(50):
        x, y = random_element(rng, elems), random_element(rng, elems)
        assert bar(bar(x, (a, b)), (a, b)) == x
        assert bar(t_multiply(x, y, (a, b)), (a, b)) == t_multiply(bar(x, (a, b)), bar(y, (a, b)), (a, b))


def test_specialisation_gives_the_group_algebra():
    for n, sample in ((2, None), (3, 150)):
        elems = list(all_elements(n))
        pairs = [(x, y) for x in elems for y in elems]
        if sample:
            pairs = random.Random(n).sample(pairs, sample)
        for x, y in pairs:
            assert t_multiply(T(x), T(y), (2, 3)).specialize() == {x * y: 1}


def test_size_mismatch():
    with pytest.raises(ValueError):
        t_multiply(T(SignedPermutation((1,))), T(SignedPermutation((1, 2))), (1, 1))


def test_element_helpers():
    w = SignedPermutation((2, -1))
    h = T(w, v(2)) + T(w, -v(2))
    assert h.terms == ()
    h = T(w, v(1)).scale(v(-1))
    assert h.coefficient(w) == ONE and h.coefficient(SignedPermutation((1, 2))) == LaurentPolynomial()
    assert HeckeElement.from_index(2, h.to_index()) == h
