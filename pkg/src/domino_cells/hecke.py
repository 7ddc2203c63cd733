"""Generic Iwahori-Hecke algebra of type B_n with weights ``L(t)=b, L(s_i)=a``.

Elements are expanded in the standard basis ``T_x``.  Internally an element
is a dict ``{group index: LaurentPolynomial}`` over :class:`WeylGroupB`; the
public :class:`HeckeElement` keys terms by :class:`SignedPermutation`.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .laurent import ONE, LaurentPolynomial, v
from .symbols import WeightParams
from .weyl import SignedPermutation, WeylGroupB, weyl_group


class WeightFunction(WeightParams):
    """Positive weight function; ``L(w) = a*ell_s(w) + b*ell_t(w)``."""

    def generator_weight(self, s: int) -> int:
        return self.b if s == 0 else self.a

    def L(self, w: SignedPermutation) -> int:
        from .weyl import length_stats

        _, nt, ns = length_stats(w)
        return self.a * ns + self.b * nt

    def params(self) -> WeightParams:
        return WeightParams(self.a, self.b)


def as_weight(wf) -> WeightFunction:
    if isinstance(wf, WeightFunction):
        return wf
    if isinstance(wf, WeightParams):
        return WeightFunction(wf.a, wf.b)
    a, b = wf
    return WeightFunction(a, b)


def _add_into(acc: dict, key, poly: LaurentPolynomial) -> None:
    cur = acc.get(key)
    total = poly if cur is None else cur + poly
    if total:
        acc[key] = total
    else:
        acc.pop(key, None)


def quadratic_coefficient(wf: WeightFunction, s: int) -> LaurentPolynomial:
    """``v_s - v_s^{-1}``."""
    L = wf.generator_weight(s)
    return v(L) - v(-L)


def left_mul_generator(vec: dict, s: int, W: WeylGroupB, wf: WeightFunction) -> dict:
    """``T_s * vec`` for ``vec`` in the T-basis."""
    q = quadratic_coefficient(wf, s)
    out: dict = {}
    lmul = W.lmul[s]
    length = W.length
    for y, c in vec.items():
        sy = lmul[y]
        _add_into(out, sy, c)
        if length[sy] < length[y]:
            _add_into(out, y, c * q)
    return out


def t_basis_product(vec1: dict, vec2: dict, W: WeylGroupB, wf: WeightFunction) -> dict:
    out: dict = {}
    for x, c in vec1.items():
        term = vec2
        for s in reversed(W.reduced_word(x)):
            term = left_mul_generator(term, s, W, wf)
        for z, d in term.items():
            _add_into(out, z, c * d)
    return out


@lru_cache(maxsize=None)
def _bar_tables(n: int, a: int, b: int) -> dict:
    return {}


def bar_of_basis(x: int, W: WeylGroupB, wf: WeightFunction) -> dict:
    """``bar(T_x) = T_{x^{-1}}^{-1}``, by induction on length."""
    memo = _bar_tables(W.n, wf.a, wf.b)
    if x in memo:
        return memo[x]
    if x == 0:
        result = {0: ONE}
    else:
        s = W.left_descent(x)
        rest = bar_of_basis(W.lmul[s][x], W, wf)
        # bar(T_s) = T_s^{-1} = T_s - (v_s - v_s^{-1})
        q = quadratic_coefficient(wf, s)
        result = left_mul_generator(rest, s, W, wf)
        for y, c in rest.items():
            _add_into(result, y, -(c * q))
    memo[x] = result
    return result


def bar_vector(vec: dict, W: WeylGroupB, wf: WeightFunction) -> dict:
    out: dict = {}
    for x, c in vec.items():
        cb = c.bar()
        for y, d in bar_of_basis(x, W, wf).items():
            _add_into(out, y, cb * d)
    return out


@dataclass(frozen=True)
class HeckeElement:
    n: int
    terms: tuple  # sorted ((SignedPermutation, LaurentPolynomial), ...)

    @classmethod
    def from_dict(cls, n: int, terms: dict) -> "HeckeElement":
        items = tuple(sorted(((w, p) for w, p in terms.items() if p), key=lambda t: t[0].window))
        return cls(n, items)

    @classmethod
    def basis(cls, w: SignedPermutation, coeff: LaurentPolynomial = ONE) -> "HeckeElement":
        return cls.from_dict(w.n, {w: coeff})

    def as_dict(self) -> dict:
        return dict(self.terms)

    def coefficient(self, w: SignedPermutation) -> LaurentPolynomial:
        return self.as_dict().get(w, LaurentPolynomial())

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        out = self.as_dict()
        for w, p in other.terms:
            _add_into(out, w, p)
        return HeckeElement.from_dict(self.n, out)

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + HeckeElement.from_dict(other.n, {w: -p for w, p in other.terms})

    def scale(self, c: LaurentPolynomial) -> "HeckeElement":
        return HeckeElement.from_dict(self.n, {w: p * c for w, p in self.terms})

    def to_index(self) -> dict:
        W = weyl_group(self.n)
        return {W.index[w]: p for w, p in self.terms}

    @classmethod
    def from_index(cls, n: int, vec: dict) -> "HeckeElement":
        W = weyl_group(n)
        return cls.from_dict(n, {W.elements[i]: p for i, p in vec.items()})

    def specialize(self) -> dict:
        """Value at ``v = 1``: a group-algebra element ``{w: integer}``."""
        return {w: p.evaluate(1) for w, p in self.terms if p.evaluate(1)}


def t_multiply(h1: HeckeElement, h2: HeckeElement, wf) -> HeckeElement:
    if h1.n != h2.n:
        raise ValueError("size mismatch")
    wf = as_weight(wf)
    W = weyl_group(h1.n)
    return HeckeElement.from_index(h1.n, t_basis_product(h1.to_index(), h2.to_index(), W, wf))


def bar(h: HeckeElement, wf) -> HeckeElement:
    wf = as_weight(wf)
    W = weyl_group(h.n)
    return HeckeElement.from_index(h.n, bar_vector(h.to_index(), W, wf))
