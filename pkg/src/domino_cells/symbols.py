"""Symbols of defect t and residue eps, and the shape calculus of induction.

Only the integer parts of symbol entries are stored; the residue is carried
once per symbol.  The bijections run

    rank-r partitions  ->  symbols of defect r+1  ->  bipartitions

and sign twisting is transposition, complementation and ``(d, f) -> (f^t, d^t)``
respectively.
"""
from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import partitions as P
from .partitions import Bipartition


@dataclass(frozen=True)
class WeightParams:
    a: int
    b: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise ValueError("weights must be positive")

    @property
    def s(self) -> Fraction:
        return Fraction(self.b, self.a)

    @property
    def integral(self) -> bool:
        return self.s.denominator == 1

    @property
    def r(self) -> int:
        s = self.s
        return s.numerator - 1 if self.integral else math.floor(s)

    @property
    def epsilon(self) -> Fraction:
        s = self.s
        return s - math.floor(s)

    @classmethod
    def from_s(cls, s) -> "WeightParams":
        s = Fraction(s)
        return cls(s.denominator, s.numerator)


@dataclass(frozen=True)
class Symbol:
    lam: tuple
    mu: tuple
    epsilon: Fraction = Fraction(0)

    def __post_init__(self):
        for row in (self.lam, self.mu):
            if any(x < 0 for x in row) or any(row[i] >= row[i + 1] for i in range(len(row) - 1)):
                raise ValueError(f"symbol rows must be strictly increasing and non-negative: {row}")
        object.__setattr__(self, "lam", tuple(self.lam))
        object.__setattr__(self, "mu", tuple(self.mu))
        object.__setattr__(self, "epsilon", Fraction(self.epsilon))

    @property
    def defect(self) -> int:
        return len(self.lam) - len(self.mu)

    def shift(self) -> "Symbol":
        """The elementary equivalence: prepend 0 to both rows and raise the rest by 1."""
        return Symbol((0,) + tuple(x + 1 for x in self.lam), (0,) + tuple(x + 1 for x in self.mu), self.epsilon)

    def top_entries(self) -> tuple:
        return tuple(x + self.epsilon for x in self.lam)

    def to_json(self) -> dict:
        return {"epsilon": str(self.epsilon), "top": list(self.lam), "bottom": list(self.mu)}

    @classmethod
    def from_json(cls, obj) -> "Symbol":
        return cls(tuple(obj["top"]), tuple(obj["bottom"]), Fraction(obj.get("epsilon", "0")))

    def __str__(self) -> str:
        top = " ".join(_mixed(x) for x in self.top_entries())
        return f"({top} / {' '.join(str(x) for x in self.mu)})"


def _mixed(x: Fraction) -> str:
    x = Fraction(x)
    whole, frac = divmod(x, 1)
    if frac == 0:
        return str(whole)
    return f"{frac}" if whole == 0 else f"{whole}+{frac}"


def normalize_symbol(sym: Symbol) -> Symbol:
    lam, mu = sym.lam, sym.mu
    while lam and mu and lam[0] == 0 and mu[0] == 0:
        lam = tuple(x - 1 for x in lam[1:])
        mu = tuple(x - 1 for x in mu[1:])
    return Symbol(lam, mu, sym.epsilon)


def symbols_equivalent(s1: Symbol, s2: Symbol) -> bool:
    return normalize_symbol(s1) == normalize_symbol(s2)


def partition_to_symbol(p: tuple, epsilon=Fraction(0)) -> Symbol:
    p = P.partition(p)
    r = P.rank(p)
    sharp = p + (0,) if r % 2 == len(p) % 2 else p
    beta = P.beta_numbers(sharp)
    lam = tuple(sorted(x // 2 for x in beta if x % 2 == 0))
    mu = tuple(sorted((x - 1) // 2 for x in beta if x % 2 == 1))
    sym = Symbol(lam, mu, epsilon)
    assert sym.defect == r + 1, (p, sym)
    return sym


def symbol_to_partition(sym: Symbol) -> tuple:
    return P.from_beta_numbers([2 * x for x in sym.lam] + [2 * x + 1 for x in sym.mu])


def symbol_to_bipartition(sym: Symbol) -> Bipartition:
    d = sorted((x - i for i, x in enumerate(sym.lam)), reverse=True)
    f = sorted((x - i for i, x in enumerate(sym.mu)), reverse=True)
    return Bipartition(P.partition(d), P.partition(f))


def bipartition_to_symbol(bp: Bipartition, defect: int, epsilon=Fraction(0)) -> Symbol:
    d, f = bp
    N = max(len(f), len(d) - defect, 0)
    d_up = sorted(P.pad(d, N + defect))
    f_up = sorted(P.pad(f, N))
    return Symbol(tuple(x + i for i, x in enumerate(d_up)), tuple(x + i for i, x in enumerate(f_up)), epsilon)


def partition_to_bipartition(p: tuple) -> Bipartition:
    return symbol_to_bipartition(partition_to_symbol(p))


def bipartition_to_partition(bp: Bipartition, r: int) -> tuple:
    return symbol_to_partition(bipartition_to_symbol(Bipartition(*bp), r + 1))


def sign_on_bipartition(bp: Bipartition) -> Bipartition:
    d, f = bp
    return Bipartition(P.transpose(f), P.transpose(d))


def sign_on_symbol(sym: Symbol) -> Symbol:
    entries = sym.lam + sym.mu
    tau = max(entries) if entries else 0
    full = set(range(tau + 1))
    top = tuple(sorted(full - {tau - x for x in sym.mu}))
    bottom = tuple(sorted(full - {tau - x for x in sym.lam}))
    return Symbol(top, bottom, sym.epsilon)


# --- truncated induction ------------------------------------------------------

def induction_is_reducible(p: tuple, l: int, wp: WeightParams) -> bool:
    q = P.pad(p, l + 1)
    return wp.epsilon == 0 and q[l - 1] == q[l] and (q[l - 1] + wp.r - l) % 2 == 0


def truncated_induction_shapes(p: tuple, l: int, wp: WeightParams) -> list:
    """Shapes of the induced module from ``W_m x S_l`` with sign on the ``S_l`` factor."""
    if l < 1:
        raise ValueError("l must be positive")
    if P.rank(p) != wp.r:
        raise ValueError(f"partition {p} does not have rank {wp.r}")
    q = list(P.pad(p, l + 1))
    first = [x + 2 for x in q[:l]] + q[l:]
    out = [P.partition(first)]
    if induction_is_reducible(p, l, wp):
        second = [x + 2 for x in q[: l - 1]] + [q[l - 1] + 1, q[l] + 1] + q[l + 1:]
        out.append(P.partition(second))
    return out


def induced_shape_set(shapes, l: int, wp: WeightParams) -> frozenset:
    out = set()
    for p in shapes:
        out.update(truncated_induction_shapes(p, l, wp))
    return frozenset(out)


def _canonical(multiset) -> tuple:
    return tuple(sorted(multiset, reverse=True))


@lru_cache(maxsize=None)
def _constructible(n: int, r: int, eps_zero: bool) -> frozenset:
    wp = WeightParams(1, r + 1) if eps_zero else WeightParams(2, 2 * r + 1)
    if n == 0:
        return frozenset({(P.staircase(r),)})
    found = set()
    for m in range(n):
        l = n - m
        for E in _constructible(m, r, eps_zero):
            induced = Counter()
            for p in E:
                induced.update(truncated_induction_shapes(p, l, wp))
            found.add(_canonical(induced.elements()))
    found |= {_canonical(P.transpose(p) for p in E) for E in found}
    return frozenset(found)


def constructible_set(n: int, wp: WeightParams) -> frozenset:
    """Constructible modules of W_n as sorted tuples (multisets) of rank-r shapes."""
    return _constructible(n, wp.r, wp.epsilon == 0)


def dumps(sym: Symbol) -> str:
    return json.dumps(sym.to_json())
