"""Characters of W_n: signed cycle types, the wreath Murnaghan-Nakayama rule,
traces of cell modules and decomposition into irreducibles.

Irreducibles are labelled by bipartitions ``(d, f)`` with ``((n), ())`` the
trivial character.  A rim hook removed from ``f`` for a negative cycle picks
up an extra sign, so ``((), (1^n))`` is the sign character.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import partitions as P
from .partitions import Bipartition
from .weyl import SignedPermutation, weyl_group

MAX_N = 8
_ENTRY_BOUND = 2 ** 40


@dataclass(frozen=True)
class ConjugacyClass:
    positive_type: tuple
    negative_type: tuple
    size: int
    representative_word: tuple

    @property
    def label(self) -> str:
        return f"{P.fmt(self.positive_type)};{P.fmt(self.negative_type)}"

    def representative(self, n: int) -> SignedPermutation:
        return class_representative(self.positive_type, self.negative_type, n)


def centralizer_order(pos: tuple, neg: tuple) -> int:
    out = 1
    for part in (pos, neg):
        for k in set(part):
            m = part.count(k)
            out *= (2 * k) ** m * math.factorial(m)
    return out


def class_representative(pos: tuple, neg: tuple, n: int) -> SignedPermutation:
    """Negative cycles first on consecutive letters, then positive ones."""
    window = [0] * n
    start = 1
    for parts, sign in ((neg, -1), (pos, 1)):
        for k in parts:
            for i in range(start, start + k - 1):
                window[i - 1] = i + 1
            window[start + k - 2] = sign * start
            start += k
    return SignedPermutation(tuple(window))


@lru_cache(maxsize=None)
def conjugacy_classes(n: int) -> tuple:
    """All signed cycle types, identity class first."""
    if n < 1:
        raise ValueError("n must be positive")
    W = weyl_group(n)
    order = 2 ** n * math.factorial(n)
    out = []
    types = sorted(P.enumerate_bipartitions(n), key=lambda t: t != ((1,) * n, ()))
    for pos, neg in types:
        w = class_representative(pos, neg, n)
        out.append(ConjugacyClass(pos, neg, order // centralizer_order(pos, neg), W.reduced_word(W.index[w])))
    return tuple(out)


def _remove_hooks(beta: tuple, k: int):
    """Yield ``(beta', sign)`` for each rim hook of length ``k``."""
    present = set(beta)
    for x in beta:
        y = x - k
        if y >= 0 and y not in present:
            height = sum(1 for z in beta if y < z < x)
            new = tuple(sorted((present - {x}) | {y}, reverse=True))
            yield new, -1 if height % 2 else 1


@lru_cache(maxsize=None)
def _mn(beta_d: tuple, beta_f: tuple, cycles: tuple) -> int:
    if not cycles:
        return 1
    (k, sign), rest = cycles[0], cycles[1:]
    total = 0
    for new, e in _remove_hooks(beta_d, k):
        total += e * _mn(new, beta_f, rest)
    for new, e in _remove_hooks(beta_f, k):
        total += e * sign * _mn(beta_d, new, rest)
    return total


def character_value(bp: Bipartition, pos: tuple, neg: tuple) -> int:
    d, f = bp
    cycles = tuple(sorted([(k, 1) for k in pos] + [(k, -1) for k in neg], reverse=True))
    return _mn(P.beta_numbers(d, len(d)), P.beta_numbers(f, len(f)), cycles)


@dataclass(frozen=True)
class CharacterTable:
    n: int
    classes: tuple
    labels: tuple  # bipartitions, row order
    values: np.ndarray  # rows x classes

    @property
    def rows(self) -> dict:
        return {bp: tuple(int(x) for x in row) for bp, row in zip(self.labels, self.values)}

    def row(self, bp) -> np.ndarray:
        return self.values[self.labels.index(Bipartition(*bp))]

    def degree(self, bp) -> int:
        return int(self.row(bp)[0])

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["class"] + [c.label for c in self.classes])
        w.writerow(["size"] + [c.size for c in self.classes])
        for bp, row in zip(self.labels, self.values):
            w.writerow([f"{P.fmt(bp[0])};{P.fmt(bp[1])}"] + [int(x) for x in row])
        return buf.getvalue()


@lru_cache(maxsize=None)
def character_table(n: int) -> CharacterTable:
    if n > MAX_N:
        raise ValueError(f"character tables are bounded at n={MAX_N}")
    classes = conjugacy_classes(n)
    labels = P.enumerate_bipartitions(n)
    vals = np.array(
        [[character_value(bp, c.positive_type, c.negative_type) for c in classes] for bp in labels],
        dtype=np.int64,
    )
    return CharacterTable(n, classes, tuple(Bipartition(*bp) for bp in labels), vals)


def degree(bp) -> int:
    d, f = bp
    n = sum(d) + sum(f)
    return math.comb(n, sum(d)) * P.count_standard_young(d) * P.count_standard_young(f)


# --- characters of modules --------------------------------------------------

class RelationError(ValueError):
    pass


def check_relations(mats: dict, n: int) -> None:
    mats = {s: np.asarray(m, dtype=np.int64) for s, m in mats.items()}
    k = mats[0].shape[0]
    I = np.eye(k, dtype=np.int64)
    for s in range(n):
        if not np.array_equal(mats[s] @ mats[s], I):
            raise RelationError(f"generator {s} does not square to 1")
    for s in range(n):
        for u in range(s + 1, n):
            m = 4 if s == 0 and u == 1 else 3 if u == s + 1 else 2
            prod = np.linalg.matrix_power(mats[s] @ mats[u], m)
            if not np.array_equal(prod, I):
                raise RelationError(f"braid relation fails for generators {s}, {u}")


def module_character(matrices: dict, n: int) -> np.ndarray:
    """Trace of each class representative on the module given by ``matrices``."""
    mats = {s: np.asarray(m, dtype=np.int64) for s, m in matrices.items()}
    if set(mats) != set(range(n)):
        raise ValueError("need one matrix per generator")
    check_relations(mats, n)
    k = mats[0].shape[0]
    out = []
    for c in conjugacy_classes(n):
        M = np.eye(k, dtype=np.int64)
        for s in c.representative_word:
            M = M @ mats[s]
            if k and np.abs(M).max() > _ENTRY_BOUND:
                raise OverflowError("matrix entries grew beyond the safe bound")
        out.append(int(np.trace(M)))
    return np.array(out, dtype=np.int64)


def inner_product(chi, psi, n: int) -> Fraction:
    classes = conjugacy_classes(n)
    total = sum(c.size * int(a) * int(b) for c, a, b in zip(classes, chi, psi))
    return Fraction(total, 2 ** n * math.factorial(n))


def decompose(chi, table: CharacterTable) -> dict:
    """``{bipartition: multiplicity}`` for nonzero multiplicities."""
    out = {}
    for bp, row in zip(table.labels, table.values):
        m = inner_product(chi, row, table.n)
        if m.denominator != 1 or m < 0:
            raise ValueError(f"not a character: multiplicity {m} at {bp}")
        if m:
            out[bp] = int(m)
    return out
