"""Partitions, 2-cores and bipartitions.

Partitions are plain tuples of positive integers in weakly decreasing order;
the empty tuple is the empty partition.  Squares of a Young diagram are
addressed 1-based as ``(row, column)``.
"""
from __future__ import annotations

import json
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple

Partition = tuple


class RankDecomposition(NamedTuple):
    rank: int
    core: tuple
    domino_count: int


class Bipartition(NamedTuple):
    d: tuple
    f: tuple

    @property
    def size(self) -> int:
        return sum(self.d) + sum(self.f)

    def to_json(self) -> dict:
        return {"d": list(self.d), "f": list(self.f)}

    @classmethod
    def from_json(cls, obj) -> "Bipartition":
        return cls(partition(obj["d"]), partition(obj["f"]))


def partition(parts: Iterable[int]) -> tuple:
    """Normalise ``parts`` to a partition: drop zeros, check monotonicity."""
    out = tuple(int(x) for x in parts if x != 0)
    if any(x < 0 for x in out):
        raise ValueError(f"negative part in {out}")
    if any(out[i] < out[i + 1] for i in range(len(out) - 1)):
        raise ValueError(f"parts not weakly decreasing: {out}")
    return out


def staircase(r: int) -> tuple:
    return tuple(range(r, 0, -1))


def transpose(p: tuple) -> tuple:
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > j) for j in range(p[0]))


def squares(p: tuple) -> Iterator[tuple]:
    for i, row in enumerate(p, start=1):
        for j in range(1, row + 1):
            yield (i, j)


def from_squares(cells: Iterable[tuple]) -> tuple:
    """Row lengths of a set of squares; raises if it is not a Young diagram."""
    cells = set(cells)
    rows: dict = {}
    for i, j in cells:
        rows[i] = rows.get(i, 0) + 1
    p = tuple(rows.get(i, 0) for i in range(1, len(rows) + 1))
    if set(squares(p)) != cells:
        raise ValueError("set of squares is not a Young diagram")
    return partition(p)


def beta_numbers(p: tuple, length: int | None = None) -> tuple:
    """First-column hook lengths of ``p`` padded with zeros to ``length`` parts."""
    k = len(p) if length is None else length
    if k < len(p):
        raise ValueError("length shorter than the partition")
    padded = tuple(p) + (0,) * (k - len(p))
    return tuple(padded[i] + k - 1 - i for i in range(k))


def from_beta_numbers(beta: Iterable[int]) -> tuple:
    b = sorted(beta, reverse=True)
    k = len(b)
    return partition(b[i] - (k - 1 - i) for i in range(k))


def two_core(p: tuple) -> tuple:
    """2-core via the two-runner abacus: slide every bead down its runner."""
    beta = beta_numbers(p)
    n_even = sum(1 for x in beta if x % 2 == 0)
    n_odd = len(beta) - n_even
    packed = [2 * i for i in range(n_even)] + [2 * i + 1 for i in range(n_odd)]
    return from_beta_numbers(packed)


def rank_and_core(p: tuple) -> RankDecomposition:
    core = two_core(p)
    r = core[0] if core else 0
    assert core == staircase(r), core
    return RankDecomposition(r, core, (sum(p) - sum(core)) // 2)


def rank(p: tuple) -> int:
    return rank_and_core(p).rank


def removable_dominoes(p: tuple) -> list:
    """All dominoes whose deletion from the diagram of ``p`` leaves a diagram."""
    out = []
    q = tuple(p) + (0, 0)
    for i in range(len(p)):
        row = i + 1
        if q[i] - 2 >= q[i + 1]:
            out.append(((row, q[i] - 1), (row, q[i])))
        if q[i] == q[i + 1] > q[i + 2]:
            out.append(((row, q[i]), (row + 1, q[i])))
    return out


def remove_squares(p: tuple, cells: Iterable[tuple]) -> tuple:
    return from_squares(set(squares(p)) - set(cells))


def core_by_deletion(p: tuple) -> tuple:
    """Greedy literal domino deletion; an independent route to the 2-core."""
    while True:
        doms = removable_dominoes(p)
        if not doms:
            return p
        p = remove_squares(p, doms[0])


@lru_cache(maxsize=None)
def partitions_of(n: int, max_part: int | None = None) -> tuple:
    """All partitions of ``n``, descending lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_rank_partitions(n: int, r: int) -> tuple:
    """P_r(n): partitions with 2-core the rank-``r`` staircase and ``n`` dominoes."""
    size = 2 * n + r * (r + 1) // 2
    core = staircase(r)
    return tuple(p for p in partitions_of(size) if two_core(p) == core)


@lru_cache(maxsize=None)
def enumerate_bipartitions(n: int) -> tuple:
    out = []
    for k in range(n, -1, -1):
        for d in partitions_of(k):
            for f in partitions_of(n - k):
                out.append(Bipartition(d, f))
    return tuple(out)


def hook_lengths(p: tuple) -> list:
    pt = transpose(p)
    return [p[i - 1] - j + pt[j - 1] - i + 1 for i, j in squares(p)]


def count_standard_young(p: tuple) -> int:
    """Hook length formula."""
    from math import factorial, prod

    return factorial(sum(p)) // prod(hook_lengths(p)) if p else 1


def pad(p: tuple, length: int) -> tuple:
    return tuple(p) + (0,) * max(0, length - len(p))


def dumps(p: tuple) -> str:
    return json.dumps(list(p))


def fmt(p: tuple) -> str:
    """Compact exponent notation, e.g. (4,3,2,2) -> '(4,3,2^2)'."""
    if not p:
        return "()"
    chunks = []
    i = 0
    while i < len(p):
        j = i
        while j < len(p) and p[j] == p[i]:
            j += 1
        chunks.append(str(p[i]) if j - i == 1 else f"{p[i]}^{j - i}")
        i = j
    return "(" + ",".join(chunks) + ")"
