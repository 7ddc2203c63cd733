"""Standard domino tableaux of arbitrary rank, cycles and moving through.

A tableau of rank ``r`` is a labelling of a Young diagram whose staircase core
of rank ``r`` carries label 0 and whose remaining squares are tiled by
dominoes labelled 1..n.  The label grid (one tuple per row) is the
authoritative representation; the label -> squares map is derived from it.

Square ``(i, j)`` is *variable* when ``i + j = r (mod 2)`` and *fixed*
otherwise.  Moving a domino through keeps its fixed square and rotates its
variable square about it: a domino whose variable square lies below or to
the left of the fixed square turns to the right when the label diagonally up
and right is smaller, and upwards otherwise; a domino whose variable square
lies above or to the right turns downwards when the label diagonally down and
left is smaller, and to the left otherwise.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from . import partitions as P

INF = math.inf


class DominoTableau:
    __slots__ = ("rank", "grid", "_dominoes", "_hash")

    def __init__(self, rank: int, grid):
        self.rank = rank
        self.grid = tuple(tuple(row) for row in grid)
        self._dominoes = None
        self._hash = None

    @classmethod
    def from_dominoes(cls, rank: int, dominoes: dict) -> "DominoTableau":
        """Build from ``{label: (square, square)}``; core squares are added."""
        cells = {sq: 0 for sq in P.squares(P.staircase(rank))}
        for label, dom in dominoes.items():
            for sq in dom:
                if sq in cells:
                    raise ValueError(f"square {sq} covered twice")
                cells[sq] = label
        shape = P.from_squares(cells)
        grid = [[cells[(i, j)] for j in range(1, row + 1)] for i, row in enumerate(shape, start=1)]
        return cls(rank, grid)

    @classmethod
    def core_only(cls, rank: int) -> "DominoTableau":
        return cls.from_dominoes(rank, {})

    @property
    def shape(self) -> tuple:
        return tuple(len(row) for row in self.grid)

    @property
    def size(self) -> int:
        return len(self.dominoes)

    @property
    def dominoes(self) -> dict:
        if self._dominoes is None:
            found: dict = {}
            for i, row in enumerate(self.grid, start=1):
                for j, lab in enumerate(row, start=1):
                    if lab:
                        found.setdefault(lab, []).append((i, j))
            self._dominoes = {k: tuple(sorted(v)) for k, v in sorted(found.items())}
        return self._dominoes

    def label(self, sq) -> float:
        """Label at ``sq``; 0 above/left of the diagram and in the core, inf below/right."""
        i, j = sq
        if i < 1 or j < 1:
            return 0
        if i <= len(self.grid) and j <= len(self.grid[i - 1]):
            return self.grid[i - 1][j - 1]
        return INF

    def contains(self, sq) -> bool:
        i, j = sq
        return 1 <= i <= len(self.grid) and 1 <= j <= len(self.grid[i - 1])

    def is_core(self, sq) -> bool:
        return self.contains(sq) and self.grid[sq[0] - 1][sq[1] - 1] == 0

    def transpose(self) -> "DominoTableau":
        shape = P.transpose(self.shape)
        return DominoTableau(self.rank, [[self.grid[j][i] for j in range(row)] for i, row in enumerate(shape)])

    def __eq__(self, other):
        return isinstance(other, DominoTableau) and self.rank == other.rank and self.grid == other.grid

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rank, self.grid))
        return self._hash

    def __repr__(self):
        return f"DominoTableau(rank={self.rank}, grid={self.grid})"

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "shape": list(self.shape),
            "dominoes": [{"label": k, "squares": [list(s) for s in sq]} for k, sq in self.dominoes.items()],
        }

    @classmethod
    def from_json(cls, obj) -> "DominoTableau":
        doms = {d["label"]: tuple(tuple(s) for s in d["squares"]) for d in obj["dominoes"]}
        T = cls.from_dominoes(obj["rank"], doms)
        if "shape" in obj and list(T.shape) != list(obj["shape"]):
            raise ValueError("shape does not match the dominoes")
        return T

    def render(self) -> str:
        width = len(str(self.size)) if self.size else 1
        lines = []
        for row in self.grid:
            lines.append(" ".join("·".rjust(width) if lab == 0 else str(lab).rjust(width) for lab in row))
        return "\n".join(lines)


def is_variable(square, r: int) -> bool:
    i, j = square
    return (i + j - r) % 2 == 0


def _adjacent(a, b) -> bool:
    return abs(a[0] - b[0]) + abs(a[1] - b[1]) == 1


def validate(T: DominoTableau) -> bool:
    try:
        shape = P.partition(T.shape)
    except ValueError:
        return False
    if shape != T.shape:
        return False
    core = set(P.squares(P.staircase(T.rank)))
    zeros = {(i, j) for i, row in enumerate(T.grid, 1) for j, lab in enumerate(row, 1) if lab == 0}
    if zeros != core:
        return False
    doms = T.dominoes
    if sorted(doms) != list(range(1, len(doms) + 1)):
        return False
    if any(len(sq) != 2 or not _adjacent(*sq) for sq in doms.values()):
        return False
    for i, row in enumerate(T.grid):
        for j, lab in enumerate(row):
            if j + 1 < len(row) and row[j + 1] < lab:
                return False
            if i + 1 < len(T.grid) and j < len(T.grid[i + 1]) and T.grid[i + 1][j] < lab:
                return False
    return True


@lru_cache(maxsize=None)
def enumerate_tableaux(p: tuple, r: int | None = None) -> tuple:
    """SDT_r(p): the largest label always sits on a removable domino."""
    p = P.partition(p)
    dec = P.rank_and_core(p)
    if r is None:
        r = dec.rank
    if dec.rank != r:
        return ()
    n = dec.domino_count
    if n == 0:
        return (DominoTableau.core_only(r),)
    out = []
    for dom in P.removable_dominoes(p):
        smaller = P.remove_squares(p, dom)
        for T in enumerate_tableaux(smaller, r):
            doms = dict(T.dominoes)
            doms[n] = dom
            out.append(DominoTableau.from_dominoes(r, doms))
    return tuple(sorted(out, key=lambda T: T.grid, reverse=True))


@lru_cache(maxsize=None)
def count_tableaux(p: tuple) -> int:
    p = P.partition(p)
    if P.rank_and_core(p).domino_count == 0:
        return 1
    return sum(count_tableaux(P.remove_squares(p, d)) for d in P.removable_dominoes(p))


def enumerate_all_tableaux(n: int, r: int) -> list:
    out = []
    for p in P.enumerate_rank_partitions(n, r):
        out.extend(enumerate_tableaux(p, r))
    return out


# --- cycles -----------------------------------------------------------------

@dataclass(frozen=True)
class Cycle:
    labels: frozenset
    kind: str  # "closed" or "open"
    core_open: bool = False
    s_b: tuple | None = None
    s_f: tuple | None = None

    @property
    def is_open(self) -> bool:
        return self.kind == "open"

    def to_json(self) -> dict:
        return {
            "labels": sorted(self.labels),
            "kind": self.kind,
            "core_open": self.core_open,
            "s_b": list(self.s_b) if self.s_b else None,
            "s_f": list(self.s_f) if self.s_f else None,
        }


def _split(T: DominoTableau, label: int):
    """(fixed square, variable square) of the domino with ``label``."""
    a, b = T.dominoes[label]
    return (b, a) if is_variable(a, T.rank) else (a, b)


def moved_domino(T: DominoTableau, label: int) -> tuple:
    """Position of domino ``label`` after moving through it, fixed square first."""
    f, v = _split(T, label)
    i, j = f
    if v in ((i + 1, j), (i, j - 1)):
        new_v = (i, j + 1) if T.label((i - 1, j + 1)) < label else (i - 1, j)
    else:
        new_v = (i + 1, j) if T.label((i + 1, j - 1)) < label else (i, j - 1)
    return f, new_v


def _is_core_adjacent(T: DominoTableau, sq) -> bool:
    if T.rank == 0:
        return sq == (1, 1)
    i, j = sq
    return any(T.is_core(nb) for nb in ((i - 1, j), (i + 1, j), (i, j - 1), (i, j + 1)))


@lru_cache(maxsize=65536)
def cycles(T: DominoTableau) -> tuple:
    """Partition of the labels of ``T`` into cycles, ordered by smallest label."""
    moved = {k: moved_domino(T, k) for k in T.dominoes}
    parent = {k: k for k in T.dominoes}

    def find(k):
        while parent[k] != k:
            parent[k] = parent[parent[k]]
            k = parent[k]
        return k

    for k, (_, new_v) in moved.items():
        if T.contains(new_v):
            other = T.label(new_v)
            if other == 0:
                raise AssertionError(f"domino {k} moved into the core of {T!r}")
            parent[find(k)] = find(other)
    groups: dict = {}
    for k in T.dominoes:
        groups.setdefault(find(k), set()).add(k)
    out = []
    for labels in sorted(groups.values(), key=min):
        old_v = {_split(T, k)[1] for k in labels}
        new_v = {moved[k][1] for k in labels}
        if old_v == new_v:
            out.append(Cycle(frozenset(labels), "closed"))
            continue
        gone, added = old_v - new_v, new_v - old_v
        if len(gone) != 1 or len(added) != 1:
            raise AssertionError(f"cycle {sorted(labels)} of {T!r} is not a chain")
        s_b, s_f = gone.pop(), added.pop()
        out.append(Cycle(frozenset(labels), "open", _is_core_adjacent(T, s_b), s_b, s_f))
    return tuple(out)


def open_cycles(T: DominoTableau, include_core: bool = False) -> list:
    return [c for c in cycles(T) if c.is_open and (include_core or not c.core_open)]


def cycle_containing(T: DominoTableau, label: int) -> Cycle:
    for c in cycles(T):
        if label in c.labels:
            return c
    raise KeyError(label)


def move_through(T: DominoTableau, c: Cycle) -> DominoTableau:
    if c not in cycles(T):
        raise ValueError("not a cycle of this tableau")
    if c.core_open:
        raise ValueError("moving through a core open cycle leaves the rank")
    doms = dict(T.dominoes)
    for k in c.labels:
        doms[k] = tuple(sorted(moved_domino(T, k)))
    return DominoTableau.from_dominoes(T.rank, doms)


def move_through_set(T: DominoTableau, C) -> DominoTableau:
    """Move through the non-core open cycles in ``C`` one after another."""
    C = list(C)
    for c in C:
        if not c.is_open or c.core_open or c not in cycles(T):
            raise ValueError("only non-core open cycles of T may be moved through")
    for c in C:
        # cycles of the image carry the same label sets
        current = next(d for d in cycles(T) if d.labels == c.labels)
        T = move_through(T, current)
    return T


def representing_set(T: DominoTableau) -> frozenset:
    """{MT(T, C) : C a subset of the non-core open cycles of T}."""
    oc = open_cycles(T)
    return frozenset(
        move_through_set(T, C) for k in range(len(oc) + 1) for C in combinations(oc, k)
    )


@dataclass(frozen=True)
class ExtendedCycle:
    cycles_in_T: frozenset
    cycles_in_T2: frozenset

    @property
    def core(self) -> bool:
        return any(c.core_open for c in self.cycles_in_T | self.cycles_in_T2)


def extended_open_cycles(T: DominoTableau, T2: DominoTableau) -> list:
    """Open cycles of ``T`` and ``T2`` grouped by shared boundary squares."""
    if T.shape != T2.shape or T.rank != T2.rank:
        raise ValueError("extended cycles need two tableaux of the same shape")
    nodes = [("T", c) for c in open_cycles(T, True)] + [("T2", c) for c in open_cycles(T2, True)]
    parent = list(range(len(nodes)))

    def find(k):
        while parent[k] != k:
            parent[k] = parent[parent[k]]
            k = parent[k]
        return k

    by_square: dict = {}
    for idx, (_, c) in enumerate(nodes):
        for sq in (c.s_b, c.s_f):
            by_square.setdefault(sq, []).append(idx)
    for idxs in by_square.values():
        for other in idxs[1:]:
            parent[find(other)] = find(idxs[0])
    groups: dict = {}
    for idx in range(len(nodes)):
        groups.setdefault(find(idx), []).append(nodes[idx])
    out = []
    for members in groups.values():
        out.append(ExtendedCycle(
            frozenset(c for side, c in members if side == "T"),
            frozenset(c for side, c in members if side == "T2"),
        ))
    for e in out:
        if not e.cycles_in_T or not e.cycles_in_T2:
            raise ValueError("unpaired open cycle: the boundary squares do not match up")
    return sorted(out, key=lambda e: min(min(c.labels) for c in e.cycles_in_T))


def dumps(T: DominoTableau) -> str:
    return json.dumps(T.to_json())
