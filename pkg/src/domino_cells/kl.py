"""Kazhdan-Lusztig basis, structure constants and cells for unequal parameters.

``C_x`` is built by induction on length: for a left descent ``s`` of ``x``,
``C_s C_{sx}`` is bar invariant and equals ``T_x`` plus lower terms; the
non-negative degree parts of the lower coefficients are removed by
subtracting bar-invariant multiples of already known ``C_z``, working down
in length.  The multiples removed are exactly the C-basis coefficients of
``C_s C_{sx}``, so the left multiplication table by generators falls out of
the same pass.
"""
from __future__ import annotations

import heapq
import json
import os
from dataclasses import dataclass, field

import networkx as nx

from .hecke import WeightFunction, _add_into, as_weight, left_mul_generator
from .laurent import ONE, LaurentPolynomial, v
from .weyl import SignedPermutation, WeylGroupB, weyl_group

CACHE_FORMAT = 1
DEFAULT_MAX_N = 5


class ResourceBoundExceeded(ValueError):
    pass


@dataclass
class KLTable:
    """``p[x]`` maps ``y`` to ``p_{y,x}``; ``lmul[s][x]`` is ``C_s C_x`` in the C-basis.

    All keys are indices into ``weyl_group(n).elements``.
    """

    n: int
    weight: WeightFunction
    p: list
    lmul: list
    h_cache: dict = field(default_factory=dict)

    @property
    def group(self) -> WeylGroupB:
        return weyl_group(self.n)

    def p_poly(self, y, x) -> LaurentPolynomial:
        W = self.group
        y, x = _idx(W, y), _idx(W, x)
        return self.p[x].get(y, LaurentPolynomial())

    def c_basis(self, x) -> dict:
        """``C_x`` in the T-basis, keyed by signed permutation."""
        W = self.group
        return {W.elements[y]: c for y, c in self.p[_idx(W, x)].items()}


def _idx(W: WeylGroupB, w) -> int:
    return w if isinstance(w, int) else W.index[w]


def _generator_c(W: WeylGroupB, s: int, wf: WeightFunction) -> dict:
    return {W.lmul[s][0]: ONE, 0: v(-wf.generator_weight(s))}


def _reduce(vec: dict, top: int, W: WeylGroupB, p: list) -> tuple:
    """Strip non-negative degrees below ``top``; returns ``(C, {z: mu_z})``."""
    heap = [-y for y in vec if y != top]
    heapq.heapify(heap)
    seen = set(heap)
    mus = {}
    while heap:
        z = -heapq.heappop(heap)
        seen.discard(-z)
        c = vec.get(z)
        if c is None or c.degree() < 0:
            continue
        mu = c.bar_invariant_completion()
        mus[z] = mu
        for y, d in p[z].items():
            _add_into(vec, y, -(mu * d))
            if y != z and -y not in seen and y in vec:
                seen.add(-y)
                heapq.heappush(heap, -y)
    return vec, mus


def _build(n: int, wf: WeightFunction) -> KLTable:
    W = weyl_group(n)
    N = W.size
    p: list = [None] * N
    p[0] = {0: ONE}
    lmul = [[None] * N for _ in range(n)]
    vs = [v(wf.generator_weight(s)) + v(-wf.generator_weight(s)) for s in range(n)]
    for x in range(N):
        if p[x] is None:
            raise AssertionError("element reached before a shorter one")
        for s in range(n):
            sx = W.lmul[s][x]
            if W.length[sx] < W.length[x]:
                lmul[s][x] = {x: vs[s]}
                continue
            prod = left_mul_generator(p[x], s, W, wf)
            shift = v(-wf.generator_weight(s))
            for y, c in p[x].items():
                _add_into(prod, y, c * shift)
            C, mus = _reduce(prod, sx, W, p)
            if p[sx] is None:
                p[sx] = C
            elif p[sx] != C:
                raise AssertionError("KL element depends on the reduced word")
            row = {sx: ONE}
            row.update(mus)
            lmul[s][x] = row
    return KLTable(n, wf, p, lmul)


# --- disk cache ------------------------------------------------------------

def _cache_path(cache_dir: str, n: int, wf: WeightFunction) -> str:
    return os.path.join(cache_dir, f"kl_B{n}_a{wf.a}_b{wf.b}.json")


def _dump_table(table: KLTable) -> dict:
    W = table.group
    name = lambda i: str(W.elements[i])
    p = {name(x): [[name(y), c.to_json()] for y, c in sorted(row.items())] for x, row in enumerate(table.p)}
    lm = [
        {name(x): [[name(z), c.to_json()] for z, c in sorted(row.items())] for x, row in enumerate(rows)}
        for rows in table.lmul
    ]
    return {"format": CACHE_FORMAT, "n": table.n, "a": table.weight.a, "b": table.weight.b, "p": p, "lmul": lm}


def _load_table(obj: dict, n: int, wf: WeightFunction) -> KLTable | None:
    if obj.get("format") != CACHE_FORMAT or (obj.get("n"), obj.get("a"), obj.get("b")) != (n, wf.a, wf.b):
        return None
    W = weyl_group(n)
    idx = lambda text: W.index[SignedPermutation.parse(text)]

    def rows(d):
        out = [None] * W.size
        for x, terms in d.items():
            out[idx(x)] = {idx(y): LaurentPolynomial.from_json(c) for y, c in terms}
        return out

    return KLTable(n, wf, rows(obj["p"]), [rows(d) for d in obj["lmul"]])


_MEMO: dict = {}


def kl_basis(n: int, wf, cache_dir: str | None = None, max_n: int = DEFAULT_MAX_N) -> KLTable:
    wf = as_weight(wf)
    if n < 1:
        raise ValueError("n must be positive")
    if n > max_n:
        raise ResourceBoundExceeded(f"n={n} exceeds the configured bound {max_n}")
    key = (n, wf.a, wf.b)
    path = _cache_path(cache_dir, n, wf) if cache_dir else None
    table = _MEMO.get(key)
    fresh = path is not None and not os.path.exists(path)
    if table is None and path and not fresh:
        try:
            with open(path) as fh:
                table = _load_table(json.load(fh), n, wf)
        except (json.JSONDecodeError, KeyError, TypeError):
            table = None  # unreadable cache: rebuild and overwrite
    if table is None:
        table = _build(n, wf)
        fresh = path is not None
    if fresh:
        _write_cache(path, table)
    _MEMO[key] = table
    return table


def _write_cache(path: str, table: KLTable) -> None:
    text = json.dumps(_dump_table(table), separators=(",", ":"), sort_keys=True)
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        fh.write(text)
    os.replace(tmp, path)


# --- structure constants ---------------------------------------------------

def _apply_generator(table: KLTable, s: int, vec: dict) -> dict:
    out: dict = {}
    for z, c in vec.items():
        for y, d in table.lmul[s][z].items():
            _add_into(out, y, c * d)
    return out


def _row(table: KLTable, x: int) -> list:
    """``[C_x C_y for every y]`` as C-basis dicts, memoised per ``x``."""
    cache = table.h_cache
    if x in cache:
        return cache[x]
    W = table.group
    if x == 0:
        row = [{y: ONE} for y in range(W.size)]
    else:
        s = W.left_descent(x)
        xp = W.lmul[s][x]
        # C_x = C_s C_{x'} - sum_{z != x} mu_z C_z
        corrections = [(z, mu) for z, mu in table.lmul[s][xp].items() if z != x]
        base = _row(table, xp)
        row = []
        for y in range(W.size):
            acc = _apply_generator(table, s, base[y])
            for z, mu in corrections:
                for w, c in _row(table, z)[y].items():
                    _add_into(acc, w, -(mu * c))
            row.append(acc)
    cache[x] = row
    return row


def h_constants(table: KLTable, x, y) -> dict:
    """``{z: h_{x,y,z}}`` keyed by signed permutation."""
    W = table.group
    return {W.elements[z]: c for z, c in _row(table, _idx(W, x))[_idx(W, y)].items()}


def h_index(table: KLTable, x: int, y: int) -> dict:
    return _row(table, x)[y]


# --- cells -----------------------------------------------------------------

SIDES = ("left", "right", "two-sided")


@dataclass
class CellPartition:
    side: str
    blocks: list  # list of frozensets of SignedPermutation
    preorder: set  # (i, j): block i <= block j

    def block_of(self, w: SignedPermutation) -> int:
        for i, b in enumerate(self.blocks):
            if w in b:
                return i
        raise KeyError(w)

    def leq(self, y: SignedPermutation, x: SignedPermutation) -> bool:
        return (self.block_of(y), self.block_of(x)) in self.preorder

    def to_json(self) -> dict:
        return {
            "side": self.side,
            "blocks": [sorted(str(w) for w in b) for b in self.blocks],
            "preorder": sorted([i, j] for i, j in self.preorder),
        }


def left_graph(table: KLTable) -> nx.DiGraph:
    """Edge ``x -> y`` when ``C_y`` occurs in some ``C_s C_x`` (so ``y <=_L x``)."""
    W = table.group
    G = nx.DiGraph()
    G.add_nodes_from(range(W.size))
    for s in range(table.n):
        for x in range(W.size):
            for y, c in table.lmul[s][x].items():
                if c and y != x:
                    G.add_edge(x, y)
    return G


def side_graph(table: KLTable, side: str) -> nx.DiGraph:
    if side not in SIDES:
        raise ValueError(f"unknown side {side!r}")
    W = table.group
    L = left_graph(table)
    if side == "left":
        return L
    R = nx.DiGraph()
    R.add_nodes_from(range(W.size))
    R.add_edges_from((W.inv[x], W.inv[y]) for x, y in L.edges)
    if side == "right":
        return R
    return nx.compose(L, R)


def cells(table: KLTable, side: str = "left") -> CellPartition:
    W = table.group
    G = side_graph(table, side)
    cond = nx.condensation(G)
    comps = sorted(cond.nodes, key=lambda c: min(cond.nodes[c]["members"]))
    order = {c: i for i, c in enumerate(comps)}
    blocks = [frozenset(W.elements[x] for x in cond.nodes[c]["members"]) for c in comps]
    pre = set()
    for c in comps:
        # everything reachable from c lies below it
        for d in nx.descendants(cond, c) | {c}:
            pre.add((order[d], order[c]))
    return CellPartition(side, blocks, pre)


def cell_module_matrices(table: KLTable, cell, v_eq_1: bool = True) -> dict:
    """Matrices of the generators on the left cell module ``[cell]``.

    Columns are indexed by the cell (sorted like the group elements).  With
    ``v_eq_1`` the W-action is returned as integer lists; otherwise the
    matrices of ``C_s`` with Laurent polynomial entries.
    """
    W = table.group
    members = sorted(_idx(W, w) for w in cell)
    pos = {x: i for i, x in enumerate(members)}
    part = cells(table, "left")
    blk = {part.block_of(W.elements[x]) for x in members}
    if len(blk) != 1 or len(part.blocks[blk.pop()]) != len(members):
        raise ValueError("not a left cell")
    k = len(members)
    out = {}
    for s in range(table.n):
        M = [[LaurentPolynomial() for _ in range(k)] for _ in range(k)]
        for x in members:
            for z, c in table.lmul[s][x].items():
                if z in pos:
                    M[pos[z]][pos[x]] = c
        if v_eq_1:
            # C_s specialises to s + 1; the sign twist puts the trivial module on {e}
            out[s] = [[(1 if i == j else 0) - M[i][j].evaluate(1) for j in range(k)] for i in range(k)]
        else:
            out[s] = M
    return out


# --- asymptotic data and properties ---------------------------------------

@dataclass
class AsymptoticData:
    a_val: dict
    delta: dict
    n_z: dict
    gamma: dict  # (x, y, z) -> nonzero int, indices
    duflo: frozenset


def asymptotic_data(table: KLTable, max_n: int = 4) -> AsymptoticData:
    if table.n > max_n:
        raise ResourceBoundExceeded(f"full h-table for n={table.n} exceeds bound {max_n}")
    W = table.group
    N = W.size
    a_val = [0] * N
    for x in range(N):
        for y, row in enumerate(_row(table, x)):
            for z, c in row.items():
                d = c.degree()
                if d > a_val[z]:
                    a_val[z] = d
    gamma = {}
    for x in range(N):
        for y, row in enumerate(_row(table, x)):
            for z, c in row.items():
                g = c.coefficient(a_val[z])
                if g:
                    gamma[(x, y, W.inv[z])] = g
    delta, n_z = [0] * N, [0] * N
    for z in range(N):
        pe = table.p[z][0]
        delta[z] = -pe.degree()
        n_z[z] = pe.leading_coefficient()
    duflo = frozenset(z for z in range(N) if a_val[z] == delta[z])
    return AsymptoticData(
        {W.elements[z]: a_val[z] for z in range(N)},
        {W.elements[z]: delta[z] for z in range(N)},
        {W.elements[z]: n_z[z] for z in range(N)},
        {tuple(W.elements[i] for i in k): g for k, g in gamma.items()},
        frozenset(W.elements[z] for z in duflo),
    )


PROPERTIES = ("P1", "P2", "P3", "P4", "P5", "P6", "P7", "P8", "P9", "P10", "P11", "P13", "P14")


def check_properties(table: KLTable, props=PROPERTIES, data: AsymptoticData | None = None) -> dict:
    """``{name: {"pass": bool, "witness": str | None}}``."""
    data = data or asymptotic_data(table)
    W = table.group
    E = W.elements
    inv = lambda w: w.inverse()
    a, D, gam = data.a_val, data.duflo, data.gamma
    parts = {side: cells(table, side) for side in SIDES}
    blk = {side: {w: parts[side].block_of(w) for w in E} for side in SIDES}
    same = lambda side, x, y: blk[side][x] == blk[side][y]
    leq = lambda side, y, x: (blk[side][y], blk[side][x]) in parts[side].preorder
    g = lambda x, y, z: gam.get((x, y, z), 0)

    def first(gen):
        for w in gen:
            return w
        return None

    checks = {
        "P1": lambda: first(z for z in E if a[z] > data.delta[z]),
        "P2": lambda: first((x, y, d) for (x, y, d) in gam if d in D and x != inv(y)),
        "P3": lambda: first(y for y in E if sum(1 for d in D if g(inv(y), y, d)) != 1),
        "P4": lambda: first((zp, z) for z in E for zp in E if leq("two-sided", zp, z) and a[zp] < a[z]),
        "P5": lambda: first(
            (y, d) for d in D for y in E
            if g(inv(y), y, d) and not (g(inv(y), y, d) == data.n_z[d] and abs(data.n_z[d]) == 1)
        ),
        "P6": lambda: first(d for d in D if not d.is_involution()),
        "P7": lambda: first((x, y, z) for (x, y, z), c in gam.items() if g(y, z, x) != c),
        "P8": lambda: first(
            (x, y, z) for (x, y, z) in gam
            if not (same("left", x, inv(y)) and same("left", y, inv(z)) and same("left", z, inv(x)))
        ),
        "P9": lambda: _p_same(E, a, leq, same, "left"),
        "P10": lambda: _p_same(E, a, leq, same, "right"),
        "P11": lambda: _p_same(E, a, leq, same, "two-sided"),
        "P13": lambda: first(
            b for b in parts["left"].blocks
            if len(b & D) != 1 or any(not g(inv(x), x, next(iter(b & D))) for x in b)
        ),
        "P14": lambda: first(z for z in E if not same("two-sided", z, inv(z))),
    }
    report = {}
    for name in props:
        if name not in checks:
            raise ValueError(f"unsupported property {name}")
        witness = checks[name]()
        report[name] = {"pass": witness is None, "witness": None if witness is None else _fmt(witness)}
    return report


def _p_same(E, a, leq, same, side):
    for z in E:
        for zp in E:
            if leq(side, zp, z) and a[zp] == a[z] and not same(side, zp, z):
                return (zp, z)
    return None


def _fmt(w) -> str:
    if isinstance(w, tuple):
        return "(" + ", ".join(_fmt(x) for x in w) + ")"
    if isinstance(w, frozenset):
        return "{" + ", ".join(sorted(str(x) for x in w)) + "}"
    return str(w)
