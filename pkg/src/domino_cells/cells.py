"""Combinatorial left cells and the harness comparing them with Hecke cells.

Irreducible cells of rank ``r`` collect the elements sharing a right
tableau.  Reducible cells glue these along moving through non-core open
cycles: the tableaux ``MT(T, C)`` for ``C`` a set of non-core open cycles of
``T`` all represent one cell.
"""
from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import characters as ch
from . import kl
from .hecke import WeightFunction, as_weight
from .partitions import Bipartition
from .rs import g_r
from .symbols import partition_to_bipartition
from .tableaux import extended_open_cycles, representing_set
from .weyl import weyl_group

KINDS = ("irreducible", "reducible")


@dataclass(frozen=True)
class CombinatorialCell:
    kind: str
    rank: int
    members: frozenset
    tableaux: frozenset

    def shapes(self) -> list:
        return sorted((T.shape for T in self.tableaux), reverse=True)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "rank": self.rank,
            "members": sorted(str(w) for w in sorted(self.members)),
            "tableaux": [T.to_json() for T in sorted(self.tableaux, key=lambda T: T.grid)],
        }


@lru_cache(maxsize=None)
def tableau_pairs(n: int, r: int) -> dict:
    """``{w: (left tableau, right tableau)}`` over W_n."""
    out = {}
    for w in weyl_group(n).elements:
        pair = g_r(w, r)
        out[w] = (pair.left, pair.right)
    return out


def _by_right_tableau(n: int, r: int) -> dict:
    groups: dict = {}
    for w, (_, T) in tableau_pairs(n, r).items():
        groups.setdefault(T, set()).add(w)
    return groups


@lru_cache(maxsize=None)
def combinatorial_cells(n: int, r: int, kind: str = "irreducible") -> tuple:
    """Cells of W_n sorted by their smallest member."""
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    groups = _by_right_tableau(n, r)
    if kind == "irreducible":
        cells = [CombinatorialCell(kind, r, frozenset(m), frozenset({T})) for T, m in groups.items()]
    else:
        parent = {T: T for T in groups}

        def find(T):
            while parent[T] != T:
                parent[T] = parent[parent[T]]
                T = parent[T]
            return T

        for T in groups:
            for U in representing_set(T):
                parent[find(U)] = find(T)
        merged: dict = {}
        for T in groups:
            merged.setdefault(find(T), set()).add(T)
        cells = [
            CombinatorialCell(kind, r, frozenset().union(*(groups[T] for T in Ts)), frozenset(Ts))
            for Ts in merged.values()
        ]
    return tuple(sorted(cells, key=lambda c: min(c.members)))


def cells_for_weight(n: int, wf) -> tuple:
    """The combinatorial partition the weight selects."""
    wf = as_weight(wf)
    return combinatorial_cells(n, wf.r, "reducible" if wf.integral else "irreducible")


def predicted_module(cell: CombinatorialCell) -> list:
    return cell.shapes()


def predicted_bipartitions(cell: CombinatorialCell) -> list:
    return [partition_to_bipartition(p) for p in predicted_module(cell)]


def _shape_matches(c1: CombinatorialCell, c2: CombinatorialCell) -> list:
    shapes2 = {T.shape: T for T in c2.tableaux}
    return [(T, shapes2[T.shape]) for T in sorted(c1.tableaux, key=lambda T: T.grid) if T.shape in shapes2]


def intersection_counts(c1: CombinatorialCell, c2: CombinatorialCell) -> dict:
    """``|c1 ∩ c2^{-1}|`` by inversion, by shape matching and by extended cycles."""
    if c1.rank != c2.rank:
        raise ValueError("cells must have the same rank")
    explicit = sum(1 for w in c1.members if w.inverse() in c2.members)
    matches = _shape_matches(c1, c2)
    out = {"explicit": explicit, "shape_match": len(matches), "extended": None}
    if c1.kind == c2.kind == "reducible" and matches:
        T, T2 = matches[0]
        m = sum(1 for e in extended_open_cycles(T, T2) if not e.core)
        out["extended"] = 2 ** m
    return out


def intersection_count(c1: CombinatorialCell, c2: CombinatorialCell) -> int:
    counts = intersection_counts(c1, c2)
    values = {v for v in counts.values() if v is not None}
    if len(values) != 1:
        raise AssertionError(f"intersection counts disagree: {counts}")
    return counts["explicit"]


def shapes_disjoint(cells) -> bool:
    seen = set()
    for c in cells:
        shapes = {T.shape for T in c.tableaux}
        if seen & shapes:
            return False
        seen |= shapes
    return True


# --- verification -----------------------------------------------------------

REPORT_KEYS = ("params", "conjecture", "modules", "hom", "properties", "timings")


@dataclass
class VerificationReport:
    params: dict
    conjecture: dict | None = None
    modules: dict | None = None
    hom: dict | None = None
    properties: dict | None = None
    timings: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(sec["pass"] for sec in (self.conjecture, self.modules, self.hom, self.properties) if sec)

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        for key in REPORT_KEYS[1:5]:
            if getattr(other, key) is not None:
                setattr(self, key, getattr(other, key))
        self.timings.update(other.timings)
        return self

    def to_json(self) -> dict:
        return {key: getattr(self, key) for key in REPORT_KEYS}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    def csv_row(self) -> list:
        flag = lambda sec: "" if sec is None else ("pass" if sec["pass"] else "fail")
        p = self.params
        return [p["n"], p["a"], p["b"], p["s"], p["r"], p["epsilon"],
                flag(self.conjecture), flag(self.modules), flag(self.hom), flag(self.properties)]


CSV_HEADER = ["n", "a", "b", "s", "r", "epsilon", "conjecture", "modules", "hom", "properties"]


def summary_csv(reports) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for rep in sorted(reports, key=lambda r: (r.params["n"], r.params["a"], r.params["b"])):
        w.writerow(rep.csv_row())
    return buf.getvalue()


def params(n: int, wf: WeightFunction) -> dict:
    return {"n": n, "a": wf.a, "b": wf.b, "s": str(wf.s), "r": wf.r, "epsilon": str(wf.epsilon)}


class _Timer:
    def __init__(self, report: VerificationReport, key: str, enabled: bool):
        self.report, self.key, self.enabled = report, key, enabled

    def __enter__(self):
        self.start = time.perf_counter()

    def __exit__(self, *exc):
        if self.enabled:
            self.report.timings[self.key] = round(time.perf_counter() - self.start, 3)


def _hecke_left_cells(n: int, wf, cache_dir, max_n) -> list:
    table = kl.kl_basis(n, wf, cache_dir=cache_dir, max_n=max_n)
    return table, [frozenset(b) for b in kl.cells(table, "left").blocks]


def _canonical(blocks) -> list:
    return sorted((sorted(b) for b in blocks), key=lambda b: b[0])


def verify_conjecture(n: int, wf, cache_dir=None, max_n: int = kl.DEFAULT_MAX_N, timings=False) -> VerificationReport:
    wf = as_weight(wf)
    rep = VerificationReport(params(n, wf))
    with _Timer(rep, "conjecture", timings):
        _, hecke = _hecke_left_cells(n, wf, cache_dir, max_n)
        comb = [c.members for c in cells_for_weight(n, wf)]
        H, C = _canonical(hecke), _canonical(comb)
        section = {
            "pass": H == C,
            "kind": "reducible" if wf.integral else "irreducible",
            "hecke_cells": len(H),
            "combinatorial_cells": len(C),
            "witness": None if H == C else _partition_witness(hecke, comb, n, wf.r),
        }
        if wf.integral:
            section["disjoint_shapes"] = verify_disjoint_shapes(n, wf, cache_dir, max_n)
            section["pass"] = section["pass"] and section["disjoint_shapes"]["pass"]
    rep.conjecture = section
    return rep


def _partition_witness(hecke, comb, n: int, r: int) -> dict:
    """Smallest pair grouped together by exactly one of the partitions."""
    hk = {w: i for i, b in enumerate(hecke) for w in b}
    cb = {w: i for i, b in enumerate(comb) for w in b}
    pairs = tableau_pairs(n, r)
    elems = sorted(hk)
    for i, w in enumerate(elems):
        for w2 in elems[i + 1:]:
            if (hk[w] == hk[w2]) != (cb[w] == cb[w2]):
                return {
                    "pair": [str(w), str(w2)],
                    "same_hecke_cell": hk[w] == hk[w2],
                    "right_tableaux": [pairs[w][1].to_json(), pairs[w2][1].to_json()],
                }
    return {}


def verify_disjoint_shapes(n: int, wf, cache_dir=None, max_n: int = kl.DEFAULT_MAX_N) -> dict:
    wf = as_weight(wf)
    if not wf.integral:
        raise ValueError("the disjoint-shapes check needs an integral parameter")
    _, hecke = _hecke_left_cells(n, wf, cache_dir, max_n)
    comb = cells_for_weight(n, wf)
    bad = []
    for block in hecke:
        parts = [c for c in comb if c.members & block]
        if not shapes_disjoint(parts):
            bad.append(str(min(block)))
    return {"pass": not bad, "violations": bad}


def _tableau_set(block, n: int, r: int) -> dict:
    pairs = tableau_pairs(n, r)
    counts: dict = {}
    for w in block:
        T = pairs[w][1]
        counts[T] = counts.get(T, 0) + 1
    return counts


def _bp_json(bp) -> list:
    return [list(bp[0]), list(bp[1])]


def verify_module_structure(n: int, wf, cache_dir=None, max_n: int = kl.DEFAULT_MAX_N, timings=False) -> VerificationReport:
    wf = as_weight(wf)
    rep = VerificationReport(params(n, wf))
    with _Timer(rep, "modules", timings):
        table, hecke = _hecke_left_cells(n, wf, cache_dir, max_n)
        CT = ch.character_table(n)
        rows = []
        for block in sorted(hecke, key=min):
            chi = ch.module_character(kl.cell_module_matrices(table, block), n)
            got = ch.decompose(chi, CT)
            counts = _tableau_set(block, n, wf.r)
            shapes = sorted((T.shape for T in counts), reverse=True)
            predicted = {Bipartition(*partition_to_bipartition(p)): 1 for p in shapes}
            distinct = len(set(shapes)) == len(shapes)
            degrees_ok = all(c == ch.degree(partition_to_bipartition(T.shape)) for T, c in counts.items())
            ok = got == predicted and distinct and degrees_ok
            rows.append({
                "representative": str(min(block)),
                "size": len(block),
                "shapes": [list(p) for p in shapes],
                "predicted": [_bp_json(bp) for bp in sorted(predicted)],
                "computed": [[_bp_json(bp), m] for bp, m in sorted(got.items())],
                "multiplicity_free": all(m == 1 for m in got.values()),
                "degree_counts": degrees_ok,
                "pass": ok,
            })
    rep.modules = {"pass": all(r["pass"] for r in rows), "cells": rows}
    return rep


def verify_hom_dims(n: int, wf, cache_dir=None, max_n: int = kl.DEFAULT_MAX_N, timings=False) -> VerificationReport:
    wf = as_weight(wf)
    rep = VerificationReport(params(n, wf))
    with _Timer(rep, "hom", timings):
        table, hecke = _hecke_left_cells(n, wf, cache_dir, max_n)
        hecke = sorted(hecke, key=min)
        chars = [ch.module_character(kl.cell_module_matrices(table, b), n) for b in hecke]
        k = len(hecke)
        hom = [[int(ch.inner_product(chars[i], chars[j], n)) for j in range(k)] for i in range(k)]
        inter = [[sum(1 for w in hecke[i] if w.inverse() in hecke[j]) for j in range(k)] for i in range(k)]
        invols = [sum(1 for w in b if w.is_involution()) for b in hecke]
        total = sum(map(sum, inter))
        section = {
            "pass": hom == inter and all(inter[i][i] == invols[i] for i in range(k)) and total == weyl_group(n).size,
            "cells": [str(min(b)) for b in hecke],
            "hom": hom,
            "intersections": inter,
            "involutions": invols,
            "total": total,
        }
    rep.hom = section
    return rep


def property_gating(n: int, wf) -> bool:
    """Weights where the properties are known: equal parameters and the asymptotic range."""
    wf = as_weight(wf)
    return wf.a == wf.b or wf.s > n - 1


def verify_properties(n: int, wf, cache_dir=None, max_n: int = kl.DEFAULT_MAX_N,
                      max_n_asymptotic: int = 3, timings=False) -> VerificationReport:
    wf = as_weight(wf)
    rep = VerificationReport(params(n, wf))
    with _Timer(rep, "properties", timings):
        table = kl.kl_basis(n, wf, cache_dir=cache_dir, max_n=max_n)
        data = kl.asymptotic_data(table, max_n=max_n_asymptotic)
        results = kl.check_properties(table, data=data)
    gating = property_gating(n, wf)
    all_ok = all(r["pass"] for r in results.values())
    rep.properties = {
        "pass": all_ok or not gating,
        "gating": gating,
        "all_hold": all_ok,
        "checks": results,
        "duflo": sorted(str(d) for d in data.duflo),
    }
    return rep


def verify_all(n: int, wf, cache_dir=None, max_n: int = kl.DEFAULT_MAX_N,
               max_n_asymptotic: int = 3, timings=False) -> VerificationReport:
    wf = as_weight(wf)
    rep = verify_conjecture(n, wf, cache_dir, max_n, timings)
    rep.merge(verify_module_structure(n, wf, cache_dir, max_n, timings))
    rep.merge(verify_hom_dims(n, wf, cache_dir, max_n, timings))
    if n <= max_n_asymptotic:
        rep.merge(verify_properties(n, wf, cache_dir, max_n, max_n_asymptotic, timings))
    return rep


def default_sweep(n: int) -> list:
    """Weights ``s`` in {1/2, 1, 3/2, 2, 5/2, 3, n-1/2, n, n+1} as minimal (a, b)."""
    values = [Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2), Fraction(5, 2), Fraction(3),
              Fraction(2 * n - 1, 2), Fraction(n), Fraction(n + 1)]
    out = []
    for s in sorted(set(values)):
        if s > 0:
            out.append(WeightFunction(s.denominator, s.numerator))
    return out
