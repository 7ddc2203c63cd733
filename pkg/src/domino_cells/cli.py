"""Command line front end.

Exit codes: 0 when every check passes, 1 on a verification mismatch and 2 on
usage or resource errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import cells as C
from . import characters as ch
from . import kl
from . import partitions as P
from . import symbols as S
from .hecke import WeightFunction
from .rs import g_r
from .tableaux import (
    DominoTableau,
    cycle_containing,
    cycles,
    enumerate_all_tableaux,
    enumerate_tableaux,
    move_through_set,
)
from .weyl import SignedPermutation

KL_CEILING = 5


class UsageError(Exception):
    pass


def _common(p: argparse.ArgumentParser, weights=True, rank=False, n=False):
    if n:
        p.add_argument("--n", type=int, required=True)
    if weights:
        p.add_argument("--a", type=int, default=1)
        p.add_argument("--b", type=int, default=1)
    if rank:
        p.add_argument("--rank", type=int, default=None)
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")
    p.add_argument("--output", default=None, help="write to this file instead of stdout")


def _kl_flags(p: argparse.ArgumentParser):
    p.add_argument("--cache-dir", default="./cache")
    p.add_argument("--max-n-kl", type=int, default=4)
    p.add_argument("--timings", action="store_true", help="record wall-clock timings in reports")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="domino-cells", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rank", help="rank, 2-core and domino count of a partition")
    p.add_argument("parts", type=int, nargs="*")
    _common(p, weights=False)

    p = sub.add_parser("rs", help="domino insertion of a signed permutation")
    p.add_argument("--word", required=True, help='window such as "-3 1 -2"')
    p.add_argument("--trace", action="store_true")
    _common(p, rank=True)

    p = sub.add_parser("tableaux", help="standard domino tableaux of a shape or of a size")
    p.add_argument("parts", type=int, nargs="*")
    p.add_argument("--n", type=int, default=None)
    _common(p, rank=True)

    for name in ("cycles", "mt"):
        p = sub.add_parser(name, help="cycles of a tableau" if name == "cycles" else "move through cycles")
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--tableau", help="tableau JSON, or @path to a JSON file")
        src.add_argument("--word", help="use the right tableau of this signed permutation")
        if name == "mt":
            p.add_argument("--cycle", type=int, action="append", default=[],
                           help="a label of a cycle to move through (repeatable)")
        _common(p, rank=True)

    p = sub.add_parser("symbols", help="symbol, bipartition, sign and truncated induction of a partition")
    p.add_argument("parts", type=int, nargs="*")
    p.add_argument("--induce", type=int, default=None, metavar="L")
    _common(p)

    p = sub.add_parser("cells-comb", help="combinatorial left cells")
    p.add_argument("--kind", choices=C.KINDS, default=None)
    _common(p, rank=True, n=True)

    for name in ("cells-kl", "cells"):
        p = sub.add_parser(name, help="Kazhdan-Lusztig cells")
        p.add_argument("--side", choices=kl.SIDES, default="left")
        _common(p, n=True)
        _kl_flags(p)

    p = sub.add_parser("characters", help="character table of W_n")
    _common(p, weights=False, n=True)

    p = sub.add_parser("verify", help="compare Hecke cells with the combinatorics")
    p.add_argument("check", choices=("conjecture", "modules", "hom", "properties", "all"))
    _common(p, n=True)
    _kl_flags(p)

    p = sub.add_parser("report", help="verify all checks over the default weight sweep")
    p.add_argument("--n", type=int, nargs="+", required=True)
    _common(p, weights=False)
    _kl_flags(p)
    return parser


# --- helpers ---------------------------------------------------------------

def _weight(args) -> WeightFunction:
    try:
        return WeightFunction(args.a, args.b)
    except ValueError as exc:
        raise UsageError(str(exc))


def _word(text: str) -> SignedPermutation:
    try:
        return SignedPermutation.parse(text)
    except ValueError as exc:
        raise UsageError(f"bad signed permutation {text!r}: {exc}")


def _partition(parts) -> tuple:
    try:
        return P.partition(parts)
    except ValueError as exc:
        raise UsageError(str(exc))


def _rank(args, default: int) -> int:
    r = default if args.rank is None else args.rank
    if r < 0:
        raise UsageError("rank must be non-negative")
    return r


def _kl_bound(args, n: int) -> int:
    if args.max_n_kl > KL_CEILING:
        raise UsageError(f"--max-n-kl is capped at {KL_CEILING}")
    if n < 1:
        raise UsageError("n must be positive")
    return args.max_n_kl


def _load_tableau(args) -> DominoTableau:
    if args.tableau is not None:
        text = args.tableau
        if text.startswith("@"):
            with open(text[1:]) as fh:
                text = fh.read()
        try:
            return DominoTableau.from_json(json.loads(text))
        except (ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"bad tableau: {exc}")
    return g_r(_word(args.word), _rank(args, 0)).right


def _emit(args, payload, text: str, csv_text: str | None = None) -> None:
    if args.format == "json":
        out = json.dumps(payload, indent=2)
    elif args.format == "csv":
        if csv_text is None:
            raise UsageError(f"{args.command} has no CSV output")
        out = csv_text.rstrip("\n")
    else:
        out = text
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(out + "\n")
    else:
        print(out)


def _tableau_text(T: DominoTableau) -> str:
    return T.render() if T.size or T.rank else "(empty)"


# --- subcommands -------------------------------------------------------------

def cmd_rank(args) -> int:
    p = _partition(args.parts)
    dec = P.rank_and_core(p)
    payload = {"partition": list(p), "rank": dec.rank, "core": list(dec.core), "dominoes": dec.domino_count}
    text = f"rank {dec.rank}\ncore {json.dumps(list(dec.core), separators=(',', ':'))}\ndominoes {dec.domino_count}"
    _emit(args, payload, text)
    return 0


def cmd_rs(args) -> int:
    w = _word(args.word)
    r = _rank(args, 0)
    trace = [] if args.trace else None
    pair = g_r(w, r, trace)
    payload = {"word": str(w), "rank": r, **pair.to_json()}
    if trace is not None:
        payload["trace"] = trace
    text = f"left:\n{_tableau_text(pair.left)}\nright:\n{_tableau_text(pair.right)}"
    if trace is not None:
        text += "\n" + "\n".join(json.dumps(step) for step in trace)
    _emit(args, payload, text)
    return 0


def cmd_tableaux(args) -> int:
    if args.parts:
        p = _partition(args.parts)
        r = P.rank(p) if args.rank is None else args.rank
        if P.rank(p) != r:
            raise UsageError(f"{list(p)} has rank {P.rank(p)}, not {r}")
        found = list(enumerate_tableaux(p, r))
    elif args.n is not None:
        found = enumerate_all_tableaux(args.n, _rank(args, 0))
    else:
        raise UsageError("give a shape or --n")
    payload = {"count": len(found), "tableaux": [T.to_json() for T in found]}
    text = f"{len(found)} tableaux\n" + "\n\n".join(_tableau_text(T) for T in found)
    _emit(args, payload, text)
    return 0


def _cycle_text(c) -> str:
    labels = ",".join(str(k) for k in sorted(c.labels))
    if not c.is_open:
        return f"closed {{{labels}}}"
    tag = "core-open" if c.core_open else "open"
    return f"{tag} {{{labels}}} s_b={list(c.s_b)} s_f={list(c.s_f)}"


def cmd_cycles(args) -> int:
    T = _load_tableau(args)
    cs = cycles(T)
    payload = {"tableau": T.to_json(), "cycles": [c.to_json() for c in cs]}
    text = _tableau_text(T) + "\n" + "\n".join(_cycle_text(c) for c in cs)
    _emit(args, payload, text)
    return 0


def cmd_mt(args) -> int:
    T = _load_tableau(args)
    chosen = []
    for label in args.cycle:
        try:
            c = cycle_containing(T, label)
        except KeyError:
            raise UsageError(f"no domino labelled {label}")
        if c not in chosen:
            chosen.append(c)
    try:
        U = move_through_set(T, chosen)
    except ValueError as exc:
        raise UsageError(str(exc))
    payload = {"tableau": T.to_json(), "cycles": [c.to_json() for c in chosen], "result": U.to_json()}
    text = f"{_tableau_text(T)}\n->\n{_tableau_text(U)}"
    _emit(args, payload, text)
    return 0


def cmd_symbols(args) -> int:
    p = _partition(args.parts)
    wp = _weight(args)
    sym = S.partition_to_symbol(p, wp.epsilon)
    bp = S.symbol_to_bipartition(sym)
    sign_p = P.transpose(p)
    payload = {
        "partition": list(p),
        "rank": P.rank(p),
        "symbol": sym.to_json(),
        "bipartition": bp.to_json(),
        "sign": {"partition": list(sign_p), "bipartition": S.sign_on_bipartition(bp).to_json()},
    }
    lines = [f"symbol {sym}", f"bipartition {P.fmt(bp.d)} {P.fmt(bp.f)}", f"sign {list(sign_p)}"]
    if args.induce is not None:
        if P.rank(p) != wp.r:
            raise UsageError(f"induction at s={wp.s} needs a partition of rank {wp.r}")
        shapes = S.truncated_induction_shapes(p, args.induce, wp)
        payload["induced"] = [list(q) for q in shapes]
        lines.append("induced " + " ".join(json.dumps(list(q), separators=(",", ":")) for q in shapes))
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_cells_comb(args) -> int:
    wf = _weight(args)
    kind = args.kind or ("reducible" if wf.integral else "irreducible")
    r = _rank(args, wf.r)
    found = C.combinatorial_cells(args.n, r, kind)
    payload = {"n": args.n, "rank": r, "kind": kind, "cells": [c.to_json() for c in found]}
    text = f"{len(found)} {kind} cells of rank {r}\n" + "\n".join(
        f"{{{', '.join(str(w) for w in sorted(c.members))}}} shapes {[list(s) for s in c.shapes()]}" for c in found
    )
    _emit(args, payload, text)
    return 0


def cmd_cells_kl(args) -> int:
    wf = _weight(args)
    table = kl.kl_basis(args.n, wf, cache_dir=args.cache_dir, max_n=_kl_bound(args, args.n))
    part = kl.cells(table, args.side)
    payload = {"n": args.n, "a": wf.a, "b": wf.b, **part.to_json()}
    text = f"{len(part.blocks)} {args.side} cells\n" + "\n".join(
        "{" + ", ".join(str(w) for w in sorted(b)) + "}" for b in part.blocks
    )
    _emit(args, payload, text)
    return 0


def cmd_characters(args) -> int:
    if args.n < 1:
        raise UsageError("n must be positive")
    table = ch.character_table(args.n)
    payload = {
        "classes": [{"label": c.label, "size": c.size} for c in table.classes],
        "rows": [{"bipartition": bp.to_json(), "values": [int(x) for x in row]}
                 for bp, row in zip(table.labels, table.values)],
    }
    csv_text = table.to_csv()
    _emit(args, payload, csv_text.rstrip("\n"), csv_text)
    return 0


_VERIFY = {
    "conjecture": C.verify_conjecture,
    "modules": C.verify_module_structure,
    "hom": C.verify_hom_dims,
    "properties": C.verify_properties,
    "all": C.verify_all,
}


def _report_text(rep: C.VerificationReport) -> str:
    p = rep.params
    lines = [f"n={p['n']} a={p['a']} b={p['b']} s={p['s']} r={p['r']} eps={p['epsilon']}"]
    for key in C.REPORT_KEYS[1:5]:
        sec = getattr(rep, key)
        if sec is not None:
            lines.append(f"  {key}: {'pass' if sec['pass'] else 'FAIL'}")
    return "\n".join(lines)


def cmd_verify(args) -> int:
    wf = _weight(args)
    bound = _kl_bound(args, args.n)
    rep = _VERIFY[args.check](args.n, wf, cache_dir=args.cache_dir, max_n=bound, timings=args.timings)
    _emit(args, rep.to_json(), _report_text(rep), C.summary_csv([rep]))
    return 0 if rep.passed else 1


def cmd_report(args) -> int:
    reports = []
    for n in sorted(set(args.n)):
        bound = _kl_bound(args, n)
        for wf in C.default_sweep(n):
            reports.append(C.verify_all(n, wf, cache_dir=args.cache_dir, max_n=bound, timings=args.timings))
    payload = [r.to_json() for r in reports]
    text = "\n".join(_report_text(r) for r in reports)
    _emit(args, payload, text, C.summary_csv(reports))
    return 0 if all(r.passed for r in reports) else 1


COMMANDS = {
    "rank": cmd_rank,
    "rs": cmd_rs,
    "tableaux": cmd_tableaux,
    "cycles": cmd_cycles,
    "mt": cmd_mt,
    "symbols": cmd_symbols,
    "cells-comb": cmd_cells_comb,
    "cells-kl": cmd_cells_kl,
    "cells": cmd_cells_kl,
    "characters": cmd_characters,
    "verify": cmd_verify,
    "report": cmd_report,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, kl.ResourceBoundExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
