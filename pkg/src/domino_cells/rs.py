"""Domino Robinson-Schensted insertion of rank r and its inverse.

``w_k > 0`` enters the first row as a horizontal domino labelled ``w_k``,
``w_k < 0`` enters the first column as a vertical domino labelled ``|w_k|``.
Dominoes with larger labels are then re-placed in increasing order against
the growing shape ``mu`` of already placed labels:

* disjoint from ``mu``: unchanged;
* covered by ``mu``: bumped to the end of the next row (horizontal) or the
  bottom of the next column (vertical);
* half covered: the free square is kept and completed by the square below it
  (a horizontal domino turns vertical) or to its right (vertical turns
  horizontal).

The recording tableau gets label ``k`` on the two squares added at step ``k``.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import partitions as P
from .tableaux import DominoTableau, validate
from .weyl import SignedPermutation


@dataclass(frozen=True)
class TableauPair:
    left: DominoTableau
    right: DominoTableau

    def __post_init__(self):
        if self.left.shape != self.right.shape or self.left.rank != self.right.rank:
            raise ValueError("left and right tableaux must share shape and rank")

    @property
    def shape(self) -> tuple:
        return self.left.shape

    def to_json(self) -> dict:
        return {"left": self.left.to_json(), "right": self.right.to_json()}


def _row_length(cells: set, i: int) -> int:
    j = 0
    while (i, j + 1) in cells:
        j += 1
    return j


def _col_length(cells: set, j: int) -> int:
    i = 0
    while (i + 1, j) in cells:
        i += 1
    return i


def _is_horizontal(dom) -> bool:
    return dom[0][0] == dom[1][0]


def insert(state: dict, x: int, r: int) -> tuple:
    """Insert signed letter ``x`` into ``state`` (``{label: domino}``).

    Returns the new state and the two squares added to the shape.
    """
    label = abs(x)
    if label in state:
        raise ValueError(f"label {label} already present")
    core = set(P.squares(P.staircase(r)))
    mu = set(core)
    new: dict = {}
    for k, dom in state.items():
        if k < label:
            new[k] = dom
            mu.update(dom)
    if x > 0:
        j = _row_length(mu, 1)
        dom = ((1, j + 1), (1, j + 2))
    else:
        i = _col_length(mu, 1)
        dom = ((i + 1, 1), (i + 2, 1))
    new[label] = dom
    mu.update(dom)
    for k in sorted(k for k in state if k > label):
        dom = state[k]
        covered = [sq for sq in dom if sq in mu]
        if not covered:
            moved = dom
        elif len(covered) == 2:
            if _is_horizontal(dom):
                i = dom[0][0] + 1
                j = _row_length(mu, i)
                moved = ((i, j + 1), (i, j + 2))
            else:
                j = dom[0][1] + 1
                i = _col_length(mu, j)
                moved = ((i + 1, j), (i + 2, j))
        else:
            (fi, fj), = [sq for sq in dom if sq not in mu]
            moved = ((fi, fj), (fi + 1, fj)) if _is_horizontal(dom) else ((fi, fj), (fi, fj + 1))
        new[k] = moved
        mu.update(moved)
    old_cells = core.union(*state.values()) if state else core
    added = tuple(sorted(mu - old_cells))
    assert len(added) == 2, added
    return dict(sorted(new.items())), added


def uninsert(state: dict, added, r: int) -> tuple:
    """Undo :func:`insert` given the two squares it added; returns ``(state, x)``."""
    excess = set(added)
    old: dict = {}
    shape_cells = set(P.squares(P.staircase(r))).union(*state.values()) if state else set()
    letter = None
    for k in sorted(state, reverse=True):
        dom = state[k]
        mu = shape_cells - set(dom)  # squares of labels < k (and the core)
        hit = [sq for sq in dom if sq in excess]
        if letter is not None:
            old[k] = dom
        elif not hit:
            old[k] = dom
        elif len(hit) == 2:
            horizontal = _is_horizontal(dom)
            if horizontal and dom[0][0] == 1:
                letter = k
            elif not horizontal and dom[0][1] == 1:
                letter = -k
            elif horizontal:
                i = dom[0][0] - 1
                j = _row_length(mu, i)
                prev = ((i, j - 1), (i, j))
                old[k] = prev
                excess = set(prev)
            else:
                j = dom[0][1] - 1
                i = _col_length(mu, j)
                prev = ((i - 1, j), (i, j))
                old[k] = prev
                excess = set(prev)
        else:
            (b, c) = dom
            if hit[0] != c:
                raise ValueError("pair is not in the image of the insertion")
            prev = ((b[0], b[1] - 1), b) if b[0] != c[0] else ((b[0] - 1, b[1]), b)
            old[k] = tuple(sorted(prev))
            excess = (excess - {c}) | {prev[0]}
        shape_cells = mu
    if letter is None:
        raise ValueError("pair is not in the image of the insertion")
    return dict(sorted(old.items())), letter


def g_r(w: SignedPermutation, r: int, trace: list | None = None) -> TableauPair:
    """Left (insertion) and right (recording) tableaux of ``w`` in rank ``r``."""
    state: dict = {}
    record: dict = {}
    for step, x in enumerate(w.window, start=1):
        state, added = insert(state, x, r)
        record[step] = added
        if trace is not None:
            trace.append({
                "step": step,
                "letter": x,
                "insertion": _partial_json(state, r),
                "recording": _partial_json(record, r),
            })
    return TableauPair(DominoTableau.from_dominoes(r, state), DominoTableau.from_dominoes(r, record))


def _partial_json(doms: dict, r: int) -> dict:
    T = DominoTableau.from_dominoes(r, doms)
    return T.to_json()


def right_tableau(w: SignedPermutation, r: int) -> DominoTableau:
    return g_r(w, r).right


def left_tableau(w: SignedPermutation, r: int) -> DominoTableau:
    return g_r(w, r).left


def g_r_inverse(pair: TableauPair) -> SignedPermutation:
    S, T = pair.left, pair.right
    if not (validate(S) and validate(T)):
        raise ValueError("both tableaux must be standard")
    if S.shape != T.shape or S.rank != T.rank:
        raise ValueError("shape mismatch")
    r = S.rank
    state = dict(S.dominoes)
    record = dict(T.dominoes)
    letters = []
    for step in range(len(record), 0, -1):
        state, x = uninsert(state, record.pop(step), r)
        letters.append(x)
    return SignedPermutation(tuple(reversed(letters)))
