"""Signed permutations: the Weyl group W_n of type B_n.

Generator 0 is ``t`` (sign change of the value 1) and generator ``i`` for
``1 <= i < n`` is ``s_i`` (swap of the values ``i`` and ``i+1``).  Products
compose as maps, ``(x*y)(i) = x(y(i))``, so ``s*x`` acts on the values of the
one-line window of ``x``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product


@dataclass(frozen=True, order=True)
class SignedPermutation:
    window: tuple

    def __post_init__(self):
        w = tuple(int(x) for x in self.window)
        if sorted(abs(x) for x in w) != list(range(1, len(w) + 1)):
            raise ValueError(f"not a signed permutation: {w}")
        object.__setattr__(self, "window", w)

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        return self.window[i - 1] if i > 0 else -self.window[-i - 1]

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        return compose(self, other)

    def inverse(self) -> "SignedPermutation":
        inv = [0] * self.n
        for i, x in enumerate(self.window, start=1):
            inv[abs(x) - 1] = i if x > 0 else -i
        return SignedPermutation(tuple(inv))

    def length_stats(self) -> tuple:
        return length_stats(self)

    def is_involution(self) -> bool:
        return self.inverse() == self

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.window)

    def __repr__(self) -> str:
        return f"SignedPermutation({self.window})"

    @classmethod
    def parse(cls, text: str) -> "SignedPermutation":
        """Parse a space separated window such as ``"-3 1 -2"``."""
        text = text.replace(",", " ").strip()
        return cls(tuple(int(tok) for tok in text.split()) if text else ())

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(tuple(range(1, n + 1)))


def compose(x: SignedPermutation, y: SignedPermutation) -> SignedPermutation:
    if x.n != y.n:
        raise ValueError(f"size mismatch: W_{x.n} and W_{y.n}")
    return SignedPermutation(tuple(x(v) for v in y.window))


def generator(i: int, n: int) -> SignedPermutation:
    w = list(range(1, n + 1))
    if i == 0:
        w[0] = -1
    elif 1 <= i < n:
        w[i - 1], w[i] = w[i], w[i - 1]
    else:
        raise ValueError(f"no generator {i} in W_{n}")
    return SignedPermutation(tuple(w))


def longest_element(n: int) -> SignedPermutation:
    return SignedPermutation(tuple(-i for i in range(1, n + 1)))


def length_stats(w: SignedPermutation) -> tuple:
    """``(length, #t, #s)`` in any reduced word, from inversion statistics."""
    win = w.window
    inv = sum(1 for i in range(len(win)) for j in range(i + 1, len(win)) if win[i] > win[j])
    neg = [x for x in win if x < 0]
    ell = inv - sum(neg)
    return ell, len(neg), ell - len(neg)


def all_elements(n: int):
    for perm in permutations(range(1, n + 1)):
        for signs in product((1, -1), repeat=n):
            yield SignedPermutation(tuple(s * p for s, p in zip(signs, perm)))


class WeylGroupB:
    """Indexed elements of W_n with multiplication and descent tables.

    Elements are ordered by length, then window, so index order refines the
    Bruhat order.
    """

    def __init__(self, n: int):
        self.n = n
        self.rank = n  # number of generators
        elems = sorted(all_elements(n), key=lambda w: (length_stats(w)[0], w.window))
        self.elements = elems
        self.index = {w: i for i, w in enumerate(elems)}
        self.size = len(elems)
        stats = [length_stats(w) for w in elems]
        self.length = [s[0] for s in stats]
        self.length_t = [s[1] for s in stats]
        self.length_s = [s[2] for s in stats]
        gens = [generator(i, n) for i in range(n)]
        self.generators = gens
        self.lmul = [[self.index[g * w] for w in elems] for g in gens]
        self.rmul = [[self.index[w * g] for w in elems] for g in gens]
        self.inv = [self.index[w.inverse()] for w in elems]
        self._words: dict = {0: ()}
        self._down: list | None = None

    def is_left_descent(self, s: int, x: int) -> bool:
        return self.length[self.lmul[s][x]] < self.length[x]

    def left_descent(self, x: int) -> int | None:
        for s in range(self.rank):
            if self.is_left_descent(s, x):
                return s
        return None

    def reduced_word(self, x: int) -> tuple:
        """Generators ``(s1, ..., sk)`` with ``x = s1 * ... * sk``."""
        if x not in self._words:
            s = self.left_descent(x)
            self._words[x] = (s,) + self.reduced_word(self.lmul[s][x])
        return self._words[x]

    def weight(self, x: int, a: int, b: int) -> int:
        return a * self.length_s[x] + b * self.length_t[x]

    def _bruhat_down_sets(self) -> list:
        # y <= x  iff  min(y, sy) <= sx  for any left descent s of x
        down = [0] * self.size
        for x in range(self.size):
            if x == 0:
                down[0] = 1
                continue
            s = self.left_descent(x)
            sx = self.lmul[s][x]
            below = down[sx]
            mask = 1 << x
            for y in range(x):
                if self.length[y] >= self.length[x]:
                    break
                sy = self.lmul[s][y]
                m = sy if self.length[sy] < self.length[y] else y
                if below >> m & 1:
                    mask |= 1 << y
            down[x] = mask
        return down

    def bruhat_leq(self, y: int, x: int) -> bool:
        if self._down is None:
            self._down = self._bruhat_down_sets()
        return bool(self._down[x] >> y & 1)


@lru_cache(maxsize=None)
def weyl_group(n: int) -> WeylGroupB:
    return WeylGroupB(n)


def bruhat_leq(y: SignedPermutation, x: SignedPermutation) -> bool:
    if y.n != x.n:
        raise ValueError("size mismatch")
    W = weyl_group(x.n)
    return W.bruhat_leq(W.index[y], W.index[x])


def cayley_distances(n: int) -> dict:
    """BFS from the identity over the Cayley graph; ``w -> (length, #t)``."""
    gens = [generator(i, n) for i in range(n)]
    start = SignedPermutation.identity(n)
    dist = {start: (0, 0)}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        ell, nt = dist[w]
        for i, g in enumerate(gens):
            u = g * w
            if u not in dist:
                dist[u] = (ell + 1, nt + (i == 0))
                queue.append(u)
    return dist
