"""Sparse Laurent polynomials in ``v`` with integer coefficients."""
from __future__ import annotations


class LaurentPolynomial:
    """Immutable ``{exponent: coefficient}`` with no zero coefficients stored."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs=None):
        if coeffs is None:
            self._c = {}
        elif isinstance(coeffs, LaurentPolynomial):
            self._c = coeffs._c
        else:
            self._c = {int(e): int(c) for e, c in dict(coeffs).items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, d: dict) -> "LaurentPolynomial":
        obj = cls.__new__(cls)
        obj._c = d
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPolynomial":
        return cls._raw({exp: coeff} if coeff else {})

    @classmethod
    def constant(cls, c: int) -> "LaurentPolynomial":
        return cls.monomial(0, c)

    @property
    def coeffs(self) -> dict:
        return dict(self._c)

    def items(self):
        return sorted(self._c.items())

    def __bool__(self):
        return bool(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        out = dict(self._c)
        for e, c in other._c.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPolynomial._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial._raw({e: -c for e, c in self._c.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPolynomial._raw({e: c * other for e, c in self._c.items()} if other else {})
        out: dict = {}
        for e1, c1 in self._c.items():
            for e2, c2 in other._c.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPolynomial._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPolynomial":
        """Multiply by ``v**k``."""
        return LaurentPolynomial._raw({e + k: c for e, c in self._c.items()})

    def bar(self) -> "LaurentPolynomial":
        """The ring involution ``v -> v**-1``."""
        return LaurentPolynomial._raw({-e: c for e, c in self._c.items()})

    def is_bar_invariant(self) -> bool:
        return self == self.bar()

    def degree(self):
        """Highest exponent; ``None`` for the zero polynomial."""
        return max(self._c) if self._c else None

    def low_degree(self):
        return min(self._c) if self._c else None

    def leading_coefficient(self) -> int:
        return self._c[max(self._c)] if self._c else 0

    def coefficient(self, e: int) -> int:
        return self._c.get(e, 0)

    def evaluate(self, v=1):
        if v == 1:
            return sum(self._c.values())
        return sum(c * v ** e for e, c in self._c.items())

    def negative_part(self) -> "LaurentPolynomial":
        return LaurentPolynomial._raw({e: c for e, c in self._c.items() if e < 0})

    def bar_invariant_completion(self) -> "LaurentPolynomial":
        """The bar-invariant polynomial agreeing with ``self`` in degrees >= 0."""
        out = {}
        for e, c in self._c.items():
            if e > 0:
                out[e] = c
                out[-e] = c
            elif e == 0:
                out[0] = c
        return LaurentPolynomial._raw(out)

    def to_json(self) -> list:
        return [[e, c] for e, c in sorted(self._c.items())]

    @classmethod
    def from_json(cls, pairs) -> "LaurentPolynomial":
        return cls({e: c for e, c in pairs})

    def __repr__(self):
        return f"LaurentPolynomial({self.to_json()})"

    def __str__(self):
        if not self._c:
            return "0"
        terms = []
        for e, c in sorted(self._c.items(), reverse=True):
            if e == 0:
                mono = str(abs(c))
            else:
                coef = "" if abs(c) == 1 else f"{abs(c)}*"
                mono = f"{coef}v" if e == 1 else f"{coef}v^{e}"
            terms.append(("-" if c < 0 else "+") + mono)
        s = " ".join(terms)
        return s[1:] if s.startswith("+") else s


ZERO = LaurentPolynomial()
ONE = LaurentPolynomial.constant(1)


def v(k: int = 1) -> LaurentPolynomial:
    return LaurentPolynomial.monomial(k)
