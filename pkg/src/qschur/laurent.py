"""Exact Laurent polynomials in one variable q over the integers.

This is the ground ring A = Z[q, q^-1] used throughout the package.  Values
are immutable and hashable; coefficients are Python ints, so there is no
overflow.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Union

__all__ = [
    "LaurentPoly",
    "ZERO",
    "ONE",
    "Q",
    "QINV",
    "QDIFF",
    "add",
    "mul",
    "bar",
    "in_qZq",
    "in_Nqq",
    "is_in_qNq",
    "as_poly",
    "poly_sum",
]

Scalar = Union[int, "LaurentPoly"]


class LaurentPoly:
    """A sparse element of Z[q, q^-1] stored as ``{exponent: coefficient}``.

    No stored coefficient is ever zero, so equality of values is equality
    of the term maps.
    """

    __slots__ = ("_t", "_h")

    def __init__(self, terms: Union[Mapping[int, int], int, None] = None):
        if terms is None:
            self._t: Dict[int, int] = {}
        elif isinstance(terms, int):
            self._t = {0: terms} if terms else {}
        else:
            self._t = {int(e): int(c) for e, c in terms.items() if c}
        self._h = None

    @classmethod
    def _wrap(cls, terms: Dict[int, int]) -> "LaurentPoly":
        # caller guarantees there are no zero coefficients
        p = object.__new__(cls)
        p._t = terms
        p._h = None
        return p

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls._wrap({exponent: coeff} if coeff else {})

    # -- inspection -------------------------------------------------------
    @property
    def terms(self) -> Dict[int, int]:
        return dict(self._t)

    def items(self):
        return self._t.items()

    def coeff(self, exponent: int) -> int:
        return self._t.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self) -> bool:
        return bool(self._t)

    def min_degree(self) -> int:
        if not self._t:
            raise ValueError("zero polynomial has no degree")
        return min(self._t)

    def max_degree(self) -> int:
        if not self._t:
            raise ValueError("zero polynomial has no degree")
        return max(self._t)

    def is_monomial(self) -> bool:
        return len(self._t) == 1

    def constant(self) -> int:
        return self._t.get(0, 0)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other: Scalar) -> "LaurentPoly":
        if isinstance(other, int):
            if not other:
                return self
            other = LaurentPoly(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        if not other._t:
            return self
        if not self._t:
            return other
        t = dict(self._t)
        for e, c in other._t.items():
            s = t.get(e, 0) + c
            if s:
                t[e] = s
            else:
                del t[e]
        return LaurentPoly._wrap(t)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._wrap({e: -c for e, c in self._t.items()})

    def __sub__(self, other: Scalar) -> "LaurentPoly":
        if isinstance(other, int):
            return self + (-other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other: Scalar) -> "LaurentPoly":
        if isinstance(other, int):
            if not other:
                return ZERO
            if other == 1:
                return self
            return LaurentPoly._wrap({e: c * other for e, c in self._t.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._t, other._t
        if not a or not b:
            return ZERO
        if len(a) == 1:
            (ea, ca), = a.items()
            return LaurentPoly._wrap({ea + e: ca * c for e, c in b.items()})
        if len(b) == 1:
            (eb, cb), = b.items()
            return LaurentPoly._wrap({eb + e: cb * c for e, c in a.items()})
        t: Dict[int, int] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = ea + eb
                t[e] = t.get(e, 0) + ca * cb
        return LaurentPoly._wrap({e: c for e, c in t.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if not self.is_monomial() or abs(next(iter(self._t.values()))) != 1:
                raise ValueError("only units q^k and -q^k can be inverted in A")
            (e, c), = self._t.items()
            return LaurentPoly._wrap({e * n: c ** -n})
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q^k."""
        if not k:
            return self
        return LaurentPoly._wrap({e + k: c for e, c in self._t.items()})

    def bar(self) -> "LaurentPoly":
        """The ring involution q -> q^-1."""
        return LaurentPoly._wrap({-e: c for e, c in self._t.items()})

    def evaluate(self, x):
        """Value at q = x; ``x`` may be an int, Fraction or any field element."""
        if isinstance(x, int):
            x = Fraction(x)
        total = 0 * x
        for e, c in self._t.items():
            total += c * x ** e
        return total

    # -- predicates -------------------------------------------------------
    def in_qZq(self) -> bool:
        """True iff every exponent is at least 1 (membership in qZ[q])."""
        return all(e >= 1 for e in self._t)

    def in_Nqq(self) -> bool:
        """True iff every coefficient is nonnegative (membership in N[q, q^-1])."""
        return all(c > 0 for c in self._t.values())

    # -- comparison / hashing ---------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self._t == other._t
        if isinstance(other, int):
            return self._t == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._h is None:
            self._h = hash(frozenset(self._t.items()))
        return self._h

    # -- (de)serialisation ------------------------------------------------
    def to_json(self) -> Dict[str, str]:
        return {str(e): str(self._t[e]) for e in sorted(self._t)}

    @classmethod
    def from_json(cls, obj: Mapping[str, str]) -> "LaurentPoly":
        return cls({int(e): int(c) for e, c in obj.items()})

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        if not self._t:
            return "0"
        parts = []
        for e in sorted(self._t):
            c = self._t[e]
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if e == 0:
                body = str(a)
            else:
                mono = "q" if e == 1 else f"q^{e}"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


ZERO = LaurentPoly()
ONE = LaurentPoly(1)
Q = LaurentPoly.monomial(1)
QINV = LaurentPoly.monomial(-1)
#: q^-1 - q, the coefficient in the quadratic relation
QDIFF = LaurentPoly({-1: 1, 1: -1})


def as_poly(x: Scalar) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")


def add(a: Scalar, b: Scalar) -> LaurentPoly:
    return as_poly(a) + as_poly(b)


def mul(a: Scalar, b: Scalar) -> LaurentPoly:
    return as_poly(a) * as_poly(b)


def bar(a: Scalar) -> LaurentPoly:
    return as_poly(a).bar()


def in_qZq(a: Scalar) -> bool:
    return as_poly(a).in_qZq()


def in_Nqq(a: Scalar) -> bool:
    return as_poly(a).in_Nqq()


def is_in_qNq(a: Scalar, nonneg: bool = False) -> bool:
    """Membership in qZ[q]; with ``nonneg`` instead membership in N[q, q^-1]."""
    return in_Nqq(a) if nonneg else in_qZq(a)


def poly_sum(items: Iterable[LaurentPoly]) -> LaurentPoly:
    t: Dict[int, int] = {}
    for p in items:
        for e, c in p._t.items():
            t[e] = t.get(e, 0) + c
    return LaurentPoly._wrap({e: c for e, c in t.items() if c})
