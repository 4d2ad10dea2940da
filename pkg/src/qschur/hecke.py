"""The Iwahori-Hecke algebra over Z[q, q^-1] with quadratic relation (H - q^-1)(H + q) = 0.

Kazhdan-Lusztig elements use the normalization in which ``C_w`` is bar
invariant and ``C_w = H_w + sum_{y<w} p_{y,w} H_y`` with ``p_{y,w}`` in qZ[q].
The classical polynomials are recovered by ``p_{y,w} = q^{l(w)-l(y)} P_{y,w}(q^-2)``.
"""
from __future__ import annotations

import threading
from typing import Dict, Iterable, Mapping, Tuple, Union

from .laurent import ONE, Q, QDIFF, ZERO, LaurentPoly, as_poly
from .weylgroup import WeylGroup

__all__ = ["HeckeAlgebra", "HeckeElement", "NotInParabolicModule"]

Scalar = Union[int, LaurentPoly]


class NotInParabolicModule(ValueError):
    pass


def _accumulate(acc: Dict[int, LaurentPoly], w: int, c: LaurentPoly) -> None:
    if not c:
        return
    old = acc.get(w)
    if old is None:
        acc[w] = c
    else:
        s = old + c
        if s:
            acc[w] = s
        else:
            del acc[w]


class HeckeElement:
    """An immutable element ``sum_w c_w H_w``; ``w`` ranges over group ids."""

    __slots__ = ("algebra", "_c")

    def __init__(self, algebra: "HeckeAlgebra", coeffs: Mapping[int, Scalar] = ()):
        self.algebra = algebra
        self._c: Dict[int, LaurentPoly] = {}
        for w, c in dict(coeffs).items():
            c = as_poly(c)
            if c:
                self._c[w] = c

    @classmethod
    def _wrap(cls, algebra, coeffs: Dict[int, LaurentPoly]) -> "HeckeElement":
        h = object.__new__(cls)
        h.algebra = algebra
        h._c = coeffs
        return h

    def coeff(self, w: int) -> LaurentPoly:
        return self._c.get(w, ZERO)

    def items(self):
        return self._c.items()

    def support(self):
        return self._c.keys()

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, HeckeElement):
            return self._c == other._c
        if isinstance(other, int):
            return self == self.algebra.scalar(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        if not isinstance(other, HeckeElement):
            if isinstance(other, (int, LaurentPoly)):
                other = self.algebra.scalar(other)
            else:
                return NotImplemented
        acc = dict(self._c)
        for w, c in other._c.items():
            _accumulate(acc, w, c)
        return HeckeElement._wrap(self.algebra, acc)

    __radd__ = __add__

    def __neg__(self) -> "HeckeElement":
        return HeckeElement._wrap(self.algebra, {w: -c for w, c in self._c.items()})

    def __sub__(self, other) -> "HeckeElement":
        return self + (-other)

    def __rsub__(self, other) -> "HeckeElement":
        return (-self) + other

    def scale(self, c: Scalar) -> "HeckeElement":
        c = as_poly(c)
        if not c:
            return self.algebra.zero()
        return HeckeElement._wrap(self.algebra, {w: x * c for w, x in self._c.items()})

    def __mul__(self, other) -> "HeckeElement":
        if isinstance(other, HeckeElement):
            return self.algebra.mul(self, other)
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other) -> "HeckeElement":
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def bar(self) -> "HeckeElement":
        return self.algebra.bar(self)

    def to_json(self):
        W = self.algebra.W
        return [{"word": W.format(w), "poly": self._c[w].to_json()} for w in sorted(self._c)]

    def __repr__(self) -> str:
        if not self._c:
            return "0"
        W = self.algebra.W
        parts = []
        for w in sorted(self._c):
            c = self._c[w]
            name = "1" if w == 0 else f"H[{W.format(w)}]"
            parts.append(f"({c})*{name}")
        return " + ".join(parts)


class HeckeAlgebra:
    def __init__(self, W: WeylGroup):
        self.W = W
        self._bar_basis: Dict[int, HeckeElement] = {}
        self._kl: Dict[int, HeckeElement] = {}
        self._symmetrizers: Dict[frozenset, HeckeElement] = {}
        self._lock = threading.RLock()

    # -- constructors -----------------------------------------------------
    def zero(self) -> HeckeElement:
        return HeckeElement._wrap(self, {})

    def one(self) -> HeckeElement:
        return HeckeElement._wrap(self, {0: ONE})

    def scalar(self, c: Scalar) -> HeckeElement:
        return HeckeElement(self, {0: c})

    def H(self, w: int) -> HeckeElement:
        return HeckeElement._wrap(self, {w: ONE})

    def gen(self, k: int) -> HeckeElement:
        return self.H(self.W.gen(k))

    def element(self, coeffs: Mapping[int, Scalar]) -> HeckeElement:
        return HeckeElement(self, coeffs)

    def from_json(self, data) -> HeckeElement:
        return HeckeElement(
            self, {self.W.parse(t["word"]): LaurentPoly.from_json(t["poly"]) for t in data}
        )

    # -- multiplication ---------------------------------------------------
    def mul_gen(self, h: HeckeElement, k: int) -> HeckeElement:
        """Right multiplication by ``H_k``."""
        W = self.W
        acc: Dict[int, LaurentPoly] = {}
        for w, c in h._c.items():
            ws = W.rmul_gen(w, k)
            _accumulate(acc, ws, c)
            if W.is_right_descent(w, k):
                _accumulate(acc, w, c * QDIFF)
        return HeckeElement._wrap(self, acc)

    def mul_word(self, h: HeckeElement, word: Iterable[int]) -> HeckeElement:
        for k in word:
            h = self.mul_gen(h, k)
        return h

    def mul(self, a: HeckeElement, b: HeckeElement) -> HeckeElement:
        if not a._c or not b._c:
            return self.zero()
        W = self.W
        # a H_y for every y in supp(b), sharing prefixes of least reduced words
        prods: Dict[int, HeckeElement] = {0: a}

        def times(y: int) -> HeckeElement:
            got = prods.get(y)
            if got is None:
                got = self.mul_gen(times(W.parent(y)), W.word(y)[-1])
                prods[y] = got
            return got

        acc: Dict[int, LaurentPoly] = {}
        for y in sorted(b._c):
            c = b._c[y]
            for w, x in times(y)._c.items():
                _accumulate(acc, w, x * c)
        return HeckeElement._wrap(self, acc)

    # -- bar involution ---------------------------------------------------
    def bar_basis(self, w: int) -> HeckeElement:
        """``bar(H_w)``, built from ``bar(H_k) = H_k + q - q^-1``."""
        got = self._bar_basis.get(w)
        if got is not None:
            return got
        if w == 0:
            res = self.one()
        else:
            W = self.W
            p = self.bar_basis(W.parent(w))
            k = W.word(w)[-1]
            res = self.mul_gen(p, k) - p.scale(QDIFF)
        with self._lock:
            self._bar_basis[w] = res
        return res

    def bar(self, h: HeckeElement) -> HeckeElement:
        acc: Dict[int, LaurentPoly] = {}
        for w, c in h._c.items():
            cb = c.bar()
            for y, x in self.bar_basis(w)._c.items():
                _accumulate(acc, y, x * cb)
        return HeckeElement._wrap(self, acc)

    def is_bar_invariant(self, h: HeckeElement) -> bool:
        return self.bar(h) == h

    # -- distinguished elements -------------------------------------------
    def subset_sum(self, Y: Iterable[int]) -> HeckeElement:
        """``H_Y = sum_{w in Y} q^-l(w) H_w``."""
        W = self.W
        return HeckeElement._wrap(self, {w: LaurentPoly.monomial(-W.length(w)) for w in set(Y)})

    def q_symmetrizer(self, J: Iterable[int]) -> HeckeElement:
        J = frozenset(J)
        got = self._symmetrizers.get(J)
        if got is not None:
            return got
        W = self.W
        par = W.parabolic(J)
        top = W.length(par.longest)
        res = HeckeElement._wrap(
            self, {w: LaurentPoly.monomial(top - W.length(w)) for w in par.elements}
        )
        with self._lock:
            self._symmetrizers[J] = res
        return res

    # -- Kazhdan-Lusztig basis --------------------------------------------
    def kl_elt(self, w: int) -> HeckeElement:
        got = self._kl.get(w)
        if got is not None:
            return got
        with self._lock:
            return self._kl_fill(w)

    def _kl_fill(self, w: int) -> HeckeElement:
        got = self._kl.get(w)
        if got is not None:
            return got
        if w == 0:
            res = self.one()
        else:
            W = self.W
            x = W.parent(w)
            s = W.word(w)[-1]
            cx = self._kl_fill(x)
            # C_x C_s = C_{xs} + sum_{z < x, zs < z} mu(z, x) C_z
            res = self.mul_gen(cx, s) + cx.scale(Q)
            for z, p in cx._c.items():
                if z != x and W.is_right_descent(z, s):
                    mu = p.coeff(1)
                    if mu:
                        res = res - self._kl_fill(z).scale(mu)
        self._kl[w] = res
        return res

    def kl_poly(self, y: int, w: int) -> LaurentPoly:
        """Coefficient of ``H_y`` in ``C_w``."""
        return self.kl_elt(w).coeff(y)

    def classical_kl(self, y: int, w: int) -> Dict[int, int]:
        """Classical ``P_{y,w}`` as ``{degree: coefficient}`` in its own variable."""
        p = self.kl_poly(y, w)
        shift = self.W.length(w) - self.W.length(y)
        out = {}
        for e, c in p.items():
            deg, rem = divmod(shift - e, 2)
            assert rem == 0 and deg >= 0
            out[deg] = c
        return out

    def mu(self, y: int, w: int) -> int:
        return self.kl_poly(y, w).coeff(1)

    # -- parabolic Kazhdan-Lusztig basis ----------------------------------
    def parabolic_decompose(self, J: Iterable[int], h: HeckeElement) -> Dict[int, LaurentPoly]:
        """Coefficients ``c_y`` (``y`` in ``^J W``) with ``h = x_J sum_y c_y H_y``."""
        W = self.W
        J = frozenset(J)
        par = W.parabolic(J)
        top = par.longest
        coeffs = {}
        for y in par.min_reps:
            c = h.coeff(W.mul(top, y))
            if c:
                coeffs[y] = c
        recon = self.mul(self.q_symmetrizer(J), self.element(coeffs))
        if recon != h:
            raise NotInParabolicModule(f"element does not lie in x_J H for J={sorted(J)}")
        return coeffs

    def parabolic_kl_elt(self, J: Iterable[int], w: int, check: bool = True) -> HeckeElement:
        """``C^J_w`` for ``w`` in ``^J W``, equal to ``C_{w0^J w}``."""
        W = self.W
        J = frozenset(J)
        par = W.parabolic(J)
        if any(W.is_left_descent(w, j) for j in J):
            raise ValueError(f"{W.format(w)} is not a minimal coset representative for J={sorted(J)}")
        res = self.kl_elt(W.mul(par.longest, w))
        if check:
            if not self.is_bar_invariant(res):
                raise AssertionError("parabolic KL element is not bar invariant")
            coeffs = self.parabolic_decompose(J, res)
            if coeffs.get(w) != ONE:
                raise AssertionError("parabolic KL element has wrong leading term")
            for y, c in coeffs.items():
                if y != w and not (c.in_qZq() and W.bruhat_leq(y, w)):
                    raise AssertionError("parabolic KL element is not qZ[q]-unitriangular")
        return res

    def parabolic_kl_coeffs(self, J: Iterable[int], w: int) -> Dict[int, LaurentPoly]:
        """Coefficients of ``C^J_w`` on ``x_J H_y``, read at ``w0^J y``."""
        W = self.W
        par = W.parabolic(J)
        top = par.longest
        cw = self.kl_elt(W.mul(top, w))
        out = {}
        for y in par.min_reps:
            c = cw.coeff(W.mul(top, y))
            if c:
                out[y] = c
        return out

    def __repr__(self) -> str:
        return f"HeckeAlgebra({self.W.datum.type_label})"
