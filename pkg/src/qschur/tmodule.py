"""The right Hecke module T with basis ``v_i`` indexed by a weight set.

``v_i H_k`` is ``q^-1 v_i`` when ``i s_k = i``, ``v_{i s_k}`` when ``i s_k`` is
higher, and ``v_{i s_k} + (q^-1 - q) v_i`` when it is lower.  Each orbit block
is isomorphic to ``x_J H`` via ``v_{rep . w} -> x_J H_w``.
"""
from __future__ import annotations

import ast
from typing import Dict, Mapping, Union

from .hecke import HeckeAlgebra, HeckeElement, NotInParabolicModule
from .laurent import ONE, QDIFF, QINV, ZERO, LaurentPoly, as_poly
from .weightsets import WeightSet

__all__ = ["TModule", "TElement"]

Scalar = Union[int, LaurentPoly]


def _accumulate(acc: Dict[int, LaurentPoly], i: int, c: LaurentPoly) -> None:
    if not c:
        return
    old = acc.get(i)
    if old is None:
        acc[i] = c
    else:
        s = old + c
        if s:
            acc[i] = s
        else:
            del acc[i]


class TElement:
    __slots__ = ("module", "_c")

    def __init__(self, module: "TModule", coeffs: Mapping[int, Scalar] = ()):
        self.module = module
        n = len(module.ws)
        self._c: Dict[int, LaurentPoly] = {}
        for i, c in dict(coeffs).items():
            if not 0 <= i < n:
                raise IndexError(f"basis index {i} out of range")
            c = as_poly(c)
            if c:
                self._c[i] = c

    @classmethod
    def _wrap(cls, module, coeffs: Dict[int, LaurentPoly]) -> "TElement":
        v = object.__new__(cls)
        v.module = module
        v._c = coeffs
        return v

    def coeff(self, i: int) -> LaurentPoly:
        return self._c.get(i, ZERO)

    def items(self):
        return self._c.items()

    def support(self):
        return self._c.keys()

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, TElement):
            return self._c == other._c
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other: "TElement") -> "TElement":
        if not isinstance(other, TElement):
            return NotImplemented
        acc = dict(self._c)
        for i, c in other._c.items():
            _accumulate(acc, i, c)
        return TElement._wrap(self.module, acc)

    def __neg__(self) -> "TElement":
        return TElement._wrap(self.module, {i: -c for i, c in self._c.items()})

    def __sub__(self, other: "TElement") -> "TElement":
        return self + (-other)

    def scale(self, c: Scalar) -> "TElement":
        c = as_poly(c)
        if not c:
            return self.module.zero()
        return TElement._wrap(self.module, {i: x * c for i, x in self._c.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return self.module.act(self, other)
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def to_json(self) -> Dict[str, Dict[str, str]]:
        ws = self.module.ws
        return {str(ws.elements[i]): self._c[i].to_json() for i in sorted(self._c)}

    def __repr__(self) -> str:
        if not self._c:
            return "0"
        ws = self.module.ws
        return " + ".join(f"({self._c[i]})*v{ws.elements[i]}" for i in sorted(self._c))


class TModule:
    def __init__(self, ws: WeightSet, hecke: HeckeAlgebra | None = None):
        self.ws = ws
        self.hecke = hecke if hecke is not None else HeckeAlgebra(ws.W)
        if self.hecke.W is not ws.W:
            raise ValueError("Hecke algebra and weight set use different Weyl groups")
        self._bar: Dict[int, TElement] = {}
        self._canonical: Dict[int, TElement] = {}

    def zero(self) -> TElement:
        return TElement._wrap(self, {})

    def basis(self, i: int) -> TElement:
        return TElement._wrap(self, {i: ONE})

    def element(self, coeffs: Mapping[int, Scalar]) -> TElement:
        return TElement(self, coeffs)

    def from_json(self, data: Mapping[str, Mapping[str, str]]) -> TElement:
        return TElement(
            self,
            {self.ws.weight_index(ast.literal_eval(k)): LaurentPoly.from_json(v) for k, v in data.items()},
        )

    def vec(self, weight) -> TElement:
        """Basis vector of a weight given as a pairing vector."""
        return self.basis(self.ws.weight_index(weight))

    # -- Hecke action -----------------------------------------------------
    def act_gen(self, v: TElement, k: int) -> TElement:
        ws = self.ws
        acc: Dict[int, LaurentPoly] = {}
        for i, c in v._c.items():
            kind, t = ws.step(i, k)
            if kind < 0:
                _accumulate(acc, i, c * QINV)
            else:
                _accumulate(acc, t, c)
                if kind > 0:
                    _accumulate(acc, i, c * QDIFF)
        return TElement._wrap(self, acc)

    def act_word(self, v: TElement, word) -> TElement:
        for k in word:
            v = self.act_gen(v, k)
        return v

    def act(self, v: TElement, h: HeckeElement) -> TElement:
        if not v._c or not h:
            return self.zero()
        W = self.ws.W
        prods: Dict[int, TElement] = {0: v}

        def times(y: int) -> TElement:
            got = prods.get(y)
            if got is None:
                got = self.act_gen(times(W.parent(y)), W.word(y)[-1])
                prods[y] = got
            return got

        acc: Dict[int, LaurentPoly] = {}
        for y in sorted(h.support()):
            c = h.coeff(y)
            for i, x in times(y)._c.items():
                _accumulate(acc, i, x * c)
        return TElement._wrap(self, acc)

    # -- identification with sums of x_J H ------------------------------------
    def omega(self, v: TElement) -> Dict[int, HeckeElement]:
        """Split ``v`` by orbit and send ``v_{rep . w}`` to ``x_J H_w``."""
        ws, hk, W = self.ws, self.hecke, self.ws.W
        out: Dict[int, HeckeElement] = {}
        grouped: Dict[int, Dict[int, LaurentPoly]] = {}
        for i, c in v._c.items():
            gamma, w = ws.locate(i)
            grouped.setdefault(gamma, {})[w] = c
        for gamma, coeffs in grouped.items():
            J = ws.orbits[gamma].J
            out[gamma] = hk.mul(hk.q_symmetrizer(J), hk.element(coeffs))
        return out

    def omega_inv(self, parts: Mapping[int, HeckeElement]) -> TElement:
        ws, hk = self.ws, self.hecke
        acc: Dict[int, LaurentPoly] = {}
        for gamma, h in parts.items():
            coeffs = hk.parabolic_decompose(ws.orbits[gamma].J, h)
            for w, c in coeffs.items():
                acc[ws.element_index(gamma, w)] = c
        return TElement._wrap(self, acc)

    # -- bar involution ---------------------------------------------------
    def bar_basis(self, i: int) -> TElement:
        """``bar(v_{rep . w}) = v_rep bar(H_w)``, fixed on antidominant vectors."""
        got = self._bar.get(i)
        if got is None:
            gamma, w = self.ws.locate(i)
            rep = self.basis(self.ws.rep_index(gamma))
            got = self.act(rep, self.hecke.bar_basis(w))
            self._bar[i] = got
        return got

    def bar(self, v: TElement) -> TElement:
        acc: Dict[int, LaurentPoly] = {}
        for i, c in v._c.items():
            cb = c.bar()
            for j, x in self.bar_basis(i)._c.items():
                _accumulate(acc, j, x * cb)
        return TElement._wrap(self, acc)

    def bar_via_omega(self, v: TElement) -> TElement:
        """The same involution computed literally as ``omega^-1 . bar . omega``."""
        return self.omega_inv({g: self.hecke.bar(h) for g, h in self.omega(v).items()})

    # -- canonical basis --------------------------------------------------
    def canonical(self, i: int) -> TElement:
        """``sum_y p_{w0^J y, w0^J w} v_{rep . y}`` over ``y`` in ``^J W``."""
        got = self._canonical.get(i)
        if got is None:
            ws = self.ws
            gamma, w = ws.locate(i)
            orb = ws.orbits[gamma]
            coeffs = self.hecke.parabolic_kl_coeffs(orb.J, w)
            got = TElement._wrap(
                self, {ws.element_index(gamma, y): c for y, c in coeffs.items()}
            )
            self._canonical[i] = got
        return got

    def canonical_coords(self, v: TElement) -> Dict[int, LaurentPoly]:
        """Expand ``v`` in the canonical basis by unitriangular back-substitution."""
        ws, W = self.ws, self.ws.W
        rest = dict(v._c)
        out: Dict[int, LaurentPoly] = {}
        while rest:
            # the top-length entry of an orbit is untouched by lower canonical vectors
            i = max(rest, key=lambda j: (W.length(ws.coset_rep(j)), j))
            c = rest[i]
            out[i] = c
            for j, x in self.canonical(i)._c.items():
                _accumulate(rest, j, -(x * c))
        return out

    def __repr__(self) -> str:
        return f"TModule({self.ws!r})"
