"""The q-Schur algebra ``End_H(T)`` as sparse matrices over Z[q, q^-1].

Column ``j`` of an element is the image of ``v_j``; entry ``(i, j)`` is the
coordinate function ``c_{i,j}``.  Bases are indexed by triples ``(gamma, g, nu)``
from :mod:`qschur.weightsets`:

* ``eta`` is the dual basis to the coordinates at transversal pairs,
* ``phi = q^(l(w0^nu) - l(w0^gamma) - l(g)) eta``,
* ``std = q^(l(g+) - l(w0^nu)) phi`` (the standard basis),
* ``canonical`` is the bar-invariant basis, qZ[q]-unitriangular over ``std``.
"""
from __future__ import annotations

import random
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .hecke import HeckeAlgebra, HeckeElement
from .laurent import ONE, QDIFF, QINV, ZERO, LaurentPoly, as_poly
from .tmodule import TElement, TModule
from .weightsets import WeightSet, XiTriple, pair_to_xi, xi_to_pair

__all__ = ["SchurAlgebra", "SchurElement", "NotInSchurAlgebra", "PositivityError"]

Scalar = Union[int, LaurentPoly]
Columns = Dict[int, Dict[int, LaurentPoly]]


class NotInSchurAlgebra(ValueError):
    pass


class PositivityError(AssertionError):
    pass


def _accumulate(acc: Dict, key, c: LaurentPoly) -> None:
    if not c:
        return
    old = acc.get(key)
    if old is None:
        acc[key] = c
    else:
        s = old + c
        if s:
            acc[key] = s
        else:
            del acc[key]


class SchurElement:
    __slots__ = ("algebra", "_cols")

    def __init__(self, algebra: "SchurAlgebra", cols: Columns):
        self.algebra = algebra
        self._cols = {j: col for j, col in cols.items() if col}

    @classmethod
    def from_entries(cls, algebra: "SchurAlgebra", entries: Mapping[Tuple[int, int], Scalar]):
        cols: Columns = {}
        for (i, j), c in entries.items():
            c = as_poly(c)
            if c:
                cols.setdefault(j, {})[i] = c
        return cls(algebra, cols)

    def entry(self, i: int, j: int) -> LaurentPoly:
        col = self._cols.get(j)
        if col is None:
            return ZERO
        return col.get(i, ZERO)

    def entries(self):
        for j, col in self._cols.items():
            for i, c in col.items():
                yield (i, j), c

    def column(self, j: int) -> TElement:
        return TElement._wrap(self.algebra.T, dict(self._cols.get(j, {})))

    def apply(self, v: TElement) -> TElement:
        acc: Dict[int, LaurentPoly] = {}
        for j, c in v.items():
            col = self._cols.get(j)
            if col:
                for i, x in col.items():
                    _accumulate(acc, i, x * c)
        return TElement._wrap(self.algebra.T, acc)

    def __call__(self, v: TElement) -> TElement:
        return self.apply(v)

    def __bool__(self) -> bool:
        return bool(self._cols)

    def __eq__(self, other) -> bool:
        if isinstance(other, SchurElement):
            return self._cols == other._cols
        return NotImplemented

    def __hash__(self):
        return hash(frozenset((j, frozenset(c.items())) for j, c in self._cols.items()))

    def __add__(self, other: "SchurElement") -> "SchurElement":
        if not isinstance(other, SchurElement):
            return NotImplemented
        cols = {j: dict(c) for j, c in self._cols.items()}
        for j, col in other._cols.items():
            dst = cols.setdefault(j, {})
            for i, c in col.items():
                _accumulate(dst, i, c)
        return SchurElement(self.algebra, cols)

    def __neg__(self) -> "SchurElement":
        return SchurElement(self.algebra, {j: {i: -c for i, c in col.items()} for j, col in self._cols.items()})

    def __sub__(self, other: "SchurElement") -> "SchurElement":
        return self + (-other)

    def scale(self, c: Scalar) -> "SchurElement":
        c = as_poly(c)
        if not c:
            return self.algebra.zero()
        return SchurElement(self.algebra, {j: {i: x * c for i, x in col.items()} for j, col in self._cols.items()})

    def __mul__(self, other):
        """``a * b`` is the composition ``a o b`` (apply ``b`` first)."""
        if isinstance(other, SchurElement):
            return self.algebra.compose(self, other)
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def evaluate(self, x) -> Dict[Tuple[int, int], object]:
        """Nonzero entries at ``q = x`` as ``{(i, j): value}``."""
        out = {}
        for (i, j), c in self.entries():
            v = c.evaluate(x)
            if v:
                out[i, j] = v
        return out

    def to_json(self) -> List[dict]:
        """Entries as ``[{"row": weight, "col": weight, "poly": {...}}]`` in index order."""
        els = self.algebra.ws.elements
        return [
            {"row": list(els[i]), "col": list(els[j]), "poly": c.to_json()}
            for (i, j), c in sorted(self.entries())
        ]

    def __repr__(self) -> str:
        return f"SchurElement(nnz={sum(len(c) for c in self._cols.values())})"


class SchurAlgebra:
    def __init__(self, ws: WeightSet, hecke: Optional[HeckeAlgebra] = None):
        self.ws = ws
        self.T = TModule(ws, hecke)
        self.hecke = self.T.hecke
        self.W = ws.W
        self._eta: Dict[XiTriple, SchurElement] = {}
        self._canonical: Dict[XiTriple, SchurElement] = {}

    # -- basic elements ---------------------------------------------------
    def zero(self) -> SchurElement:
        return SchurElement(self, {})

    def identity(self) -> SchurElement:
        return SchurElement(self, {j: {j: ONE} for j in range(len(self.ws))})

    def idempotent(self, gamma: int) -> SchurElement:
        orb = self.ws.orbits[gamma]
        return SchurElement(self, {j: {j: ONE} for j in range(orb.offset, orb.offset + orb.size)})

    def xi(self) -> List[XiTriple]:
        return self.ws.xi()

    def from_json(self, data: Iterable[Mapping]) -> SchurElement:
        ws = self.ws
        return SchurElement.from_entries(
            self,
            {
                (ws.weight_index(e["row"]), ws.weight_index(e["col"])): LaurentPoly.from_json(e["poly"])
                for e in data
            },
        )

    # -- membership -------------------------------------------------------
    def is_member(self, a: SchurElement) -> bool:
        """All coordinate relations that express commuting with every ``H_k``."""
        return self.first_violation(a) is None

    def first_violation(self, a: SchurElement) -> Optional[Tuple[int, int, int]]:
        ws = self.ws
        n = len(ws)
        c = a.entry
        for k in ws.datum.simple_indices:
            for j in range(n):
                kj, tj = ws.step(j, k)
                for i in range(n):
                    ki, ti = ws.step(i, k)
                    if ki == 1 and kj == -1:
                        ok = c(i, j) == c(ti, j) * QINV
                    elif ki == -1 and kj == 1:
                        ok = c(i, j) == c(i, tj) * QINV
                    elif ki == 0 and kj == 1:
                        ok = c(i, j) == c(ti, tj)
                    elif ki == 1 and kj == 1:
                        ok = c(i, j) == c(ti, tj) + c(i, tj) * QDIFF
                    else:
                        continue
                    if not ok:
                        return (i, j, k)
        return None

    def commutes_with_hecke(self, a: SchurElement) -> bool:
        """Direct check ``a(v_j H_k) = a(v_j) H_k`` on every basis vector."""
        T = self.T
        for j in range(len(self.ws)):
            vj = T.basis(j)
            for k in self.ws.datum.simple_indices:
                if a.apply(T.act_gen(vj, k)) != T.act_gen(a.apply(vj), k):
                    return False
        return True

    def _require_member(self, a: SchurElement) -> None:
        bad = self.first_violation(a)
        if bad is not None:
            i, j, k = bad
            raise NotInSchurAlgebra(f"coordinate relation fails at i={i}, j={j}, k={k}")

    # -- columns extended by H-linearity ----------------------------------
    def _extend(self, nu: int, col: TElement) -> Columns:
        """Columns of the nu-block determined by the image ``col`` of ``v_rep``."""
        ws, W, T = self.ws, self.W, self.T
        orb = ws.orbits[nu]
        images = {0: col}
        cols: Columns = {}
        for w in orb.min_reps:
            if w:
                images[w] = T.act_gen(images[W.parent(w)], W.word(w)[-1])
            v = images[w]
            if v:
                cols[ws.element_index(nu, w)] = dict(v.items())
        return cols

    def from_rep_images(self, images: Mapping[int, TElement]) -> SchurElement:
        """The H-linear map sending ``v_{rep_nu}`` to ``images[nu]``."""
        cols: Columns = {}
        for nu, col in images.items():
            cols.update(self._extend(nu, col))
        return SchurElement(self, cols)

    # -- eta, phi and the standard basis ----------------------------------
    def eta_xi(self, xi: XiTriple) -> SchurElement:
        got = self._eta.get(xi)
        if got is not None:
            return got
        ws, W = self.ws, self.W
        dc = ws.double_coset(xi)
        J = ws.orbits[xi.gamma].J
        lg = W.length(xi.g)
        col = {}
        for w in dc.elements:
            if not any(W.is_left_descent(w, j) for j in J):
                col[ws.element_index(xi.gamma, w)] = LaurentPoly.monomial(lg - W.length(w))
        got = self.from_rep_images({xi.nu: TElement._wrap(self.T, col)})
        self._eta[xi] = got
        return got

    def eta(self, i: int, j: int) -> SchurElement:
        """Dual element to the coordinate ``c_{i,j}`` at a transversal pair."""
        return self.eta_xi(pair_to_xi(self.ws, i, j))

    def phi_exponent(self, xi: XiTriple) -> int:
        W, ws = self.W, self.ws
        return (
            W.length(ws.orbits[xi.nu].parabolic.longest)
            - W.length(ws.orbits[xi.gamma].parabolic.longest)
            - W.length(xi.g)
        )

    def std_exponent(self, xi: XiTriple) -> int:
        """Rescaling from ``phi`` to the standard basis: ``l(g+) - l(w0^nu)``."""
        return self.W.length(self.ws.g_plus(xi)) - self.W.length(self.ws.orbits[xi.nu].parabolic.longest)

    def eta_to_std_exponent(self, xi: XiTriple) -> int:
        return self.phi_exponent(xi) + self.std_exponent(xi)

    def phi(self, xi: XiTriple) -> SchurElement:
        return self.eta_xi(xi).scale(LaurentPoly.monomial(self.phi_exponent(xi)))

    def std(self, xi: XiTriple) -> SchurElement:
        return self.eta_xi(xi).scale(LaurentPoly.monomial(self.eta_to_std_exponent(xi)))

    def phi_via_hecke(self, xi: XiTriple) -> SchurElement:
        """``x_nu -> q^l(w0^nu) H_{W_gamma g W_nu}`` transported back through the orbit isomorphism."""
        ws, hk = self.ws, self.hecke
        dc = ws.double_coset(xi)
        top = self.W.length(ws.orbits[xi.nu].parabolic.longest)
        image = hk.subset_sum(dc.elements).scale(LaurentPoly.monomial(top))
        col = self.T.omega_inv({xi.gamma: image})
        return self.from_rep_images({xi.nu: col})

    # -- composition and coordinates --------------------------------------
    def compose(self, a: SchurElement, b: SchurElement) -> SchurElement:
        cols: Columns = {}
        for j, col in b._cols.items():
            acc: Dict[int, LaurentPoly] = {}
            for k, c in col.items():
                ak = a._cols.get(k)
                if ak:
                    for i, x in ak.items():
                        _accumulate(acc, i, x * c)
            if acc:
                cols[j] = acc
        return SchurElement(self, cols)

    def coords(self, a: SchurElement, check: bool = True) -> Dict[XiTriple, LaurentPoly]:
        """Coefficients of ``a`` on the standard basis."""
        if check:
            self._require_member(a)
        out = {}
        for xi in self.xi():
            i, j = xi_to_pair(self.ws, xi)
            c = a.entry(i, j)
            if c:
                out[xi] = c.shift(-self.eta_to_std_exponent(xi))
        return out

    def from_coords(self, coords: Mapping[XiTriple, Scalar]) -> SchurElement:
        acc = self.zero()
        for xi, c in coords.items():
            c = as_poly(c)
            if c:
                acc = acc + self.std(xi).scale(c)
        return acc

    def eta_coords(self, a: SchurElement) -> Dict[XiTriple, LaurentPoly]:
        out = {}
        for xi in self.xi():
            i, j = xi_to_pair(self.ws, xi)
            c = a.entry(i, j)
            if c:
                out[xi] = c
        return out

    # -- bar involution ---------------------------------------------------
    def bar(self, a: SchurElement, check: bool = True) -> SchurElement:
        if check:
            self._require_member(a)
        T, ws = self.T, self.ws
        images = {}
        for nu, orb in enumerate(ws.orbits):
            col = a.column(orb.offset)
            images[nu] = T.bar(col)
        return self.from_rep_images(images)

    # -- canonical basis --------------------------------------------------
    def canonical_std_coords(self, xi: XiTriple) -> Dict[XiTriple, LaurentPoly]:
        """``{(gamma, y, nu): p_{y+, g+}}`` for ``y`` in the same double coset set."""
        ws, hk = self.ws, self.hecke
        gp = ws.g_plus(xi)
        out = {}
        for dc in ws.double_cosets(xi.gamma, xi.nu):
            c = hk.kl_poly(dc.longest, gp)
            if c:
                out[XiTriple(xi.gamma, dc.rep, xi.nu)] = c
        return out

    def canonical(self, xi: XiTriple) -> SchurElement:
        got = self._canonical.get(xi)
        if got is None:
            got = self.from_coords(self.canonical_std_coords(xi))
            self._canonical[xi] = got
        return got

    def to_canonical_coords(self, a: SchurElement, check: bool = True) -> Dict[XiTriple, LaurentPoly]:
        rest = self.coords(a, check=check)
        return self._std_to_canonical(rest)

    def _std_to_canonical(self, rest: Dict[XiTriple, LaurentPoly]) -> Dict[XiTriple, LaurentPoly]:
        W = self.W
        rest = dict(rest)
        out = {}
        while rest:
            # a longest g is not reached by the lower terms of other canonical elements
            xi = max(rest, key=lambda x: (W.length(x.g), x))
            c = rest[xi]
            out[xi] = c
            for y, p in self.canonical_std_coords(xi).items():
                _accumulate(rest, y, -(p * c))
        return out

    def structure_constants(self, b: XiTriple, b2: XiTriple, check_positive: bool = False) -> Dict[XiTriple, LaurentPoly]:
        prod = self.compose(self.canonical(b), self.canonical(b2))
        out = self.to_canonical_coords(prod, check=False)
        if check_positive:
            for xi, c in out.items():
                if not c.in_Nqq():
                    raise PositivityError(f"negative coefficient {c} at {xi} in product {b} * {b2}")
        return out

    def action_constants(self, b: XiTriple, i: int, check_positive: bool = False) -> Dict[int, LaurentPoly]:
        """``canonical(b)`` applied to the canonical vector ``C_i``, in the canonical basis of T."""
        image = self.canonical(b).apply(self.T.canonical(i))
        out = self.T.canonical_coords(image)
        if check_positive:
            for j, c in out.items():
                if not c.in_Nqq():
                    raise PositivityError(f"negative coefficient {c} at {j} acting by {b} on C_{i}")
        return out

    # -- Hecke action as matrices -----------------------------------------
    def hecke_matrix(self, h: HeckeElement) -> Dict[Tuple[int, int], LaurentPoly]:
        """Entries of right multiplication by ``h`` on T, column ``j`` = ``v_j h``."""
        out = {}
        T = self.T
        for j in range(len(self.ws)):
            for i, c in T.act(T.basis(j), h).items():
                out[i, j] = c
        return out

    def random_element(self, rng: random.Random, terms: int = 4, max_exp: int = 2) -> SchurElement:
        xis = self.xi()
        coords = {}
        for _ in range(terms):
            xi = rng.choice(xis)
            coords[xi] = LaurentPoly({rng.randint(-max_exp, max_exp): rng.choice([-2, -1, 1, 2])})
        return self.from_coords(coords)

    def __repr__(self) -> str:
        return f"SchurAlgebra({self.ws!r})"
