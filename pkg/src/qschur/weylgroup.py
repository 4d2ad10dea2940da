"""Finite Weyl groups by full enumeration.

Elements are plain ints ``0 .. |W|-1``.  Element ``w`` is identified by the
weight ``m0 . w`` where ``m0 = (-1, ..., -1)`` is regular antidominant; right
multiplication by ``s_k`` is then the reflection of that weight, and
``l(w s_k) > l(w)`` iff the k-th pairing of ``m0 . w`` is negative.

Ids are assigned in (length, ShortLex) order of the least reduced word, so
``0`` is the identity and sorting ids sorts by length first.
"""
from __future__ import annotations

import re
import threading
from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

from .rootdata import CartanDatum, cartan_datum, reflect

__all__ = ["WeylGroup", "Parabolic", "DoubleCoset", "CapExceeded", "DEFAULT_CAP"]

DEFAULT_CAP = 51840


class CapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Parabolic:
    """``W_J``, its longest element and the minimal coset representatives ``^J W``."""

    J: FrozenSet[int]
    elements: Tuple[int, ...]
    longest: int
    min_reps: Tuple[int, ...]


@dataclass(frozen=True)
class DoubleCoset:
    rep: int
    elements: FrozenSet[int]
    longest: int


class WeylGroup:
    def __init__(self, datum: CartanDatum | str, cap: int = DEFAULT_CAP):
        if isinstance(datum, str):
            datum = cartan_datum(datum)
        self.datum = datum
        self.rank = d = datum.rank
        start = (-1,) * d
        weights: List[Tuple[int, ...]] = [start]
        index: Dict[Tuple[int, ...], int] = {start: 0}
        words: List[Tuple[int, ...]] = [()]
        parent: List[int] = [-1]
        level = [0]
        while level:
            nxt = []
            for w in level:
                m = weights[w]
                for k in range(1, d + 1):
                    if m[k - 1] < 0:
                        m2 = reflect(datum, k, m)
                        if m2 not in index:
                            if len(weights) >= cap:
                                raise CapExceeded(f"|W({datum})| exceeds cap {cap}")
                            index[m2] = len(weights)
                            weights.append(m2)
                            words.append(words[w] + (k,))
                            parent.append(w)
                            nxt.append(index[m2])
            level = nxt
        self.order = n = len(weights)
        self._weights = weights
        self._index = index
        self._words = words
        self._parent = parent
        self._length = [len(x) for x in words]
        # right[w][k-1] = w s_k
        self._right = [[index[reflect(datum, k, weights[w])] for k in range(1, d + 1)] for w in range(n)]
        # left[k-1][w] = s_k w, built along least words: s_k (p s_j) = (s_k p) s_j
        left = [[0] * n for _ in range(d)]
        for kk in range(d):
            row = left[kk]
            row[0] = self._right[0][kk]
            for w in range(1, n):
                row[w] = self._right[row[parent[w]]][words[w][-1] - 1]
        self._left = left
        self.longest = n - 1
        self._below: Dict[int, FrozenSet[int]] = {0: frozenset((0,))}
        self._parabolics: Dict[FrozenSet[int], Parabolic] = {}
        self._double: Dict[Tuple[FrozenSet[int], FrozenSet[int]], Tuple[DoubleCoset, ...]] = {}
        self._lock = threading.Lock()

    # -- basic data -------------------------------------------------------
    def __len__(self) -> int:
        return self.order

    def __iter__(self):
        return iter(range(self.order))

    @property
    def identity(self) -> int:
        return 0

    def length(self, w: int) -> int:
        return self._length[w]

    def word(self, w: int) -> Tuple[int, ...]:
        """ShortLex-least reduced word."""
        return self._words[w]

    def parent(self, w: int) -> int:
        """``w`` with the last letter of its least reduced word removed."""
        return self._parent[w]

    def tracking_weight(self, w: int) -> Tuple[int, ...]:
        return self._weights[w]

    def gen(self, k: int) -> int:
        return self._right[0][k - 1]

    def rmul_gen(self, w: int, k: int) -> int:
        return self._right[w][k - 1]

    def lmul_gen(self, k: int, w: int) -> int:
        return self._left[k - 1][w]

    def from_word(self, word: Iterable[int]) -> int:
        w = 0
        for k in word:
            if not 1 <= k <= self.rank:
                raise IndexError(f"simple index {k} out of range 1..{self.rank}")
            w = self._right[w][k - 1]
        return w

    def mul(self, x: int, y: int) -> int:
        for k in self._words[y]:
            x = self._right[x][k - 1]
        return x

    def inverse(self, w: int) -> int:
        return self.from_word(reversed(self._words[w]))

    def is_right_descent(self, w: int, k: int) -> bool:
        return self._weights[w][k - 1] > 0

    def is_left_descent(self, w: int, k: int) -> bool:
        return self._length[self._left[k - 1][w]] < self._length[w]

    def right_descents(self, w: int) -> FrozenSet[int]:
        return frozenset(k for k in range(1, self.rank + 1) if self._weights[w][k - 1] > 0)

    def left_descents(self, w: int) -> FrozenSet[int]:
        return frozenset(k for k in range(1, self.rank + 1) if self.is_left_descent(w, k))

    # -- words as text ----------------------------------------------------
    def format(self, w: int) -> str:
        word = self._words[w]
        return "*".join(f"s{k}" for k in word) if word else "e"

    def parse(self, text: str) -> int:
        text = text.strip()
        if text in ("e", "1", ""):
            return 0
        letters = [t for t in re.split(r"[*\s]+", text) if t]
        word = []
        for t in letters:
            m = re.fullmatch(r"s_?(\d+)", t)
            if not m:
                raise ValueError(f"cannot parse Weyl group word {text!r}")
            word.append(int(m.group(1)))
        return self.from_word(word)

    # -- Bruhat order -----------------------------------------------------
    def below(self, y: int) -> FrozenSet[int]:
        """The Bruhat interval ``[e, y]``."""
        got = self._below.get(y)
        if got is not None:
            return got
        chain = []
        cur = y
        while cur not in self._below:
            chain.append(cur)
            cur = self._parent[cur]
        for z in reversed(chain):
            p = self._parent[z]
            k = self._words[z][-1] - 1
            base = self._below[p]
            self._below[z] = base | frozenset(self._right[x][k] for x in base)
        return self._below[y]

    def bruhat_leq(self, x: int, y: int) -> bool:
        if self._length[x] > self._length[y]:
            return False
        return x in self.below(y)

    def bruhat_covers(self) -> List[Tuple[int, int]]:
        """All covering pairs ``(x, y)`` with ``x < y`` and ``l(y) = l(x) + 1``."""
        out = []
        for y in range(self.order):
            ly = self._length[y]
            out.extend((x, y) for x in sorted(self.below(y)) if self._length[x] == ly - 1)
        return out

    # -- parabolic subgroups and cosets -----------------------------------
    def parabolic(self, J: Iterable[int]) -> Parabolic:
        J = frozenset(J)
        got = self._parabolics.get(J)
        if got is not None:
            return got
        if any(not 1 <= j <= self.rank for j in J):
            raise IndexError(f"parabolic index set {sorted(J)} out of range")
        seen = {0}
        queue = deque([0])
        while queue:
            w = queue.popleft()
            for j in J:
                x = self._right[w][j - 1]
                if x not in seen:
                    seen.add(x)
                    queue.append(x)
        elements = tuple(sorted(seen))
        longest = max(elements, key=self._length.__getitem__)
        reps = tuple(w for w in range(self.order) if not any(self.is_left_descent(w, j) for j in J))
        par = Parabolic(J, elements, longest, reps)
        with self._lock:
            self._parabolics[J] = par
        return par

    def factor(self, J: Iterable[int], w: int) -> Tuple[int, int]:
        """Return ``(u, v)`` with ``w = u v``, ``u`` in ``W_J`` and ``v`` in ``^J W``."""
        J = sorted(set(J))
        u = 0
        v = w
        while True:
            for j in J:
                x = self._left[j - 1][v]
                if self._length[x] < self._length[v]:
                    v = x
                    u = self._right[u][j - 1]
                    break
            else:
                return u, v

    def double_cosets(self, J_left: Iterable[int], J_right: Iterable[int]) -> Tuple[DoubleCoset, ...]:
        """``W_{J_left} \\ W / W_{J_right}`` as a tuple ordered by minimal representative."""
        key = (frozenset(J_left), frozenset(J_right))
        got = self._double.get(key)
        if got is not None:
            return got
        jl, jr = sorted(key[0]), sorted(key[1])
        assigned = [False] * self.order
        out = []
        for w in range(self.order):
            if assigned[w]:
                continue
            # ids are in length order, so the first unassigned element is the minimum
            seen = {w}
            queue = deque([w])
            while queue:
                x = queue.popleft()
                for j in jl:
                    y = self._left[j - 1][x]
                    if y not in seen:
                        seen.add(y)
                        queue.append(y)
                for j in jr:
                    y = self._right[x][j - 1]
                    if y not in seen:
                        seen.add(y)
                        queue.append(y)
            for x in seen:
                assigned[x] = True
            longest = max(seen, key=self._length.__getitem__)
            out.append(DoubleCoset(w, frozenset(seen), longest))
        result = tuple(out)
        with self._lock:
            self._double[key] = result
        return result

    def double_coset_of(self, J_left: Iterable[int], J_right: Iterable[int], w: int) -> DoubleCoset:
        for dc in self.double_cosets(J_left, J_right):
            if w in dc.elements:
                return dc
        raise AssertionError("double cosets must partition W")

    def __repr__(self) -> str:
        return f"WeylGroup({self.datum.type_label}, order={self.order})"
