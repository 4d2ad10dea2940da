"""Numerical-exact check of the double centralizer property at sampled values of q.

At each sample ``q = x`` (a rational number) two bounds are compared:

* lower: the right-multiplication matrices of all ``H_w`` commute with the
  algebra (every standard basis element passes the membership test over
  Z[q, q^-1]) and their rank is counted;
* upper: the nullity of ``X A = A X`` where ``A`` runs over the orbit
  idempotents and random integer combinations of standard basis elements.
  The full centralizer is contained in the centralizer of any subset.

Equal bounds prove that the centralizer equals the span of the Hecke action.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .linalg import rank
from .schur import SchurAlgebra

__all__ = ["MissingRegularOrbit", "SampleResult", "DualityReport", "verify_duality", "parse_q"]

DEFAULT_SAMPLES = (Fraction(1), Fraction(2), Fraction(3, 2), Fraction(5, 3))


class MissingRegularOrbit(ValueError):
    pass


@dataclass
class SampleResult:
    q: Fraction
    hecke_rank: int
    centralizer_dim: int
    generators_used: int

    @property
    def equal(self) -> bool:
        return self.hecke_rank == self.centralizer_dim


@dataclass
class DualityReport:
    type_label: str
    weight_count: int
    group_order: int
    members_ok: bool
    max_abs_exponent: int
    samples: List[SampleResult] = field(default_factory=list)

    @property
    def faithful(self) -> bool:
        return all(s.hecke_rank == self.group_order for s in self.samples)

    @property
    def passed(self) -> bool:
        return (
            self.members_ok
            and self.faithful
            and all(s.equal and s.centralizer_dim == self.group_order for s in self.samples)
        )

    def to_json(self) -> dict:
        return {
            "type": self.type_label,
            "weights": self.weight_count,
            "group_order": self.group_order,
            "members_ok": self.members_ok,
            "max_abs_exponent": self.max_abs_exponent,
            "faithful": self.faithful,
            "passed": self.passed,
            "samples": [
                {
                    "q": str(s.q),
                    "hecke_rank": s.hecke_rank,
                    "centralizer_dim": s.centralizer_dim,
                    "generators_used": s.generators_used,
                }
                for s in self.samples
            ],
        }


def parse_q(text: str) -> Fraction:
    q = Fraction(text.strip())
    if q == 0:
        raise ValueError("q = 0 is not a valid specialization")
    return q


def _hecke_rank(S: SchurAlgebra, x: Fraction) -> int:
    hk = S.hecke
    rows = []
    n = len(S.ws)
    for w in S.W:
        vec = {}
        for (i, j), c in S.hecke_matrix(hk.H(w)).items():
            v = c.evaluate(x)
            if v:
                vec[i * n + j] = v
        rows.append(vec)
    return rank(rows, n * n)


def _centralizer_dim(
    S: SchurAlgebra, x: Fraction, target: int, rng: random.Random, max_random: int
) -> Tuple[int, int]:
    ws = S.ws
    # commuting with the orbit idempotents forces X to be block diagonal
    var: Dict[Tuple[int, int], int] = {}
    for orb in ws.orbits:
        block = range(orb.offset, orb.offset + orb.size)
        for a in block:
            for b in block:
                var[a, b] = len(var)
    nvar = len(var)
    orbit_of = [ws.orbit_of(i) for i in range(len(ws))]
    rows: List[Dict[int, Fraction]] = []

    def add_generator(A: Dict[Tuple[int, int], Fraction]) -> None:
        eqs: Dict[Tuple[int, int], Dict[int, Fraction]] = {}
        # (XA)[a,b] = sum_c X[a,c] A[c,b]  with X[a,c] nonzero only when a ~ c
        for (c, b), v in A.items():
            for a in range(len(ws)):
                if orbit_of[a] == orbit_of[c]:
                    row = eqs.setdefault((a, b), {})
                    k = var[a, c]
                    row[k] = row.get(k, 0) + v
        # (AX)[a,b] = sum_c A[a,c] X[c,b]
        for (a, c), v in A.items():
            for b in range(len(ws)):
                if orbit_of[c] == orbit_of[b]:
                    row = eqs.setdefault((a, b), {})
                    k = var[c, b]
                    row[k] = row.get(k, 0) - v
        rows.extend(r for r in eqs.values() if any(r.values()))

    used = 0
    xis = list(S.xi())
    dim = nvar
    for _ in range(max_random):
        combo = S.zero()
        for xi in xis:
            c = rng.randint(-3, 3)
            if c:
                combo = combo + S.std(xi).scale(c)
        add_generator(combo.evaluate(x))
        used += 1
        dim = nvar - rank(rows, nvar)
        if dim <= target:
            return dim, used
    # fall back to the whole standard basis
    for xi in xis:
        add_generator(S.std(xi).evaluate(x))
        used += 1
    return nvar - rank(rows, nvar), used


def verify_duality(
    S: SchurAlgebra,
    samples: Sequence[Fraction] = DEFAULT_SAMPLES,
    require_regular: bool = True,
    seed: int = 0,
    max_random: int = 4,
) -> DualityReport:
    ws = S.ws
    if require_regular and not ws.has_regular_orbit:
        raise MissingRegularOrbit(
            "the weight set has no regular orbit; the double centralizer statement needs one"
        )
    members_ok = all(S.is_member(S.std(xi)) for xi in S.xi())
    max_exp = 0
    for xi in S.xi():
        for _, c in S.std(xi).entries():
            max_exp = max(max_exp, max(abs(e) for e, _ in c.items()))
    report = DualityReport(ws.datum.type_label, len(ws), len(S.W), members_ok, max_exp)
    rng = random.Random(seed)
    for x in samples:
        x = Fraction(x)
        hr = _hecke_rank(S, x)
        cd, used = _centralizer_dim(S, x, hr, rng, max_random)
        report.samples.append(SampleResult(x, hr, cd, used))
    return report
