"""Command-line front end: ``qschur <command> [options]``.

Exit status is 0 when every requested check passes, 1 when a verification
fails (the JSON failure report goes to stderr) and 2 on argument errors.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .duality import DEFAULT_SAMPLES, parse_q, verify_duality
from .g2 import appendix_A_suite, appendix_B_suite, appendix_C_suite
from .g2.weights import build_Xn
from .hecke import HeckeAlgebra
from .rootdata import g2_delta_to_pairing, parse_type
from .schur import SchurAlgebra
from .tables import dump_tables, xi_from_json, xi_to_json
from .weightsets import WeightSet, XiTriple, close_under_W
from .weylgroup import DEFAULT_CAP, CapExceeded, WeylGroup

__all__ = ["Config", "main", "run", "build_schur", "parse_weights"]

log = logging.getLogger("qschur")


class UsageError(Exception):
    pass


class VerificationFailed(Exception):
    def __init__(self, report: dict):
        super().__init__("verification failed")
        self.report = report


@dataclass
class Config:
    type_label: str = "G2"
    weights: Optional[str] = None
    n: Optional[int] = None
    command: Tuple[str, ...] = ()
    fmt: str = "json"
    q_samples: Tuple[Fraction, ...] = DEFAULT_SAMPLES
    jobs: int = 1
    cap: int = DEFAULT_CAP
    verbose: int = 0
    extra: Dict[str, object] = field(default_factory=dict)


# -- weight sets --------------------------------------------------------------
def _as_pairing(type_label: str, m: Sequence[int]) -> Tuple[int, ...]:
    """G2 weights may be given in delta coordinates ``(a, b, c)``; everything else is a pairing vector."""
    family, rank = parse_type(type_label)
    m = tuple(int(x) for x in m)
    if (family, rank) == ("G", 2) and len(m) == 3:
        if sum(m) != 0:
            raise UsageError(f"G2 delta coordinates {m} must sum to zero")
        return g2_delta_to_pairing(m)
    if len(m) != rank:
        raise UsageError(f"weight {m} has length {len(m)}, expected {rank}")
    return m


def parse_weight_text(type_label: str, text: str) -> Tuple[int, ...]:
    try:
        vals = json.loads("[" + text.strip().strip("()[]") + "]")
    except json.JSONDecodeError:
        raise UsageError(f"cannot parse weight {text!r}") from None
    return _as_pairing(type_label, vals)


def parse_weights(type_label: str, spec: Optional[str], n: Optional[int], cap: int = DEFAULT_CAP) -> WeightSet:
    """Resolve ``g2:n=K``, a JSON seed file or an inline JSON array of weights (pairing vectors)."""
    family, rank = parse_type(type_label)
    is_g2 = family == "G" and rank == 2
    if spec is None:
        if is_g2:
            spec = f"g2:n={n if n is not None else 2}"
        else:
            # the zero weight and a regular orbit
            spec = json.dumps([[0] * rank, [-1] * rank])
    if spec.startswith("g2:"):
        if not is_g2:
            raise UsageError(f"weight shorthand {spec!r} needs --type G2")
        key, _, val = spec[3:].partition("=")
        if key != "n" or not val.isdigit() or int(val) < 1:
            raise UsageError(f"bad G2 shorthand {spec!r}; expected g2:n=K with K >= 1")
        ws = build_Xn(int(val))
        if len(ws.W) > cap:
            raise CapExceeded(f"Weyl group G2 has {len(ws.W)} elements, over the cap of {cap}")
        return ws
    if os.path.exists(spec):
        with open(spec) as fh:
            text = fh.read()
    else:
        text = spec
    try:
        seeds = json.loads(text)
    except json.JSONDecodeError:
        raise UsageError(f"--weights {spec!r} is neither a shorthand, a file nor a JSON array") from None
    if not isinstance(seeds, list) or not seeds or not all(isinstance(s, list) for s in seeds):
        raise UsageError("seed file must hold a nonempty JSON array of weights")
    seeds = [_as_pairing(type_label, m) for m in seeds]
    try:
        W = WeylGroup(type_label, cap=cap)
        return close_under_W(W, seeds)
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from None


def build_schur(cfg: Config) -> SchurAlgebra:
    try:
        ws = parse_weights(cfg.type_label, cfg.weights, cfg.n, cfg.cap)
    except CapExceeded as exc:
        raise UsageError(str(exc)) from None
    log.info("weight set %s: %d weights in %d orbits", ws.datum.type_label, len(ws), len(ws.orbits))
    return SchurAlgebra(ws)


_XI_KEYED = re.compile(r"^\s*gamma\s*=\s*(?P<gamma>\([^)]*\)|[^,]+)\s*,\s*g\s*=\s*(?P<g>[^,]+)\s*,\s*nu\s*=\s*(?P<nu>\([^)]*\)|[^,]+)\s*$")


def _orbit_arg(S: SchurAlgebra, text: str, raw: str) -> int:
    text = text.strip()
    ws = S.ws
    if text.lstrip("-").isdigit():
        k = int(text)
        if not 0 <= k < len(ws.orbits):
            raise UsageError(f"--xi {raw!r}: orbit index {k} out of range")
        return k
    m = parse_weight_text(ws.datum.type_label, text)
    if m not in ws.index:
        raise UsageError(f"--xi {raw!r}: weight {text} is not in the set")
    return ws.orbit_of(ws.index[m])


def _parse_xi(S: SchurAlgebra, text: str) -> XiTriple:
    """``GAMMA,WORD,NU`` or ``gamma=...,g=WORD,nu=...``; orbits by index (as in ``info``) or by any member weight."""
    m = _XI_KEYED.match(text)
    if m:
        parts = [m["gamma"], m["g"], m["nu"]]
    else:
        parts = text.split(",")
        if len(parts) != 3:
            raise UsageError(f"--xi {text!r}: expected GAMMA,WORD,NU or gamma=..,g=..,nu=..")
    gamma, nu = _orbit_arg(S, parts[0], text), _orbit_arg(S, parts[2], text)
    try:
        g = S.W.parse(parts[1].strip())
    except ValueError as exc:
        raise UsageError(f"--xi {text!r}: {exc}") from None
    ws = S.ws
    try:
        return xi_from_json(ws, {"gamma": ws.orbits[gamma].rep, "g": S.W.format(g), "nu": ws.orbits[nu].rep})
    except ValueError:
        raise UsageError(f"--xi {text!r}: {parts[1].strip()} is not a minimal double coset representative") from None


# -- commands -----------------------------------------------------------------
def cmd_info(cfg: Config) -> dict:
    S = build_schur(cfg)
    ws = S.ws
    return {
        "type": ws.datum.type_label,
        "group_order": len(S.W),
        "weights": len(ws),
        "orbit_count": len(ws.orbits),
        "xi": len(ws.xi()),
        "regular_orbit": ws.has_regular_orbit,
        "orbits": [
            {"index": o.index, "rep": list(o.rep), "J": sorted(o.J), "size": o.size, "regular": o.is_regular}
            for o in ws.orbits
        ],
    }


def cmd_hecke_cbasis(cfg: Config) -> dict:
    W = WeylGroup(cfg.type_label, cap=cfg.cap)
    H = HeckeAlgebra(W)
    only = cfg.extra.get("elt")
    ws_ = [W.parse(only)] if only else list(W)
    return {"type": W.datum.type_label, "canonical": [{"w": W.format(w), "C": H.kl_elt(w).to_json()} for w in ws_]}


def cmd_tmodule(cfg: Config, what: str) -> dict:
    S = build_schur(cfg)
    T, ws = S.T, S.ws
    rows = []
    only = cfg.extra.get("elt")
    if only:
        m = parse_weight_text(ws.datum.type_label, only)
        if m not in ws.index:
            raise UsageError(f"weight {only} is not in the set")
        indices = [ws.index[m]]
    else:
        indices = range(len(ws))
    for i in indices:
        v = T.canonical(i) if what == "cbasis" else T.bar_basis(i)
        rows.append({"v": list(ws.elements[i]), what: v.to_json()})
    return {"type": ws.datum.type_label, "weights": len(ws), "vectors": rows}


def cmd_schur_cbasis(cfg: Config) -> dict:
    S = build_schur(cfg)
    ws = S.ws
    xis = [_parse_xi(S, cfg.extra["xi"])] if cfg.extra.get("xi") else S.xi()
    return {
        "type": ws.datum.type_label,
        "canonical": [
            {
                "xi": xi_to_json(ws, xi),
                "coords_std": _coords_json(ws, S.canonical_std_coords(xi)),
                "coords_canonical": [{"xi": xi_to_json(ws, xi), "poly": {"0": "1"}}],
            }
            for xi in xis
        ],
    }


def _coords_json(ws, coords) -> List[dict]:
    return [{"xi": xi_to_json(ws, y), "poly": c.to_json()} for y, c in sorted(coords.items())]


def cmd_schur_compose(cfg: Config) -> dict:
    S = build_schur(cfg)
    if not cfg.extra.get("left") or not cfg.extra.get("right"):
        raise UsageError("schur compose needs --left and --right")
    b1, b2 = _parse_xi(S, cfg.extra["left"]), _parse_xi(S, cfg.extra["right"])
    out = S.structure_constants(b1, b2)
    return {"left": xi_to_json(S.ws, b1), "right": xi_to_json(S.ws, b2), "product": _coords_json(S.ws, out)}


def cmd_schur_coords(cfg: Config) -> dict:
    S = build_schur(cfg)
    if not cfg.extra.get("xi"):
        raise UsageError("schur coords needs --xi")
    xi = _parse_xi(S, cfg.extra["xi"])
    a = S.canonical(xi)
    return {
        "xi": xi_to_json(S.ws, xi),
        "coords_std": _coords_json(S.ws, S.coords(a)),
        "coords_canonical": _coords_json(S.ws, S.to_canonical_coords(a)),
        "coords_eta": _coords_json(S.ws, S.eta_coords(a)),
    }


_WORKER_S: Optional[SchurAlgebra] = None


def _positivity_worker_init(type_label: str, reps, cap: int) -> None:
    global _WORKER_S
    _WORKER_S = SchurAlgebra(WeightSet(WeylGroup(type_label, cap=cap), reps))


def _positivity_task(lefts: Sequence[int]) -> List[dict]:
    return _positivity_scan(_WORKER_S, lefts)


def _positivity_scan(S: SchurAlgebra, lefts: Sequence[int]) -> List[dict]:
    ws = S.ws
    xis = S.xi()
    bad = []
    for k in lefts:
        b = xis[k]
        for b2 in xis:
            for y, c in S.structure_constants(b, b2).items():
                if not c.in_Nqq():
                    bad.append(
                        {"kind": "product", "left": xi_to_json(ws, b), "right": xi_to_json(ws, b2), "at": xi_to_json(ws, y), "coeff": str(c)}
                    )
        for i in range(len(ws)):
            for j, c in S.action_constants(b, i).items():
                if not c.in_Nqq():
                    bad.append(
                        {"kind": "action", "left": xi_to_json(ws, b), "vector": list(ws.elements[i]), "at": list(ws.elements[j]), "coeff": str(c)}
                    )
    return bad


def verify_positivity(S: SchurAlgebra, jobs: int = 1) -> dict:
    """Every structure constant and every action constant on canonical vectors lies in N[q, q^-1]."""
    n = len(S.xi())
    if jobs <= 1:
        bad = _positivity_scan(S, range(n))
    else:
        reps = [o.rep for o in S.ws.orbits]
        chunks = [list(range(k, n, jobs)) for k in range(jobs)]
        with ProcessPoolExecutor(
            max_workers=jobs,
            initializer=_positivity_worker_init,
            initargs=(S.ws.datum.type_label, reps, len(S.W)),
        ) as pool:
            parts = list(pool.map(_positivity_task, chunks))
        # merge independent of scheduling
        bad = sorted((x for p in parts for x in p), key=lambda r: json.dumps(r, sort_keys=True))
    return {"suite": "positivity", "products": n * n, "actions": n * len(S.ws), "violations": bad, "passed": not bad}


def verify_bar(S: SchurAlgebra) -> dict:
    bad = []
    for xi in S.xi():
        a = S.canonical(xi)
        coords = S.canonical_std_coords(xi)
        ok_bar = S.bar(a) == a
        ok_tri = coords.get(xi) == 1 and all(c.in_qZq() for y, c in coords.items() if y != xi)
        if not (ok_bar and ok_tri):
            bad.append({"xi": xi_to_json(S.ws, xi), "bar_invariant": ok_bar, "unitriangular": ok_tri})
    return {"suite": "bar", "checked": len(S.xi()), "violations": bad, "passed": not bad}


def cmd_schur_verify(cfg: Config) -> dict:
    S = build_schur(cfg)
    suite = cfg.extra["suite"]
    if suite == "duality":
        report = verify_duality(S, cfg.q_samples, require_regular=False).to_json()
        if not S.ws.has_regular_orbit:
            report["note"] = "the weight set has no regular orbit"
    elif suite == "positivity":
        report = verify_positivity(S, cfg.jobs)
    else:
        report = verify_bar(S)
    if not report["passed"]:
        raise VerificationFailed(report)
    return report


def cmd_g2_verify(cfg: Config) -> dict:
    family, rank = parse_type(cfg.type_label)
    if (family, rank) != ("G", 2):
        raise UsageError("g2 verify needs --type G2")
    suite = cfg.extra["suite"]
    n = cfg.n if cfg.n is not None else 3
    if suite == "A":
        report = appendix_A_suite(n)
    elif suite == "B":
        report = appendix_B_suite(n)
    else:
        report = appendix_C_suite((Fraction(1),) + tuple(x for x in cfg.q_samples if x != 1))
    out = report.to_json()
    if not report.passed:
        bad = report.mismatches[0]
        out["first_mismatch"] = bad.to_json()
        raise VerificationFailed(out)
    return out


def cmd_dump(cfg: Config) -> dict:
    if not cfg.extra.get("all"):
        raise UsageError("dump currently supports --all only")
    return dump_tables(build_schur(cfg))


# -- output -------------------------------------------------------------------
def _flat(v) -> bool:
    if isinstance(v, list):
        return all(not isinstance(x, (dict, list)) for x in v)
    return not isinstance(v, dict)


def _text(obj, indent: int = 0) -> List[str]:
    pad = "  " * indent
    lines: List[str] = []
    if isinstance(obj, dict):
        scalars = {k: v for k, v in obj.items() if _flat(v)}
        width = max((len(str(k)) for k in scalars), default=0)
        for k, v in scalars.items():
            lines.append(f"{pad}{str(k).ljust(width)} : {v}")
        for k, v in obj.items():
            if not _flat(v):
                lines.append(f"{pad}{k}:")
                lines.extend(_text(v, indent + 1))
    elif isinstance(obj, list):
        for item in obj:
            if isinstance(item, (dict, list)):
                sub = _text(item, indent + 1)
                if sub:
                    lines.append(f"{pad}- {sub[0].strip()}")
                    lines.extend(sub[1:])
            else:
                lines.append(f"{pad}- {item}")
    else:
        lines.append(f"{pad}{obj}")
    return lines


def render(obj, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(obj, sort_keys=True, indent=2)
    return "\n".join(_text(obj))


# -- argument parsing ---------------------------------------------------------
def _samples(text: str) -> Tuple[Fraction, ...]:
    try:
        return tuple(parse_q(t) for t in text.split(",") if t.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad q sample list {text!r}: {exc}")


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", dest="type_label", default=argparse.SUPPRESS, help="Cartan type, e.g. G2, B2, A_3 (default G2)")
    common.add_argument("--weights", default=argparse.SUPPRESS, help="g2:n=K, a JSON seed file, or an inline JSON array")
    common.add_argument("--n", type=_positive, default=argparse.SUPPRESS, help="G2 truncation level")
    common.add_argument("--format", dest="fmt", choices=("json", "text"), default=argparse.SUPPRESS)
    common.add_argument("--q-samples", type=_samples, default=argparse.SUPPRESS, help="comma list, e.g. 1,2,3/2")
    common.add_argument("--jobs", type=_positive, default=argparse.SUPPRESS)
    common.add_argument("--cap", type=_positive, default=argparse.SUPPRESS, help="refuse Weyl groups larger than this")
    common.add_argument("-v", "--verbose", action="count", default=argparse.SUPPRESS)

    p = argparse.ArgumentParser(prog="qschur", description="q-Schur algebras, canonical bases and G2 checks", parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("info", parents=[common], help="group and weight-set census")

    hk = sub.add_parser("hecke", parents=[common]).add_subparsers(dest="sub", required=True)
    c = hk.add_parser("cbasis", parents=[common], help="Kazhdan-Lusztig basis")
    c.add_argument("--elt", "--w", dest="elt", help="a single element as a word, e.g. s1*s2")

    tm = sub.add_parser("tmodule", parents=[common]).add_subparsers(dest="sub", required=True)
    for name, text in (("cbasis", "canonical basis of T"), ("bar", "bar involution on the standard basis of T")):
        c = tm.add_parser(name, parents=[common], help=text)
        c.add_argument("--elt", help='a single weight, e.g. "(1,0,-1)"')

    sc = sub.add_parser("schur", parents=[common]).add_subparsers(dest="sub", required=True)
    c = sc.add_parser("cbasis", parents=[common], help="canonical basis in standard coordinates")
    c.add_argument("--xi", help="GAMMA,WORD,NU")
    c = sc.add_parser("compose", parents=[common], help="structure constants of two canonical elements")
    c.add_argument("--left", help="GAMMA,WORD,NU")
    c.add_argument("--right", help="GAMMA,WORD,NU")
    c = sc.add_parser("coords", parents=[common], help="standard and eta coordinates of a canonical element")
    c.add_argument("--xi", help="GAMMA,WORD,NU")
    c = sc.add_parser("verify", parents=[common])
    c.add_argument("--suite", choices=("duality", "positivity", "bar"), required=True)

    g2 = sub.add_parser("g2", parents=[common]).add_subparsers(dest="sub", required=True)
    c = g2.add_parser("verify", parents=[common], help="closed-formula corpora")
    c.add_argument("--suite", choices=("A", "B", "C"), required=True)

    c = sub.add_parser("dump", parents=[common], help="all basis tables as JSON")
    c.add_argument("--all", action="store_true")
    return p


def _config(ns: argparse.Namespace) -> Config:
    d = vars(ns)
    cfg = Config(
        type_label=d.pop("type_label", "G2"),
        weights=d.pop("weights", None),
        n=d.pop("n", None),
        fmt=d.pop("fmt", "json"),
        q_samples=d.pop("q_samples", DEFAULT_SAMPLES),
        jobs=d.pop("jobs", 1),
        cap=d.pop("cap", DEFAULT_CAP),
        verbose=d.pop("verbose", 0),
    )
    cfg.command = tuple(x for x in (d.pop("command"), d.pop("sub", None)) if x)
    cfg.extra = d
    return cfg


DISPATCH = {
    ("info",): cmd_info,
    ("hecke", "cbasis"): cmd_hecke_cbasis,
    ("tmodule", "cbasis"): lambda c: cmd_tmodule(c, "cbasis"),
    ("tmodule", "bar"): lambda c: cmd_tmodule(c, "bar"),
    ("schur", "cbasis"): cmd_schur_cbasis,
    ("schur", "compose"): cmd_schur_compose,
    ("schur", "coords"): cmd_schur_coords,
    ("schur", "verify"): cmd_schur_verify,
    ("g2", "verify"): cmd_g2_verify,
    ("dump",): cmd_dump,
}


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cfg = _config(ns)
    logging.basicConfig(level=logging.WARNING - 10 * min(cfg.verbose, 2), stream=stderr)
    try:
        parse_type(cfg.type_label)
        result = DISPATCH[cfg.command](cfg)
    except UsageError as exc:
        print(f"qschur: error: {exc}", file=stderr)
        return 2
    except (CapExceeded, IndexError, KeyError, ValueError) as exc:
        print(f"qschur: error: {exc}", file=stderr)
        return 2
    except VerificationFailed as exc:
        print(render(exc.report, cfg.fmt), file=stdout)
        print(json.dumps(exc.report, sort_keys=True), file=stderr)
        return 1
    print(render(result, cfg.fmt), file=stdout)
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    return run(argv)
