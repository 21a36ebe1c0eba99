"""Grid scans over rational codes: Hopf divisibility, 7-colorings, pretzel bridge.

Work is spread over processes; each worker returns plain strings and ints so
nothing ring-valued crosses a process boundary. Items are sorted by code
before reporting, so output does not depend on scheduling.
"""
from __future__ import annotations

import hashlib
import itertools
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .colorings import count_fox_colorings
from .relations import best_framing_shift, hopf_relation, left_trefoil_relation
from .ring import ALPHA_RING, LaurentPoly, a, alpha_substitute, exact_divide, format_poly
from .rta import eval_code
from .tangle_model import ConwayCode, PretzelCode, format_conway, reverse_code

SCHEMA = "cubicskein.scan/1"
WORKERS_ENV = "CUBICSKEIN_WORKERS"


def worker_count(requested: int | None = None) -> int:
    if requested:
        return max(1, requested)
    env = os.environ.get(WORKERS_ENV)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise ValueError("%s must be an integer, got %r" % (WORKERS_ENV, env)) from None
    return os.cpu_count() or 1


def _pmap(fn, items: list, workers: int) -> list:
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))


def poly_hash(p: LaurentPoly) -> str:
    return hashlib.sha256(format_poly(p).encode()).hexdigest()[:16]


@dataclass
class ScanReport:
    check: str
    parameters: dict
    items: list
    counterexamples: list
    hard: bool
    wall_time: float = 0.0
    notes: list = field(default_factory=list)

    @property
    def verdict(self) -> str:
        if self.counterexamples:
            return "fail" if self.hard else "report"
        return "pass"

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "schema": SCHEMA,
            "check": self.check,
            "parameters": self.parameters,
            "verdict": self.verdict,
            "counterexamples": self.counterexamples,
            "items": self.items,
            "notes": self.notes,
        }
        if timing:
            out["meta"] = {"wall_time_s": round(self.wall_time, 3)}
        return out


def grid_codes(max_len: int, max_entry: int) -> list:
    """Integer codes with nonzero entries in [-max_entry, max_entry], lexicographic."""
    if max_len < 1 or max_entry < 1:
        raise ValueError("scan bounds must be >= 1")
    vals = [v for v in range(-max_entry, max_entry + 1) if v]
    return [c for n in range(1, max_len + 1) for c in itertools.product(vals, repeat=n)]


# -- Hopf divisibility of reverse-code relations ---------------------------------------

def _hopf_item(code: tuple) -> dict:
    rc = tuple(reverse_code(ConwayCode(code))[0])
    x, y = eval_code(code), eval_code(rc)
    q = exact_divide(x - y, hopf_relation())
    return {
        "code": format_conway(code), "reverse": format_conway(rc),
        "hash": poly_hash(x - y),
        "verdict": "divisible" if q is not None else "not divisible",
        "quotient_terms": None if q is None else len(q.terms),
    }


def hopf_scan(max_len: int, max_entry: int, workers: int | None = None) -> ScanReport:
    """eval(code) - eval(reverse_code(code)) must be a multiple of R_Hopf.

    Each unordered pair is checked once; codes equal to their own reverse
    give the zero relation and are skipped.
    """
    t0 = time.perf_counter()
    todo = []
    for code in grid_codes(max_len, max_entry):
        rc = tuple(reverse_code(ConwayCode(code))[0])
        if code < rc:
            todo.append(code)
    items = _pmap(_hopf_item, todo, worker_count(workers))
    bad = [it["code"] for it in items if it["verdict"] != "divisible"]
    return ScanReport("hopf-divisibility", {"max_len": max_len, "max_entry": max_entry},
                      items, bad, hard=True, wall_time=time.perf_counter() - t0)


# -- equal polynomials vs. 7-colorings ----------------------------------------------------

def _alpha_key(p: LaurentPoly) -> tuple:
    """alpha-image normalized to lowest alpha power 0; (key text, shift)."""
    img = alpha_substitute(p)
    if img.is_zero():
        return "0", 0
    low = min(e[0] for e in img.terms)
    shifted = img * ALPHA_RING.gens()[0] ** -low
    return format_poly(shifted), low


def _col7_item(code: tuple) -> dict:
    v = eval_code(code)
    key, low = _alpha_key(v)
    return {"code": code, "alpha_key": key, "alpha_low": low, "col7": count_fox_colorings(code, 7)}


def _confirm_pair(args) -> tuple:
    x, y, k = args
    q = exact_divide(a ** k * eval_code(x) - eval_code(y), hopf_relation())
    return x, y, k, q is not None


def col7_scan(max_len: int, max_entry: int, workers: int | None = None) -> ScanReport:
    """Pairs of codes whose values agree modulo a^k and R_Hopf, with their 7-colorings.

    Agreement modulo R_Hopf forces equal alpha-images (alpha kills R_Hopf and
    sends a to alpha^3), so candidates are grouped by alpha-image first and
    each candidate pair is then confirmed by exact division. Report-only.
    """
    t0 = time.perf_counter()
    nw = worker_count(workers)
    codes = [c for c in grid_codes(max_len, max_entry)
             if c <= tuple(reverse_code(ConwayCode(c))[0])]
    info = _pmap(_col7_item, codes, nw)
    groups: dict = {}
    for it in info:
        groups.setdefault(it["alpha_key"], []).append(it)
    cands = []
    for members in groups.values():
        for x, y in itertools.combinations(members, 2):
            shift = y["alpha_low"] - x["alpha_low"]
            if shift % 3 == 0:
                cands.append((x["code"], y["code"], shift // 3))
    confirmed = _pmap(_confirm_pair, sorted(cands), nw)
    col = {it["code"]: it["col7"] for it in info}
    items, bad = [], []
    for x, y, k, ok in confirmed:
        if not ok:
            continue
        same = col[x] == col[y]
        items.append({"code": format_conway(x), "other": format_conway(y), "framing_shift": k,
                      "col7": [col[x], col[y]], "verdict": "same" if same else "differ"})
        if not same:
            bad.append([format_conway(x), format_conway(y)])
    report = ScanReport("col7", {"max_len": max_len, "max_entry": max_entry}, items, bad,
                        hard=False, wall_time=time.perf_counter() - t0)
    report.notes.append("%d codes, %d alpha classes, %d candidate pairs, %d confirmed"
                        % (len(codes), len(groups), len(cands), len(items)))
    return report


# -- pretzel bridge and the 6_3 comparison ------------------------------------------------

def _bridge_item(n: int) -> dict:
    from .pretzel import eval_pretzel, twist_knot_pretzel
    pz = twist_knot_pretzel(n)
    hit = best_framing_shift(eval_pretzel(pz), eval_code((2, n)), hopf_relation())
    return {"code": format_conway((2, n)), "pretzel": "P(%s)" % ",".join(map(str, pz)),
            "verdict": "divisible" if hit else "not divisible",
            "framing_shift": hit[0] if hit else None}


def six_three_comparison(span: int = 10) -> dict:
    """[2,1,1,2] against P(2,1,-3,1): best a^k for R_Hopf and for R_tr- separately."""
    from .pretzel import eval_pretzel
    x, y = eval_pretzel(PretzelCode((2, 1, -3, 1))), eval_code((2, 1, 1, 2))
    out = {"code": "[2,1,1,2]", "pretzel": "P(2,1,-3,1)", "span": span}
    for name, d in (("hopf", hopf_relation()), ("left_trefoil", left_trefoil_relation())):
        hit = best_framing_shift(x, y, d, span)
        out[name] = {"divisible": hit is not None, "framing_shift": hit[0] if hit else None}
    out["alpha_equal_up_to_shift"] = _alpha_key(x)[0] == _alpha_key(y)[0]
    return out


def pretzel_bridge_scan(max_n: int, workers: int | None = None) -> ScanReport:
    """Twist knots P(2,1,...,1) vs [2,n] for n = 1..max_n, plus the 6_3 pair. Report-only."""
    if max_n < 1:
        raise ValueError("scan bounds must be >= 1")
    t0 = time.perf_counter()
    items = _pmap(_bridge_item, list(range(1, max_n + 1)), worker_count(workers))
    bad = [it["code"] for it in items if it["verdict"] != "divisible"]
    report = ScanReport("pretzel-bridge", {"max_n": max_n}, items, bad, hard=False)
    report.notes.append({"six_three": six_three_comparison()})
    report.wall_time = time.perf_counter() - t0
    return report
