"""Counterexample scans for the open positivity conjectures.

A scan evaluates every selected check at every grid point and reports every
violation; nothing aborts early.  Grid points are independent, so they can
be farmed out to worker processes.  Results are sorted before they are
returned, so the output does not depend on the number of workers.
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from typing import Iterable, Optional

from .enumeration import (
    gf_abs_signed,
    gf_Q_by_enumeration,
    parity_difference,
    peak_sign_sums,
    quarter_planar_loops,
    distribution,
)
from .paths import ClassParams, horizontal_words, vertical_words
from .polynomials import IntPoly, binom, is_toggle_buildable, to_shifted_basis, toggle_basis_decompose
from .report import CONFIRMED, COUNTEREXAMPLE, DISCREPANCY, VerdictReport
from .transfer import quarter_loop_distribution, walk_distribution

MODES = ("quarter", "planar")
METHODS = ("transfer", "enumerate")

P2_NOTE = "hypothesis 'a = b and c = d' read as r = l and u = d"


def _positive(p: IntPoly) -> bool:
    return to_shifted_basis(p).is_nonnegative()


def projections_for(u: int, d: int, mode: str) -> list[str]:
    """Vertical projections scanned at a point: positive words only in quarter mode."""
    return list(vertical_words(u, d, positive=(mode == "quarter")))


@lru_cache(maxsize=None)
def g_polys(vertical: str, r: int, l: int, mode: str, method: str = "transfer") -> tuple[IntPoly, IntPoly]:
    """(G1, G2) for one vertical projection: peak-count and |signed peak-count| GFs."""
    if method == "enumerate":
        return (
            gf_Q_by_enumeration(vertical, r, l, "peak", mode),
            gf_Q_by_enumeration(vertical, r, l, "signed-peak", mode),
        )
    g1 = walk_distribution(vertical, r, l, "peak", mode).to_poly()
    g2 = walk_distribution(vertical, r, l, "signed-peak", mode).folded().to_poly()
    return g1, g2


def horizontal_count(r: int, l: int, mode: str) -> int:
    """Horizontal projections allowed in Q: ballot words (quarter) or all words."""
    if mode == "planar":
        return binom(r + l, r)
    if l > r:
        return 0
    return binom(r + l, l) - binom(r + l, l - 1)


def _poly_witness(vertical: str, g1: IntPoly, g2: IntPoly) -> dict:
    return {
        "V": vertical,
        "G1": g1,
        "G1_shifted": to_shifted_basis(g1),
        "G2": g2,
        "G2_shifted": to_shifted_basis(g2),
    }


def _params(p: ClassParams, mode: str, **extra) -> dict:
    return {**p._asdict(), "mode": mode, **extra}


# -- per-point checks --------------------------------------------------------


def check_conjmain(p: ClassParams, mode: str = "quarter", method: str = "transfer") -> VerdictReport:
    """G1 is (x+1)-positive exactly when G2 is, for every vertical projection."""
    observed, witness = {}, []
    for v in projections_for(p.u, p.d, mode):
        g1, g2 = g_polys(v, p.r, p.l, mode, method)
        observed[v] = {"G1_positive": _positive(g1), "G2_positive": _positive(g2)}
        if _positive(g1) != _positive(g2):
            witness.append(_poly_witness(v, g1, g2))
    return VerdictReport("conjmain", _params(p, mode, projections=len(observed)), "G1 positive == G2 positive",
                         observed, CONFIRMED if not witness else COUNTEREXAMPLE, witness or None)


def check_conjx1equal(p: ClassParams, mode: str = "quarter", method: str = "transfer") -> VerdictReport:
    """Positivity of G1 is the same for every vertical projection."""
    observed = {}
    for v in projections_for(p.u, p.d, mode):
        g1, _ = g_polys(v, p.r, p.l, mode, method)
        observed[v] = _positive(g1)
    ok = len(set(observed.values())) <= 1
    witness = None
    if not ok:
        witness = [{"V": v, "G1": g_polys(v, p.r, p.l, mode, method)[0], "G1_positive": b} for v, b in observed.items()]
    return VerdictReport("conjx1equal", _params(p, mode, projections=len(observed)), "same G1 positivity for all V",
                         observed, CONFIRMED if ok else COUNTEREXAMPLE, witness)


def check_conjbuild(p: ClassParams, mode: str = "quarter", method: str = "transfer") -> VerdictReport:
    """G2 is toggle-buildable exactly when it is (x+1)-positive."""
    observed, witness = {}, []
    for v in projections_for(p.u, p.d, mode):
        _, g2 = g_polys(v, p.r, p.l, mode, method)
        observed[v] = {"G2_positive": _positive(g2), "G2_buildable": is_toggle_buildable(g2)}
        if _positive(g2) != is_toggle_buildable(g2):
            witness.append({"V": v, "G2": g2, "G2_shifted": to_shifted_basis(g2),
                            "toggle_basis": toggle_basis_decompose(g2)})
    return VerdictReport("conjbuild", _params(p, mode, projections=len(observed)), "G2 buildable == G2 positive",
                         observed, CONFIRMED if not witness else COUNTEREXAMPLE, witness or None)


def check_g2_form(p: ClassParams, mode: str = "quarter", method: str = "transfer") -> VerdictReport:
    """G2 equals (number of admissible horizontal words) times the closed-form GF."""
    expected = gf_abs_signed(p) * horizontal_count(p.r, p.l, mode)
    observed, witness = {}, []
    for v in projections_for(p.u, p.d, mode):
        _, g2 = g_polys(v, p.r, p.l, mode, method)
        observed[v] = g2
        if g2 != expected:
            witness.append({"V": v, "G2": g2})
    return VerdictReport("g2form", _params(p, mode), expected, observed,
                         CONFIRMED if not witness else COUNTEREXAMPLE, witness or None)


def check_p2(p: ClassParams, mode: str = "quarter", method: str = "transfer") -> VerdictReport:
    """With r = l and u = d, G1 is (x+1)-positive for every vertical projection."""
    if p.r != p.l or p.u != p.d:
        raise ValueError("P2 applies only when r = l and u = d")
    observed, witness = {}, []
    for v in projections_for(p.u, p.d, mode):
        g1, g2 = g_polys(v, p.r, p.l, mode, method)
        observed[v] = {"G1": g1, "G1_positive": _positive(g1)}
        if not _positive(g1):
            witness.append(_poly_witness(v, g1, g2))
    return VerdictReport("p2", _params(p, mode), "G1 positive", observed,
                         CONFIRMED if not witness else COUNTEREXAMPLE, witness or None, note=P2_NOTE)


def check_p1(i: int, j: int, horizontals: Optional[Iterable[str]] = None,
             verticals: Optional[Iterable[str]] = None) -> VerdictReport:
    """Peak-count GF of every loop shuffle class evaluated at -1, against
    C(i+j, i) and against the alternating closed-form sum.

    ``i`` is the half-length of the horizontal loop and ``j`` of the vertical
    one; by default every loop word of those sizes is used.
    """
    hs = list(horizontals) if horizontals is not None else list(horizontal_words(i, i))
    vs = list(verticals) if verticals is not None else list(vertical_words(j, j))
    for w in hs:
        if w.count("E") != i or w.count("W") != i or set(w) - set("EW"):
            raise ValueError(f"{w!r} is not a horizontal loop of half-length {i}")
    for w in vs:
        if w.count("N") != j or w.count("S") != j or set(w) - set("NS"):
            raise ValueError(f"{w!r} is not a vertical loop of half-length {j}")
    expected = binom(i + j, i)
    closed = parity_difference(ClassParams(i, i, j, j))
    witness = []
    for v in vs:
        # even minus odd peak-count over every shuffle, all H at once
        for h, value in zip(hs, peak_sign_sums(v, hs) if hs else []):
            if value != expected:
                witness.append({"V": v, "H": h, "value": value})
    observed = {"pairs": len(vs) * len(hs), "value": expected if not witness else witness[0]["value"],
                "parity_difference": closed}
    ok = not witness and closed == expected
    return VerdictReport("p1", {"i": i, "j": j}, expected, observed,
                         CONFIRMED if ok else COUNTEREXAMPLE, witness or None)


def check_conj10(length: int, method: str = "transfer") -> VerdictReport:
    """Peak-count GF over quarter-plane loops of ``length`` steps is (x+1)-positive."""
    if method == "enumerate":
        gf = distribution(quarter_planar_loops(length), "peak").to_poly()
    else:
        gf = quarter_loop_distribution(length, "peak").to_poly()
    shifted = to_shifted_basis(gf)
    ok = shifted.is_nonnegative()
    return VerdictReport("conj10", {"length": length}, "shifted coefficients >= 0",
                         {"gf": gf, "shifted": shifted}, CONFIRMED if ok else COUNTEREXAMPLE,
                         None if ok else {"gf": gf, "shifted": shifted})


def check_scaling(p: ClassParams) -> VerdictReport:
    from math import factorial as f

    r, l, u, d = p
    left = gf_abs_signed(p) * (f(r + l) * f(u + d))
    right = gf_abs_signed(ClassParams(r, u, l, d)) * (f(r + u) * f(l + d))
    return VerdictReport("propscale", dict(p._asdict()), left, right,
                         CONFIRMED if left == right else COUNTEREXAMPLE)


# -- the x^2 + 12x + 15 probe -------------------------------------------------

PROBE_POLY = IntPoly([15, 12, 1])


def probe_buildable_example(search_max: int = 4) -> list[VerdictReport]:
    """Decompose x^2 + 12x + 15 over the toggle basis and locate where it occurs.

    The printed claim is that this G1 (stated for r = l = 4, u = d = 2) is
    (x+1)-positive but not toggle-buildable.  Three reports: the decomposition
    itself, the actual G1 at the stated point, and every quarter-mode point up
    to ``search_max`` whose G1 equals the polynomial.
    """
    coeffs = toggle_basis_decompose(PROBE_POLY)
    buildable = all(a >= 0 for a in coeffs)
    even_only = all(a % 2 == 0 for a in coeffs[1:])
    out = [
        VerdictReport(
            "buildprobe",
            {"poly": str(PROBE_POLY)},
            {"x_plus_1_positive": True, "toggle_buildable": False},
            {
                "x_plus_1_positive": _positive(PROBE_POLY),
                "shifted": to_shifted_basis(PROBE_POLY),
                "toggle_basis": coeffs,
                "toggle_buildable": buildable,
                "buildable_with_even_coefficients": buildable and even_only,
            },
            CONFIRMED if not buildable else DISCREPANCY,
            {"toggle_basis": coeffs, "basis_degrees": [0, 1, 2]},
            note="toggle_basis[j] multiplies the degree-j basis element (1, x + 1, x^2 + 4x + 3)",
        )
    ]
    stated = ClassParams(4, 4, 2, 2)
    g1s = {v: g_polys(v, stated.r, stated.l, "quarter")[0] for v in projections_for(2, 2, "quarter")}
    matches = any(g == PROBE_POLY for g in g1s.values())
    out.append(VerdictReport("buildprobe", {**stated._asdict(), "mode": "quarter", "what": "G1 at stated point"},
                             PROBE_POLY, g1s, CONFIRMED if matches else DISCREPANCY,
                             None if matches else {"G1": g1s}))
    hits = []
    for q in itertools.product(range(search_max + 1), repeat=4):
        p = ClassParams(*q)
        for v in projections_for(p.u, p.d, "quarter"):
            if g_polys(v, p.r, p.l, "quarter")[0] == PROBE_POLY:
                hits.append({**p._asdict(), "V": v})
    out.append(VerdictReport("buildprobe", {"search_max": search_max, "mode": "quarter", "what": "points with this G1"},
                             "at least one point", hits, CONFIRMED if hits else DISCREPANCY))
    return out


# -- scans -------------------------------------------------------------------

POINT_CHECKS = {
    "conjmain": check_conjmain,
    "conjx1equal": check_conjx1equal,
    "conjbuild": check_conjbuild,
    "g2form": check_g2_form,
    "p2": check_p2,
}
SCAN_IDS = ("p1", "conj10", "p2", "conjmain", "conjx1equal", "conjbuild", "g2form")


def _units(checks: Iterable[str], max_entry: int, mode: str, method: str, max_len: int) -> list[tuple]:
    units = []
    for name in checks:
        if name not in SCAN_IDS:
            raise KeyError(f"unknown check {name!r}")
        if name == "p1":
            units += [("p1", (i, j)) for i, j in itertools.product(range(max_entry + 1), repeat=2)]
        elif name == "conj10":
            units += [("conj10", (n,)) for n in range(0, max_len + 1, 2)]
        elif name == "p2":
            units += [("p2", (r, r, u, u)) for r, u in itertools.product(range(max_entry + 1), repeat=2)]
        else:
            units += [(name, q) for q in itertools.product(range(max_entry + 1), repeat=4)]
    return [(name, args, mode, method) for name, args in units]


def run_unit(unit: tuple) -> VerdictReport:
    name, args, mode, method = unit
    start = time.perf_counter()
    if name == "p1":
        rep = check_p1(*args)
    elif name == "conj10":
        rep = check_conj10(*args, method=method)
    else:
        rep = POINT_CHECKS[name](ClassParams(*args), mode=mode, method=method)
    rep.runtime = time.perf_counter() - start
    return rep


def scan(checks: Iterable[str], max_entry: int = 3, mode: str = "quarter", jobs: int = 1,
         method: str = "transfer", max_len: int = 10) -> list[VerdictReport]:
    """Run ``checks`` over the grid with every class entry in ``0..max_entry``.

    ``p1`` and ``conj10`` do not depend on ``mode``; ``conj10`` covers even
    loop lengths up to ``max_len``.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    if jobs < 1:
        raise ValueError("jobs must be >= 1")
    units = _units(checks, max_entry, mode, method, max_len)
    if jobs == 1 or len(units) < 2:
        reports = [run_unit(u) for u in units]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(run_unit, units, chunksize=8))
    return sorted(reports, key=VerdictReport.sort_key)
