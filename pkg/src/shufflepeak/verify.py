"""Brute-force re-derivation of the proven identities.

Each verifier returns a list of :class:`VerdictReport`, one per parameter
point, and never stops at the first failure.  Registry keys are the
identifiers accepted by ``shufflepeak verify``.
"""

from __future__ import annotations

import itertools
import random
import time
from collections import Counter
from typing import Callable

from . import bijections as bj
from .enumeration import (
    Distribution,
    binary_abs_even_distribution,
    binary_words,
    gf_abs_signed,
    gf_peak_shuffleclass,
    in_vert_closed_form,
    parity_difference,
    shuffle_distribution,
    shuffles,
    signed_peak_closed_distribution,
    super_catalan,
)
from .paths import ClassParams, complement, horizontal_words, vertical_words
from .polynomials import (
    IntPoly,
    balanced_loop_shifted,
    bin_lower,
    bin_lower_shifted,
    bin_upper,
    bin_upper_shifted,
    binom,
    from_shifted_basis,
    to_shifted_basis,
)
from .report import CONFIRMED, COUNTEREXAMPLE, DISCREPANCY, VerdictReport
from .stats import (
    absolute_even_count,
    in_vert,
    peak_count,
    shifted_even_count,
    shifted_even_count_via_pairs,
    shifted_in_vert,
    shifted_in_vert_via_up,
    signed_peak_count,
    signed_peak_via_inward,
)

FULL_PAIR_LIMIT = 100
SAMPLE_PAIRS = 50


def _verdict(ok: bool) -> str:
    return CONFIRMED if ok else COUNTEREXAMPLE


def _timed(fn):
    def wrapper(*args, **kwargs):
        start = time.perf_counter()
        reports = fn(*args, **kwargs)
        per = (time.perf_counter() - start) / max(len(reports), 1)
        for r in reports:
            r.runtime = per
        return reports

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def class_grid(max_entry: int):
    return [ClassParams(*p) for p in itertools.product(range(max_entry + 1), repeat=4)]


def word_pairs(p: ClassParams, seed: int = 0) -> tuple[list[tuple[str, str]], bool]:
    """All (V, H) pairs of the class, or a seeded sample when there are too many.

    Returns the pairs and whether the list is exhaustive.
    """
    pairs = list(itertools.product(vertical_words(p.u, p.d), horizontal_words(p.r, p.l)))
    if len(pairs) <= FULL_PAIR_LIMIT:
        return pairs, True
    rng = random.Random(f"{seed}:{tuple(p)}")
    return sorted(rng.sample(pairs, SAMPLE_PAIRS)), False


def _class_params(p: ClassParams, exhaustive: bool, checked: int) -> dict:
    return {**p._asdict(), "pairs": checked, "exhaustive": exhaustive}


@_timed
def verify_signed_peak_distribution(max_entry: int = 4, seed: int = 0) -> list[VerdictReport]:
    """Brute-force signed peak-count distribution versus the product of binomials."""
    reports = []
    for p in class_grid(max_entry):
        expected = signed_peak_closed_distribution(p)
        pairs, exhaustive = word_pairs(p, seed)
        witness = None
        observed = expected
        for v, h in pairs:
            got = shuffle_distribution(v, h, "signed-peak")
            if got != expected:
                witness, observed = {"V": v, "H": h}, got
                break
        reports.append(
            VerdictReport("thmmain", _class_params(p, exhaustive, len(pairs)), expected, observed, _verdict(witness is None), witness)
        )
    return reports


@_timed
def verify_parity_difference(max_entry: int = 4, seed: int = 0) -> list[VerdictReport]:
    """Even-minus-odd peak-count by brute force versus the alternating sum, and the
    two known specialisations (r=l, u=d and r=u, l=d)."""
    reports = []
    for p in class_grid(max_entry):
        closed = parity_difference(p)
        expected = {"alternating_sum": closed}
        if p.r == p.l and p.u == p.d:
            expected["binomial"] = binom(p.r + p.u, p.u)
        if p.r == p.u and p.l == p.d:
            expected["super_catalan"] = super_catalan(p.r, p.l)
        pairs, exhaustive = word_pairs(p, seed)
        witness = None
        for v, h in pairs:
            value = gf_peak_shuffleclass(v, h)(-1)
            if value != closed:
                witness = {"V": v, "H": h, "value": value}
                break
        ok = witness is None and all(val == closed for val in expected.values())
        observed = {"brute_force": closed if witness is None else witness["value"], **expected}
        reports.append(VerdictReport("cormod2", _class_params(p, exhaustive, len(pairs)), expected, observed, _verdict(ok), witness))
    return reports


@_timed
def verify_super_catalan(max_entry: int = 5) -> list[VerdictReport]:
    """Alternating sum for the class (r, l, r, l) versus the factorial formula."""
    reports = []
    for r, l in itertools.product(range(max_entry + 1), repeat=2):
        alt = parity_difference(ClassParams(r, l, r, l))
        direct = sum((-1) ** (k % 2) * binom(2 * r, r - k) * binom(2 * l, l + k) for k in range(-l, r + 1))
        sc = super_catalan(r, l)
        reports.append(
            VerdictReport(
                "supercatalan",
                {"r": r, "l": l},
                sc,
                {"parity_difference": alt, "alternating_sum": direct},
                _verdict(alt == sc == direct),
            )
        )
    return reports


def _ending_in_south(max_len: int):
    for n in range(1, max_len + 1):
        for w in itertools.product("NS", repeat=n - 1):
            yield "".join(w) + "S"


def _horizontal_upto(max_len: int):
    for n in range(max_len + 1):
        for w in itertools.product("EW", repeat=n):
            yield "".join(w)


@_timed
def verify_flip_transport(max_len: int = 4) -> list[VerdictReport]:
    """Shifted In-Vert of the flip equals signed peak-count when V ends with S."""
    buckets: dict = {}
    for v in _ending_in_south(max_len):
        for h in _horizontal_upto(max_len):
            key = (len(v), len(h))
            b = buckets.setdefault(key, {"shuffles": 0, "witness": None})
            for s in shuffles(v, h):
                b["shuffles"] += 1
                if b["witness"] is None and shifted_in_vert(bj.flip(s)) != signed_peak_count(s):
                    b["witness"] = {"shuffle": s, "flip": bj.flip(s)}
    reports = []
    for (lv, lh), b in sorted(buckets.items()):
        reports.append(
            VerdictReport(
                "propbiject",
                {"len_V": lv, "len_H": lh, "shuffles": b["shuffles"]},
                "shifted_in_vert(flip(s)) == signed_peak(s)",
                "holds" if b["witness"] is None else "fails",
                _verdict(b["witness"] is None),
                b["witness"],
            )
        )
    return reports


@_timed
def verify_in_vert_count(max_len: int = 4) -> list[VerdictReport]:
    """In-Vert distribution versus its closed form; coloring encode/decode round trip;
    one fitting shuffle per coloring."""
    buckets: dict = {}
    for v in _ending_in_south(max_len):
        for h in _horizontal_upto(max_len):
            p = ClassParams.of(v + h)
            b = buckets.setdefault((len(v), len(h)), {"pairs": 0, "witness": None})
            b["pairs"] += 1
            if b["witness"] is not None:
                continue
            words = list(shuffles(v, h))
            dist = Counter(in_vert(s) for s in words)
            for k in range(len(v) + 1):
                if dist.get(k, 0) != in_vert_closed_form(p, k):
                    b["witness"] = {"V": v, "H": h, "in_vert": k, "observed": dist.get(k, 0), "expected": in_vert_closed_form(p, k)}
                    break
            for s in words:
                if b["witness"] is not None:
                    break
                if bj.coloring_decode(bj.coloring_encode(s), v, h) != s:
                    b["witness"] = {"V": v, "H": h, "round_trip_failure": s}
            for k in range(len(v) + 1):
                if b["witness"] is not None:
                    break
                decoded = {bj.coloring_decode(c, v, h) for c in bj.colorings(v, h, k)}
                if len(decoded) != in_vert_closed_form(p, k) or any(in_vert(s) != k for s in decoded):
                    b["witness"] = {"V": v, "H": h, "coloring_count_failure": k}
    return [
        VerdictReport(
            "propncount",
            {"len_V": lv, "len_H": lh, "pairs": b["pairs"]},
            "#{in_vert = k} == C(r+u, u+d-k) C(l+d, k); decode(encode(s)) == s",
            "holds" if b["witness"] is None else "fails",
            _verdict(b["witness"] is None),
            b["witness"],
        )
        for (lv, lh), b in sorted(buckets.items())
    ]


@_timed
def verify_lower_blocks(max_n: int = 12) -> list[VerdictReport]:
    """Closed-form (x+1) coefficients of bin_lower versus the Taylor shift."""
    reports = []
    for n in range(1, max_n + 1):
        bad = [k for k in range(1, n + 1) if bin_lower_shifted(k, n) != to_shifted_basis(bin_lower(k, n))]
        reports.append(
            VerdictReport("lemf", {"n": n}, "closed form == Taylor shift for 1<=k<=n", {"failing_k": bad}, _verdict(not bad),
                          {"k": bad} if bad else None)
        )
    return reports


@_timed
def verify_upper_blocks(max_n: int = 12) -> list[VerdictReport]:
    """Closed-form (x+1) coefficients of bin_upper versus the Taylor shift."""
    reports = []
    for n in range(1, max_n + 1):
        bad = [k for k in range(1, n + 1) if bin_upper_shifted(k, n) != to_shifted_basis(bin_upper(k, n))]
        zero_const = all(bin_upper_shifted(k, n)[0] == 0 for k in range(1, n + 1))
        reports.append(
            VerdictReport("propg", {"n": n}, "closed form == Taylor shift, constant term 0",
                          {"failing_k": bad, "constant_term_zero": zero_const},
                          _verdict(not bad and zero_const), {"k": bad} if bad else None)
        )
    return reports


def loop_words(half: int, kind: str) -> list[str]:
    if kind == "vertical":
        return list(vertical_words(half, half))
    return list(horizontal_words(half, half))


@_timed
def verify_balanced_positivity(max_entry: int = 5, brute_max: int = 3) -> list[VerdictReport]:
    """The (x+1) expansion of the loop-class GF against the closed form and,
    for small sizes, against brute force over every pair of loop words."""
    reports = []
    for m, n in itertools.product(range(max_entry + 1), repeat=2):
        shifted = balanced_loop_shifted(m, n)
        formula = from_shifted_basis(shifted)
        closed = gf_abs_signed(ClassParams(m, m, n, n))
        observed = {"closed_form_gf": closed, "positive": shifted.is_nonnegative()}
        witness = None
        if m <= brute_max and n <= brute_max:
            pairs = 0
            for v in loop_words(n, "vertical"):
                for h in loop_words(m, "horizontal"):
                    pairs += 1
                    brute = shuffle_distribution(v, h, "abs-signed-peak").to_poly()
                    if witness is None and brute != formula:
                        witness = {"V": v, "H": h, "brute_force": brute}
            observed["brute_force_pairs"] = pairs
        ok = formula == closed and shifted.is_nonnegative() and witness is None
        reports.append(VerdictReport("thmpos", {"m": m, "n": n}, {"gf": formula, "shifted": shifted}, observed, _verdict(ok), witness))
    return reports


@_timed
def verify_even_count_transfer(max_entry: int = 3) -> list[VerdictReport]:
    """Shuffles of loops by |signed peak-count| versus binary words by absolute
    even-count, and both versus the per-value product formula.

    The k = 0 entry is compared with the doubled formula ``2 C(m+n, n)^2`` as
    printed and flagged when that disagrees with the count.
    """
    reports = []
    for m, n in itertools.product(range(max_entry + 1), repeat=2):
        v = "N" * n + "S" * n
        h = "E" * m + "W" * m
        shuffles_dist = shuffle_distribution(v, h, "abs-signed-peak")
        words_dist = binary_abs_even_distribution(m, n)
        product = {k: 2 * binom(m + n, n - k) * binom(m + n, n + k) for k in range(1, n + 1)}
        product_ok = all(shuffles_dist.get(k, 0) == product[k] for k in product)
        ok = shuffles_dist == words_dist and product_ok
        reports.append(
            VerdictReport(
                "lemevencount",
                {"m": m, "n": n, "k": "all"},
                {"words": words_dist, "product_k_positive": product},
                {"shuffles": shuffles_dist},
                _verdict(ok),
                None if ok else {"V": v, "H": h},
            )
        )
        printed = 2 * binom(m + n, n) ** 2
        zero = shuffles_dist.get(0, 0)
        reports.append(
            VerdictReport(
                "lemevencount",
                {"m": m, "n": n, "k": "0"},
                {"printed_formula": printed},
                {"count": zero, "single_product": binom(m + n, n) ** 2},
                CONFIRMED if zero == printed else DISCREPANCY,
                None if zero == printed else {"V": v, "H": h, "count": zero},
                note=None if zero == printed else "k = 0 is hit once by k and -k, so the factor 2 does not apply there",
            )
        )
    return reports


@_timed
def verify_toggle_classes(max_entry: int = 3) -> list[VerdictReport]:
    """Toggle classes partition the binary words, have size 2^|base|, match the
    anchor/base description, and carry the GF bin_upper(|base|/2, |base|)."""
    reports = []
    for m, n in itertools.product(range(max_entry + 1), repeat=2):
        words = list(binary_words(m, n))
        seen: dict[str, int] = {}
        classes = []
        problems = []
        for w in words:
            if w in seen:
                continue
            tc = bj.toggle_class(w)
            members = list(tc.members())
            # closure under toggling, computed independently of the anchor/base view
            orbit = {w}
            frontier = [w]
            while frontier:
                cur = frontier.pop()
                for i in range(len(cur) // 2):
                    t = bj.toggle(cur, i)
                    if t not in orbit:
                        orbit.add(t)
                        frontier.append(t)
            if set(members) != orbit or len(members) != tc.size:
                problems.append({"word": w, "issue": "class"})
            eq_t = {x for x in words if bj.anchor_of(x) == tc.anchor and bj.base_of(x) == tc.base}
            if eq_t != orbit:
                problems.append({"word": w, "issue": "anchor/base membership"})
            b = len(tc.base)
            gf = Distribution.tally(members, lambda x: int(absolute_even_count(x))).to_poly()
            if b % 2 or gf != bin_upper(b // 2, b):
                problems.append({"word": w, "issue": "class GF", "gf": gf})
            for x in members:
                seen[x] = len(classes)
            classes.append(tc)
        total = sum(tc.size for tc in classes)
        if total != len(words) or len(seen) != len(words):
            problems.append({"issue": "partition"})
        reports.append(
            VerdictReport(
                "toggle",
                {"m": m, "n": n},
                {"words": binom(2 * m + 2 * n, 2 * n)},
                {"words": total, "classes": len(classes)},
                _verdict(not problems),
                problems or None,
            )
        )
    return reports


def _scaled(p: ClassParams) -> tuple[IntPoly, IntPoly]:
    from math import factorial as f

    r, l, u, d = p
    left = gf_abs_signed(p) * (f(r + l) * f(u + d))
    right = gf_abs_signed(ClassParams(r, u, l, d)) * (f(r + u) * f(l + d))
    return left, right


@_timed
def verify_scaling(max_entry: int = 5) -> list[VerdictReport]:
    """F(r,l,u,d)(r+l)!(u+d)! == F(r,u,l,d)(r+u)!(l+d)!, exactly."""
    reports = []
    for p in class_grid(max_entry):
        left, right = _scaled(p)
        reports.append(VerdictReport("propscale", dict(p._asdict()), left, right, _verdict(left == right),
                                     None if left == right else {"left": left, "right": right}))
    return reports


@_timed
def verify_word_identities(max_len: int = 8) -> list[VerdictReport]:
    """Per-word identities checked on every word up to ``max_len`` letters:
    the inward rewriting of signed peak-count, the rewriting of shifted In-Vert,
    parity of peak-count, and negation under complement.  Binary words up to
    ``max_len + 2`` letters are checked for the odd-pair form of the shifted
    even-count."""
    reports = []
    for n in range(max_len + 1):
        bad: dict = {}
        for t in itertools.product("EWNS", repeat=n):
            w = "".join(t)
            s = signed_peak_count(w)
            if s != signed_peak_via_inward(w):
                bad.setdefault("signed_inward", w)
            if shifted_in_vert(w) != shifted_in_vert_via_up(w):
                bad.setdefault("shifted_in_vert_up", w)
            if (peak_count(w) - s) % 2:
                bad.setdefault("parity", w)
            c = complement(w)
            if signed_peak_count(c) != -s or complement(c) != w:
                bad.setdefault("complement", w)
        reports.append(VerdictReport("words", {"length": n}, "all identities hold", {"failing": sorted(bad)}, _verdict(not bad), bad or None))
    for n in range(0, max_len + 3, 2):
        bad_words = [
            "".join(t) for t in itertools.product("01", repeat=n)
            if shifted_even_count("".join(t)) != shifted_even_count_via_pairs("".join(t))
        ]
        reports.append(VerdictReport("words", {"binary_length": n}, "odd-pair form of shifted even-count",
                                     {"failing": len(bad_words)}, _verdict(not bad_words), bad_words[:1] or None))
    return reports


VERIFIERS: dict[str, Callable[..., list[VerdictReport]]] = {
    "thmmain": verify_signed_peak_distribution,
    "cormod2": verify_parity_difference,
    "supercatalan": verify_super_catalan,
    "propbiject": verify_flip_transport,
    "propncount": verify_in_vert_count,
    "lemf": verify_lower_blocks,
    "propg": verify_upper_blocks,
    "thmpos": verify_balanced_positivity,
    "lemevencount": verify_even_count_transfer,
    "toggle": verify_toggle_classes,
    "propscale": verify_scaling,
    "words": verify_word_identities,
}

# Default size argument per verifier when the caller gives none.
DEFAULT_SIZE = {
    "thmmain": 4,
    "cormod2": 4,
    "supercatalan": 5,
    "propbiject": 4,
    "propncount": 4,
    "lemf": 12,
    "propg": 12,
    "thmpos": 5,
    "lemevencount": 3,
    "toggle": 3,
    "propscale": 5,
    "words": 8,
}
