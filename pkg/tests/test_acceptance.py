"""Acceptance criteria, one test each.

Every test ends with a single PASS/FAIL line in the "acceptance criteria"
section of the pytest summary.  Run just this file with

    python3 -m pytest tests/test_acceptance.py -v

Set ACCEPTANCE_SCAN_MAX=4 to widen the conjecture scans of criterion 10.
"""

import io
import itertools
import json
import os
import sys
import time
from math import comb, factorial

import pytest

from shufflepeak.cli import run
from shufflepeak.conjectures import PROBE_POLY, check_p1, probe_buildable_example, scan
from shufflepeak.enumeration import binary_words, parity_difference, super_catalan
from shufflepeak.paths import ClassParams
from shufflepeak.polynomials import IntPoly, toggle_basis_element
from shufflepeak.report import CONFIRMED, COUNTEREXAMPLE, DISCREPANCY
from shufflepeak.verify import (
    verify_balanced_positivity,
    verify_even_count_transfer,
    verify_flip_transport,
    verify_in_vert_count,
    verify_lower_blocks,
    verify_parity_difference,
    verify_scaling,
    verify_signed_peak_distribution,
    verify_super_catalan,
    verify_toggle_classes,
)

SCAN_MAX = int(os.environ.get("ACCEPTANCE_SCAN_MAX", "3"))


class Clock:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.start


def failures(reports):
    return [(r.check, r.params, r.verdict) for r in reports if r.verdict != CONFIRMED]


@pytest.mark.criterion(1, "signed peak-count distribution equals the binomial product, entries <= 4")
def test_signed_peak_distribution_matches_product():
    with Clock() as clock:
        reports = verify_signed_peak_distribution(4)
    assert len(reports) == 5 ** 4
    assert not failures(reports)
    for r in reports:
        assert r.params["exhaustive"] or r.params["pairs"] >= 20
    assert clock.seconds < 60


@pytest.mark.criterion(2, "peak-count GF at -1 equals C(i+j, i) for all loop pairs, i, j <= 4")
def test_loop_pairs_parity_difference():
    with Clock() as clock:
        reports = [check_p1(i, j) for i, j in itertools.product(range(5), repeat=2)]
    assert not failures(reports)
    for r in reports:
        i, j = r.params["i"], r.params["j"]
        assert r.expected == comb(i + j, i)
        assert r.observed["pairs"] == comb(2 * i, i) * comb(2 * j, j)
    assert clock.seconds < 60


@pytest.mark.criterion(3, "parity difference of (r, l, r, l) is the super Catalan number, r, l <= 5")
def test_super_catalan():
    with Clock() as clock:
        reports = verify_super_catalan(5)
        for r, l in itertools.product(range(6), repeat=2):
            direct = factorial(2 * r) * factorial(2 * l) // (factorial(r) * factorial(l) * factorial(r + l))
            assert super_catalan(r, l) == direct == parity_difference(ClassParams(r, l, r, l))
    assert len(reports) == 36 and not failures(reports)
    assert clock.seconds < 1


@pytest.mark.criterion(4, "flip transport, coloring round trip and In-Vert counts, lengths <= 4")
def test_flip_and_colorings():
    with Clock() as clock:
        reports = verify_flip_transport(4) + verify_in_vert_count(4)
    assert not failures(reports)
    flip_buckets = {(r.params["len_V"], r.params["len_H"]) for r in reports if r.check == "propbiject"}
    count_buckets = {(r.params["len_V"], r.params["len_H"]) for r in reports if r.check == "propncount"}
    assert flip_buckets == count_buckets == set(itertools.product(range(1, 5), range(5)))
    assert clock.seconds < 60


@pytest.mark.criterion(5, "closed-form (x+1) coefficients of the subset polynomials, 1 <= k <= n <= 12")
def test_subset_blocks():
    from shufflepeak.verify import verify_upper_blocks

    with Clock() as clock:
        reports = verify_lower_blocks(12) + verify_upper_blocks(12)
    assert len(reports) == 24 and not failures(reports)
    assert clock.seconds < 1


@pytest.mark.criterion(6, "loop-class closed form vs GF (m, n <= 5) and vs brute force (m, n <= 3)")
def test_balanced_loop_positivity():
    with Clock() as clock:
        reports = verify_balanced_positivity(5, brute_max=3)
    assert len(reports) == 36 and not failures(reports)
    brute = [r for r in reports if "brute_force_pairs" in r.observed]
    assert len(brute) == 16
    assert clock.seconds < 120


@pytest.mark.criterion(7, "shuffles by |signed peak| equal binary words by |even-count|; k = 0 formula reported")
def test_even_count_transfer():
    with Clock() as clock:
        reports = verify_even_count_transfer(3)
    main = [r for r in reports if r.params["k"] == "all"]
    zero = [r for r in reports if r.params["k"] == "0"]
    assert len(main) == len(zero) == 16
    assert not failures(main)
    for r in zero:
        m, n = r.params["m"], r.params["n"]
        count = sum(1 for w in binary_words(m, n) if w[1::2].count("1") == n)
        assert r.observed["count"] == count
        printed = r.expected["printed_formula"]
        assert printed == 2 * comb(m + n, n) ** 2
        assert r.verdict == (CONFIRMED if count == printed else DISCREPANCY)
        if r.verdict == DISCREPANCY:
            assert r.witness and r.note
    assert clock.seconds < 60


@pytest.mark.criterion(8, "toggle classes partition the words and carry the subset GF, m, n <= 3")
def test_toggle_classes():
    with Clock() as clock:
        reports = verify_toggle_classes(3)
    assert len(reports) == 16 and not failures(reports)
    assert clock.seconds < 30


@pytest.mark.criterion(9, "factorial-weighted scaling identity, entries <= 5")
def test_scaling_identity():
    with Clock() as clock:
        reports = verify_scaling(5)
    assert len(reports) == 6 ** 4 and not failures(reports)
    assert clock.seconds < 1


@pytest.mark.criterion(10, f"conjecture scans clean in both modes, entries <= {SCAN_MAX}, loops <= 10")
def test_conjecture_scans():
    ids = ["conjmain", "conjx1equal", "conjbuild", "p2", "conj10"]
    with Clock() as clock:
        by_mode = {mode: scan(ids, max_entry=SCAN_MAX, mode=mode, jobs=os.cpu_count() or 1, max_len=10)
                   for mode in ("quarter", "planar")}
    for mode, reports in by_mode.items():
        assert {r.check for r in reports} == set(ids)
        bad = [r for r in reports if r.verdict == COUNTEREXAMPLE]
        for r in bad:
            assert r.witness, "a counterexample must carry its witness"
        assert not bad, f"{mode}: {[(r.check, r.params) for r in bad]}"
        assert not failures(reports)
    # the CLI gate agrees: exit 0 on a clean grid
    assert run(["scan", *ids, "--max", "2", "--max-len", "6"], stdout=io.BytesIO()) == 0
    assert clock.seconds < 600


@pytest.mark.criterion(11, "x^2 + 12x + 15 over the toggle basis, reported against the non-buildable claim")
def test_quadratic_probe():
    reports = probe_buildable_example(search_max=2)
    head = reports[0]
    coeffs = head.observed["toggle_basis"]
    assert coeffs == (4, 8, 1)
    assert sum((toggle_basis_element(j) * c for j, c in enumerate(coeffs)), IntPoly()) == PROBE_POLY
    assert head.expected["toggle_buildable"] is False
    buildable = all(c >= 0 for c in coeffs)
    assert head.verdict == (DISCREPANCY if buildable else CONFIRMED)
    buf = io.BytesIO()
    code = run(["verify", "buildprobe", "--max", "2"], stdout=buf)
    record = json.loads(buf.getvalue())[0]
    assert record["observed"]["toggle_basis"] == ["4", "8", "1"]
    assert record["verdict"] == head.verdict
    assert code == (2 if head.verdict != CONFIRMED else 0)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
