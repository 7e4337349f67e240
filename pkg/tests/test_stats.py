from fractions import Fraction
import itertools

import pytest

from shufflepeak.paths import INWARD, OUTWARD, VERTICAL
from shufflepeak.stats import (
    absolute_even_count,
    even_count,
    in_vert,
    odd_indexed_pairs,
    pattern_count,
    peak_count,
    shifted_even_count,
    shifted_even_count_halves,
    shifted_even_count_via_pairs,
    shifted_in_vert,
    signed_peak_count,
)

from conftest import all_words

# The example shuffle O N W S E S N N, written without its origin marker.
EXAMPLE = "NWSESNN"


def test_pattern_count_example():
    assert pattern_count(EXAMPLE, INWARD, "N") == 2
    # (O,N), (W,S), (S,N); the trailing (N,N) starts with an outward step
    assert pattern_count(EXAMPLE, INWARD, VERTICAL) == 3
    assert pattern_count(EXAMPLE, "O", "O") == 0


def test_pattern_count_sees_origin():
    assert pattern_count("N", "O", "N") == 1
    assert pattern_count("", "O", VERTICAL) == 0


@pytest.mark.parametrize("word, peak, signed", [("ENWS", 1, 1), ("EENS", 0, 0), ("", 0, 0), ("NESW", 1, -1), ("ENSE", 0, 0)])
def test_peaks(word, peak, signed):
    assert peak_count(word) == peak
    assert signed_peak_count(word) == signed


def _pairs(word):
    full = "O" + word
    return list(zip(full, full[1:]))


def test_peak_counts_match_pair_scan():
    # an independent scan over explicit pairs
    for w in all_words(6):
        ps = _pairs(w)
        assert peak_count(w) == sum(p in (("E", "S"), ("N", "W")) for p in ps)
        assert signed_peak_count(w) == ps.count(("N", "W")) - ps.count(("E", "S"))


@pytest.mark.parametrize("word, iv, shifted", [(EXAMPLE, 3, 1), ("ENES", 0, -1), ("EEEE", 0, 0)])
def test_in_vert(word, iv, shifted):
    assert in_vert(word) == iv
    assert shifted_in_vert(word) == shifted


def test_inward_and_up_rewrites_exhaustive():
    for w in all_words(8):
        s = signed_peak_count(w)
        assert s == pattern_count(w, "N", INWARD) - pattern_count(w, OUTWARD, "S")
        assert shifted_in_vert(w) == pattern_count(w, INWARD, "N") - pattern_count(w, OUTWARD, "S")
        assert (peak_count(w) - s) % 2 == 0


def test_even_count_examples():
    assert absolute_even_count("1010110000") == 1
    assert even_count("11") == 1 and shifted_even_count("11") == 0
    assert even_count("0101") == 2
    assert shifted_even_count("0101") == 1
    assert absolute_even_count("0101") == 1
    assert shifted_even_count_halves("0101") == 2
    assert shifted_even_count("01") == Fraction(1, 2)


def test_odd_indexed_pairs():
    assert ["".join(p) for p in odd_indexed_pairs("10011100")] == ["10", "01", "11", "00"]
    assert odd_indexed_pairs("11") == [("1", "1")]
    with pytest.raises(ValueError):
        odd_indexed_pairs("101")


def test_pair_form_of_shifted_even_count():
    for n in range(0, 11, 2):
        for t in itertools.product("01", repeat=n):
            w = "".join(t)
            assert shifted_even_count(w) == shifted_even_count_via_pairs(w)
