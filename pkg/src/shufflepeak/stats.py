"""Path statistics and binary-word statistics.

Pattern counts on shuffles see the virtual origin marker at index 0, so
``pattern_count("N", INWARD, VERTICAL)`` counts the leading ``(O, N)`` pair.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Collection

from .paths import INWARD, ORIGIN, OUTWARD, VERTICAL


def pattern_count(word: str, first: Collection[str], second: Collection[str]) -> int:
    """Number of adjacent pairs ``(a, b)`` with ``a in first`` and ``b in second``."""
    full = ORIGIN + word
    return sum(1 for a, b in zip(full, full[1:]) if a in first and b in second)


# Two-letter patterns with distinct letters never overlap, so str.count is exact.


def peak_count(word: str) -> int:
    """Number of ES and NW corners."""
    return word.count("ES") + word.count("NW")


def signed_peak_count(word: str) -> int:
    """NW corners minus ES corners."""
    return word.count("NW") - word.count("ES")


def in_vert(word: str) -> int:
    return pattern_count(word, INWARD, VERTICAL)


def shifted_in_vert(word: str) -> int:
    return in_vert(word) - word.count("S")


def signed_peak_via_inward(word: str) -> int:
    """Signed peak-count rewritten as #(N, In) - #(Out, S)."""
    return pattern_count(word, "N", INWARD) - pattern_count(word, OUTWARD, "S")


def shifted_in_vert_via_up(word: str) -> int:
    """Shifted In-Vert rewritten as #(In, N) - #(Out, S)."""
    return pattern_count(word, INWARD, "N") - pattern_count(word, OUTWARD, "S")


STATISTICS = {
    "peak": peak_count,
    "signed-peak": signed_peak_count,
    "abs-signed-peak": lambda w: abs(signed_peak_count(w)),
    "in-vert": in_vert,
    "shifted-in-vert": shifted_in_vert,
}


# -- binary words ------------------------------------------------------------

def check_binary(word: str) -> str:
    if set(word) - {"0", "1"}:
        raise ValueError(f"not a binary word: {word!r}")
    return word


def in_binary_class(word: str, m: int, n: int) -> bool:
    """Membership in the set of words with 2m zeroes and 2n ones."""
    return word.count("0") == 2 * m and word.count("1") == 2 * n and len(word) == 2 * (m + n)


def even_count(word: str) -> int:
    """Ones sitting at even 1-indexed positions."""
    return word[1::2].count("1")


def shifted_even_count_halves(word: str) -> int:
    """Shifted even-count measured in half units: ``2*even_count - #ones``."""
    return 2 * even_count(word) - word.count("1")


def shifted_even_count(word: str) -> Fraction:
    return Fraction(shifted_even_count_halves(word), 2)


def absolute_even_count(word: str) -> Fraction:
    return abs(shifted_even_count(word))


def odd_indexed_pairs(word: str) -> list[tuple[str, str]]:
    """Split ``word`` into consecutive pairs at positions (1,2), (3,4), ..."""
    if len(word) % 2:
        raise ValueError(f"odd-length word has no pair decomposition: {word!r}")
    return [(word[i], word[i + 1]) for i in range(0, len(word), 2)]


def shifted_even_count_via_pairs(word: str) -> Fraction:
    """#(0,1) pairs minus half the number of mixed pairs."""
    pairs = odd_indexed_pairs(word)
    up = sum(1 for p in pairs if p == ("0", "1"))
    mixed = sum(1 for a, b in pairs if a != b)
    return up - Fraction(mixed, 2)
