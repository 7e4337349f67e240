"""Shuffle and walk enumeration, closed-form counts and generating functions.

Every closed form here has an enumeration twin so the two can be checked
against each other; closed forms never enumerate.
"""

from __future__ import annotations

import itertools
from collections import Counter
from functools import lru_cache
from math import factorial
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

from .paths import (
    ClassParams,
    horizontal_words,
    is_horizontal,
    is_positive,
    is_vertical,
)
from .polynomials import IntPoly, binom
from .stats import STATISTICS, absolute_even_count


class Distribution(dict):
    """Exact tally ``statistic value -> count``; only positive counts are kept."""

    @classmethod
    def tally(cls, items: Iterable, stat: Callable | str) -> "Distribution":
        if isinstance(stat, str):
            stat = STATISTICS[stat]
        return cls.from_counter(Counter(stat(x) for x in items))

    @classmethod
    def from_counter(cls, counts) -> "Distribution":
        return cls(sorted((k, v) for k, v in counts.items() if v))

    def total(self) -> int:
        return sum(self.values())

    def folded(self) -> "Distribution":
        """Collapse ``k`` and ``-k`` onto ``|k|``."""
        c: Counter = Counter()
        for k, v in self.items():
            c[abs(k)] += v
        return Distribution.from_counter(c)

    def to_poly(self) -> IntPoly:
        return IntPoly.from_counts({int(k): v for k, v in self.items()})


def distribution(items: Iterable, stat: Callable | str) -> Distribution:
    return Distribution.tally(items, stat)


# -- shuffles ----------------------------------------------------------------

def _check_pair(vertical: str, horizontal: str) -> None:
    if not is_vertical(vertical):
        raise ValueError(f"not a vertical word: {vertical!r}")
    if not is_horizontal(horizontal):
        raise ValueError(f"not a horizontal word: {horizontal!r}")


def shuffles(vertical: str, horizontal: str) -> Iterator[str]:
    """All interleavings of ``vertical`` and ``horizontal``.

    Order: lexicographic in the sequence of source choices, with the
    vertical word winning ties, so ``shuffles("NS", "EE")`` starts with
    ``"NSEE"``.
    """
    _check_pair(vertical, horizontal)
    n = len(vertical) + len(horizontal)
    for pos in itertools.combinations(range(n), len(vertical)):
        buf = [""] * n
        for p, ch in zip(pos, vertical):
            buf[p] = ch
        h = iter(horizontal)
        yield "".join(ch or next(h) for ch in buf)


@lru_cache(maxsize=64)
def _vertical_mask(n: int, v: int) -> np.ndarray:
    rows = np.zeros((binom(n, v), n), dtype=bool)
    for i, pos in enumerate(itertools.combinations(range(n), v)):
        rows[i, list(pos)] = True
    rows.setflags(write=False)
    return rows


_CODE = {"O": 0, "E": 1, "W": 2, "N": 3, "S": 4}
_LETTER = np.array(list("OEWNS"))


def shuffle_matrix(vertical: str, horizontal: str) -> np.ndarray:
    """Every shuffle as a row of step codes, origin column included.

    Rows follow the same order as :func:`shuffles`.  Codes: O=0, E=1, W=2,
    N=3, S=4.
    """
    _check_pair(vertical, horizontal)
    n = len(vertical) + len(horizontal)
    mask = _vertical_mask(n, len(vertical))
    body = np.empty(mask.shape, dtype=np.int8)
    count = mask.shape[0]
    body[mask] = np.tile(np.array([_CODE[c] for c in vertical], dtype=np.int8), count)
    body[~mask] = np.tile(np.array([_CODE[c] for c in horizontal], dtype=np.int8), count)
    return np.hstack([np.zeros((count, 1), dtype=np.int8), body])


def matrix_rows_as_words(codes: np.ndarray) -> list[str]:
    return ["".join(row) for row in _LETTER[codes[:, 1:]]]


def _pairs(codes: np.ndarray, a: Iterable[str], b: Iterable[str]) -> np.ndarray:
    left, right = codes[:, :-1], codes[:, 1:]
    in_a = np.isin(left, [_CODE[c] for c in a])
    in_b = np.isin(right, [_CODE[c] for c in b])
    return (in_a & in_b).sum(axis=1)


def matrix_statistic(codes: np.ndarray, stat: str) -> np.ndarray:
    """Vectorised statistics over a :func:`shuffle_matrix`."""
    nw = _pairs(codes, "N", "W")
    es = _pairs(codes, "E", "S")
    if stat == "peak":
        return nw + es
    if stat == "signed-peak":
        return nw - es
    if stat == "abs-signed-peak":
        return np.abs(nw - es)
    if stat in ("in-vert", "shifted-in-vert"):
        iv = _pairs(codes, "WSO", "NS")
        if stat == "in-vert":
            return iv
        return iv - (codes == _CODE["S"]).sum(axis=1)
    raise KeyError(stat)


def shuffle_peak_table(vertical: str, horizontals: Sequence[str]) -> np.ndarray:
    """Peak-count of every shuffle of ``vertical`` with each of ``horizontals``
    (all of one length), shape ``(len(horizontals), rows)``.

    Rows follow :func:`shuffles`.  With the vertical word fixed, a shuffle's
    peaks are E steps followed by S and W steps preceded by N, so the count
    is linear in the E and W indicators of the horizontal word and a whole
    batch reduces to one integer matrix product.
    """
    nh = len(horizontals[0]) if horizontals else 0
    for h in horizontals:
        _check_pair(vertical, h)
        if len(h) != nh:
            raise ValueError("horizontal words must share one length")
    n = len(vertical) + nh
    mask = _vertical_mask(n, len(vertical))
    rows = mask.shape[0]
    v_rank = np.cumsum(mask, axis=1) - 1
    letters = np.array(list(vertical) or ["?"])[np.where(mask, v_rank, 0)]
    is_s = mask & (letters == "S")
    is_n = mask & (letters == "N")
    next_is_s = np.zeros_like(is_s)
    next_is_s[:, :-1] = is_s[:, 1:]
    prev_is_n = np.zeros_like(is_n)
    prev_is_n[:, 1:] = is_n[:, :-1]
    # position of the j-th horizontal step in each row
    where_h = np.nonzero(~mask)[1].reshape(rows, nh)
    before_s = np.take_along_axis(next_is_s, where_h, axis=1).astype(np.int64)
    after_n = np.take_along_axis(prev_is_n, where_h, axis=1).astype(np.int64)
    east = np.array([[c == "E" for c in h] for h in horizontals], dtype=np.int64).reshape(len(horizontals), nh)
    west = np.array([[c == "W" for c in h] for h in horizontals], dtype=np.int64).reshape(len(horizontals), nh)
    return (before_s @ east.T + after_n @ west.T).T


def peak_sign_sums(vertical: str, horizontals: Sequence[str]) -> list[int]:
    """For each horizontal word, the peak-count GF of its shuffles with
    ``vertical`` evaluated at -1, by exhaustive enumeration."""
    table = shuffle_peak_table(vertical, horizontals)
    odd = (table % 2).sum(axis=1)
    return [int(table.shape[1] - 2 * o) for o in odd]


def shuffle_distribution(vertical: str, horizontal: str, stat: str) -> Distribution:
    """Brute-force distribution of ``stat`` over all shuffles (vectorised)."""
    values = matrix_statistic(shuffle_matrix(vertical, horizontal), stat)
    keys, counts = np.unique(values, return_counts=True)
    return Distribution.from_counter({int(k): int(c) for k, c in zip(keys, counts)})


# -- quarter-plane walks -----------------------------------------------------

def quarter_planar_set(vertical: str, r: int, l: int) -> Iterator[str]:
    """Quarter-plane walks with vertical projection ``vertical``, ``r`` East and
    ``l`` West steps.

    Depth-first search trying the next vertical step, then E, then W.  A
    branch is cut as soon as x would go negative.  With ``l <= r`` checked
    up front every surviving prefix completes (all E, then all W), so the
    search has no other dead ends.
    """
    if not is_vertical(vertical):
        raise ValueError(f"not a vertical word: {vertical!r}")
    if not is_positive(vertical):
        raise ValueError(f"vertical projection must be positive: {vertical!r}")
    if l > r:
        return iter(())
    return _quarter_walks(vertical, r, l)


def _quarter_walks(vertical: str, r: int, l: int) -> Iterator[str]:
    nv = len(vertical)
    buf: list[str] = []

    def walk(i: int, e: int, w: int) -> Iterator[str]:
        if i == nv and e == r and w == l:
            yield "".join(buf)
            return
        if i < nv:
            buf.append(vertical[i])
            yield from walk(i + 1, e, w)
            buf.pop()
        if e < r:
            buf.append("E")
            yield from walk(i, e + 1, w)
            buf.pop()
        if w < l and e - w >= 1:
            buf.append("W")
            yield from walk(i, e, w + 1)
            buf.pop()

    yield from walk(0, 0, 0)


def planar_set(vertical: str, r: int, l: int) -> Iterator[str]:
    """All shuffles of ``vertical`` with every horizontal word of counts (r, l)."""
    for h in horizontal_words(r, l):
        yield from shuffles(vertical, h)


_STEPS = (("E", 1, 0), ("W", -1, 0), ("N", 0, 1), ("S", 0, -1))


def quarter_planar_loops(length: int) -> Iterator[str]:
    """Quarter-plane walks of ``length`` steps from (0,0) back to (0,0).

    Branches whose distance from the origin exceeds the remaining steps are
    cut.
    """
    if length < 0 or length % 2:
        raise ValueError(f"loop length must be even and non-negative, got {length}")
    buf: list[str] = []

    def walk(x: int, y: int, left: int) -> Iterator[str]:
        if left == 0:
            yield "".join(buf)
            return
        for ch, dx, dy in _STEPS:
            nx, ny = x + dx, y + dy
            if nx < 0 or ny < 0 or nx + ny > left - 1:
                continue
            buf.append(ch)
            yield from walk(nx, ny, left - 1)
            buf.pop()

    yield from walk(0, 0, length)


# -- closed forms ------------------------------------------------------------

def signed_peak_closed_form(p: ClassParams, k: int) -> int:
    """Shuffles of the class with signed peak-count ``k``: C(r+u, u-k) C(l+d, d+k)."""
    r, l, u, d = p
    return binom(r + u, u - k) * binom(l + d, d + k)


def signed_peak_support(p: ClassParams) -> range:
    r, l, u, d = p
    return range(-d, u + 1)


def signed_peak_closed_distribution(p: ClassParams) -> Distribution:
    return Distribution.from_counter({k: signed_peak_closed_form(p, k) for k in signed_peak_support(p)})


def gf_abs_signed(p: ClassParams) -> IntPoly:
    """Absolute signed peak-count GF of a shuffle class, from the closed form."""
    return signed_peak_closed_distribution(ClassParams(*p)).folded().to_poly()


def in_vert_closed_form(p: ClassParams, k: int) -> int:
    """Shuffles with In-Vert ``k`` when V ends with S: C(r+u, u+d-k) C(l+d, k)."""
    r, l, u, d = p
    return binom(r + u, u + d - k) * binom(l + d, k)


def parity_difference(p: ClassParams) -> int:
    """Even minus odd peak-count shuffles: the alternating closed-form sum."""
    p = ClassParams(*p)
    return sum((-1) ** (k % 2) * signed_peak_closed_form(p, k) for k in signed_peak_support(p))


def super_catalan(r: int, k: int) -> int:
    if r < 0 or k < 0:
        raise ValueError("super Catalan arguments must be non-negative")
    num = factorial(2 * r) * factorial(2 * k)
    den = factorial(r) * factorial(k) * factorial(r + k)
    assert num % den == 0
    return num // den


# -- generating functions by enumeration ------------------------------------

def gf_peak_shuffleclass(vertical: str, horizontal: str) -> IntPoly:
    """Peak-count GF over every shuffle of the two words (brute force)."""
    return shuffle_distribution(vertical, horizontal, "peak").to_poly()


def gf_peak_Q(vertical: str, r: int, l: int, mode: str = "quarter") -> IntPoly:
    """Peak-count GF over the walk set Q.

    ``mode="quarter"`` restricts to quarter-plane walks with positive
    vertical projection; ``mode="planar"`` allows any shuffle.  Computed by
    the transfer recursion in :mod:`shufflepeak.transfer`; see
    :func:`gf_Q_by_enumeration` for the brute-force twin.
    """
    from .transfer import walk_distribution

    return walk_distribution(vertical, r, l, "peak", mode).to_poly()


def gf_signed_Q(vertical: str, r: int, l: int, mode: str = "quarter") -> IntPoly:
    """GF of ``|signed peak-count|`` over Q (see :func:`gf_peak_Q`)."""
    from .transfer import walk_distribution

    return walk_distribution(vertical, r, l, "signed-peak", mode).folded().to_poly()


def Q_set(vertical: str, r: int, l: int, mode: str = "quarter") -> Iterator[str]:
    if mode == "quarter":
        return quarter_planar_set(vertical, r, l)
    if mode == "planar":
        return planar_set(vertical, r, l)
    raise ValueError(f"unknown mode {mode!r}")


def gf_Q_by_enumeration(vertical: str, r: int, l: int, stat: str = "peak", mode: str = "quarter") -> IntPoly:
    """Brute-force twin of :func:`gf_peak_Q` / :func:`gf_signed_Q`."""
    dist = distribution(Q_set(vertical, r, l, mode), stat)
    if stat == "signed-peak":
        dist = dist.folded()
    return dist.to_poly()


# -- binary words ------------------------------------------------------------

def binary_words(m: int, n: int) -> Iterator[str]:
    """All words with ``2m`` zeroes and ``2n`` ones."""
    size = 2 * (m + n)
    for pos in itertools.combinations(range(size), 2 * n):
        buf = ["0"] * size
        for p in pos:
            buf[p] = "1"
        yield "".join(buf)


def binary_abs_even_distribution(m: int, n: int) -> Distribution:
    return distribution(binary_words(m, n), lambda w: int(absolute_even_count(w)))
