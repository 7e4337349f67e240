"""Flip, blue-red colorings, toggling, and the word-to-shuffle bijection."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Iterator

from .paths import OUTWARD, VERTICAL, is_horizontal, is_vertical, projections
from .stats import check_binary, odd_indexed_pairs

_OUT_RUN = re.compile("[EN]+")


def flip(word: str) -> str:
    """Reverse every maximal run of outward steps (E, N) in place."""
    return _OUT_RUN.sub(lambda m: m.group(0)[::-1], word)


# -- blue-red colorings ------------------------------------------------------


class ColoringError(ValueError):
    pass


@dataclass(frozen=True)
class BlueRedColoring:
    """Which steps of V and H are blue, by index into each source word.

    ``origin_blue`` stands in for the final South step of V: the origin
    marker is blue exactly when the walk opens with a vertical step.
    """

    blue_vertical: frozenset[int]
    blue_horizontal: frozenset[int]
    origin_blue: bool

    def blue_count(self) -> int:
        return len(self.blue_vertical) + len(self.blue_horizontal) + int(self.origin_blue)

    def inward_blue(self, vertical: str, horizontal: str) -> int:
        """Blue inward steps; this is the In-Vert of the fitting shuffle."""
        return (
            sum(1 for i in self.blue_vertical if vertical[i] == "S")
            + sum(1 for i in self.blue_horizontal if horizontal[i] == "W")
            + int(self.origin_blue)
        )


def coloring_encode(word: str) -> BlueRedColoring:
    """Colour blue every step (origin included) that precedes a vertical step."""
    vi = hi = 0
    blue_v, blue_h = set(), set()
    origin_blue = bool(word) and word[0] in VERTICAL
    for pos, ch in enumerate(word):
        precedes_vertical = pos + 1 < len(word) and word[pos + 1] in VERTICAL
        if ch in VERTICAL:
            if precedes_vertical:
                blue_v.add(vi)
            vi += 1
        else:
            if precedes_vertical:
                blue_h.add(hi)
            hi += 1
    return BlueRedColoring(frozenset(blue_v), frozenset(blue_h), origin_blue)


def coloring_decode(c: BlueRedColoring, vertical: str, horizontal: str) -> str:
    """Rebuild the unique shuffle that ``c`` fits.

    After a blue step the next step is the next unused letter of V, after a
    red one the next unused letter of H.
    """
    if not is_vertical(vertical) or not is_horizontal(horizontal):
        raise ColoringError("decode needs a vertical and a horizontal word")
    out = []
    vi = hi = 0
    blue = c.origin_blue
    for _ in range(len(vertical) + len(horizontal)):
        if blue:
            if vi == len(vertical):
                raise ColoringError("coloring asks for a vertical step after V is used up")
            out.append(vertical[vi])
            blue = vi in c.blue_vertical
            vi += 1
        else:
            if hi == len(horizontal):
                raise ColoringError("coloring asks for a horizontal step after H is used up")
            out.append(horizontal[hi])
            blue = hi in c.blue_horizontal
            hi += 1
    word = "".join(out)
    if coloring_encode(word) != c:
        raise ColoringError("coloring does not fit any shuffle")
    return word


def colorings(vertical: str, horizontal: str, in_vert: int) -> Iterator[BlueRedColoring]:
    """Every blue-red coloring with ``in_vert`` blue inward steps.

    Requires V to end with S; its last S is never blue and the origin takes
    its slot among the inward steps.
    """
    if not vertical.endswith("S"):
        raise ValueError("colorings need V to end with S")
    outward = [("v", i) for i, ch in enumerate(vertical) if ch in OUTWARD]
    outward += [("h", i) for i, ch in enumerate(horizontal) if ch in OUTWARD]
    inward = [("o", 0)]
    inward += [("v", i) for i, ch in enumerate(vertical[:-1]) if ch == "S"]
    inward += [("h", i) for i, ch in enumerate(horizontal) if ch == "W"]
    vertical_total = len(vertical)
    for outs in itertools.combinations(outward, vertical_total - in_vert):
        for ins in itertools.combinations(inward, in_vert):
            yield _coloring_from(outs + ins)


def _coloring_from(chosen) -> BlueRedColoring:
    bv = frozenset(i for src, i in chosen if src == "v")
    bh = frozenset(i for src, i in chosen if src == "h")
    return BlueRedColoring(bv, bh, any(src == "o" for src, _ in chosen))


# -- toggling ----------------------------------------------------------------


def toggle(word: str, i: int) -> str:
    """Swap the two letters of the ``i``-th (0-indexed) odd-indexed pair."""
    check_binary(word)
    if len(word) % 2:
        raise ValueError(f"toggling needs an even-length word: {word!r}")
    if not 0 <= i < len(word) // 2:
        raise IndexError(f"pair index {i} out of range for {word!r}")
    a, b = word[2 * i], word[2 * i + 1]
    return word[: 2 * i] + b + a + word[2 * i + 2 :]


@dataclass(frozen=True)
class ToggleClass:
    """Toggle-equivalence class, described by its anchor and base pair sets."""

    representative: str
    anchor: frozenset[int]
    base: frozenset[int]
    word_length: int = field(repr=False)

    @property
    def size(self) -> int:
        return 2 ** len(self.base)

    def members(self) -> Iterator[str]:
        """Members in order of the subset of base pairs set to 01."""
        base = sorted(self.base)
        for choice in itertools.product("10", repeat=len(base)):
            pairs = []
            for i in range(self.word_length // 2):
                if i in self.anchor:
                    pairs.append("11")
                elif i in self.base:
                    pairs.append("10" if choice[base.index(i)] == "1" else "01")
                else:
                    pairs.append("00")
            yield "".join(pairs)

    def __contains__(self, word: str) -> bool:
        return len(word) == self.word_length and anchor_of(word) == self.anchor and base_of(word) == self.base


def anchor_of(word: str) -> frozenset[int]:
    return frozenset(i for i, p in enumerate(odd_indexed_pairs(word)) if p == ("1", "1"))


def base_of(word: str) -> frozenset[int]:
    return frozenset(i for i, (a, b) in enumerate(odd_indexed_pairs(word)) if a != b)


def toggle_class(word: str) -> ToggleClass:
    check_binary(word)
    return ToggleClass(word, anchor_of(word), base_of(word), len(word))


# -- binary words to loop shuffles ------------------------------------------


def _slots(vertical: str, horizontal: str):
    outward = [("h", i) for i, ch in enumerate(horizontal) if ch == "E"]
    outward += [("v", i) for i, ch in enumerate(vertical) if ch == "N"]
    inward = [("o", 0)] if vertical else []
    inward += [("h", i) for i, ch in enumerate(horizontal) if ch == "W"]
    inward += [("v", i) for i, ch in enumerate(vertical[:-1]) if ch == "S"]
    return outward, inward


def word_to_shuffle(word: str, vertical: str, horizontal: str) -> str:
    """Map a binary word with ``2m`` zeroes and ``2n`` ones to a shuffle of
    the loops ``vertical`` (n N, n S, ending in S) and ``horizontal`` (m E, m W).

    Odd positions select the blue outward steps and even positions the blue
    inward steps, so the In-Vert of the decoded shuffle is the even-count of
    ``word``.  Flipping the decoded shuffle turns shifted In-Vert into signed
    peak-count, hence ``signed_peak_count(result) == shifted_even_count(word)``.
    """
    check_binary(word)
    if not is_vertical(vertical) or not is_horizontal(horizontal):
        raise ValueError("need a vertical and a horizontal word")
    n = vertical.count("N")
    m = horizontal.count("E")
    if vertical.count("S") != n or horizontal.count("W") != m:
        raise ValueError("word_to_shuffle needs loops")
    if vertical and not vertical.endswith("S"):
        raise ValueError("vertical loop must end with S")
    if word.count("1") != 2 * n or word.count("0") != 2 * m:
        raise ValueError(f"{word!r} does not have {2 * m} zeroes and {2 * n} ones")
    outward, inward = _slots(vertical, horizontal)
    chosen = [outward[j // 2] for j in range(0, len(word), 2) if word[j] == "1"]
    chosen += [inward[j // 2] for j in range(1, len(word), 2) if word[j] == "1"]
    return flip(coloring_decode(_coloring_from(chosen), vertical, horizontal))


def shuffle_to_word(word: str) -> str:
    """Inverse of :func:`word_to_shuffle`; the loops are read off ``word``."""
    vertical, horizontal = projections(word)
    c = coloring_encode(flip(word))
    outward, inward = _slots(vertical, horizontal)

    def is_blue(slot) -> bool:
        src, i = slot
        if src == "o":
            return c.origin_blue
        return i in (c.blue_vertical if src == "v" else c.blue_horizontal)

    bits = []
    for a, b in zip(outward, inward):
        bits.append("1" if is_blue(a) else "0")
        bits.append("1" if is_blue(b) else "0")
    return "".join(bits)
