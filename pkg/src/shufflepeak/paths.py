"""Steps, step words and shuffles.

Words are plain ``str`` objects over the alphabet ``E W N S``.  A shuffle is
just a mixed word; the origin marker that precedes every shuffle is virtual
and never stored.  It is spelled ``O`` whenever a statistic needs to see it.
"""

from __future__ import annotations

import enum
import itertools
from typing import Iterator, NamedTuple


class Step(str, enum.Enum):
    EAST = "E"
    WEST = "W"
    NORTH = "N"
    SOUTH = "S"
    ORIGIN = "O"

    @property
    def outward(self) -> bool:
        return self in (Step.EAST, Step.NORTH)

    @property
    def inward(self) -> bool:
        return not self.outward

    @property
    def horizontal(self) -> bool:
        return self in (Step.EAST, Step.WEST)

    @property
    def vertical(self) -> bool:
        return self in (Step.NORTH, Step.SOUTH)


ORIGIN = Step.ORIGIN.value

# Step sets by letter, the origin marker included where it belongs.
HORIZONTAL = frozenset("EW")
VERTICAL = frozenset("NS")
INWARD = frozenset("WSO")
OUTWARD = frozenset("EN")

_SYNONYMS = {"R": "E", "L": "W", "U": "N", "D": "S"}
_DELTA = {"E": (1, 0), "W": (-1, 0), "N": (0, 1), "S": (0, -1)}
_COMPLEMENT = str.maketrans("ENWS", "NESW")


class WordParseError(ValueError):
    """Raised for a step word containing a letter outside E/W/N/S (or R/L/U/D)."""

    def __init__(self, text: str, index: int):
        self.text = text
        self.index = index
        super().__init__(f"invalid step {text[index]!r} at index {index} in {text!r}")


class ClassParams(NamedTuple):
    """Step multiplicities (r, l, u, d) of a shuffle class."""

    r: int
    l: int
    u: int
    d: int

    @classmethod
    def of(cls, word: str) -> "ClassParams":
        return cls(word.count("E"), word.count("W"), word.count("N"), word.count("S"))

    @classmethod
    def parse(cls, text: str) -> "ClassParams":
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 4:
            raise ValueError(f"expected r,l,u,d but got {text!r}")
        values = [int(p) for p in parts]
        if min(values) < 0:
            raise ValueError(f"class entries must be non-negative: {text!r}")
        return cls(*values)


def parse_word(text: str) -> str:
    """Normalise ``text`` to a canonical E/W/N/S word.

    Lower case and the synonyms R, L, U, D are accepted.

    >>> parse_word("ruDL")
    'ENSW'
    """
    out = []
    for i, ch in enumerate(text.upper()):
        ch = _SYNONYMS.get(ch, ch)
        if ch not in _DELTA:
            raise WordParseError(text, i)
        out.append(ch)
    return "".join(out)


def word_kind(word: str) -> str:
    """Classify a word as ``"empty"``, ``"vertical"``, ``"horizontal"`` or ``"mixed"``."""
    letters = set(word)
    if not letters:
        return "empty"
    if letters <= VERTICAL:
        return "vertical"
    if letters <= HORIZONTAL:
        return "horizontal"
    return "mixed"


def is_vertical(word: str) -> bool:
    return set(word) <= VERTICAL


def is_horizontal(word: str) -> bool:
    return set(word) <= HORIZONTAL


def projections(word: str) -> tuple[str, str]:
    """Split a shuffle into its (vertical, horizontal) projections."""
    vertical = "".join(ch for ch in word if ch in VERTICAL)
    horizontal = "".join(ch for ch in word if ch in HORIZONTAL)
    return vertical, horizontal


def prefix_points(word: str) -> Iterator[tuple[int, int]]:
    """Yield every point visited by the walk, starting with (0, 0)."""
    x = y = 0
    yield x, y
    for ch in word:
        dx, dy = _DELTA[ch]
        x += dx
        y += dy
        yield x, y


def is_quarter_planar(word: str) -> bool:
    return all(x >= 0 and y >= 0 for x, y in prefix_points(word))


def is_positive(word: str) -> bool:
    """True when no prefix of a one-dimensional word goes below zero.

    Works for vertical and horizontal words alike; mixed words are judged
    on both coordinates, which is the same as :func:`is_quarter_planar`.
    """
    return is_quarter_planar(word)


def is_loop(word: str) -> bool:
    return word.count("E") == word.count("W") and word.count("N") == word.count("S")


def complement(word: str) -> str:
    """Swap E<->N and W<->S position by position."""
    return word.translate(_COMPLEMENT)


def words_with_counts(a: str, b: str, na: int, nb: int) -> Iterator[str]:
    """All words with ``na`` copies of ``a`` and ``nb`` of ``b``, in lexicographic
    order of the positions of ``a``."""
    n = na + nb
    for pos in itertools.combinations(range(n), na):
        buf = [b] * n
        for p in pos:
            buf[p] = a
        yield "".join(buf)


def vertical_words(u: int, d: int, positive: bool = False) -> Iterator[str]:
    for w in words_with_counts("N", "S", u, d):
        if not positive or is_positive(w):
            yield w


def horizontal_words(r: int, l: int, positive: bool = False) -> Iterator[str]:
    for w in words_with_counts("E", "W", r, l):
        if not positive or is_positive(w):
            yield w
