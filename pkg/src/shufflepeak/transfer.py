"""Transfer recursions for walk-set generating functions.

The brute-force sets in :mod:`shufflepeak.enumeration` grow like binomials
times Catalan numbers; these recursions walk the same sets one step at a
time, keyed on what a corner depends on (the previous letter) and what the
quarter-plane condition depends on (the current position).
"""

from __future__ import annotations

from collections import Counter, defaultdict

from .enumeration import Distribution
from .paths import is_positive, is_vertical

# Corner weights: (previous, next) -> contribution to the statistic.
_WEIGHTS = {
    "peak": {("E", "S"): 1, ("N", "W"): 1},
    "signed-peak": {("E", "S"): -1, ("N", "W"): 1},
}


def walk_distribution(vertical: str, r: int, l: int, stat: str = "peak", mode: str = "quarter") -> Distribution:
    """Distribution of ``stat`` over walks with vertical projection ``vertical``
    and ``r`` East / ``l`` West steps.

    ``mode="quarter"`` keeps only walks in x >= 0, y >= 0 and requires a
    positive vertical projection; ``mode="planar"`` keeps every shuffle.
    """
    if mode not in ("quarter", "planar"):
        raise ValueError(f"unknown mode {mode!r}")
    if not is_vertical(vertical):
        raise ValueError(f"not a vertical word: {vertical!r}")
    quarter = mode == "quarter"
    if quarter and not is_positive(vertical):
        raise ValueError(f"vertical projection must be positive: {vertical!r}")
    weights = _WEIGHTS[stat]
    nv = len(vertical)

    # state (i, e, w, last letter) -> Counter(stat value -> count)
    layer: dict = {(0, 0, 0, "O"): Counter({0: 1})}
    for _ in range(nv + r + l):
        nxt: dict = defaultdict(Counter)
        for (i, e, w, last), dist in layer.items():
            moves = []
            if i < nv:
                moves.append((vertical[i], (i + 1, e, w)))
            if e < r:
                moves.append(("E", (i, e + 1, w)))
            if w < l and (not quarter or e - w >= 1):
                moves.append(("W", (i, e, w + 1)))
            for ch, (ni, ne, nw) in moves:
                bump = weights.get((last, ch), 0)
                target = nxt[(ni, ne, nw, ch)]
                for k, c in dist.items():
                    target[k + bump] += c
        layer = nxt
    total: Counter = Counter()
    for dist in layer.values():
        total.update(dist)
    return Distribution.from_counter(total)


def quarter_loop_distribution(length: int, stat: str = "peak") -> Distribution:
    """Distribution of ``stat`` over quarter-plane loops of ``length`` steps."""
    if length < 0 or length % 2:
        raise ValueError(f"loop length must be even and non-negative, got {length}")
    weights = _WEIGHTS[stat]
    steps = (("E", 1, 0), ("W", -1, 0), ("N", 0, 1), ("S", 0, -1))
    layer: dict = {(0, 0, "O"): Counter({0: 1})}
    for t in range(length):
        left = length - t - 1
        nxt: dict = defaultdict(Counter)
        for (x, y, last), dist in layer.items():
            for ch, dx, dy in steps:
                nx, ny = x + dx, y + dy
                if nx < 0 or ny < 0 or nx + ny > left:
                    continue
                bump = weights.get((last, ch), 0)
                target = nxt[(nx, ny, ch)]
                for k, c in dist.items():
                    target[k + bump] += c
        layer = nxt
    total: Counter = Counter()
    for dist in layer.values():
        total.update(dist)
    return Distribution.from_counter(total)
