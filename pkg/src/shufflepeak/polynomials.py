"""Exact integer polynomials, the (x+1) basis and the subset building blocks."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Union


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero outside ``0 <= k <= n``."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


class IntPoly:
    """Dense univariate polynomial with ``int`` coefficients, lowest degree first.

    Instances are immutable and kept canonical (no trailing zeros), so the
    zero polynomial has ``coeffs == ()`` and ``degree == -1``.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._coeffs = tuple(c)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPoly":
        return cls([0] * degree + [coeff])

    @classmethod
    def from_counts(cls, counts: Mapping[int, int]) -> "IntPoly":
        """Build ``sum(count * x**k)`` from a map of non-negative exponents."""
        if not counts:
            return cls()
        if min(counts) < 0:
            raise ValueError("negative exponent in counts")
        c = [0] * (max(counts) + 1)
        for k, v in counts.items():
            c[k] += v
        return cls(c)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    def __getitem__(self, i: int) -> int:
        return self._coeffs[i] if 0 <= i < len(self._coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPoly):
            return self._coeffs == other._coeffs
        if isinstance(other, int):
            return self._coeffs == IntPoly([other])._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __add__(self, other: Union["IntPoly", int]) -> "IntPoly":
        other = _lift(other)
        n = max(len(self._coeffs), len(other._coeffs))
        return IntPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly(-a for a in self._coeffs)

    def __sub__(self, other: Union["IntPoly", int]) -> "IntPoly":
        return self + (-_lift(other))

    def __rsub__(self, other: int) -> "IntPoly":
        return _lift(other) - self

    def __mul__(self, other: Union["IntPoly", int]) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(other * a for a in self._coeffs)
        if not isinstance(other, IntPoly):
            return NotImplemented
        if not self or not other:
            return IntPoly()
        out = [0] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a:
                for j, b in enumerate(other._coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "IntPoly":
        out = IntPoly([1])
        for _ in range(e):
            out = out * self
        return out

    def __call__(self, x: int) -> int:
        acc = 0
        for a in reversed(self._coeffs):
            acc = acc * x + a
        return acc

    def __repr__(self) -> str:
        return f"IntPoly({list(self._coeffs)})"

    def __str__(self) -> str:
        terms = []
        for i in range(self.degree, -1, -1):
            a = self._coeffs[i]
            if not a:
                continue
            mag = abs(a)
            body = "" if (mag == 1 and i) else str(mag)
            if i == 1:
                body += "x"
            elif i > 1:
                body += f"x^{i}"
            sign = "-" if a < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        return " ".join([head] + [f"{s} {b}" for s, b in terms[1:]])


def _lift(value: Union[IntPoly, int]) -> IntPoly:
    if isinstance(value, IntPoly):
        return value
    if isinstance(value, int):
        return IntPoly([value])
    raise TypeError(f"cannot use {type(value).__name__} as a polynomial")


X = IntPoly([0, 1])
X_PLUS_1 = IntPoly([1, 1])


@dataclass(frozen=True)
class ShiftedCoeffs:
    """Coefficients of a polynomial in the powers ``(x+1)**0, (x+1)**1, ...``."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(a) for a in c))

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def is_nonnegative(self) -> bool:
        return all(a >= 0 for a in self.coeffs)

    def to_poly(self) -> IntPoly:
        return from_shifted_basis(self)


def _divide_by_x_plus_1(a: list[int]) -> tuple[list[int], int]:
    # a = (x+1) q + rem, by synthetic division at the root -1
    n = len(a)
    if n == 0:
        return [], 0
    q = [0] * (n - 1)
    carry = 0
    for k in range(n - 1, 0, -1):
        carry = a[k] - carry
        q[k - 1] = carry
    return q, a[0] - carry


def to_shifted_basis(p: IntPoly) -> ShiftedCoeffs:
    """Taylor shift: the ``c`` with ``p(x) == sum(c[i] * (x+1)**i)``."""
    a = list(p.coeffs)
    out = []
    while a:
        a, rem = _divide_by_x_plus_1(a)
        out.append(rem)
    return ShiftedCoeffs(tuple(out))


def from_shifted_basis(c: Union[ShiftedCoeffs, Iterable[int]]) -> IntPoly:
    coeffs = c.coeffs if isinstance(c, ShiftedCoeffs) else tuple(c)
    acc = IntPoly()
    for a in reversed(coeffs):
        acc = acc * X_PLUS_1 + a
    return acc


def is_x_plus_1_positive(p: IntPoly) -> bool:
    """True when every coefficient in the (x+1) basis is non-negative.

    The zero polynomial counts as positive.
    """
    return to_shifted_basis(p).is_nonnegative()


# -- subset building blocks --------------------------------------------------

def bin_lower(k: int, n: int) -> IntPoly:
    """Subsets of ``[n]`` of size at least ``k``, counted by ``|S| - k``."""
    if k < 0 or n < 0:
        raise ValueError("bin_lower needs k, n >= 0")
    return IntPoly(binom(n, i + k) for i in range(max(n - k + 1, 0)))


def bin_lower_shifted(k: int, n: int) -> ShiftedCoeffs:
    """Closed-form (x+1) coefficients of :func:`bin_lower`: ``C(n-i-1, k-1)``."""
    if k < 1 or n < 0:
        raise ValueError("closed form needs k >= 1 and n >= 0")
    return ShiftedCoeffs(tuple(binom(n - i - 1, k - 1) for i in range(n)))


def bin_upper(k: int, n: int) -> IntPoly:
    """Subsets of ``[n]`` counted by ``| |S| - k |``."""
    if not 0 <= k <= n:
        raise ValueError(f"bin_upper needs 0 <= k <= n, got k={k}, n={n}")
    counts: dict[int, int] = {}
    for j in range(n + 1):
        counts[abs(j - k)] = counts.get(abs(j - k), 0) + binom(n, j)
    return IntPoly.from_counts(counts)


def bin_upper_shifted(k: int, n: int) -> ShiftedCoeffs:
    """Closed-form (x+1) coefficients of :func:`bin_upper` for ``1 <= k <= n``.

    Coefficient ``i > 0`` is ``C(n-i-1, k-1) + C(n-i-1, n-k-1)``; the constant
    coefficient is zero.  At ``k == n`` the second family is ``(x+1)**n``
    itself, i.e. the boundary term ``C(-1, -1)`` is read as 1.
    """
    if not 1 <= k <= n:
        raise ValueError(f"closed form needs 1 <= k <= n, got k={k}, n={n}")
    c = [0] * (n + 1)
    for i in range(1, n + 1):
        c[i] = binom(n - i - 1, k - 1) + binom(n - i - 1, n - k - 1)
    if k == n:
        c[n] += 1
    return ShiftedCoeffs(tuple(c))


def balanced_loop_shifted(m: int, n: int) -> ShiftedCoeffs:
    """(x+1) coefficients of the absolute signed peak-count GF of a loop class.

    The class has ``m`` East, ``m`` West, ``n`` North and ``n`` South steps.
    The constant coefficient is ``C(m+n, n)`` and, for ``i > 0``,
    ``2 * sum_{k<n} C(m+n, k) C(m+n-k, 2n-2k) C(2n-2k-i-1, n-k-1)``.
    """
    if m < 0 or n < 0:
        raise ValueError("m, n must be non-negative")
    c = [binom(m + n, n)]
    for i in range(1, 2 * n + 1):
        total = 0
        for k in range(n):
            total += binom(m + n, k) * binom(m + n - k, 2 * n - 2 * k) * binom(2 * n - 2 * k - i - 1, n - k - 1)
        c.append(2 * total)
    return ShiftedCoeffs(tuple(c))


# -- toggle basis ------------------------------------------------------------

def toggle_basis_element(j: int) -> IntPoly:
    """Monic degree-``j`` member of the toggle basis: 1, then ``bin_upper(j, 2j-1)``."""
    if j < 0:
        raise ValueError("degree must be non-negative")
    return IntPoly([1]) if j == 0 else bin_upper(j, 2 * j - 1)


def toggle_basis_decompose(p: IntPoly) -> tuple[int, ...]:
    """Unique coefficients ``a`` with ``p == sum(a[j] * toggle_basis_element(j))``.

    Each basis element is monic, so eliminating from the top degree down
    stays in the integers.
    """
    rem = p
    out = [0] * (p.degree + 1)
    for j in range(p.degree, -1, -1):
        a = rem[j]
        if a:
            out[j] = a
            rem = rem - toggle_basis_element(j) * a
    assert not rem
    return tuple(out)


def is_toggle_buildable(p: IntPoly) -> bool:
    return all(a >= 0 for a in toggle_basis_decompose(p))
