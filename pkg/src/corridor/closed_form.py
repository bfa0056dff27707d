"""Reflection-method closed forms for bounded paths.

All sums are alternating binomial sums over mirror images across the two
barriers.  Binomials follow the convention ``C(n, m) = 0`` unless ``m`` is an
integer in ``[0..n]``, which lets half-integer lower indices vanish on their
own instead of needing a parity test at every call site.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational


def binomial(n: int, m: int | Rational) -> int:
    """``C(n, m)``, zero for ``m`` outside ``[0..n]`` or non-integral."""
    if isinstance(m, Rational) and m.denominator != 1:
        return 0
    m = int(m)
    if m < 0 or m > n:
        return 0
    return math.comb(n, m)


@dataclass(frozen=True)
class OrthogonalInstance:
    """East/north staircase from the origin to ``(a, b)``, strictly between
    ``y = x + s`` and ``y = x - t``."""

    a: int
    b: int
    s: int
    t: int

    def check(self) -> None:
        if self.a < 0 or self.b < 0:
            raise ValueError(f"step counts must be >= 0: a={self.a}, b={self.b}")
        if self.s < 1 or self.t < 1:
            raise ValueError(f"barrier gaps must be >= 1: s={self.s}, t={self.t}")
        if not -self.t <= self.b - self.a <= self.s:
            raise ValueError(f"endpoint outside barriers: b-a={self.b - self.a}, s={self.s}, t={self.t}")

    @classmethod
    def from_corridor(cls, h: int, i: int, ell: int, n: int) -> OrthogonalInstance:
        """Rotate an n-step corridor path ``i -> ell`` into a staircase.

        NE steps become north steps and SE steps east steps.
        """
        if (n + i - ell) % 2:
            raise ValueError(f"parity mismatch: n={n}, i={i}, ell={ell}")
        return cls(a=(n + i - ell) // 2, b=(n - i + ell) // 2, s=h - i + 1, t=i + 1)


def mohanty_count(oi: OrthogonalInstance) -> int:
    oi.check()
    a, b, s, t = oi.a, oi.b, oi.s, oi.t
    period = s + t
    total = 0
    for z in range(-((b + t) // period), a // period + 1):
        total += binomial(a + b, b + z * period) - binomial(a + b, b + z * period + t)
    return total


def cf_count_endpoint(h: int, i: int, ell: int, n: int) -> int:
    if not (0 <= i <= h and 0 <= ell <= h):
        raise ValueError(f"start and end must lie in [0..{h}]: i={i}, ell={ell}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    mid = Fraction(n - i + ell, 2)
    period = h + 2
    # terms vanish once both lower indices leave [0..n]
    lo = -math.floor((mid + i + 1) / period)
    hi = math.floor((n - mid) / period)
    total = 0
    for z in range(lo, hi + 1):
        base = mid + z * period
        total += binomial(n, base) - binomial(n, base + i + 1)
    return total


@dataclass(frozen=True)
class ClosedFormPlan:
    """Derived indices for the window sum.

    ``q = n+k-i-j``, ``r = ceil(q/2)``, ``p = k-j + (q mod 2)`` is the lowest
    feasible endpoint of the window, and ``[v, u]`` bounds the image index.
    """

    h: int
    n: int
    i: int
    k: int
    j: int
    q: int
    r: int
    p: int
    v: int
    u: int

    @classmethod
    def of(cls, h: int, i: int, k: int, j: int, n: int) -> ClosedFormPlan:
        q = n + k - i - j
        r = -(-q // 2)
        p = k - j + q % 2
        period = h + 2
        v = -((r + i + j + 1) // period)
        u = (n - r) // period
        return cls(h, n, i, k, j, q, r, p, v, u)

    def endpoint_offsets(self) -> range:
        """Inner indices whose endpoint ``p + 2*sidx`` lies in the corridor."""
        if self.j < 0:
            return range(0)
        lo = max(0, -(self.p // 2))
        hi = min(self.j, (self.h - self.p) // 2)
        return range(lo, hi + 1)


def cf_count_window(h: int, i: int, k: int, j: int, n: int, *, z_range: tuple[int, int] | None = None) -> int:
    """Window count as a double alternating binomial sum.

    ``z_range`` overrides the image-index bounds; widening it must not change
    the result.
    """
    if not 0 <= i <= h:
        raise ValueError(f"start must lie in [0..{h}], got i={i}")
    if n < 0 or j < -1:
        raise ValueError(f"need n >= 0 and j >= -1: n={n}, j={j}")
    plan = ClosedFormPlan.of(h, i, k, j, n)
    period = h + 2
    zlo, zhi = (plan.v, plan.u) if z_range is None else z_range
    offsets = plan.endpoint_offsets()
    total = 0
    for z in range(zlo, zhi + 1):
        shift = plan.r + z * period
        for sidx in offsets:
            total += binomial(n, shift + sidx) - binomial(n, shift + i + sidx + 1)
    return total


def symmetric_window_count(h: int, i: int, k: int, j: int, n: int) -> int:
    """The window count rewritten with the inner sum cut at ``min(i, j)``.

    Only valid when the window stays within one row of the corridor; the
    summand is symmetric in ``i`` and ``j``.
    """
    q = n + k - i - j
    r = -(-q // 2)
    period = h + 2
    lo = -((r + i + j + 1) // period) - 1
    hi = (n - r) // period + 1
    total = 0
    for z in range(lo, hi + 1):
        shift = r + z * period
        for sidx in range(min(i, j) + 1):
            total += binomial(n, shift + sidx) - binomial(n, shift + i + j - sidx + 1)
    return total


def dyck_prefix_count(h: int, n: int) -> int:
    """Paths from the floor ending anywhere in the corridor (bounded Dyck prefixes)."""
    if h < 0 or n < 0:
        raise ValueError(f"need h >= 0 and n >= 0: h={h}, n={n}")
    half = h // 2
    r = -(-n // 2)
    period = h + 2
    v = -((r + half + 1) // period)
    u = (n - r) // period
    return sum(
        binomial(n, r + z * period) - binomial(n, r + half + z * period + 1)
        for z in range(v, u + 1)
    )


def grossman_dyck_count(h: int, m: int) -> int:
    """Dyck paths of semilength ``m`` and height at most ``h``."""
    if h < 0 or m < 0:
        raise ValueError(f"need h >= 0 and m >= 0: h={h}, m={m}")
    period = h + 2
    # the lower image index must reach -(m+1)/(h+2): when h+2 divides m+1 the
    # term -C(2m, 0) sits exactly there
    lo = -((m + 1) // period)
    hi = m // period
    return sum(
        binomial(2 * m, m + z * period) - binomial(2 * m, m + z * period + 1)
        for z in range(lo, hi + 1)
    )
