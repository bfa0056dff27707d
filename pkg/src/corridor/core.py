"""Corridor paths, endpoint windows, and the counting recurrence.

A path starts at ordinate ``base`` and takes diagonal steps of +1 (NE, ``U``)
or -1 (SE, ``D``), never leaving the corridor ``[0..h]``.  A window
``<k +- j>`` is the endpoint range ``[k-j .. k+j+1]``; it may overhang the
corridor and is clipped when endpoints are listed.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

DEFAULT_ENUM_CAP = 10**7
ENUM_CAP_ENV = "CORRIDOR_ENUM_CAP"

UP, DOWN = 1, -1
_STEP_CHARS = {UP: "U", DOWN: "D"}
_CHAR_STEPS = {"U": UP, "D": DOWN}


class EnumerationTooLarge(RuntimeError):
    """Raised when an enumeration would yield more paths than the cap allows."""

    def __init__(self, expected: int, cap: int):
        super().__init__(f"enumeration too large: {expected} paths exceeds cap {cap}")
        self.expected = expected
        self.cap = cap


@dataclass(frozen=True)
class Path:
    base: int
    steps: tuple[int, ...] = ()

    def __post_init__(self):
        if any(s not in (UP, DOWN) for s in self.steps):
            raise ValueError(f"steps must be +1 or -1, got {self.steps!r}")

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def end(self) -> int:
        return self.base + sum(self.steps)

    def ordinates(self) -> list[int]:
        ys = [self.base]
        for s in self.steps:
            ys.append(ys[-1] + s)
        return ys

    def fits(self, h: int) -> bool:
        return all(0 <= y <= h for y in self.ordinates())

    def flipped(self) -> Path:
        """The same path traversed right to left: starts at ``end``, ends at ``base``."""
        return Path(self.end, tuple(-s for s in reversed(self.steps)))

    def to_text(self) -> str:
        return f"{self.base}:" + "".join(_STEP_CHARS[s] for s in self.steps)

    @classmethod
    def from_text(cls, text: str) -> Path:
        """Parse ``<base>:<steps>``, e.g. ``1:DUDUDUUUUUDU``."""
        base, sep, letters = text.strip().partition(":")
        if not sep:
            raise ValueError(f"path text needs '<base>:<steps>', got {text!r}")
        try:
            steps = tuple(_CHAR_STEPS[c] for c in letters.upper())
        except KeyError as exc:
            raise ValueError(f"bad step letter {exc.args[0]!r} in {text!r}") from None
        return cls(int(base), steps)

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class Window:
    """The endpoint range ``[k-j .. k+j+1]``; ``j == -1`` is empty."""

    k: int
    j: int

    def __post_init__(self):
        if self.j < -1:
            raise ValueError(f"window half-width must be >= -1, got {self.j}")

    @property
    def low(self) -> int:
        return self.k - self.j

    @property
    def high(self) -> int:
        return self.k + self.j + 1

    @property
    def size(self) -> int:
        return 2 * self.j + 2

    def __contains__(self, y: int) -> bool:
        return self.low <= y <= self.high

    def __str__(self) -> str:
        return f"<{self.k}+-{self.j}>"


class Validity(NamedTuple):
    counting_valid: bool
    theorem_valid: bool


@dataclass(frozen=True)
class Instance:
    h: int
    n: int
    i: int
    window: Window

    @classmethod
    def of(cls, h: int, n: int, i: int, k: int, j: int) -> Instance:
        return cls(h, n, i, Window(k, j))

    @property
    def k(self) -> int:
        return self.window.k

    @property
    def j(self) -> int:
        return self.window.j

    def validate(self) -> Validity:
        return validate_instance(self)

    def swapped(self) -> Instance:
        """The mirror instance with start and half-width exchanged."""
        return Instance.of(self.h, self.n, self.j, self.k, self.i)


def symmetric_bound(h: int, k: int) -> int:
    """Largest start or half-width allowed for the symmetry around center ``k``."""
    return min(k + 1, h - k)


def validate_instance(inst: Instance) -> Validity:
    h, n, i, k, j = inst.h, inst.n, inst.i, inst.k, inst.j
    counting = h >= 0 and n >= 0 and 0 <= i <= h and j >= -1
    if not counting:
        return Validity(False, False)
    if k == -1:
        # degenerate center below the floor: only i = j = 0 survives
        return Validity(True, i == 0 and j == 0)
    bound = symmetric_bound(h, k)
    symmetric = 0 <= k <= h and 0 <= i <= bound and 0 <= j <= bound
    return Validity(True, symmetric)


def symmetric_instances(h: int, n: int, *, include_degenerate: bool = False) -> Iterator[Instance]:
    """All (k, i, j) for which the start/half-width symmetry is claimed."""
    if include_degenerate:
        yield Instance.of(h, n, 0, -1, 0)
    for k in range(h + 1):
        bound = symmetric_bound(h, k)
        for i in range(bound + 1):
            for j in range(bound + 1):
                yield Instance.of(h, n, i, k, j)


def feasible_endpoints(h: int, n: int, i: int, k: int, j: int) -> list[int]:
    """Ordinates in ``<k +- j>`` ∩ [0..h] with the parity of ``n + i``."""
    if j < 0:
        return []
    lo = max(0, k - j)
    hi = min(h, k + j + 1)
    if (lo - n - i) % 2:
        lo += 1
    return list(range(lo, hi + 1, 2))


def dp_step(v: list[int]) -> list[int]:
    """Advance an endpoint count vector by one step."""
    top = len(v) - 1
    return [(v[y - 1] if y > 0 else 0) + (v[y + 1] if y < top else 0) for y in range(top + 1)]


def dp_count_rows(h: int, i: int, n_max: int) -> list[list[int]]:
    """Endpoint count vectors from ``i`` for every ``n`` in ``0..n_max``."""
    if h < 0 or n_max < 0:
        raise ValueError(f"need h >= 0 and n >= 0, got h={h}, n={n_max}")
    v = [0] * (h + 1)
    if 0 <= i <= h:
        v[i] = 1
    rows = [v]
    for _ in range(n_max):
        rows.append(dp_step(rows[-1]))
    return rows


def dp_count_vector(h: int, i: int, n: int) -> list[int]:
    """Counts of n-step corridor paths from ``i`` to every ordinate 0..h."""
    if h < 0 or n < 0:
        raise ValueError(f"need h >= 0 and n >= 0, got h={h}, n={n}")
    v = [0] * (h + 1)
    if not 0 <= i <= h:
        return v
    v[i] = 1
    for _ in range(n):
        v = dp_step(v)
    return v


def dp_count_endpoint(h: int, i: int, ell: int, n: int) -> int:
    if not (0 <= i <= h and 0 <= ell <= h):
        return 0
    return dp_count_vector(h, i, n)[ell]


def dp_count_window(h: int, i: int, k: int, j: int, n: int) -> int:
    if not 0 <= i <= h:
        return 0
    ends = feasible_endpoints(h, n, i, k, j)
    if not ends:
        return 0
    v = dp_count_vector(h, i, n)
    return sum(v[ell] for ell in ends)


def total_walks(h: int, i: int, n: int) -> int:
    return sum(dp_count_vector(h, i, n))


def enumeration_cap() -> int:
    raw = os.environ.get(ENUM_CAP_ENV)
    return int(raw) if raw else DEFAULT_ENUM_CAP


def enumerate_paths(
    h: int,
    i: int,
    n: int,
    endpoint_filter: Iterable[int] | None = None,
    *,
    cap: int | float | None = None,
) -> Iterator[Path]:
    """Yield every corridor path from ``i`` with ``n`` steps, SE before NE.

    With ``endpoint_filter`` only paths ending in that set are produced;
    branches that can no longer reach the set are pruned.  The DP count is
    checked against ``cap`` before anything is yielded.
    """
    if h < 0 or n < 0 or not 0 <= i <= h:
        raise ValueError(f"not a counting-valid start: h={h}, i={i}, n={n}")
    targets = set(range(h + 1)) if endpoint_filter is None else {e for e in endpoint_filter if 0 <= e <= h}
    cap = enumeration_cap() if cap is None else cap
    vec = dp_count_vector(h, i, n)
    expected = sum(vec[e] for e in targets)
    if expected > cap:
        raise EnumerationTooLarge(expected, cap)
    return _walk(h, i, n, targets)


def _walk(h: int, i: int, n: int, targets: set[int]) -> Iterator[Path]:
    # reach[m] = ordinates from which some target is reachable in exactly m steps
    reach = [set(targets)]
    for _ in range(n):
        prev = reach[-1]
        reach.append({y for y in range(h + 1) if y - 1 in prev or y + 1 in prev})
    if i not in reach[n]:
        return
    if n == 0:
        yield Path(i)
        return
    # depth-first with an explicit stack of pending step choices per level
    steps: list[int] = []
    ys = [i]
    pending = [_choices(h, i, n, reach)]
    while pending:
        if not pending[-1]:
            pending.pop()
            if steps:
                steps.pop()
                ys.pop()
            continue
        s = pending[-1].pop()
        steps.append(s)
        ys.append(ys[-1] + s)
        left = n - len(steps)
        if left == 0:
            yield Path(i, tuple(steps))
            steps.pop()
            ys.pop()
        else:
            pending.append(_choices(h, ys[-1], left, reach))


def _choices(h: int, y: int, left: int, reach: list[set[int]]) -> list[int]:
    # popped from the end, so NE sits first to make SE come out first
    return [s for s in (UP, DOWN) if 0 <= y + s <= h and y + s in reach[left - 1]]
