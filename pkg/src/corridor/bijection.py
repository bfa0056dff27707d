"""Correspondences between paths from ``i`` into ``<k +- j>`` and paths
from ``j`` into ``<k +- i>``.

Everything works on TA words relative to ``k``: encode once, splice and
reverse label sequences, decode once from the new base.
"""

from __future__ import annotations

import enum

from .core import Instance, Path, Window, validate_instance
from .ta import DecodeError, TAWord, backward_window_split, ta_decode, ta_encode


class BijectionCase(enum.Enum):
    EQUAL = "equal"
    LESS = "less"
    GREATER = "greater"
    LESS_NO_TOUCH = "less-no-touch"
    GREATER_NO_TOUCH = "greater-no-touch"


class NotApplicable(ValueError):
    """An alternate map produced no path in the target set for this input."""


class Variant(str, enum.Enum):
    MAIN = "main"
    REVERSE = "reverse"
    FLIP_REVERSE = "flip-reverse"


def _check_source(p: Path, h: int, k: int, i: int, j: int, *, symmetric: bool) -> None:
    valid = validate_instance(Instance.of(h, len(p), i, k, j))
    if not (valid.theorem_valid if symmetric else valid.counting_valid):
        raise ValueError(f"parameters outside the symmetric domain: h={h}, k={k}, i={i}, j={j}")
    if p.base != i:
        raise ValueError(f"path starts at {p.base}, expected i={i}")
    if not p.fits(h):
        raise ValueError(f"path {p} leaves the corridor [0..{h}]")
    if p.end not in Window(k, j):
        raise ValueError(f"path {p} ends at {p.end}, outside {Window(k, j)}")


def first_visit(p: Path, level: int) -> int | None:
    """Number of steps until ``p`` first stands on ``level`` (0 if it starts there)."""
    for x, y in enumerate(p.ordinates()):
        if y == level:
            return x
    return None


def _decode(labels: str, k: int, base: int, h: int) -> Path:
    try:
        return ta_decode(TAWord(k, base, labels), h)
    except DecodeError as exc:
        raise AssertionError(f"correspondence left the corridor: {exc}") from exc


def correspond(p: Path, h: int, k: int, i: int, j: int) -> tuple[Path, BijectionCase]:
    """Map a path from ``i`` ending in ``<k +- j>`` to its counterpart from ``j``."""
    _check_source(p, h, k, i, j, symmetric=True)
    if i == j:
        return p, BijectionCase.EQUAL
    word = ta_encode(p, k).labels
    if i < j:
        cut = first_visit(p, j)
        if cut is None:
            return _decode(word[::-1], k, j, h), BijectionCase.LESS_NO_TOUCH
        head, tail = word[:cut], word[cut:]
        return _decode(tail + head[::-1], k, j, h), BijectionCase.LESS
    cut = backward_window_split(TAWord(k, i, word), j, i)
    if cut is None:
        return _decode(word[::-1], k, j, h), BijectionCase.GREATER_NO_TOUCH
    head, tail = word[:cut], word[cut:]
    return _decode(tail[::-1] + head, k, j, h), BijectionCase.GREATER


def _landed(q: Path, h: int, k: int, i: int, j: int) -> Path:
    if q.base != j or not q.fits(h) or q.end not in Window(k, i):
        raise NotApplicable(f"{q} is not a path from {j} into {Window(k, i)}")
    return q


def alt_full_reverse(p: Path, h: int, k: int, i: int, j: int) -> Path:
    """Reverse the whole TA word and replay it from ``j``."""
    _check_source(p, h, k, i, j, symmetric=False)
    word = ta_encode(p, k)
    try:
        q = ta_decode(TAWord(k, j, word.labels[::-1]), h)
    except DecodeError as exc:
        raise NotApplicable(str(exc)) from exc
    return _landed(q, h, k, i, j)


def alt_flip_reverse(p: Path, h: int, k: int, i: int, j: int) -> Path:
    """Traverse ``p`` right to left, then reverse its TA word and replay from ``j``."""
    _check_source(p, h, k, i, j, symmetric=False)
    word = ta_encode(p.flipped(), k)
    try:
        q = ta_decode(TAWord(k, j, word.labels[::-1]), h)
    except DecodeError as exc:
        raise NotApplicable(str(exc)) from exc
    return _landed(q, h, k, i, j)


def applicability(h: int, n: int, variant: Variant | str) -> bool:
    """Whether an alternate map is claimed to work for this height and length.

    Full reversal: odd ``h``, or ``n`` and ``h`` of equal parity.  Flip then
    reverse: even ``h``, or equal parity.  The main map always applies.
    """
    variant = Variant(variant)
    same_parity = n % 2 == h % 2
    if variant is Variant.MAIN:
        return True
    if variant is Variant.REVERSE:
        return h % 2 == 1 or same_parity
    return h % 2 == 0 or same_parity


def apply_variant(variant: Variant | str, p: Path, h: int, k: int, i: int, j: int) -> Path:
    variant = Variant(variant)
    if variant is Variant.MAIN:
        return correspond(p, h, k, i, j)[0]
    if variant is Variant.REVERSE:
        return alt_full_reverse(p, h, k, i, j)
    return alt_flip_reverse(p, h, k, i, j)
