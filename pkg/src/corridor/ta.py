"""Toward/Away encoding of paths relative to the line ``y = k + 1/2``.

From every ordinate exactly one of the two steps heads toward the line
(``T``) and the other away (``A``).  Steps that cross the line, ``k -> k+1``
and ``k+1 -> k``, count as ``T``.

The distance of ordinate ``y`` from the line, measured in windows, is
``max(k - y, y - k - 1, 0)``: the smallest ``w`` with ``y`` in ``<k +- w>``.
An ``A`` step raises it by one, a ``T`` step lowers it by one but not below 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import DOWN, UP, Path

TOWARD, AWAY = "T", "A"


class DecodeError(ValueError):
    """A TA word walks out of the corridor."""

    def __init__(self, position: int, ordinate: int, h: int):
        where = "base" if position < 0 else f"step {position} reaches"
        super().__init__(f"decode out of corridor: {where} y={ordinate} outside [0..{h}]")
        self.position = position
        self.ordinate = ordinate


class NegativeWindowError(ValueError):
    """A backward window scan dropped below size 0."""

    def __init__(self, position: int):
        super().__init__(f"negative window at label position {position}")
        self.position = position


@dataclass(frozen=True)
class TAWord:
    k: int
    base: int
    labels: str = ""

    def __post_init__(self):
        if set(self.labels) - {TOWARD, AWAY}:
            raise ValueError(f"labels must be over {{T, A}}, got {self.labels!r}")

    def __len__(self) -> int:
        return len(self.labels)

    def to_text(self) -> str:
        return f"{self.k}/{self.base}:{self.labels}"

    @classmethod
    def from_text(cls, text: str) -> TAWord:
        """Parse ``<k>/<base>:<labels>``, e.g. ``3/1:ATATATTTTATA``."""
        head, sep, labels = text.strip().partition(":")
        k, slash, base = head.partition("/")
        if not sep or not slash:
            raise ValueError(f"TA word text needs '<k>/<base>:<labels>', got {text!r}")
        return cls(int(k), int(base), labels.upper())

    def __str__(self) -> str:
        return self.to_text()


def window_distance(y: int, k: int) -> int:
    return max(k - y, y - k - 1, 0)


def label_of(y: int, step: int, k: int) -> str:
    toward = (y <= k and step == UP) or (y >= k + 1 and step == DOWN)
    return TOWARD if toward else AWAY


def step_of(y: int, label: str, k: int) -> int:
    below = y <= k
    return UP if below == (label == TOWARD) else DOWN


def ta_encode(path: Path, k: int) -> TAWord:
    y = path.base
    out = []
    for s in path.steps:
        out.append(label_of(y, s, k))
        y += s
    return TAWord(k, path.base, "".join(out))


def ta_decode(word: TAWord, h: int) -> Path:
    if not 0 <= word.base <= h:
        raise DecodeError(-1, word.base, h)
    y = word.base
    steps = []
    for pos, label in enumerate(word.labels):
        s = step_of(y, label, word.k)
        y += s
        if not 0 <= y <= h:
            raise DecodeError(pos, y, h)
        steps.append(s)
    return Path(word.base, tuple(steps))


def window_trace(word: TAWord) -> list[int]:
    """Window sizes ``w_0..w_n`` along the word, starting from the base's distance."""
    w = window_distance(word.base, word.k)
    trace = [w]
    for label in word.labels:
        w = w + 1 if label == AWAY else max(w - 1, 0)
        trace.append(w)
    return trace


def backward_trace(word: TAWord, j_end: int) -> list[int]:
    """Unsaturated backward window sizes; entry ``x`` is the size at vertex ``x``."""
    sizes = [j_end]
    for label in reversed(word.labels):
        sizes.append(sizes[-1] + (1 if label == TOWARD else -1))
    return sizes[::-1]


def backward_window_split(word: TAWord, j_end: int, i_target: int, *, strict: bool = True) -> int | None:
    """Start index of the shortest suffix whose onset has window size ``i_target``.

    The scan runs right to left from size ``j_end``; a ``T`` read backward
    widens the window by one and an ``A`` narrows it by one.  Returns ``None``
    when the size never reaches ``i_target``.  If the size would drop below 0
    the scan raises ``NegativeWindowError``, or gives up with ``None`` when
    ``strict`` is false.
    """
    if not 0 <= j_end < i_target:
        raise ValueError(f"need 0 <= j_end < i_target, got {j_end}, {i_target}")
    w = j_end
    for pos in range(len(word.labels) - 1, -1, -1):
        w += 1 if word.labels[pos] == TOWARD else -1
        if w < 0:
            if strict:
                raise NegativeWindowError(pos)
            return None
        if w == i_target:
            return pos
    return None


def reverse_word(word: TAWord, new_base: int) -> TAWord:
    return TAWord(word.k, new_base, word.labels[::-1])
