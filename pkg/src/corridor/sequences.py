"""Count sequences along ``n`` and the embedded reference prefixes.

References come from three places, recorded per entry as ``source``:
patterns stated in closed form (``closed-form``), cells of the published
count tables (``published-table``), and brute-force enumeration
(``enumeration``).  None of them is produced by the DP engine.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .core import dp_count_rows, feasible_endpoints
from .verify import SweepReport


class UnknownReference(KeyError):
    pass


@dataclass(frozen=True)
class ReferenceSequence:
    """Terms ``F(offset), F(offset + step), ...`` of one count family.

    ``family`` is either ``{"kind": "window", h, i, k, j}`` or
    ``{"kind": "endpoint", h, i, ell}``.
    """

    label: str
    family: dict
    offset: int
    step: int
    terms: tuple[int, ...]
    source: str

    @property
    def indices(self) -> list[int]:
        return [self.offset + self.step * t for t in range(len(self.terms))]


@lru_cache(maxsize=1)
def references() -> dict[str, ReferenceSequence]:
    raw = json.loads(resources.files("corridor").joinpath("data/sequences.json").read_text())
    return {
        e["label"]: ReferenceSequence(
            e["label"], e["family"], e["offset"], e["step"], tuple(int(t) for t in e["terms"]), e["source"]
        )
        for e in raw
    }


def lookup(label: str) -> ReferenceSequence:
    try:
        return references()[label.strip().upper()]
    except KeyError:
        raise UnknownReference(f"unknown reference sequence {label!r}") from None


def full_window(h: int) -> tuple[int, int]:
    """Center and half-width of a window covering ``[0..h]`` after clipping."""
    return h // 2, (h + 1) // 2


def sequence(h: int, i: int, k: int | None = None, j: int | None = None, n_max: int = 16) -> list[int]:
    """``[F(0), ..., F(n_max)]`` for start ``i`` and window ``<k +- j>``.

    Without a window the whole corridor is used.
    """
    if k is None or j is None:
        k, j = full_window(h)
    rows = dp_count_rows(h, i, n_max)
    return [sum(v[ell] for ell in feasible_endpoints(h, n, i, k, j)) for n, v in enumerate(rows)]


def family_terms(family: dict, n_max: int) -> list[int]:
    h, i = family["h"], family["i"]
    if family["kind"] == "window":
        return sequence(h, i, family["k"], family["j"], n_max)
    if family["kind"] == "endpoint":
        return [v[family["ell"]] for v in dp_count_rows(h, i, n_max)]
    raise ValueError(f"unknown family kind {family['kind']!r}")


def compare(ref: ReferenceSequence | str) -> SweepReport:
    if isinstance(ref, str):
        ref = lookup(ref)
    indices = ref.indices
    computed = family_terms(ref.family, indices[-1] if indices else 0)
    report = SweepReport("sequences", ref.label, {**ref.family, "source": ref.source})
    for n, expected in zip(indices, ref.terms):
        report.check(f"n={n}", computed[n], expected)
    return report
