"""Count tables for a fixed height, laid out like the published ones.

One block per start ``i`` (highest first), rows ``ell`` descending, ``n``
ascending; zero cells are left blank.  The long CSV has header
``i,ell,n,count``; the wide CSV puts one column per ``n``.
"""

from __future__ import annotations

import io
from importlib import resources

from .core import dp_count_rows
from .verify import Failure, SweepReport

GOLDEN_HEIGHTS = (4, 5)
GOLDEN_NMAX = 16


def count_grid(h: int, n_max: int) -> dict[tuple[int, int, int], int]:
    grid = {}
    for i in range(h + 1):
        for n, v in enumerate(dp_count_rows(h, i, n_max)):
            for ell, c in enumerate(v):
                grid[i, ell, n] = c
    return grid


def _cell(c: int) -> str:
    return str(c) if c else ""


def render_table(h: int, n_max: int, layout: str = "long") -> str:
    if h < 0 or n_max < 0:
        raise ValueError(f"need h >= 0 and n_max >= 0: h={h}, n_max={n_max}")
    grid = count_grid(h, n_max)
    out = io.StringIO()
    if layout == "long":
        out.write("i,ell,n,count\n")
        for i in range(h, -1, -1):
            for ell in range(h, -1, -1):
                for n in range(n_max + 1):
                    out.write(f"{i},{ell},{n},{_cell(grid[i, ell, n])}\n")
    elif layout == "wide":
        out.write("i,ell," + ",".join(f"n{n}" for n in range(n_max + 1)) + "\n")
        for i in range(h, -1, -1):
            for ell in range(h, -1, -1):
                cells = ",".join(_cell(grid[i, ell, n]) for n in range(n_max + 1))
                out.write(f"{i},{ell},{cells}\n")
    else:
        raise ValueError(f"unknown layout {layout!r}")
    return out.getvalue()


def golden_text(h: int, n_max: int = GOLDEN_NMAX) -> str:
    """The transcribed table for ``h``, restricted to columns ``n <= n_max``."""
    if h not in GOLDEN_HEIGHTS:
        raise ValueError(f"no golden table for h={h}; available: {GOLDEN_HEIGHTS}")
    if not 0 <= n_max <= GOLDEN_NMAX:
        raise ValueError(f"golden tables cover n <= {GOLDEN_NMAX}, got n_max={n_max}")
    text = resources.files("corridor").joinpath(f"data/table_h{h}.csv").read_text()
    lines = text.splitlines(keepends=True)
    keep = [lines[0]] + [ln for ln in lines[1:] if int(ln.split(",")[2]) <= n_max]
    return "".join(keep)


def golden_compare(h: int, n_max: int = GOLDEN_NMAX) -> SweepReport:
    expected = golden_text(h, n_max)
    actual = render_table(h, n_max)
    report = SweepReport("tables", f"golden-h{h}", {"h": h, "n_max": n_max})
    exp_lines = expected.splitlines()
    act_lines = actual.splitlines()
    report.checked = len(exp_lines) - 1
    if expected == actual:
        return report
    for lineno, (e, a) in enumerate(zip(exp_lines, act_lines), start=1):
        if e != a:
            report.failures.append(Failure(f"line {lineno}: {a.rsplit(',', 1)[0]}", a.rsplit(",", 1)[-1], e.rsplit(",", 1)[-1]))
            break
    else:
        report.failures.append(Failure("line count", str(len(act_lines)), str(len(exp_lines))))
    return report
