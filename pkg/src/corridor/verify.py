"""Exhaustive sweeps over finite parameter ranges.

Each sweep returns a :class:`SweepReport`; a report passes iff it has no
failures.  Counts come from cached DP rows so a sweep over all windows costs
one DP run per ``(h, i)``.
"""

from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass, field
from functools import lru_cache

from . import bijection as bij
from .closed_form import (
    OrthogonalInstance,
    cf_count_endpoint,
    cf_count_window,
    mohanty_count,
    symmetric_window_count,
)
from .core import (
    Instance,
    Path,
    dp_count_rows,
    enumerate_paths,
    feasible_endpoints,
    symmetric_bound,
    symmetric_instances,
)
from .transfer import tm_count_vector


@dataclass
class Failure:
    instance: str
    lhs: str
    rhs: str


@dataclass
class SweepReport:
    suite: str
    identity: str
    parameters: dict = field(default_factory=dict)
    checked: int = 0
    failures: list[Failure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, instance, lhs, rhs) -> bool:
        self.checked += 1
        if lhs != rhs:
            self.failures.append(Failure(str(instance), str(lhs), str(rhs)))
            return False
        return True

    def to_json(self) -> dict:
        out = asdict(self)
        out["parameters"] = {key: str(v) for key, v in self.parameters.items()}
        out["checked"] = str(self.checked)
        out["passed"] = self.passed
        return out

    def summary(self) -> str:
        status = "PASS" if self.passed else f"FAIL ({len(self.failures)} failures)"
        return f"{self.suite}/{self.identity}: {status}, {self.checked} checked"


@lru_cache(maxsize=4096)
def _rows(h: int, i: int, n_max: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(v) for v in dp_count_rows(h, i, n_max))


def _row(h: int, i: int, n: int) -> tuple[int, ...]:
    if not 0 <= i <= h:
        return (0,) * (h + 1)
    # round the cache key up so nearby n share one DP run
    return _rows(h, i, max(n, 16) | 15)[n]


def window_count(h: int, i: int, k: int, j: int, n: int) -> int:
    """DP window count backed by the shared row cache."""
    if not 0 <= i <= h:
        return 0
    v = _row(h, i, n)
    return sum(v[ell] for ell in feasible_endpoints(h, n, i, k, j))


def _inst(h, n, i, k, j) -> str:
    return f"h={h} n={n} i={i} k={k} j={j}"


# --- identities ---------------------------------------------------------


def check_identities(h_max: int = 6, n_max: int = 14) -> list[SweepReport]:
    params = {"h_max": h_max, "n_max": n_max}
    reports = []

    sym = SweepReport("identities", "start-halfwidth-symmetry", params)
    for h in range(h_max + 1):
        for n in range(n_max + 1):
            for t in symmetric_instances(h, n, include_degenerate=True):
                sym.check(_inst(h, n, t.i, t.k, t.j), window_count(h, t.i, t.k, t.j, n), window_count(h, t.j, t.k, t.i, n))
    reports.append(sym)

    updown = SweepReport("identities", "up-down-reflection", params)
    for h, n in itertools.product(range(h_max + 1), range(n_max + 1)):
        for i, k, j in itertools.product(range(h + 1), repeat=3):
            updown.check(_inst(h, n, i, k, j), window_count(h, i, k, j, n), window_count(h, h - i, h - k - 1, j, n))
    reports.append(updown)

    cor = SweepReport("identities", "high-start-symmetry", params)
    for h, n in itertools.product(range(h_max + 1), range(n_max + 1)):
        for k in range(h + 1):
            for i in range(max(k, h - k - 1), h + 1):
                for j in range(symmetric_bound(h, k) + 1):
                    cor.check(_inst(h, n, i, k, j), window_count(h, i, k, j, n), window_count(h, j, h - k - 1, h - i, n))
    reports.append(cor)

    mid = SweepReport("identities", "middle-start", params)
    for h, n in itertools.product(range(h_max + 1), range(n_max + 1)):
        lo, hi = h // 2, (h + 1) // 2
        mid.check(f"h={h} n={n}", sum(_row(h, lo, n)), sum(_row(h, hi, n)))
    reports.append(mid)

    unbounded = SweepReport("identities", "unbounded-symmetry", params)
    for n in range(n_max + 1):
        for k in range(n + 1):
            # no path from i <= k+1 can reach this ceiling in n steps
            h = n + k + 1
            for i, j in itertools.product(range(k + 2), repeat=2):
                unbounded.check(_inst(h, n, i, k, j), window_count(h, i, k, j, n), window_count(h, j, k, i, n))
    reports.append(unbounded)

    prefixes = SweepReport("identities", "dyck-prefix-vs-grand-dyck", params)
    for h, n in itertools.product(range(h_max + 1), range(n_max + 1)):
        half = h // 2
        prefixes.check(f"h={h} n={n}", sum(_row(h, 0, n)), window_count(h, half, half, 0, n))
    reports.append(prefixes)

    double = SweepReport("identities", "grand-dyck-doubling", params)
    for h in range(0, h_max + 1, 2):
        half = h // 2
        for m in range(1, n_max // 2 + 1):
            double.check(
                f"h={h} m={m}",
                window_count(h, half, half, 0, 2 * m),
                2 * window_count(h, half, half, 0, 2 * m - 1),
            )
    reports.append(double)
    return reports


def symmetry_diagnostics(h_max: int = 6, n_max: int = 14) -> list[dict]:
    """Instances just outside the symmetric domain where the two sides differ.

    Covers ``k`` in ``[0..h]`` with ``i, j`` in ``[0..h]``; informational only.
    """
    out = []
    for h, n in itertools.product(range(h_max + 1), range(n_max + 1)):
        for k in range(h + 1):
            bound = symmetric_bound(h, k)
            for i, j in itertools.product(range(h + 1), repeat=2):
                if i <= bound and j <= bound:
                    continue
                lhs = window_count(h, i, k, j, n)
                rhs = window_count(h, j, k, i, n)
                if lhs != rhs:
                    out.append({"instance": _inst(h, n, i, k, j), "lhs": str(lhs), "rhs": str(rhs)})
    return out


# --- engines ------------------------------------------------------------


def _oracle_vector(h: int, i: int, n: int) -> list[int]:
    hist = [0] * (h + 1)
    for p in enumerate_paths(h, i, n):
        hist[p.end] += 1
    return hist


def check_engines(
    h_max: int = 8, n_max: int = 24, oracle_h_max: int = 5, oracle_n_max: int = 12
) -> list[SweepReport]:
    params = {"h_max": h_max, "n_max": n_max}
    cf_end = SweepReport("engines", "dp=closed-form endpoints", params)
    tm_end = SweepReport("engines", "dp=transfer-matrix endpoints", params)
    cf_win = SweepReport("engines", "dp=closed-form windows", params)
    tm_win = SweepReport("engines", "dp=transfer-matrix windows", params)
    sym_win = SweepReport("engines", "dp=symmetric-closed-form windows", params)
    for h, n in itertools.product(range(h_max + 1), range(n_max + 1)):
        tm = [tm_count_vector(h, i, n) for i in range(h + 1)]
        for i, ell in itertools.product(range(h + 1), repeat=2):
            dp = _row(h, i, n)[ell]
            where = f"h={h} n={n} i={i} ell={ell}"
            cf_end.check(where, dp, cf_count_endpoint(h, i, ell, n))
            tm_end.check(where, dp, tm[i][ell])
        for t in symmetric_instances(h, n, include_degenerate=True):
            where = _inst(h, n, t.i, t.k, t.j)
            dp = window_count(h, t.i, t.k, t.j, n)
            cf_win.check(where, dp, cf_count_window(h, t.i, t.k, t.j, n))
            tm_win.check(where, dp, sum(tm[t.i][ell] for ell in feasible_endpoints(h, n, t.i, t.k, t.j)))
            if t.k >= 0:
                sym_win.check(where, dp, symmetric_window_count(h, t.i, t.k, t.j, n))

    oparams = {"h_max": oracle_h_max, "n_max": oracle_n_max}
    or_end = SweepReport("engines", "engines=enumeration endpoints", oparams)
    or_win = SweepReport("engines", "engines=enumeration windows", oparams)
    for h, n in itertools.product(range(oracle_h_max + 1), range(oracle_n_max + 1)):
        for i in range(h + 1):
            oracle = _oracle_vector(h, i, n)
            tm = tm_count_vector(h, i, n)
            for ell in range(h + 1):
                engines = (_row(h, i, n)[ell], cf_count_endpoint(h, i, ell, n), tm[ell])
                or_end.check(f"h={h} n={n} i={i} ell={ell}", engines, (oracle[ell],) * 3)
            for k in range(-1, h + 1):
                for j in range(symmetric_bound(h, k) + 1 if k >= 0 else 1):
                    ends = feasible_endpoints(h, n, i, k, j)
                    engines = (window_count(h, i, k, j, n), cf_count_window(h, i, k, j, n), sum(tm[e] for e in ends))
                    or_win.check(_inst(h, n, i, k, j), engines, (sum(oracle[e] for e in ends),) * 3)

    mapping = SweepReport("engines", "orthogonal-mapping", {"h_max": min(h_max, 6), "n_max": min(n_max, 14)})
    for h, n in itertools.product(range(min(h_max, 6) + 1), range(min(n_max, 14) + 1)):
        for i, ell in itertools.product(range(h + 1), repeat=2):
            if (ell - n - i) % 2:
                continue
            oi = OrthogonalInstance.from_corridor(h, i, ell, n)
            if oi.a < 0 or oi.b < 0:
                continue
            mapping.check(f"h={h} n={n} i={i} ell={ell}", mohanty_count(oi), _row(h, i, n)[ell])

    overhang = SweepReport("engines", "closed-form windows beyond the symmetric domain", {"h_max": min(h_max, 6), "n_max": min(n_max, 16)})
    for h, n in itertools.product(range(min(h_max, 6) + 1), range(min(n_max, 16) + 1)):
        for i in range(h + 1):
            for k in range(-2, h + 3):
                for j in range(-1, h + 3):
                    overhang.check(_inst(h, n, i, k, j), cf_count_window(h, i, k, j, n), window_count(h, i, k, j, n))
    return [cf_end, tm_end, cf_win, tm_win, sym_win, or_end, or_win, mapping, overhang]


# --- bijections ---------------------------------------------------------


def source_set(h: int, n: int, i: int, k: int, j: int) -> list[Path]:
    return list(enumerate_paths(h, i, n, feasible_endpoints(h, n, i, k, j)))


def check_bijections(h_max: int = 5, n_max: int = 10) -> list[SweepReport]:
    params = {"h_max": h_max, "n_max": n_max}
    defined = SweepReport("bijections", "main-well-defined", params)
    onto = SweepReport("bijections", "main-bijective", params)
    inverse = SweepReport("bijections", "main-inverse", params)
    identity = SweepReport("bijections", "main-equal-case-identity", params)
    for h, n in itertools.product(range(h_max + 1), range(n_max + 1)):
        for t in symmetric_instances(h, n):
            _check_main(t, defined, onto, inverse, identity)
    reports = [defined, onto, inverse, identity]

    full = SweepReport("bijections", "full-reverse-on-applicable-frames", params)
    flip = SweepReport("bijections", "flip-reverse-on-applicable-frames", params)
    for h, n in itertools.product(range(h_max + 1), range(n_max + 1)):
        if bij.applicability(h, n, bij.Variant.REVERSE):
            for t in reverse_frames(h, n):
                _check_alternate(t, bij.Variant.REVERSE, full)
        if bij.applicability(h, n, bij.Variant.FLIP_REVERSE):
            for t in flip_frames(h, n):
                _check_alternate(t, bij.Variant.FLIP_REVERSE, flip)
    return reports + [full, flip]


def reverse_frames(h: int, n: int) -> list[Instance]:
    """Frames centered at ``h // 2`` where full reversal is claimed to work.

    Odd ``h``: every admissible ``(i, j)``.  Even ``h``: the Grand Dyck and
    Dyck-prefix frames in both directions.
    """
    half = h // 2
    if h % 2:
        bound = symmetric_bound(h, half)
        return [Instance.of(h, n, i, half, j) for i in range(bound + 1) for j in range(bound + 1)]
    return [Instance.of(h, n, half, half, 0), Instance.of(h, n, 0, half, half)]


def flip_frames(h: int, n: int) -> list[Instance]:
    """Grand Dyck paths (start and center ``h // 2``) mapped onto Dyck prefixes."""
    half = h // 2
    return [Instance.of(h, n, half, half, 0)]


def _check_main(t: Instance, defined: SweepReport, onto: SweepReport, inverse: SweepReport, identity: SweepReport) -> None:
    h, n, i, k, j = t.h, t.n, t.i, t.k, t.j
    where = _inst(h, n, i, k, j)
    source = source_set(h, n, i, k, j)
    target = set(source_set(h, n, j, k, i))
    images = set()
    for p in source:
        try:
            q, case = bij.correspond(p, h, k, i, j)
        except (ValueError, AssertionError) as exc:
            defined.check(f"{where} path={p}", f"error: {exc}", "path in target")
            continue
        ok = defined.check(f"{where} path={p}", q in target, True)
        if not ok:
            continue
        images.add(q)
        if case is bij.BijectionCase.EQUAL:
            identity.check(f"{where} path={p}", q, p)
        try:
            back, _ = bij.correspond(q, h, k, j, i)
        except (ValueError, AssertionError) as exc:
            back = f"error: {exc}"
        inverse.check(f"{where} path={p}", back, p)
    sizes = (len(source), len(images), len(target))
    expected = window_count(h, i, k, j, n)
    onto.check(where, sizes, (expected, expected, window_count(h, j, k, i, n)))


def _check_alternate(t: Instance, variant: bij.Variant, report: SweepReport) -> None:
    h, n, i, k, j = t.h, t.n, t.i, t.k, t.j
    where = _inst(h, n, i, k, j)
    source = source_set(h, n, i, k, j)
    target = set(source_set(h, n, j, k, i))
    images = set()
    for p in source:
        try:
            q = bij.apply_variant(variant, p, h, k, i, j)
        except bij.NotApplicable as exc:
            report.check(f"{where} path={p}", f"not applicable: {exc}", "path in target")
            continue
        images.add(q)
    report.check(where, (len(source), len(images), images <= target), (len(target), len(target), True))


SUITES = {
    "identities": check_identities,
    "engines": check_engines,
    "bijections": check_bijections,
}
