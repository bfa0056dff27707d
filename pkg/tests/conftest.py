import itertools

from corridor.core import Path


def all_corridor_paths(h, i, n):
    """Brute force over every +-1 word; independent of the library enumerator."""
    out = []
    for steps in itertools.product((-1, 1), repeat=n):
        p = Path(i, steps)
        if p.fits(h):
            out.append(p)
    return out


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
