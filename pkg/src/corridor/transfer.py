"""Walk counts as powers of the corridor's 0/1 step matrix.

``M[r][c] = 1`` iff ``|r - c| == 1`` on ordinates ``0..h``; row ``i`` of
``M**n`` holds the n-step counts from ``i``.  Entries are Python ints, so
the results are exact; ``modulus`` exists only to time the squaring ladder
without big-integer growth.
"""

from __future__ import annotations

from .core import feasible_endpoints

Matrix = list[list[int]]


def step_matrix(h: int) -> Matrix:
    if h < 0:
        raise ValueError(f"h must be >= 0, got {h}")
    size = h + 1
    return [[1 if abs(r - c) == 1 else 0 for c in range(size)] for r in range(size)]


def identity(size: int) -> Matrix:
    return [[1 if r == c else 0 for c in range(size)] for r in range(size)]


def mat_mul(a: Matrix, b: Matrix, modulus: int | None = None) -> Matrix:
    cols = list(zip(*b))
    out = []
    for row in a:
        nz = [(t, x) for t, x in enumerate(row) if x]
        new = [sum(x * col[t] for t, x in nz) for col in cols]
        if modulus is not None:
            new = [x % modulus for x in new]
        out.append(new)
    return out


def vec_mul(v: list[int], m: Matrix, modulus: int | None = None) -> list[int]:
    out = [sum(x * m[t][c] for t, x in enumerate(v) if x) for c in range(len(m[0]))]
    if modulus is not None:
        out = [x % modulus for x in out]
    return out


def mat_pow(m: Matrix, n: int, modulus: int | None = None) -> Matrix:
    if n < 0:
        raise ValueError(f"exponent must be >= 0, got {n}")
    result = identity(len(m))
    base = m
    while n:
        if n & 1:
            result = mat_mul(result, base, modulus)
        n >>= 1
        if n:
            base = mat_mul(base, base, modulus)
    return result


def tm_count_vector(h: int, i: int, n: int, modulus: int | None = None) -> list[int]:
    """Row ``i`` of ``M**n``: path counts from ``i`` to each ordinate.

    The unit row vector is pushed through the binary expansion of ``n``,
    so only the squarings cost full matrix products.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    m = step_matrix(h)
    v = [0] * (h + 1)
    if not 0 <= i <= h:
        return v
    v[i] = 1 if modulus is None else 1 % modulus
    base = m
    while n:
        if n & 1:
            v = vec_mul(v, base, modulus)
        n >>= 1
        if n:
            base = mat_mul(base, base, modulus)
    return v


def tm_count_window(h: int, i: int, k: int, j: int, n: int) -> int:
    ends = feasible_endpoints(h, n, i, k, j)
    if not ends or not 0 <= i <= h:
        return 0
    v = tm_count_vector(h, i, n)
    return sum(v[ell] for ell in ends)
