import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import all_corridor_paths
from corridor.core import (
    DOWN,
    UP,
    EnumerationTooLarge,
    Instance,
    Path,
    Window,
    dp_count_endpoint,
    dp_count_rows,
    dp_count_vector,
    dp_count_window,
    enumerate_paths,
    feasible_endpoints,
    symmetric_instances,
    total_walks,
    validate_instance,
)


def test_path_text_round_trip():
    p = Path.from_text("1:DUDUDUUUUUDU")
    assert p.base == 1
    assert p.end == 5
    assert p.to_text() == "1:DUDUDUUUUUDU"
    assert str(Path(3)) == "3:"


@pytest.mark.parametrize("text", ["12", "1:DUX", "a:UD"])
def test_path_text_rejects_garbage(text):
    with pytest.raises(ValueError):
        Path.from_text(text)


def test_flipped_path_runs_backwards():
    p = Path.from_text("0:UUD")
    assert p.flipped() == Path.from_text("1:UDD")
    assert p.flipped().flipped() == p


def test_window_bounds():
    w = Window(2, 1)
    assert (w.low, w.high, w.size) == (1, 4, 4)
    assert 4 in w and 0 not in w
    assert Window(3, -1).size == 0
    with pytest.raises(ValueError):
        Window(0, -2)


@pytest.mark.parametrize(
    "h, n, i, k, j, counting, theorem",
    [
        (4, 9, 2, 2, 1, True, True),
        (4, 9, 2, 3, 1, True, False),
        (0, 0, 0, 0, 0, True, True),
        (3, 2, 0, -1, 0, True, True),
        (3, 2, 1, -1, 0, True, False),
        (3, 2, 4, 1, 0, False, False),
        (3, -1, 0, 1, 0, False, False),
    ],
)
def test_validate_instance(h, n, i, k, j, counting, theorem):
    v = validate_instance(Instance.of(h, n, i, k, j))
    assert v == (counting, theorem)


def test_swapped_instance():
    assert Instance.of(5, 12, 1, 3, 2).swapped() == Instance.of(5, 12, 2, 3, 1)


def test_symmetric_instances_are_valid():
    for h in range(6):
        for t in symmetric_instances(h, 3, include_degenerate=True):
            assert validate_instance(t).theorem_valid


@pytest.mark.parametrize(
    "h, n, i, k, j, expected",
    [
        (4, 12, 1, 2, 1, [1, 3]),
        (4, 1, 0, 0, 0, [1]),
        (5, 6, 0, 2, 3, [0, 2, 4]),
        (4, 3, 0, 2, -1, []),
    ],
)
def test_feasible_endpoints(h, n, i, k, j, expected):
    assert feasible_endpoints(h, n, i, k, j) == expected


@pytest.mark.parametrize(
    "h, i, ell, n, expected",
    [
        (4, 1, 3, 12, 364),
        (4, 2, 2, 16, 4374),
        (4, 0, 1, 2, 0),
        (3, 0, 0, 10, 34),
        (5, 0, 1, 15, 1341),
        (5, 0, 4, 16, 2380),
        (5, 3, 3, 14, 2069),
    ],
)
def test_dp_endpoint_values(h, i, ell, n, expected):
    assert dp_count_endpoint(h, i, ell, n) == expected


@pytest.mark.parametrize(
    "h, i, k, j, n, expected",
    [
        (4, 2, 2, 1, 9, 162),
        (4, 1, 2, 2, 9, 162),
        (4, 1, 3, 2, 9, 121),
        (4, 2, 3, 1, 9, 81),
        (3, 0, 1, 2, 10, 89),
    ],
)
def test_dp_window_values(h, i, k, j, n, expected):
    assert dp_count_window(h, i, k, j, n) == expected


@given(h=st.integers(0, 6), i=st.integers(0, 6), k=st.integers(-2, 8), j=st.integers(-1, 7))
def test_zero_steps_boundary(h, i, k, j):
    i = min(i, h)
    expected = 1 if j >= 0 and k - j <= i <= k + j + 1 else 0
    assert dp_count_window(h, i, k, j, 0) == expected


@pytest.mark.parametrize("n", [0, 1, 7, 40])
def test_height_one_has_a_single_walk(n):
    assert total_walks(1, 0, n) == 1
    assert total_walks(1, 1, n) == 1


def test_height_zero_never_moves():
    assert [total_walks(0, 0, n) for n in range(4)] == [1, 0, 0, 0]


@given(h=st.integers(0, 7), n=st.integers(0, 14), data=st.data())
def test_parity_of_endpoints(h, n, data):
    i = data.draw(st.integers(0, h))
    v = dp_count_vector(h, i, n)
    assert all(c == 0 for ell, c in enumerate(v) if (ell - i - n) % 2)


@given(h=st.integers(1, 7), n=st.integers(1, 14), data=st.data())
def test_start_recurrence(h, n, data):
    # paths counted by their first step instead of their last
    i = data.draw(st.integers(0, h))
    ell = data.draw(st.integers(0, h))
    first = sum(dp_count_endpoint(h, i + s, ell, n - 1) for s in (UP, DOWN) if 0 <= i + s <= h)
    assert dp_count_endpoint(h, i, ell, n) == first


@given(h=st.integers(0, 6), n=st.integers(0, 12), data=st.data())
def test_window_grows_by_its_two_new_rows(h, n, data):
    i = data.draw(st.integers(0, h))
    k = data.draw(st.integers(0, h))
    j = data.draw(st.integers(0, h))
    v = dp_count_vector(h, i, n)

    def at(y):
        return v[y] if 0 <= y <= h else 0

    grown = dp_count_window(h, i, k, j, n) + at(k - j - 1) + at(k + j + 2)
    assert dp_count_window(h, i, k, j + 1, n) == grown


@pytest.mark.parametrize("h", range(0, 6))
def test_row_sums_grow_with_height(h):
    for i in range(h + 1):
        for n in range(12):
            assert total_walks(h, i, n) <= total_walks(h + 1, i, n)


def test_rows_match_vectors():
    rows = dp_count_rows(5, 2, 9)
    assert rows == [dp_count_vector(5, 2, n) for n in range(10)]


@pytest.mark.parametrize("h, i, n", [(3, 0, 6), (4, 2, 7), (5, 5, 8), (2, 1, 0)])
def test_enumeration_matches_brute_force(h, i, n):
    assert list(enumerate_paths(h, i, n)) == sorted(all_corridor_paths(h, i, n), key=lambda p: p.steps)


def test_enumeration_small_cases():
    assert [p.steps for p in enumerate_paths(4, 1, 2, {1})] == [(-1, 1), (1, -1)]
    assert [p.to_text() for p in enumerate_paths(1, 0, 5)] == ["0:UDUDU"]
    assert sum(1 for _ in enumerate_paths(4, 1, 12, {3})) == 364


def test_enumeration_handles_long_forced_walks():
    (p,) = enumerate_paths(1, 0, 3000)
    assert len(p) == 3000


@settings(max_examples=40)
@given(h=st.integers(0, 5), n=st.integers(0, 10), data=st.data())
def test_enumeration_count_equals_dp(h, n, data):
    i = data.draw(st.integers(0, h))
    ends = data.draw(st.sets(st.integers(0, h)))
    v = dp_count_vector(h, i, n)
    paths = list(enumerate_paths(h, i, n, ends))
    assert len(paths) == sum(v[e] for e in ends)
    assert len(set(paths)) == len(paths)
    assert all(p.fits(h) and p.end in ends for p in paths)


def test_enumeration_cap(monkeypatch):
    with pytest.raises(EnumerationTooLarge) as info:
        enumerate_paths(6, 3, 12, cap=100)
    assert info.value.expected == total_walks(6, 3, 12)
    monkeypatch.setenv("CORRIDOR_ENUM_CAP", "5")
    with pytest.raises(EnumerationTooLarge):
        enumerate_paths(4, 2, 4)


def test_enumeration_rejects_bad_start():
    with pytest.raises(ValueError):
        enumerate_paths(3, 4, 2)
