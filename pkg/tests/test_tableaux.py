import math

import pytest

from eulerkit.permstats import BoundError
from eulerkit.tableaux import (
    SYT,
    conjugate,
    descent_set,
    g_index,
    partitions,
    row_profile,
    standard_tableaux,
    tableaux_of_shape,
)


def hook_count(shape):
    cols = conjugate(shape)
    hooks = 1
    for i, r in enumerate(shape):
        for j in range(r):
            hooks *= (r - j - 1) + (cols[j] - i - 1) + 1
    return math.factorial(sum(shape)) // hooks


def test_partitions_order():
    assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert list(partitions(0)) == [()]
    assert [sum(1 for _ in partitions(n)) for n in range(1, 11)] == [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_conjugate():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate(conjugate((4, 2, 2, 1))) == (4, 2, 2, 1)


@pytest.mark.parametrize("n", range(1, 8))
def test_shape_counts_match_hook_formula(n):
    for shape in partitions(n):
        ts = list(tableaux_of_shape(shape))
        assert len(ts) == len(set(ts)) == hook_count(shape)


@pytest.mark.parametrize("n", range(1, 8))
def test_involution_count(n):
    # sum_lambda f^lambda counts involutions of [n]
    inv = [1, 1]
    for k in range(2, n + 1):
        inv.append(inv[-1] + (k - 1) * inv[-2])
    assert sum(1 for _ in standard_tableaux(n)) == inv[n]


def test_max_columns_filter():
    assert all(T.shape[0] <= 2 for T in standard_tableaux(5, max_columns=2))
    assert sum(1 for _ in standard_tableaux(5, max_columns=2)) == 10


def test_validation():
    with pytest.raises(ValueError):
        SYT(((1, 3), (2, 4, 5)))
    with pytest.raises(ValueError):
        SYT(((2, 3), (1,)))
    with pytest.raises(ValueError):
        SYT(((1, 2), (4,)))


def test_json_and_text():
    T = SYT(((1, 3), (2,)))
    assert SYT.from_json(T.to_json()) == T
    assert SYT.from_json("[[1, 3], [2]]") == T
    assert T.to_text() == "2\n1 3"


def test_descents_and_profile():
    T = SYT(((1, 2, 4), (3, 5)))
    assert descent_set(T) == {2, 4}
    assert row_profile(T) == ([0, 1, 1, 0, 0], 2)


@pytest.mark.parametrize(
    "rows, sigma",
    [
        (((1, 2, 3),), [1, 1, 1]),
        (((1, 3), (2,)), [1, 1, 2]),
        (((1, 2), (3,)), [1, 1, 2]),
        (((1,), (2,), (3,)), [1, 1, 1]),
    ],
)
def test_g_index_n3(rows, sigma):
    assert g_index(SYT(rows)) == (sigma, math.prod(sigma))


def test_restrict():
    T = SYT(((1, 2, 4), (3, 5)))
    assert T.restrict(3) == SYT(((1, 2), (3,)))
    assert T.column_lengths(3) == [2, 1, 0]


def test_bound():
    with pytest.raises(BoundError):
        next(standard_tableaux(11))
