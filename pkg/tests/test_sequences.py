import math

import pytest

from eulerkit.exactpoly import Polynomial, parse_poly
from eulerkit.oracles import (
    double_factorial,
    eulerian_number,
    eulerian_poly,
    falling,
    stirling1,
    stirling2,
)
from eulerkit.permstats import BoundError
from eulerkit.sequences import (
    FAMILIES,
    derangement_a,
    derangement_b,
    e_poly,
    family_value,
    gamma_poly,
    second_eulerian,
    series_reduced,
    trivariate,
    type_b,
)

SECOND_ORDER_ROWS = [[1], [0, 1], [0, 1, 2], [0, 1, 8, 6], [0, 1, 22, 58, 24], [0, 1, 52, 328, 444, 120]]
TYPE_B_ROWS = [[1], [1, 1], [1, 6, 1], [1, 23, 23, 1], [1, 76, 230, 76, 1]]


@pytest.mark.parametrize("n, row", list(enumerate(SECOND_ORDER_ROWS)))
def test_second_order_triangle(n, row):
    assert second_eulerian(n).univariate_coeffs() == row


@pytest.mark.parametrize("n, row", list(enumerate(TYPE_B_ROWS)))
def test_type_b_triangle(n, row):
    assert type_b(n).univariate_coeffs() == row


def test_series_reduced_trees():
    # total number of series-reduced planted trees with n+1 labelled leaves
    assert [series_reduced(n) for n in range(8)] == [1, 1, 4, 26, 236, 2752, 39208, 660032]


def test_eulerian_convention():
    assert eulerian_poly(1) == parse_poly("x")
    assert eulerian_poly(3) == parse_poly("x + 4*x^2 + x^3")
    assert eulerian_number(4, 2) == 11


def test_classical_oracles():
    for n in range(1, 9):
        assert stirling2(n, n) == 1
        assert stirling1(n, 1) == math.factorial(n - 1)
        assert sum(stirling1(n, k) for k in range(n + 1)) == math.factorial(n)
        for m in range(9):
            assert sum(stirling2(n, k) * falling(m, k) for k in range(n + 1)) == m**n
    assert [double_factorial(m) for m in (-1, 0, 1, 5, 6)] == [1, 1, 1, 15, 48]


def test_small_families():
    assert trivariate(2) == parse_poly("x*y*z*(y*z + x*y + x*z)")
    assert e_poly(1) == parse_poly("y*z")
    assert gamma_poly(1) == parse_poly("w")
    assert gamma_poly(2) == parse_poly("v*w")
    assert derangement_a(4) == parse_poly("x + 7*x^2 + x^3")
    assert derangement_b(1).evaluate({"x": 1}) == 1


def test_errors():
    with pytest.raises(ValueError):
        family_value("nope", 1)
    with pytest.raises(ValueError):
        e_poly(0)
    with pytest.raises(BoundError):
        second_eulerian(41)


def test_family_registry_shapes():
    for name, (fn, first, univariate) in FAMILIES.items():
        v = family_value(name, first + 1)
        if univariate and isinstance(v, Polynomial):
            assert set(v.variables()) <= {"x"}
