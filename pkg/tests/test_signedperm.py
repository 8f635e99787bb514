import math

import pytest

from eulerkit.exactpoly import parse_poly
from eulerkit.oracles import eulerian_poly
from eulerkit.permstats import BoundError
from eulerkit.signedperm import (
    CycleStats,
    apq_poly,
    cycle_stats,
    format_signed,
    signed_gen_poly,
    signed_permutations,
)


def test_worked_example():
    pi = (6, 8, -3, 1, 5, -7, 2, 4, -9)
    assert cycle_stats(pi) == CycleStats(exc=3, aexc=3, fix=1, single=2, neg=3, cyc=4)


@pytest.mark.parametrize("n", range(0, 6))
def test_counts(n):
    assert sum(1 for _ in signed_permutations(n)) == 2**n * math.factorial(n)
    assert sum(1 for _ in signed_permutations(n, negatives=False)) == math.factorial(n)


def test_bound():
    with pytest.raises(BoundError):
        next(signed_permutations(9))


def test_type_b_small():
    assert signed_gen_poly(2, [("exc", "x"), ("single", "x")]) == parse_poly("1 + 6*x + x^2")
    assert signed_gen_poly(3, [("exc", "x"), ("fix", "x")]) == parse_poly("1 + 23*x + 23*x^2 + x^3")


def test_derangements():
    assert signed_gen_poly(3, [("exc", "x")], where={"fix": 0}, negatives=False) == parse_poly("x + x^2")
    via_callable = signed_gen_poly(3, [("exc", "x")], where=lambda cs: cs.fix == 0, negatives=False)
    assert via_callable == parse_poly("x + x^2")


def test_apq():
    assert apq_poly(2) == parse_poly("q*x + p^2*q^2")
    for n in range(1, 6):
        # exc over S_n is the classical Eulerian distribution shifted by one
        assert apq_poly(n).subs({"p": 1, "q": 1}) * parse_poly("x") == eulerian_poly(n)


def test_cycle_count_plain():
    # q^cyc over S_n at x = p = 1 gives the rising factorial q(q+1)...(q+n-1)
    for n in range(1, 6):
        rising = parse_poly("1")
        for i in range(n):
            rising = rising * parse_poly(f"q + {i}")
        assert apq_poly(n).subs({"x": 1, "p": 1}) == rising


def test_unknown_statistic():
    with pytest.raises(ValueError):
        signed_gen_poly(2, [("des", "x")])
    with pytest.raises(ValueError):
        signed_gen_poly(2, [("exc", "x")], where={"des": 0})


def test_format():
    assert format_signed((2, -1)) == "2 -1"
