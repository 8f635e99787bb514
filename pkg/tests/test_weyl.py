import math
from collections import Counter

import pytest

from eulerkit.exactpoly import parse_poly, var
from eulerkit.oracles import stirling1, stirling2
from eulerkit.permstats import BoundError
from eulerkit.tableaux import SYT, g_index, standard_tableaux
from eulerkit.weyl import (
    a_table,
    c_binding,
    cd_coefficients,
    cd_expand,
    fiber_count,
    fiber_counts,
    is_owp,
    ordered_weak_partitions,
    owp_weight,
    phi,
    sorts_to_standard,
    specialize,
    syt_expansion,
    syt_weight,
)

DISPLAY = [
    "f",
    "c*f1",
    "c*c1*f1 + c^2*f2",
    "(c*c1^2 + c^2*c2)*f1 + 3*c^2*c1*f2 + c^3*f3",
    "(c*c1^3 + 4*c^2*c1*c2 + c^3*c3)*f1 + (7*c^2*c1^2 + 4*c^3*c2)*f2 + 6*c^3*c1*f3 + c^4*f4",
]


@pytest.mark.parametrize("n", range(5))
def test_display(n):
    assert cd_expand(n, "f") == parse_poly(DISPLAY[n])


def test_cd_c_small():
    assert cd_expand(0, "c") == var("c")
    assert cd_expand(2, "c") == parse_poly("c*c1^2 + c^2*c2")


def test_cd_bounds_and_target():
    with pytest.raises(BoundError):
        cd_coefficients(13)
    with pytest.raises(ValueError):
        cd_expand(2, "g")


def test_a_table_n4():
    assert a_table(4) == {(3,): 1, (2, 1): 4, (1, 1, 1): 1, (2,): 4, (1, 1): 7, (1,): 6, (): 1}


def test_brute_force_operator():
    # apply c*D literally, with D the derivative on c, c1, ... and f, f1, ...
    from eulerkit.grammar import Grammar

    order = 6
    D = Grammar({**{f"c{i}" if i else "c": f"c{i + 1}" for i in range(order)}, **{f"f{i}" if i else "f": f"f{i + 1}" for i in range(order)}})
    p = var("f")
    for n in range(order):
        assert p == cd_expand(n, "f")
        p = var("c") * D.derive(p)


def test_owp_small():
    got = set(ordered_weak_partitions(2))
    assert got == {((1, 2), (), ()), ((1,), (2,), ())}
    three = set(ordered_weak_partitions(3))
    for p in [((1, 2, 3), (), (), ()), ((1, 2), (3,), (), ()), ((1, 2), (), (3,), ())]:
        assert p in three


@pytest.mark.parametrize("n", range(0, 7))
def test_owp_count_and_validity(n):
    ps = list(ordered_weak_partitions(n))
    assert len(ps) == len(set(ps)) == math.factorial(n)
    assert all(is_owp(p) for p in ps)


def test_is_owp_rejects():
    assert not is_owp(((2,), (1,), ()))
    assert not is_owp(((1,), (), (2,)))  # min(B_2) must exceed 2
    assert not is_owp(((1,), (1,), ()))


def test_owp_weight():
    assert owp_weight(((1, 2), (), ())) == parse_poly("c^2*c2")


def test_phi_example():
    assert phi(((1, 3), (2,), (), ())) == SYT(((1, 3), (2,)))
    assert phi(((1,), (2, 3), (), ())) == SYT(((1, 3), (2,)))


def test_fibers_n3():
    f = fiber_counts(3)
    assert f[SYT(((1, 2, 3),))] == 1
    assert f[SYT(((1, 3), (2,)))] == 2
    assert f[SYT(((1, 2), (3,)))] == 2
    assert f[SYT(((1,), (2,), (3,)))] == 1


@pytest.mark.parametrize("n", range(1, 7))
def test_fiber_equals_g_index(n):
    for T in standard_tableaux(n):
        assert fiber_count(T) == g_index(T)[1]


@pytest.mark.parametrize("n", range(1, 7))
def test_phi_preserves_weight(n):
    for p in ordered_weak_partitions(n):
        assert sorts_to_standard(p)
        assert owp_weight(p) == syt_weight(phi(p))


@pytest.mark.parametrize("n", range(0, 7))
def test_syt_expansion(n):
    assert syt_expansion(n) == cd_expand(n, "c")


def test_specialize_requires_all_c():
    e = cd_expand(3, "c")
    with pytest.raises(ValueError):
        specialize(e, {"c": 1})
    assert specialize(e, c_binding(3, 1, lambda i: 1)) == math.factorial(3)


@pytest.mark.parametrize("n", range(1, 8))
def test_number_extractions(n):
    table = a_table(n)
    assert sum(table.values()) == math.factorial(n)
    by_k = Counter()
    for lam, a in table.items():
        by_k[n - sum(lam)] += a
    assert all(by_k[k] == stirling1(n, k) for k in range(1, n + 1))
    assert all(table[(1,) * (n - k)] == stirling2(n, k) for k in range(1, n + 1))
