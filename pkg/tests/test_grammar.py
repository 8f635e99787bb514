import random

import pytest

from eulerkit.exactpoly import ParseError, parse_poly, var
from eulerkit.grammar import EULERIAN, SIGNED, TRIVARIATE, Grammar, parse_rules
from helpers import random_poly


def test_canonical_print_sorts_rules():
    assert str(parse_rules("b->a*b; a -> a*b;")) == "a -> a*b; b -> a*b"
    assert str(parse_rules("c10 -> 1; c2 -> c10")) == "c2 -> c10; c10 -> 1"


def test_canonical_print_reparses():
    G = parse_rules("I -> q*I*(t+s*p); s -> (1+p)*x*y")
    assert parse_rules(str(G)) == G


@pytest.mark.parametrize(
    "text, pos",
    [("x -> ", 5), ("-> x", 0), ("x y", 2), ("x -> y; x -> z", 8), ("", 0), ("x -> y z", 7)],
)
def test_rule_parse_errors(text, pos):
    with pytest.raises(ParseError) as info:
        parse_rules(text)
    assert info.value.position == pos


def test_unlisted_variables_are_constants():
    G = parse_rules("x -> y")
    assert G.derive(parse_poly("x^2*z")) == parse_poly("2*x*y*z")


def test_eulerian_small():
    assert EULERIAN.iterate(var("a"), 3) == parse_poly("a*b^3 + 4*a^2*b^2 + a^3*b")


def test_trivariate_yz_square():
    assert TRIVARIATE.iterate(parse_poly("y*z"), 2) == parse_poly(
        "x^2*y^3*z + 4*x^2*y^2*z^2 + x*y^3*z^2 + x^2*y*z^3 + x*y^2*z^3"
    )


def test_signed_first_step():
    assert SIGNED.derive(var("I")) == parse_poly("q*I*t + q*I*s*p")


def test_orbit_and_iterate_agree():
    orbit = TRIVARIATE.orbit(var("x"), 4)
    assert len(orbit) == 5 and orbit[4] == TRIVARIATE.iterate(var("x"), 4)
    with pytest.raises(ValueError):
        TRIVARIATE.iterate(var("x"), -1)


def test_derivation_rules_random():
    rng = random.Random(3)
    G = Grammar({"x": "x*y + 2", "y": "z^2", "c1": "x"})
    for _ in range(100):
        p, q = random_poly(rng), random_poly(rng)
        assert G.derive(p + q) == G.derive(p) + G.derive(q)
        assert G.derive(p * q) == G.derive(p) * q + p * G.derive(q)
