"""Named polynomial families, each computed by its most direct route."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable, Union

from .exactpoly import Polynomial, const, var
from .grammar import SYMMETRIC, TRIVARIATE, TYPE_B
from .oracles import eulerian_poly
from .permstats import BoundError, gen_poly, q_spec
from .signedperm import apq_poly, signed_gen_poly

__all__ = [
    "FAMILIES",
    "family_value",
    "second_eulerian",
    "trivariate",
    "e_poly",
    "type_b",
    "gamma_poly",
    "series_reduced",
    "derangement_a",
    "derangement_b",
    "bpq_poly",
    "ascent_plateau",
    "left_ascent_plateau",
]

RECURRENCE_MAX = 40
GRAMMAR_MAX = 12


def _check(n: int, bound: int, low: int = 0) -> None:
    if n < low:
        raise ValueError(f"n must be at least {low}")
    if n > bound:
        raise BoundError(f"n={n} exceeds bound {bound}")


@lru_cache(maxsize=None)
def second_eulerian(n: int) -> Polynomial:
    """C_n(x) from C_{n+1} = (2n+1) x C_n + x(1-x) C_n'."""
    _check(n, RECURRENCE_MAX)
    if n == 0:
        return const(1)
    x = var("x")
    prev = second_eulerian(n - 1)
    return (2 * n - 1) * x * prev + x * (1 - x) * prev.partial("x")


@lru_cache(maxsize=None)
def trivariate(n: int) -> Polynomial:
    """C_n(x,y,z) = D^n(x) under x, y, z -> xyz."""
    _check(n, GRAMMAR_MAX)
    return var("x") if n == 0 else TRIVARIATE.derive(trivariate(n - 1))


@lru_cache(maxsize=None)
def e_poly(n: int) -> Polynomial:
    """E_n(x,y,z) = D^{n-1}(yz) under x, y, z -> xyz."""
    _check(n, GRAMMAR_MAX + 1, low=1)
    return var("y") * var("z") if n == 1 else TRIVARIATE.derive(e_poly(n - 1))


@lru_cache(maxsize=None)
def _type_b_grammar_power(n: int) -> Polynomial:
    return var("a") * var("b") if n == 0 else TYPE_B.derive(_type_b_grammar_power(n - 1))


def type_b(n: int) -> Polynomial:
    """B_n(x), read off D^n(ab) = a b^(2n+1) B_n(a^2/b^2) under a -> ab^2, b -> a^2 b."""
    _check(n, GRAMMAR_MAX)
    coeffs: dict = {}
    for m, c in _type_b_grammar_power(n).items():
        a_exp = dict(m).get("a", 0)
        coeffs[(a_exp - 1) // 2] = c
    return Polynomial.from_coeffs([coeffs.get(k, 0) for k in range(max(coeffs) + 1)])


@lru_cache(maxsize=None)
def gamma_poly(n: int) -> Polynomial:
    """D_H^{n-1}(w) under H = {w -> vw, u -> 3w, v -> 2uw}; coefficients are gamma_{n,i,j,k}."""
    _check(n, GRAMMAR_MAX, low=1)
    return var("w") if n == 1 else SYMMETRIC.derive(gamma_poly(n - 1))


def series_reduced(n: int) -> int:
    """a_n = 2^n C_n(1/2)."""
    v = second_eulerian(n).evaluate({"x": Fraction(1, 2)}) * 2**n
    assert v.denominator == 1
    return int(v)


def bpq_poly(n: int) -> Polynomial:
    return signed_gen_poly(n, [("exc", "x"), ("single", "x"), ("neg", "p"), ("cyc", "q")])


def derangement_a(n: int) -> Polynomial:
    return signed_gen_poly(n, [("exc", "x")], where={"fix": 0}, negatives=False)


def derangement_b(n: int) -> Polynomial:
    return signed_gen_poly(n, [("exc", "x")], where={"fix": 0})


def ascent_plateau(n: int) -> Polynomial:
    return gen_poly(q_spec(n), [("ap", "x")])


def left_ascent_plateau(n: int) -> Polynomial:
    return gen_poly(q_spec(n), [("lap", "x")])


def _eulerian(n: int) -> Polynomial:
    _check(n, RECURRENCE_MAX)
    return eulerian_poly(n)


Value = Union[Polynomial, int]

# name -> (function, first valid n, univariate?)
FAMILIES: dict[str, tuple[Callable[[int], Value], int, bool]] = {
    "eulerian": (_eulerian, 0, True),
    "second-eulerian": (second_eulerian, 0, True),
    "trivariate": (trivariate, 0, False),
    "e-poly": (e_poly, 1, False),
    "type-b": (type_b, 0, True),
    "bpq": (bpq_poly, 0, False),
    "apq": (apq_poly, 0, False),
    "derangement-a": (derangement_a, 0, True),
    "derangement-b": (derangement_b, 0, True),
    "ascent-plateau": (ascent_plateau, 0, True),
    "left-ascent-plateau": (left_ascent_plateau, 0, True),
    "series-reduced": (series_reduced, 0, True),
    "gamma": (gamma_poly, 1, False),
}


def family_value(name: str, n: int) -> Value:
    try:
        fn, _, _ = FAMILIES[name]
    except KeyError:
        raise ValueError(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}") from None
    return fn(n)
