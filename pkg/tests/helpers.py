"""Random generators and independent oracles shared by the test modules."""

from __future__ import annotations

import itertools
import random

from eulerkit.exactpoly import Polynomial, const

VARS = ("x", "y", "z", "c1", "c10")


def random_poly(rng: random.Random, variables=VARS, max_terms: int = 5, max_exp: int = 3, big: bool = False) -> Polynomial:
    terms = []
    for _ in range(rng.randint(0, max_terms)):
        exps = {v: rng.randint(0, max_exp) for v in rng.sample(variables, rng.randint(0, len(variables)))}
        bound = 10**30 if big and rng.random() < 0.2 else 20
        terms.append((exps, rng.randint(-bound, bound)))
    return Polynomial.from_exponents(terms)


def random_hessenberg(rng: random.Random, n: int, polynomial: bool) -> list[list[Polynomial]]:
    def entry(i, j):
        if j > i + 1:
            return const(0)
        if polynomial:
            return random_poly(rng, ("x", "y"), max_terms=2, max_exp=2)
        return const(rng.randint(-6, 6))

    return [[entry(i, j) for j in range(n)] for i in range(n)]


def insertion_stirling(n: int, first_single: bool = False) -> set[tuple[int, ...]]:
    """Q_n (or Q_n^(1)) built by inserting the pair ``i i`` into every slot."""
    words = {()}
    for i in range(1, n + 1):
        nxt = set()
        for w in words:
            block = (i,) if (i == 1 and first_single) else (i, i)
            for k in range(len(w) + 1):
                nxt.add(w[:k] + block + w[k:])
        words = nxt
    return words


def random_stirling_word(rng: random.Random, n: int) -> tuple[int, ...]:
    w: tuple[int, ...] = ()
    for i in range(1, n + 1):
        k = rng.randint(0, len(w))
        w = w[:k] + (i, i) + w[k:]
    return w


def symmetrize(p: Polynomial, variables=("x", "y", "z")) -> Polynomial:
    total = const(0)
    for perm in itertools.permutations(variables):
        total = total + p.subs({v: Polynomial.parse(w) for v, w in zip(variables, perm)})
    return total


def slot_types(word: tuple[int, ...]) -> list[str]:
    """Type of each of the len+1 gaps of the zero-padded word."""
    padded = (0,) + word + (0,)
    out = []
    for a, b in zip(padded, padded[1:]):
        out.append("asc" if a < b else "des" if a > b else "plat")
    return out


# one summary line per acceptance criterion, printed by conftest at session end
CRITERIA_LINES: list[str] = []
