"""Classical number tables and a cofactor determinant, used as independent oracles."""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .exactpoly import Polynomial, const, var

__all__ = [
    "stirling2",
    "stirling1",
    "eulerian_poly",
    "eulerian_number",
    "double_factorial",
    "falling",
    "laplace_det",
]


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Set partitions of [n] into k blocks: S(n,k) = k S(n-1,k) + S(n-1,k-1)."""
    if n == 0 or k == 0:
        return 1 if n == k else 0
    if k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


@lru_cache(maxsize=None)
def stirling1(n: int, k: int) -> int:
    """Signless, permutations of [n] with k cycles: c(n,k) = (n-1) c(n-1,k) + c(n-1,k-1)."""
    if n == 0 or k == 0:
        return 1 if n == k else 0
    if k > n:
        return 0
    return (n - 1) * stirling1(n - 1, k) + stirling1(n - 1, k - 1)


@lru_cache(maxsize=None)
def eulerian_poly(n: int) -> Polynomial:
    """A_n(x) with A_0 = 1, A_1 = x:  A_n = n x A_{n-1} + x(1-x) A'_{n-1}."""
    if n == 0:
        return const(1)
    x = var("x")
    prev = eulerian_poly(n - 1)
    return n * x * prev + x * (1 - x) * prev.partial("x")


def eulerian_number(n: int, k: int) -> int:
    return eulerian_poly(n).coeff({"x": k})


def double_factorial(m: int) -> int:
    """m!! with (-1)!! = 0!! = 1."""
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out


def falling(m: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= m - i
    return out


def laplace_det(M: Sequence[Sequence]) -> Polynomial:
    """Determinant by cofactor expansion along the first row."""
    n = len(M)
    rows = [[x if isinstance(x, Polynomial) else const(x) for x in row] for row in M]
    if n == 0:
        return const(1)
    if n == 1:
        return rows[0][0]
    total = const(0)
    for j in range(n):
        if not rows[0][j]:
            continue
        minor = [row[:j] + row[j + 1:] for row in rows[1:]]
        term = rows[0][j] * laplace_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total
