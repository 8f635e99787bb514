"""Expansions of ``(cD)^n f`` and ``(cD)^n c``, box sorting, and the map to tableaux.

Symbols: ``c`` is the base function and ``c1, c2, ...`` its derivatives;
``f``, ``f1, f2, ...`` likewise for ``f``.  An ordered weak set partition
(OWP) is a tuple of ``n+1`` sorted tuples ``B_0, ..., B_n``.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Callable, Iterator, Mapping, Sequence

from .exactpoly import Polynomial, const, var
from .grammar import Grammar
from .permstats import BoundError
from .tableaux import SYT, g_index, row_profile, standard_tableaux

__all__ = [
    "c_name",
    "f_name",
    "cd_coefficients",
    "cd_expand",
    "a_table",
    "ordered_weak_partitions",
    "is_owp",
    "owp_weight",
    "phi",
    "fiber_counts",
    "fiber_count",
    "sorts_to_standard",
    "specialize",
    "c_binding",
    "syt_weight",
    "syt_expansion",
]

MAX_EXPAND_N = 12
MAX_OWP_N = 9
MAX_FIBER_N = 8

OWP = tuple  # tuple[tuple[int, ...], ...]


def c_name(i: int) -> str:
    return "c" if i == 0 else f"c{i}"


def f_name(k: int) -> str:
    return "f" if k == 0 else f"f{k}"


def _c_index(name: str) -> int | None:
    if name == "c":
        return 0
    if name.startswith("c") and name[1:].isdigit():
        return int(name[1:])
    return None


@lru_cache(maxsize=None)
def _derivative_grammar(order: int) -> Grammar:
    return Grammar({c_name(i): var(c_name(i + 1)) for i in range(order + 1)})


@lru_cache(maxsize=None)
def cd_coefficients(n: int) -> dict[int, Polynomial]:
    """``{k: F_{n,k}}`` with ``(cD)^n f = sum_k F_{n,k} f_k``.

    ``F_{n+1,k} = c F_{n,k-1} + c D F_{n,k}``, ``F_{0,0} = 1``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > MAX_EXPAND_N:
        raise BoundError(f"n={n} exceeds bound {MAX_EXPAND_N}")
    if n == 0:
        return {0: const(1)}
    prev = cd_coefficients(n - 1)
    c = var("c")
    D = _derivative_grammar(n)
    out = {}
    for k in range(1, n + 1):
        F = const(0)
        if k - 1 in prev:
            F = F + c * prev[k - 1]
        if k in prev:
            F = F + c * D.derive(prev[k])
        out[k] = F
    return out


def cd_expand(n: int, target: str = "f") -> Polynomial:
    """``(cD)^n f`` (target ``"f"``) or ``(cD)^n c`` (target ``"c"``)."""
    if target not in ("f", "c"):
        raise ValueError("target must be 'f' or 'c'")
    name = f_name if target == "f" else c_name
    total = const(0)
    for k, F in cd_coefficients(n).items():
        total = total + F * var(name(k))
    return total


def a_table(n: int) -> dict[tuple[int, ...], int]:
    """``{lambda: a(n, lambda)}`` read off ``F_{n,k} = sum a(n,lambda) c^(n-len) c_lambda``.

    Raises ``ValueError`` if a monomial does not have that shape.
    """
    table: dict[tuple[int, ...], int] = {}
    for k, F in cd_coefficients(n).items():
        for m, coeff in F.items():
            c_exp = 0
            parts: list[int] = []
            for v, e in m:
                i = _c_index(v)
                if i is None:
                    raise ValueError(f"unexpected variable {v} in F_{n},{k}")
                if i == 0:
                    c_exp = e
                else:
                    parts.extend([i] * e)
            lam = tuple(sorted(parts, reverse=True))
            if sum(lam) != n - k or c_exp != n - len(lam):
                raise ValueError(f"monomial {m} of F_{n},{k} is not c^(n-len) c_lambda with lambda |- n-k")
            if coeff <= 0:
                raise ValueError(f"nonpositive coefficient {coeff} in F_{n},{k}")
            table[lam] = coeff
    return table


# -- box sorting ---------------------------------------------------------------


def ordered_weak_partitions(n: int, bound: int = MAX_OWP_N) -> Iterator[OWP]:
    """OWP_n by box sorting: element ``i`` enters one of the ``i`` open boxes,
    then a fresh empty box is opened."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > bound:
        raise BoundError(f"n={n} exceeds bound {bound}")
    boxes: list[list[int]] = [[]]

    def rec(i: int) -> Iterator[OWP]:
        if i > n:
            yield tuple(tuple(b) for b in boxes)
            return
        for k in range(i):
            boxes[k].append(i)
            boxes.append([])
            yield from rec(i + 1)
            boxes.pop()
            boxes[k].pop()

    yield from rec(1)


def is_owp(p: Sequence[Sequence[int]]) -> bool:
    n = len(p) - 1
    elems = sorted(a for b in p for a in b)
    if elems != list(range(1, n + 1)):
        return False
    if n >= 1 and 1 not in p[0]:
        return False
    return all(not b or min(b) > i for i, b in enumerate(p) if i >= 1)


def owp_weight(p: OWP) -> Polynomial:
    """prod over blocks of ``c_{|B|}`` (``c`` for an empty block)."""
    counts = Counter(len(b) for b in p)
    return Polynomial.from_exponents([({c_name(i): e for i, e in counts.items()}, 1)])


def phi(p: OWP) -> SYT:
    """Drop empty blocks, stack rows longest first from the bottom, sort columns upwards."""
    rows = sorted((sorted(b) for b in p if b), key=len, reverse=True)
    width = len(rows[0]) if rows else 0
    grid = [list(r) for r in rows]
    for j in range(width):
        col = sorted(r[j] for r in grid if len(r) > j)
        h = 0
        for r in grid:
            if len(r) > j:
                r[j] = col[h]
                h += 1
    return SYT(tuple(tuple(r) for r in grid))


def sorts_to_standard(p: OWP) -> bool:
    """True iff the column-sorted tableau still has increasing rows."""
    try:
        phi(p)
    except ValueError:
        return False
    return True


@lru_cache(maxsize=16)
def fiber_counts(n: int) -> Counter:
    """``{T: #phi^{-1}(T)}`` by exhaustive enumeration of OWP_n."""
    if n > MAX_FIBER_N:
        raise BoundError(f"n={n} exceeds bound {MAX_FIBER_N}")
    return Counter(phi(p) for p in ordered_weak_partitions(n))


def fiber_count(T: SYT) -> int:
    return fiber_counts(T.n)[T]


# -- tableau expansion and specializations ------------------------------------


def syt_weight(T: SYT) -> Polynomial:
    """``c^(n+1-len) prod c_i^(w_i)``."""
    w, length = row_profile(T)
    exps = {c_name(i + 1): e for i, e in enumerate(w) if e}
    exps["c"] = T.n + 1 - length
    return Polynomial.from_exponents([(exps, 1)])


def syt_expansion(n: int) -> Polynomial:
    """``sum_T (prod sigma_i(T)) w(T)`` over SYT(n)."""
    if n == 0:
        return var("c")
    total = const(0)
    for T in standard_tableaux(n):
        total = total + syt_weight(T) * g_index(T)[1]
    return total


def c_binding(order: int, c, ci: Callable[[int], Polynomial | int]) -> dict[str, Polynomial]:
    """Binding ``c -> c, c_i -> ci(i)`` for ``1 <= i <= order``."""
    out = {"c": c if isinstance(c, Polynomial) else const(c)}
    for i in range(1, order + 1):
        v = ci(i)
        out[c_name(i)] = v if isinstance(v, Polynomial) else const(v)
    return out


def specialize(e: Polynomial, binding: Mapping[str, Polynomial | int]) -> Polynomial:
    """Substitute into an expansion; every ``c``-variable must be bound."""
    missing = [v for v in e.variables() if _c_index(v) is not None and v not in binding]
    if missing:
        raise ValueError(f"unbound variables {missing}")
    return e.subs(binding)

