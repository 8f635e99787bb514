"""Partitions and standard Young tableaux in French (bottom-up) convention.

Row 0 of an :class:`SYT` is the bottom row, which is also the longest.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .permstats import BoundError

__all__ = [
    "SYT",
    "partitions",
    "conjugate",
    "standard_tableaux",
    "tableaux_of_shape",
    "descent_set",
    "row_profile",
    "g_index",
]

MAX_PARTITION_N = 30
MAX_SYT_N = 10


def partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` as weakly decreasing tuples, largest first.

    >>> list(partitions(3))
    [(3,), (2, 1), (1, 1, 1)]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > MAX_PARTITION_N:
        raise BoundError(f"n={n} exceeds bound {MAX_PARTITION_N}")
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def conjugate(shape: Sequence[int]) -> tuple[int, ...]:
    if not shape:
        return ()
    return tuple(sum(1 for r in shape if r > j) for j in range(shape[0]))


@dataclass(frozen=True)
class SYT:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        entries = sorted(a for r in rows for a in r)
        if entries != list(range(1, len(entries) + 1)):
            raise ValueError("entries must be exactly 1..n")
        for lower, upper in zip(rows, rows[1:]):
            if len(upper) > len(lower):
                raise ValueError("row lengths must weakly decrease upwards")
            if any(upper[j] <= lower[j] for j in range(len(upper))):
                raise ValueError("columns must increase upwards")
        for r in rows:
            if not r or any(a >= b for a, b in zip(r, r[1:])):
                raise ValueError("rows must be nonempty and increasing")

    @property
    def n(self) -> int:
        return sum(len(r) for r in self.rows)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @property
    def length(self) -> int:
        return len(self.rows)

    @cached_property
    def position(self) -> dict[int, tuple[int, int]]:
        """entry -> (row, column), both 0-based from the bottom-left."""
        return {a: (i, j) for i, r in enumerate(self.rows) for j, a in enumerate(r)}

    def column_lengths(self, upto: int | None = None) -> list[int]:
        """Column sizes of the subtableau holding entries ``<= upto``."""
        limit = self.n if upto is None else upto
        cols = [0] * (len(self.rows[0]) if self.rows else 0)
        for r in self.rows:
            for j, a in enumerate(r):
                if a <= limit:
                    cols[j] += 1
        return cols

    def restrict(self, i: int) -> "SYT":
        return SYT(tuple(t for t in (tuple(a for a in r if a <= i) for r in self.rows) if t))

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    @classmethod
    def from_json(cls, data) -> "SYT":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(tuple(tuple(r) for r in data))

    def to_text(self) -> str:
        """One row per line, bottom row last (how the tableau is drawn)."""
        return "\n".join(" ".join(map(str, r)) for r in reversed(self.rows))

    def __str__(self) -> str:
        return self.to_text()


def tableaux_of_shape(shape: Sequence[int]) -> Iterator[SYT]:
    """Every SYT of a given shape, obtained by removing the largest entry from a corner."""
    shape = tuple(shape)
    n = sum(shape)

    def rec(sh: tuple[int, ...], k: int) -> Iterator[list[list[int]]]:
        if k == 0:
            yield [[] for _ in shape]
            return
        for i, r in enumerate(sh):
            # corner: last cell of row i, with nothing above it
            if r and (i + 1 == len(sh) or sh[i + 1] < r):
                smaller = sh[:i] + (r - 1,) + sh[i + 1:]
                for filling in rec(smaller, k - 1):
                    filling[i].append(k)
                    yield filling
                    filling[i].pop()

    for filling in rec(shape, n):
        yield SYT(tuple(tuple(r) for r in filling))


def standard_tableaux(n: int, max_columns: int | None = None) -> Iterator[SYT]:
    """All of SYT(n), grouped by shape in :func:`partitions` order."""
    if n > MAX_SYT_N:
        raise BoundError(f"n={n} exceeds bound {MAX_SYT_N}")
    for shape in partitions(n):
        if max_columns is not None and shape and shape[0] > max_columns:
            continue
        yield from tableaux_of_shape(shape)


def descent_set(T: SYT) -> set[int]:
    """``i`` such that ``i+1`` sits in a higher row than ``i``."""
    pos = T.position
    return {i for i in range(1, T.n) if pos[i + 1][0] > pos[i][0]}


def row_profile(T: SYT) -> tuple[list[int], int]:
    """``([w_1, ..., w_n], length)`` where ``w_i`` counts rows with ``i`` cells."""
    w = [0] * T.n
    for r in T.rows:
        w[len(r) - 1] += 1
    return w, T.length


def g_index(T: SYT) -> tuple[list[int], int]:
    """Per-entry multiplicities ``sigma_i(T)`` and their product."""
    sigma = []
    for i in range(1, T.n + 1):
        _, j = T.position[i]
        cols = T.column_lengths(i)
        if j == 0:
            s = i - cols[0] + 1
        else:
            s = cols[j - 1] - cols[j] + 1
        sigma.append(s)
    prod = 1
    for s in sigma:
        prod *= s
    return sigma, prod
