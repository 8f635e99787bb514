"""Signed permutations (the hyperoctahedral group) and their cycle statistics.

A signed permutation is stored in one-line notation as a tuple of nonzero
ints ``pi(1), ..., pi(n)`` whose absolute values are a permutation of ``[n]``.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import asdict, dataclass
from functools import lru_cache
from typing import Callable, Iterator, Mapping, Sequence, Union

from .exactpoly import Polynomial
from .permstats import BoundError

__all__ = [
    "CycleStats",
    "CYCLE_STATISTICS",
    "signed_permutations",
    "cycle_stats",
    "signed_gen_poly",
    "apq_poly",
    "format_signed",
]

MAX_N = 8
CYCLE_STATISTICS = ("exc", "aexc", "fix", "single", "neg", "cyc")


@dataclass(frozen=True)
class CycleStats:
    exc: int
    aexc: int
    fix: int
    single: int
    neg: int
    cyc: int

    def as_dict(self) -> dict[str, int]:
        return asdict(self)


def signed_permutations(n: int, negatives: bool = True, bound: int = MAX_N) -> Iterator[tuple[int, ...]]:
    """All ``2^n n!`` signed permutations, or the ``n!`` plain ones."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > bound:
        raise BoundError(f"n={n} exceeds bound {bound}")
    signs = list(itertools.product((1, -1), repeat=n)) if negatives else [(1,) * n]
    for perm in itertools.permutations(range(1, n + 1)):
        for sg in signs:
            yield tuple(a * s for a, s in zip(perm, sg))


def cycle_stats(pi: Sequence[int]) -> CycleStats:
    """Excedance-type statistics of a signed permutation.

    ``i`` is an excedance when ``pi(|pi(i)|) > pi(i)`` and an anti-excedance
    when ``<``; equality happens exactly at fixed points and singletons.
    Cycles are the orbits of ``i -> |pi(i)|``.
    """
    n = len(pi)
    exc = aexc = fix = single = 0
    for i in range(1, n + 1):
        v = pi[i - 1]
        if v == i:
            fix += 1
        elif v == -i:
            single += 1
        else:
            w = pi[abs(v) - 1]
            if w > v:
                exc += 1
            else:
                aexc += 1
    neg = sum(1 for v in pi if v < 0)
    seen = [False] * (n + 1)
    cyc = 0
    for i in range(1, n + 1):
        if not seen[i]:
            cyc += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = abs(pi[j - 1])
    return CycleStats(exc, aexc, fix, single, neg, cyc)


Filter = Union[Mapping[str, int], Callable[[CycleStats], bool], None]


@lru_cache(maxsize=64)
def _distribution(n: int, negatives: bool, bound: int) -> Counter:
    return Counter(
        tuple(getattr(cycle_stats(pi), s) for s in CYCLE_STATISTICS)
        for pi in signed_permutations(n, negatives, bound)
    )


def signed_gen_poly(
    n: int,
    stats: Sequence[tuple[str, str]],
    where: Filter = None,
    negatives: bool = True,
    bound: int = MAX_N,
) -> Polynomial:
    """Sum of prod(var^stat) over (filtered) signed permutations.

    A variable listed twice gets the sum of both statistics as its exponent,
    e.g. ``[("exc", "x"), ("single", "x")]`` gives ``x^(exc+single)``.
    ``where`` is either equality constraints such as ``{"fix": 0}`` or a
    predicate on :class:`CycleStats`.
    """
    for s, _ in stats:
        if s not in CYCLE_STATISTICS:
            raise ValueError(f"unknown statistic {s!r}")
    if isinstance(where, Mapping):
        for s in where:
            if s not in CYCLE_STATISTICS:
                raise ValueError(f"unknown statistic {s!r}")
        constraints = dict(where)

        def keep(cs: CycleStats) -> bool:
            return all(getattr(cs, k) == v for k, v in constraints.items())

    else:
        keep = where
    idx = {s: i for i, s in enumerate(CYCLE_STATISTICS)}
    counts: Counter = Counter()
    for vec, c in _distribution(n, negatives, bound).items():
        if keep is not None and not keep(CycleStats(*vec)):
            continue
        counts[tuple(vec[idx[s]] for s, _ in stats)] += c
    return Polynomial.from_counts(tuple(v for _, v in stats), counts)


def apq_poly(n: int, bound: int = MAX_N) -> Polynomial:
    """The (p,q)-Eulerian polynomial: x^exc p^fix q^cyc over plain permutations."""
    return signed_gen_poly(n, [("exc", "x"), ("fix", "p"), ("cyc", "q")], negatives=False, bound=bound)


def format_signed(pi: Sequence[int]) -> str:
    return " ".join(map(str, pi))
