"""Stirling permutations over multisets and their word statistics.

Words are plain tuples of positive integers.  A multiset is given by its
multiplicity vector ``(m_1, ..., m_n)``; ``q_spec(n)`` is ``{1,1,...,n,n}`` and
``q1_spec(n)`` is ``{1,2,2,...,n,n}``.

Boundary conventions: ascents, descents and plateaux are counted on the word
padded with a zero at both ends.  Ascent-plateaux need index ``2 <= i <= L-1``;
left ascent-plateaux also allow ``i = 1``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

from .exactpoly import Polynomial

__all__ = [
    "BoundError",
    "StatRecord",
    "STATISTICS",
    "q_spec",
    "q1_spec",
    "is_stirling",
    "stirling_permutations",
    "enumerate_stirling",
    "basic_stats",
    "plateau_sets",
    "blocks",
    "rlmin_even",
    "new_stats",
    "stat_record",
    "gen_poly",
    "format_word",
]

MAX_LETTERS = 18


class BoundError(ValueError):
    """Requested enumeration is larger than the configured bound."""


def q_spec(n: int) -> tuple[int, ...]:
    return (2,) * n


def q1_spec(n: int) -> tuple[int, ...]:
    if n < 1:
        raise ValueError("Q^(1)_n needs n >= 1")
    return (1,) + (2,) * (n - 1)


def _is_q1(spec: Sequence[int]) -> bool:
    return len(spec) >= 1 and spec[0] == 1 and all(m == 2 for m in spec[1:])


def is_stirling(word: Sequence[int], spec: Sequence[int] | None = None) -> bool:
    """Everything between two copies of ``i`` is at least ``i``."""
    if spec is not None:
        expected = Counter({i + 1: m for i, m in enumerate(spec) if m})
        if Counter(word) != expected:
            return False
    first: dict[int, int] = {}
    last: dict[int, int] = {}
    for i, a in enumerate(word):
        first.setdefault(a, i)
        last[a] = i
    return all(min(word[first[a]:last[a] + 1]) >= a for a in first)


def stirling_permutations(spec: Sequence[int], bound: int = MAX_LETTERS) -> Iterator[tuple[int, ...]]:
    """Yield every Stirling permutation of the multiset, in lexicographic order.

    Built left to right: a letter may be placed only if it is at least every
    letter that has been started but not finished.
    """
    spec = tuple(spec)
    if any(m < 0 for m in spec):
        raise ValueError("multiplicities must be nonnegative")
    total = sum(spec)
    if total > bound:
        raise BoundError(f"multiset has {total} letters; bound is {bound}")
    remaining = list(spec)
    letters = [i + 1 for i, m in enumerate(spec) if m]
    word: list[int] = []
    # open letters form an increasing stack
    stack: list[int] = []

    def rec() -> Iterator[tuple[int, ...]]:
        if len(word) == total:
            yield tuple(word)
            return
        floor = stack[-1] if stack else 0
        for a in letters:
            r = remaining[a - 1]
            if not r or a < floor:
                continue
            opened = a != floor
            remaining[a - 1] = r - 1
            word.append(a)
            if opened and r - 1 > 0:
                stack.append(a)
            closed = not opened and r - 1 == 0
            if closed:
                stack.pop()
            yield from rec()
            if closed:
                stack.append(a)
            if opened and r - 1 > 0:
                stack.pop()
            word.pop()
            remaining[a - 1] = r

    yield from rec()


def enumerate_stirling(spec: Sequence[int], bound: int = MAX_LETTERS) -> list[tuple[int, ...]]:
    return list(stirling_permutations(spec, bound))


def format_word(word: Sequence[int]) -> str:
    if all(a <= 9 for a in word):
        return "".join(map(str, word))
    return ",".join(map(str, word))


# -- statistics ---------------------------------------------------------------


def basic_stats(word: Sequence[int]) -> tuple[int, int, int]:
    """(asc, des, plat) over the zero-padded word."""
    padded = (0, *word, 0)
    asc = des = plat = 0
    for a, b in zip(padded, padded[1:]):
        if a < b:
            asc += 1
        elif a > b:
            des += 1
        else:
            plat += 1
    return asc, des, plat


def _ap_letters(word: Sequence[int], first_index: int) -> set[int]:
    L = len(word)
    out = set()
    for i in range(first_index, L):  # 1-based i, word[i-1] is sigma_i
        prev = word[i - 2] if i >= 2 else 0
        if prev < word[i - 1] == word[i]:
            out.add(word[i - 1])
    return out


def plateau_sets(word: Sequence[int]) -> tuple[set[int], set[int]]:
    """(Ap, Lap) as sets of letters."""
    return _ap_letters(word, 2), _ap_letters(word, 1)


def lrmin_positions(word: Sequence[int]) -> list[int]:
    out = []
    low = None
    for i, a in enumerate(word):
        if low is None or a < low:
            out.append(i)
            low = a
    return out


def blocks(word: Sequence[int]) -> tuple[list[tuple[int, int]], int, set[int]]:
    """Block decomposition by left-to-right minima.

    Returns ``(ranges, bk2, lrmin_letters)`` where ranges are half-open
    ``(start, stop)`` index pairs.
    """
    starts = lrmin_positions(word)
    ranges = [(s, e) for s, e in zip(starts, starts[1:] + [len(word)])]
    bk2 = sum(1 for s, e in ranges if e - s == 2)
    return ranges, bk2, {word[i] for i in starts}


def rlmin_even(word: Sequence[int]) -> tuple[set[int], set[int]]:
    """(Rlmin, Even): both use the first appearance of each letter."""
    seen: set[int] = set()
    firsts = []
    for i, a in enumerate(word):
        if a not in seen:
            seen.add(a)
            firsts.append(i)
    even = {word[i] for i in firsts if (i + 1) % 2 == 0}
    suffix_min = [0] * (len(word) + 1)
    suffix_min[len(word)] = float("inf")
    for i in range(len(word) - 1, -1, -1):
        suffix_min[i] = min(word[i], suffix_min[i + 1])
    rlmin = {word[i] for i in firsts if word[i] <= suffix_min[i + 1]}
    return rlmin, even


def _impap_and_pairs(word: Sequence[int]) -> tuple[set[int], set[int], set[int], int]:
    """(pap, impap, second entries of size-2 blocks, bk2) for one word."""
    ap = _ap_letters(word, 2)
    rlmin, _ = rlmin_even(word)
    ranges, bk2, _ = blocks(word)
    pairs = {word[s + 1] for s, e in ranges if e - s == 2}
    return ap - rlmin, ap & rlmin, pairs, bk2


def new_stats(word: Sequence[int]) -> tuple[set[int], set[int], set[int], int]:
    """(Pap, Impap, Trace, cap) for a word of Q^(1)_m.

    Traces accumulate over the restrictions of the word to letters ``<= k``
    for ``k = 2..m``.  ``cap = (m-1) - pap - impap - bk2``.
    """
    m = max(word)
    if sorted(word) != [1] + [a for a in range(2, m + 1) for _ in range(2)]:
        raise ValueError(f"{format_word(word)} is not a word over {{1,2,2,...,m,m}}")
    pap, impap, _, bk2 = _impap_and_pairs(word)
    trace: set[int] = set()
    for k in range(2, m + 1):
        sub = [a for a in word if a <= k]
        _, sub_impap, sub_pairs, _ = _impap_and_pairs(sub)
        trace |= sub_impap | sub_pairs
    cap = (m - 1) - len(pap) - len(impap) - bk2
    return pap, impap, trace, cap


@dataclass(frozen=True)
class StatRecord:
    word: tuple[int, ...]
    asc: int
    des: int
    plat: int
    ap_set: frozenset
    lap_set: frozenset
    blocks: tuple
    bk2: int
    lrmin_set: frozenset
    rlmin_set: frozenset
    even_set: frozenset
    pap_set: frozenset = field(default=None)
    impap_set: frozenset = field(default=None)
    trace_set: frozenset = field(default=None)
    cap: int | None = None

    @property
    def ap(self) -> int:
        return len(self.ap_set)

    @property
    def lap(self) -> int:
        return len(self.lap_set)

    @property
    def lrmin(self) -> int:
        return len(self.lrmin_set)

    @property
    def rlmin(self) -> int:
        return len(self.rlmin_set)

    @property
    def even(self) -> int:
        return len(self.even_set)

    @property
    def pap(self) -> int | None:
        return None if self.pap_set is None else len(self.pap_set)

    @property
    def impap(self) -> int | None:
        return None if self.impap_set is None else len(self.impap_set)

    @property
    def trace(self) -> int | None:
        return None if self.trace_set is None else len(self.trace_set)

    def to_json(self) -> dict:
        out = {"word": list(self.word)}
        stats = {}
        for name in STATISTICS:
            value = getattr(self, name)
            if value is not None:
                stats[name] = value
        for name in ("ap_set", "lap_set", "lrmin_set", "rlmin_set", "even_set", "pap_set", "impap_set", "trace_set"):
            value = getattr(self, name)
            if value is not None:
                stats[name] = sorted(value)
        stats["blocks"] = [list(self.word[s:e]) for s, e in self.blocks]
        out["stats"] = stats
        return out


def stat_record(word: Sequence[int]) -> StatRecord:
    word = tuple(word)
    asc, des, plat = basic_stats(word)
    ap, lap = plateau_sets(word)
    ranges, bk2, lrmin = blocks(word)
    rlmin, even = rlmin_even(word)
    extra = {}
    if word and _is_q1(tuple(Counter(word)[i] for i in range(1, max(word) + 1))):
        pap, impap, trace, cap = new_stats(word)
        extra = dict(pap_set=frozenset(pap), impap_set=frozenset(impap), trace_set=frozenset(trace), cap=cap)
    return StatRecord(
        word=word,
        asc=asc,
        des=des,
        plat=plat,
        ap_set=frozenset(ap),
        lap_set=frozenset(lap),
        blocks=tuple(ranges),
        bk2=bk2,
        lrmin_set=frozenset(lrmin),
        rlmin_set=frozenset(rlmin),
        even_set=frozenset(even),
        **extra,
    )


def _stat_fns():
    def basic(i):
        return lambda w: basic_stats(w)[i]

    def q1(i):
        def f(w):
            r = new_stats(w)
            return r[i] if i == 3 else len(r[i])

        return f

    return {
        "asc": basic(0),
        "des": basic(1),
        "plat": basic(2),
        "ap": lambda w: len(plateau_sets(w)[0]),
        "lap": lambda w: len(plateau_sets(w)[1]),
        "bk2": lambda w: blocks(w)[1],
        "lrmin": lambda w: len(lrmin_positions(w)),
        "rlmin": lambda w: len(rlmin_even(w)[0]),
        "even": lambda w: len(rlmin_even(w)[1]),
        "pap": q1(0),
        "impap": q1(1),
        "trace": q1(2),
        "cap": q1(3),
    }


STATISTICS = _stat_fns()
_Q1_ONLY = {"pap", "impap", "trace", "cap"}


_BASIC = ("asc", "des", "plat")
_ALL = tuple(STATISTICS)


def _full_vector(word) -> tuple:
    rec = stat_record(word)
    return tuple(getattr(rec, name) for name in _ALL)


@lru_cache(maxsize=32)
def _table(spec: tuple[int, ...], basic: bool, bound: int) -> Counter:
    if basic:
        return Counter(basic_stats(w) for w in stirling_permutations(spec, bound))
    return Counter(_full_vector(w) for w in stirling_permutations(spec, bound))


@lru_cache(maxsize=256)
def _distribution(spec: tuple[int, ...], names: tuple[str, ...], bound: int) -> Counter:
    if _Q1_ONLY & set(names) and not _is_q1(spec):
        raise ValueError(f"statistics {sorted(_Q1_ONLY & set(names))} need a Q^(1) multiset")
    basic = set(names) <= set(_BASIC)
    order = _BASIC if basic else _ALL
    pos = [order.index(n) for n in names]
    out: Counter = Counter()
    for vec, c in _table(spec, basic, bound).items():
        out[tuple(vec[i] for i in pos)] += c
    return out


def distribution(spec: Sequence[int], names: Sequence[str], bound: int = MAX_LETTERS) -> Counter:
    """Counter of statistic vectors over the full enumeration."""
    names = tuple(names)
    unknown = [s for s in names if s not in STATISTICS]
    if unknown:
        raise ValueError(f"unknown statistics {unknown}")
    return _distribution(tuple(spec), names, bound)


def gen_poly(spec: Sequence[int], stats: Sequence[tuple[str, str]], bound: int = MAX_LETTERS) -> Polynomial:
    """Sum over the Stirling permutations of ``spec`` of prod(var^stat)."""
    stat_names = tuple(s for s, _ in stats)
    var_names = tuple(v for _, v in stats)
    # dedupe statistics so e.g. (plat, x), (plat, y) reuses one computation
    unique = tuple(dict.fromkeys(stat_names))
    dist = distribution(spec, unique, bound)
    pos = [unique.index(s) for s in stat_names]
    counts: Counter = Counter()
    for vec, c in dist.items():
        counts[tuple(vec[i] for i in pos)] += c
    return Polynomial.from_counts(var_names, counts)
