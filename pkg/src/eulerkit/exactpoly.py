"""Exact multivariate polynomials with arbitrary-precision integer coefficients.

Every generating function in the package is a :class:`Polynomial`.  Values are
immutable; arithmetic always returns canonical results (no zero coefficients).

Text format::

    x + 22*x^2 + 58*x^3 + 24*x^4

Terms are ordered by total degree, then by exponent vector (lexicographic over
the polynomial's variables in natural name order, so ``c2 < c10``).
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Union

__all__ = [
    "Monomial",
    "Polynomial",
    "ParseError",
    "var",
    "const",
    "parse_poly",
    "hessenberg_det",
    "real_root_count",
    "squarefree_degree",
]

# A monomial is a tuple of (variable, exponent) pairs sorted by var_key,
# with strictly positive exponents.  The empty tuple is the unit monomial.
Monomial = tuple

_VAR_RE = re.compile(r"[A-Za-z]+[0-9]*\Z")
_VAR_SPLIT = re.compile(r"([A-Za-z]+)([0-9]*)")


class ParseError(ValueError):
    """Malformed polynomial or grammar text."""

    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


@lru_cache(maxsize=None)
def var_key(name: str) -> tuple:
    """Natural sort key for a variable name: letters first, then the numeric suffix."""
    m = _VAR_SPLIT.fullmatch(name)
    if m is None:
        raise ValueError(f"invalid variable name {name!r}")
    letters, digits = m.groups()
    return (letters, int(digits) if digits else -1, name)


def _check_var(name: str) -> str:
    if not isinstance(name, str) or not _VAR_RE.match(name):
        raise ValueError(f"invalid variable name {name!r}")
    return name


def mono_from_dict(exps: Mapping[str, int]) -> Monomial:
    for v, e in exps.items():
        if e < 0:
            raise ValueError(f"negative exponent for {v}")
    return tuple(sorted(((_check_var(v), int(e)) for v, e in exps.items() if e), key=lambda t: var_key(t[0])))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items(), key=lambda t: var_key(t[0])))


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


Scalar = Union[int, "Polynomial"]


class Polynomial:
    """Immutable polynomial: a mapping from monomials to nonzero ints."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        self._terms = {m: int(c) for m, c in (terms or {}).items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "Polynomial":
        # Caller guarantees canonical monomials and no zero coefficients.
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def from_exponents(cls, terms: Iterable[tuple[Mapping[str, int], int]]) -> "Polynomial":
        acc: dict = {}
        for exps, c in terms:
            m = mono_from_dict(exps)
            acc[m] = acc.get(m, 0) + c
        return cls(acc)

    @classmethod
    def from_counts(cls, names: tuple[str, ...], counts: Mapping[tuple, int]) -> "Polynomial":
        """Build sum of count * prod(names[i]^exps[i]) from an exponent-tuple counter.

        Repeated names have their exponents added, which is how composite
        statistics such as ``exc + single`` are expressed.
        """
        acc: dict = {}
        for exps, c in counts.items():
            d: dict[str, int] = {}
            for v, e in zip(names, exps):
                if e:
                    d[v] = d.get(v, 0) + e
            m = mono_from_dict(d)
            acc[m] = acc.get(m, 0) + c
        return cls(acc)

    # -- basic protocol -------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"Polynomial({self.to_text()!r})"

    def __str__(self) -> str:
        return self.to_text()

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int):
            return const(other)
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    def __add__(self, other: Scalar) -> "Polynomial":
        other = self._coerce(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: Scalar) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Scalar) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other: Scalar) -> "Polynomial":
        if isinstance(other, int):
            if other == 0:
                return Polynomial._raw({})
            return Polynomial._raw({m: c * other for m, c in self._terms.items()})
        other = self._coerce(other)
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial._raw({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power")
        result = const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- structure --------------------------------------------------------

    def variables(self) -> list[str]:
        seen = {v for m in self._terms for v, _ in m}
        return sorted(seen, key=var_key)

    def degree(self, v: str | None = None) -> int:
        """Total degree, or degree in ``v``; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        if v is None:
            return max(mono_degree(m) for m in self._terms)
        return max(dict(m).get(v, 0) for m in self._terms)

    def is_homogeneous(self, variables: Iterable[str] | None = None) -> bool:
        vs = None if variables is None else set(variables)
        degs = {sum(e for v, e in m if vs is None or v in vs) for m in self._terms}
        return len(degs) <= 1

    def coeff(self, m: Mapping[str, int] | Monomial) -> int:
        if isinstance(m, Mapping):
            m = mono_from_dict(m)
        return self._terms.get(tuple(m), 0)

    def constant_term(self) -> int:
        return self._terms.get((), 0)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        order = self.variables()
        idx = {v: i for i, v in enumerate(order)}

        def key(item):
            m = item[0]
            vec = [0] * len(order)
            for v, e in m:
                vec[idx[v]] = e
            return (mono_degree(m), vec)

        return sorted(self._terms.items(), key=key)

    # -- calculus and substitution --------------------------------------

    def partial(self, v: str) -> "Polynomial":
        out: dict = {}
        for m, c in self._terms.items():
            for i, (w, e) in enumerate(m):
                if w == v:
                    nm = m[:i] + ((w, e - 1),) + m[i + 1:] if e > 1 else m[:i] + m[i + 1:]
                    out[nm] = out.get(nm, 0) + c * e
                    break
        return Polynomial._raw({m: c for m, c in out.items() if c})

    def subs(self, bindings: Mapping[str, Scalar]) -> "Polynomial":
        """Simultaneous substitution; unbound variables stay fixed."""
        if not bindings:
            return self
        images = {v: Polynomial._coerce(p) for v, p in bindings.items()}
        powers: dict = {}

        def power(v, e):
            key = (v, e)
            if key not in powers:
                powers[key] = images[v] ** e
            return powers[key]

        acc: dict = {}
        for m, c in self._terms.items():
            fixed = tuple((v, e) for v, e in m if v not in images)
            term = Polynomial._raw({fixed: c})
            for v, e in m:
                if v in images:
                    term = term * power(v, e)
                    if not term:
                        break
            for tm, tc in term._terms.items():
                acc[tm] = acc.get(tm, 0) + tc
        return Polynomial._raw({m: c for m, c in acc.items() if c})

    def evaluate(self, point: Mapping[str, Fraction | int]) -> Fraction:
        total = Fraction(0)
        for m, c in self._terms.items():
            t = Fraction(c)
            for v, e in m:
                if v not in point:
                    raise ValueError(f"variable {v} is unbound")
                t *= Fraction(point[v]) ** e
            total += t
        return total

    def divide_by_monomial(self, m: Mapping[str, int]) -> "Polynomial":
        """Exact division by a monomial; raises if some term is not divisible."""
        div = dict(mono_from_dict(m))
        out = {}
        for mono, c in self._terms.items():
            d = dict(mono)
            for v, e in div.items():
                if d.get(v, 0) < e:
                    raise ValueError(f"term {mono} not divisible by {m}")
                d[v] -= e
            out[mono_from_dict(d)] = c
        return Polynomial(out)

    def univariate_coeffs(self, v: str | None = None) -> list[int]:
        """Dense ascending coefficient list of a univariate polynomial."""
        vs = self.variables()
        if len(vs) > 1 or (v is not None and vs and vs != [v]):
            raise ValueError(f"polynomial is not univariate: variables {vs}")
        if not self._terms:
            return []
        out = [0] * (self.degree() + 1)
        for m, c in self._terms.items():
            out[mono_degree(m)] = c
        return out

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], v: str = "x") -> "Polynomial":
        return cls({((v, i),) if i else (): c for i, c in enumerate(coeffs)})

    # -- serialization ----------------------------------------------------

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (m, c) in enumerate(self.sorted_terms()):
            factors = [v if e == 1 else f"{v}^{e}" for v, e in m]
            a = abs(c)
            if not factors:
                body = str(a)
            elif a == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(a)] + factors)
            if i == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def to_json(self) -> list[dict]:
        return [{"coeff": str(c), "exps": dict(m)} for m, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: list[dict] | str) -> "Polynomial":
        if isinstance(data, str):
            data = json.loads(data)
        return cls.from_exponents((t["exps"], int(t["coeff"])) for t in data)

    @classmethod
    def parse(cls, text: str) -> "Polynomial":
        return parse_poly(text)


def var(name: str) -> Polynomial:
    return Polynomial._raw({((_check_var(name), 1),): 1})


def const(c: int) -> Polynomial:
    return Polynomial._raw({(): int(c)} if c else {})


# -- parsing ------------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z]+[0-9]*)|(->|[-+*^();]))")


def tokenize(text: str, offset: int = 0) -> list[tuple[str, str, int]]:
    """Split into (kind, value, position) tokens; kind in {int, var, op, end}."""
    toks = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", offset + pos, text)
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            toks.append(("int", m.group(1), offset + start))
        elif m.group(2) is not None:
            toks.append(("var", m.group(2), offset + start))
        else:
            toks.append(("op", m.group(3), offset + start))
        pos = m.end()
    toks.append(("end", "", offset + n))
    return toks


class _ExprParser:
    """Recursive descent over ``+ - * ^``, integers, variables and parentheses."""

    def __init__(self, toks, text: str):
        self.toks = toks
        self.i = 0
        self.text = text

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def fail(self, msg: str):
        raise ParseError(msg, self.peek()[2], self.text)

    def expr(self) -> Polynomial:
        result = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self) -> Polynomial:
        result = self.unary()
        while self.peek()[:2] == ("op", "*"):
            self.take()
            result = result * self.unary()
        return result

    def unary(self) -> Polynomial:
        if self.peek()[:2] == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek()[:2] == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            kind, value, _ = self.peek()
            if kind != "int":
                self.fail("expected integer exponent")
            self.take()
            return base ** int(value)
        return base

    def atom(self) -> Polynomial:
        kind, value, _ = self.peek()
        if kind == "int":
            self.take()
            return const(int(value))
        if kind == "var":
            self.take()
            return var(value)
        if (kind, value) == ("op", "("):
            self.take()
            inner = self.expr()
            if self.peek()[:2] != ("op", ")"):
                self.fail("expected ')'")
            self.take()
            return inner
        self.fail("expected a number, variable or '('" if kind != "end" else "unexpected end of input")


def parse_expr_tokens(toks, text: str) -> tuple[Polynomial, int]:
    p = _ExprParser(toks, text)
    result = p.expr()
    return result, p.i


def parse_poly(text: str) -> Polynomial:
    """Parse an integer polynomial expression such as ``x + 22*x^2`` or ``(1+p)*x*y``."""
    toks = tokenize(text)
    if toks[0][0] == "end":
        raise ParseError("empty expression", 0, text)
    result, i = parse_expr_tokens(toks, text)
    if toks[i][0] != "end":
        raise ParseError(f"unexpected token {toks[i][1]!r}", toks[i][2], text)
    return result


# -- Hessenberg determinants ------------------------------------------------


def _as_poly(x) -> Polynomial:
    return x if isinstance(x, Polynomial) else const(x)


def hessenberg_det(H) -> Polynomial:
    """Determinant of a lower Hessenberg matrix by the Cahill recursion.

    ``det H_n = h_nn det H_{n-1} + sum_r (-1)^(n-r) h_nr (prod_{j=r}^{n-1} h_{j,j+1}) det H_{r-1}``
    with ``det H_0 = 1``.  Entries may be ints or polynomials.
    """
    n = len(H)
    rows = [[_as_poly(x) for x in row] for row in H]
    for i, row in enumerate(rows):
        if len(row) != n:
            raise ValueError("matrix is not square")
        for j in range(i + 2, n):
            if row[j]:
                raise ValueError(f"entry ({i + 1},{j + 1}) violates the lower Hessenberg zero pattern")
    dets = [const(1)]
    for m in range(1, n + 1):
        d = rows[m - 1][m - 1] * dets[m - 1]
        # prod_{j=r}^{m-1} h_{j,j+1}, grown leftwards from r = m-1
        sup = const(1)
        for r in range(m - 1, 0, -1):
            sup = sup * rows[r - 1][r]
            if not sup:
                break
            h = rows[m - 1][r - 1]
            if h:
                term = h * sup * dets[r - 1]
                d = d + term if (m - r) % 2 == 0 else d - term
        dets.append(d)
    return dets[n]


# -- exact real root counting -------------------------------------------------


def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _divmod(a: list, b: list) -> tuple[list, list]:
    a = [Fraction(x) for x in a]
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = Fraction(b[-1])
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        f = a[-1] / lead
        q[shift] = f
        for i, c in enumerate(b):
            a[shift + i] -= f * c
        a.pop()
        _trim(a)
    return _trim(q), a


def _derivative(p: list) -> list:
    return _trim([i * c for i, c in enumerate(p)][1:])


def _gcd(a: list, b: list) -> list:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        _, r = _divmod(a, b)
        a, b = b, r
    return [Fraction(c) / Fraction(a[-1]) for c in a]


def _squarefree(p: list) -> list:
    g = _gcd(p, _derivative(p))
    q, r = _divmod(p, g)
    assert not r
    return q


def _sign_changes(values: list) -> int:
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_sequence(p: list) -> list[list]:
    seq = [_trim([Fraction(c) for c in p])]
    d = _derivative(seq[0])
    if d:
        seq.append(d)
    while len(seq) > 1 and seq[-1]:
        _, r = _divmod(seq[-2], seq[-1])
        if not r:
            break
        seq.append([-c for c in r])
    return seq


def _univariate(p: Polynomial) -> list[int]:
    if p.is_zero():
        raise ValueError("zero polynomial has infinitely many roots")
    return p.univariate_coeffs()


def squarefree_degree(p: Polynomial) -> int:
    return len(_squarefree(_univariate(p))) - 1


def real_root_count(p: Polynomial) -> int:
    """Number of distinct real roots, by an exact Sturm sequence of the squarefree part."""
    coeffs = _univariate(p)
    if len(coeffs) == 1:
        return 0
    seq = sturm_sequence(_squarefree(coeffs))
    at_pos_inf = [s[-1] for s in seq]
    at_neg_inf = [s[-1] * (-1 if (len(s) - 1) % 2 else 1) for s in seq]
    return _sign_changes(at_neg_inf) - _sign_changes(at_pos_inf)
