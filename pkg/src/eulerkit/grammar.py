"""Chen grammars: substitution rules and the formal derivative they induce.

A grammar maps variables to polynomials.  Its formal derivative ``D_G`` is the
unique derivation (linear, Leibniz) sending a ruled variable to its right side
and every other variable to zero.

>>> G = Grammar.parse("a->a*b; b->a*b")
>>> str(G.iterate(var("a"), 2))
'a*b^2 + a^2*b'
"""

from __future__ import annotations

from typing import Mapping

from .exactpoly import ParseError, Polynomial, const, parse_expr_tokens, tokenize, var, var_key

__all__ = [
    "Grammar",
    "parse_rules",
    "formal_derivative",
    "iterate_derivative",
    "EULERIAN",
    "SECOND_EULERIAN",
    "TYPE_B",
    "TRIVARIATE",
    "SYMMETRIC",
    "SIGNED",
]


class Grammar:
    """An immutable set of substitution rules ``variable -> polynomial``."""

    __slots__ = ("_rules",)

    def __init__(self, rules: Mapping[str, Polynomial | int | str]):
        out = {}
        for v, rhs in rules.items():
            var(v)  # validates the name
            if isinstance(rhs, str):
                rhs = Polynomial.parse(rhs)
            elif isinstance(rhs, int):
                rhs = const(rhs)
            out[v] = rhs
        self._rules = out

    @classmethod
    def parse(cls, text: str) -> "Grammar":
        return parse_rules(text)

    @property
    def rules(self) -> dict[str, Polynomial]:
        return dict(self._rules)

    def __getitem__(self, v: str) -> Polynomial:
        return self._rules.get(v, const(0))

    def __eq__(self, other) -> bool:
        return isinstance(other, Grammar) and self._rules == other._rules

    def __hash__(self) -> int:
        return hash(frozenset(self._rules.items()))

    def __repr__(self) -> str:
        return f"Grammar({str(self)!r})"

    def __str__(self) -> str:
        return "; ".join(f"{v} -> {self._rules[v]}" for v in sorted(self._rules, key=var_key))

    def derive(self, p: Polynomial) -> Polynomial:
        """Apply ``D_G`` once."""
        rules = self._rules
        acc: dict = {}
        for m, c in p.items():
            for i, (v, e) in enumerate(m):
                rhs = rules.get(v)
                if rhs is None or not rhs:
                    continue
                rest = m[:i] + ((v, e - 1),) + m[i + 1:] if e > 1 else m[:i] + m[i + 1:]
                for t, k in (Polynomial._raw({rest: c * e}) * rhs).items():
                    acc[t] = acc.get(t, 0) + k
        return Polynomial._raw({m: c for m, c in acc.items() if c})

    def iterate(self, p: Polynomial, n: int) -> Polynomial:
        if n < 0:
            raise ValueError("n must be nonnegative")
        for _ in range(n):
            p = self.derive(p)
        return p

    def orbit(self, p: Polynomial, n: int) -> list[Polynomial]:
        """``[p, D(p), ..., D^n(p)]``."""
        out = [p]
        for _ in range(n):
            out.append(self.derive(out[-1]))
        return out


def parse_rules(text: str) -> Grammar:
    """Parse ``var -> expr; var -> expr; ...`` (a trailing ``;`` is allowed)."""
    toks = tokenize(text)
    rules: dict[str, Polynomial] = {}
    i = 0
    while toks[i][0] != "end":
        kind, name, pos = toks[i]
        if kind != "var":
            raise ParseError("expected a variable on the left of '->'", pos, text)
        if toks[i + 1][:2] != ("op", "->"):
            raise ParseError("expected '->'", toks[i + 1][2], text)
        if name in rules:
            raise ParseError(f"duplicate rule for {name!r}", pos, text)
        rhs, consumed = parse_expr_tokens(toks[i + 2:], text)
        rules[name] = rhs
        i += 2 + consumed
        if toks[i][:2] == ("op", ";"):
            i += 1
        elif toks[i][0] != "end":
            raise ParseError(f"unexpected token {toks[i][1]!r}", toks[i][2], text)
    if not rules:
        raise ParseError("no rules given", 0, text)
    return Grammar(rules)


def formal_derivative(G: Grammar, p: Polynomial) -> Polynomial:
    return G.derive(p)


def iterate_derivative(G: Grammar, p: Polynomial, n: int) -> Polynomial:
    return G.iterate(p, n)


# Grammars that recur throughout the package.
EULERIAN = Grammar({"a": "a*b", "b": "a*b"})
SECOND_EULERIAN = Grammar({"a": "a*b^2", "b": "a*b^2"})
TYPE_B = Grammar({"a": "a*b^2", "b": "a^2*b"})
TRIVARIATE = Grammar({"x": "x*y*z", "y": "x*y*z", "z": "x*y*z"})
SYMMETRIC = Grammar({"w": "v*w", "u": "3*w", "v": "2*u*w"})
SIGNED = Grammar(
    {
        "I": "q*I*(t+s*p)",
        "s": "(1+p)*x*y",
        "t": "(1+p)*x*y",
        "x": "(1+p)*x*y",
        "y": "(1+p)*x*y",
    }
)
