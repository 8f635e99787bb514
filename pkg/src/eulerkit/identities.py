"""Registry of exhaustive identity checks.

Each check compares two or more independently computed sides of an identity
up to a bound ``max_n`` and raises :class:`CheckFailure` with a witness on the
first disagreement.  :func:`run_check` wraps a check into a :class:`CheckReport`.
"""

from __future__ import annotations

import itertools
import json
import math
import random
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable, Mapping

from .exactpoly import Polynomial, const, hessenberg_det, parse_poly, real_root_count, squarefree_degree, var
from .grammar import EULERIAN, SECOND_EULERIAN, SIGNED, TRIVARIATE, TYPE_B, Grammar
from .oracles import double_factorial, eulerian_number, eulerian_poly, falling, laplace_det, stirling1, stirling2
from .permstats import distribution, gen_poly, q1_spec, q_spec, stirling_permutations
from .sequences import e_poly, gamma_poly, second_eulerian, series_reduced, trivariate, type_b
from .signedperm import apq_poly, signed_gen_poly, signed_permutations
from .tableaux import descent_set, g_index, row_profile, standard_tableaux
from .weyl import (
    a_table,
    c_binding,
    c_name,
    cd_coefficients,
    cd_expand,
    f_name,
    fiber_counts,
    ordered_weak_partitions,
    owp_weight,
    phi,
    sorts_to_standard,
    specialize,
    syt_expansion,
    syt_weight,
)

__all__ = ["CheckReport", "CheckFailure", "REGISTRY", "run_check", "run_all", "hessenberg_matrix"]


class CheckFailure(AssertionError):
    def __init__(self, witness: str):
        self.witness = witness
        super().__init__(witness)


@dataclass
class CheckReport:
    name: str
    params: dict
    passed: bool
    witness: str | None = None
    elapsed_ms: float = 0.0
    status: str = field(default="")

    def __post_init__(self):
        if not self.status:
            self.status = "passed" if self.passed else "failed"
        if not self.passed and self.witness is None:
            raise ValueError("a failed report needs a witness")

    def to_json(self, timing: bool = True) -> str:
        d = asdict(self)
        d["elapsed_ms"] = round(self.elapsed_ms, 3)
        if not timing:
            d.pop("elapsed_ms")
        return json.dumps(d, sort_keys=False)


@dataclass(frozen=True)
class Check:
    name: str
    fn: Callable[[int, random.Random], None]
    default_n: int
    claim: str


REGISTRY: dict[str, Check] = {}


def check(name: str, default_n: int, claim: str):
    def deco(fn):
        REGISTRY[name] = Check(name, fn, default_n, claim)
        return fn

    return deco


def expect(lhs, rhs, what: str) -> None:
    if lhs != rhs:
        raise CheckFailure(f"{what}: {lhs} != {rhs}")


def run_check(name: str, max_n: int | None = None, seed: int | None = None) -> CheckReport:
    try:
        entry = REGISTRY[name]
    except KeyError:
        raise KeyError(f"unknown check {name!r}") from None
    n = entry.default_n if max_n is None else max_n
    params = {"max_n": n, "seed": seed}
    rng = random.Random(0 if seed is None else seed)
    start = time.perf_counter()
    try:
        entry.fn(n, rng)
        witness, passed = None, True
    except CheckFailure as exc:
        witness, passed = exc.witness, False
    elapsed = (time.perf_counter() - start) * 1000
    return CheckReport(name, params, passed, witness, elapsed)


def _run_one(args):
    return run_check(*args)


def run_all(
    max_n_overrides: Mapping[str, int] | None = None,
    fail_fast: bool = False,
    seed: int | None = None,
    jobs: int = 1,
    names: Iterable[str] | None = None,
) -> list[CheckReport]:
    """Run every registered check (or ``names``) at its default bound unless overridden."""
    overrides = dict(max_n_overrides or {})
    reports = [
        CheckReport(k, {"max_n": v}, False, "unknown check name", status="skipped-unknown")
        for k, v in overrides.items()
        if k not in REGISTRY
    ]
    selected = list(REGISTRY) if names is None else list(names)
    tasks = [(name, overrides.get(name), seed) for name in selected]
    if jobs > 1 and not fail_fast:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports.extend(pool.map(_run_one, tasks))
        return reports
    for t in tasks:
        r = _run_one(t)
        reports.append(r)
        if fail_fast and not r.passed:
            break
    return reports


# -- shared helpers -------------------------------------------------------------

x, y, z = var("x"), var("y"), var("z")


def C(n: int) -> Polynomial:
    return second_eulerian(n)


def A(n: int) -> Polynomial:
    return eulerian_poly(n)


def homogenize(p: Polynomial, a: str, b: str, degree: int, scale: int = 1, shift: int = 0) -> Polynomial:
    """``sum_k p_k a^(scale*k+shift) b^(degree-scale*k-shift)`` for univariate ``p`` in x."""
    terms = []
    for k, c in enumerate(p.univariate_coeffs()):
        if c:
            e = scale * k + shift
            terms.append(({a: e, b: degree - e}, c))
    return Polynomial.from_exponents(terms)


def brenti_b(n: int) -> Polynomial:
    return signed_gen_poly(n, [("exc", "x"), ("single", "x")])


SIX_STIRLING = [("pap", "x"), ("cap", "y"), ("impap", "s"), ("bk2", "t"), ("even", "p"), ("trace", "q")]
SIX_SIGNED = [("exc", "x"), ("aexc", "y"), ("single", "s"), ("fix", "t"), ("neg", "p"), ("cyc", "q")]


def six_stirling(n: int) -> Polynomial:
    return gen_poly(q1_spec(n + 1), SIX_STIRLING)


def six_signed(n: int) -> Polynomial:
    return signed_gen_poly(n, SIX_SIGNED)


def trivariate_enum(n: int) -> Polynomial:
    if n == 0:
        return x
    return gen_poly(q_spec(n), [("asc", "x"), ("des", "y"), ("plat", "z")])


def dumont_operator(p: Polynomial) -> Polynomial:
    return x * y * z * (p.partial("x") + p.partial("y") + p.partial("z"))


def hessenberg_matrix(n: int) -> list[list[Polynomial]]:
    """The order-n lower Hessenberg matrix whose determinant is C_n(x)."""
    H = [[const(0)] * n for _ in range(n)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if j == i + 1:
                H[i - 1][j - 1] = const(-1)
            elif j == i:
                H[i - 1][j - 1] = i * x
            elif j < i:
                H[i - 1][j - 1] = math.comb(i, j - 1) * C(i - j)
    return H


def series_coefficients(n: int, second_order: bool, length: int) -> list[int]:
    """First ``length`` coefficients of (1-x)^(n+1) sum k^n x^k, or of
    (1-x)^(2n+1) sum S(n+k,k) x^k."""
    power = 2 * n + 1 if second_order else n + 1
    weights = [math.comb(power, i) * (-1) ** i for i in range(power + 1)]
    series = [stirling2(n + k, k) if second_order else k**n for k in range(length)]
    return [sum(weights[i] * series[j - i] for i in range(min(j, power) + 1)) for j in range(length)]


def q1_filtered(n: int, names: tuple[str, ...], keep: Callable[[dict], bool], var_stat: str) -> Polynomial:
    """sum over Q^(1)_{n+1} restricted by ``keep`` of x^var_stat."""
    out: Counter = Counter()
    for vec, c in distribution(q1_spec(n + 1), names).items():
        d = dict(zip(names, vec))
        if keep(d):
            out[(d[var_stat],)] += c
    return Polynomial.from_counts(("x",), out)


# -- section: second-order Eulerian polynomials ---------------------------------


@check("series-definitions", 8, "A_n and C_n from their defining power series")
def _series_definitions(max_n, rng):
    for n in range(max_n + 1):
        a = series_coefficients(n, False, n + 6)
        expect(Polynomial.from_coeffs(a), A(n), f"(xD)^n 1/(1-x) numerator, n={n}")
        c = series_coefficients(n, True, 2 * n + 4)
        expect(Polynomial.from_coeffs(c), C(n), f"second-order series numerator, n={n}")


@check("cnx-recurrence", 10, "C_{n+1} = (2n+1)xC_n + x(1-x)C_n'")
def _cnx_recurrence(max_n, rng):
    for n in range(max_n + 1):
        c = series_coefficients(n, True, 2 * n + 4)
        expect(C(n), Polynomial.from_coeffs(c), f"C_{n} recurrence vs series")
    for n in range(1, min(max_n, 7) + 1):
        for stat in ("des", "asc", "plat"):
            expect(gen_poly(q_spec(n), [(stat, "x")]), C(n), f"C_{n} vs {stat} over Q_{n}")


@check("lemma-convolution", 10, "C_n = nxC_{n-1} + sum_r binom(n,n-r+1) C_{n-r} C_{r-1}")
def _lemma_convolution(max_n, rng):
    for n in range(1, max_n + 1):
        rhs = n * x * C(n - 1)
        for r in range(1, n):
            rhs = rhs + math.comb(n, n - r + 1) * C(n - r) * C(r - 1)
        expect(C(n), rhs, f"convolution n={n}")
        df = n * double_factorial(2 * n - 3) + sum(
            math.comb(n, n - r + 1) * double_factorial(2 * n - 2 * r - 1) * double_factorial(2 * r - 3)
            for r in range(1, n)
        )
        expect(double_factorial(2 * n - 1), df, f"x=1 specialization n={n}")


@check("double-factorial", 10, "C_n(1) = #Q_n = (2n-1)!!")
def _double_factorial(max_n, rng):
    for n in range(max_n + 1):
        expect(C(n).evaluate({"x": 1}), double_factorial(2 * n - 1), f"C_{n}(1)")
    for n in range(min(max_n, 7) + 1):
        expect(sum(1 for _ in stirling_permutations(q_spec(n))), double_factorial(2 * n - 1), f"#Q_{n}")


@check("gessel-convolution", 10, "C_{n+1} = x sum binom C_k C_{n-k} + sum binom (sum binom C_j C_{k-j}) C_{n-k}")
def _gessel(max_n, rng):
    def square(k):
        return sum((math.comb(k, j) * C(j) * C(k - j) for j in range(k + 1)), const(0))

    for n in range(max_n):
        rhs = x * square(n)
        for k in range(n):
            rhs = rhs + math.comb(n, k) * square(k) * C(n - k)
        expect(C(n + 1), rhs, f"Gessel convolution n={n}")


@check("series-reduced-trees", 8, "a_n = 2^n C_n(1/2) = 1, 4, 26, 236, 2752 (n=1..5) and its recurrence")
def _series_reduced(max_n, rng):
    a = [series_reduced(n) for n in range(max(max_n, 5) + 1)]
    expect(a[1:6], [1, 4, 26, 236, 2752], "first values")
    expect(a[0], 1, "a_0")
    for n in range(2, max_n + 1):
        rhs = n * a[n - 1] + 2 * sum(math.comb(n, n - r + 1) * a[n - r] * a[r - 1] for r in range(1, n))
        expect(a[n], rhs, f"a_{n} recurrence")


@check("conv-realroots", 8, "sum_k binom(n,k) C_k C_{n-k-1} has only real zeros")
def _conv_realroots(max_n, rng):
    for n in range(1, max_n + 1):
        P = sum((math.comb(n, k) * C(k) * C(n - k - 1) for k in range(n)), const(0))
        prev = C(n - 1)
        expect(P, (n + (n - 1) * x) * prev + x * (1 - x) * prev.partial("x"), f"closed form n={n}")
        expect(real_root_count(P), squarefree_degree(P), f"Sturm count n={n}")
        expect(real_root_count(C(n)), C(n).degree(), f"C_{n} real and simple zeros")


@check("cahill", 5, "Hessenberg recursion equals cofactor expansion")
def _cahill(max_n, rng):
    def entry(i, j, poly):
        if j > i + 1:
            return const(0)
        if not poly:
            return const(rng.randint(-5, 5))
        return Polynomial.from_coeffs([rng.randint(-3, 3) for _ in range(rng.randint(1, 3))])

    for trial in range(40):
        for n in range(1, max_n + 1):
            H = [[entry(i, j, trial % 2) for j in range(n)] for i in range(n)]
            expect(hessenberg_det(H), laplace_det(H), f"trial {trial}, n={n}, H={[[str(e) for e in r] for r in H]}")


@check("hessenberg", 8, "C_n(x) as a lower Hessenberg determinant")
def _hessenberg(max_n, rng):
    for n in range(1, max_n + 1):
        expect(hessenberg_det(hessenberg_matrix(n)), C(n), f"det H_{n}")
    if max_n >= 4:
        reference = [
            ["x", "-1", "0", "0"],
            ["x", "2*x", "-1", "0"],
            ["x + 2*x^2", "3*x", "3*x", "-1"],
            ["x + 8*x^2 + 6*x^3", "4*x + 8*x^2", "6*x", "4*x"],
        ]
        M = [[parse_poly(e) for e in row] for row in reference]
        expect(M, hessenberg_matrix(4), "reference 4x4 matrix")
        expect(str(hessenberg_det(M)), "x + 22*x^2 + 58*x^3 + 24*x^4", "C_4 golden")


# -- section: grammars and trivariate polynomials --------------------------------

TRIVARIATE_GOLDENS = [
    "x",
    "x*y*z",
    "x*y*z*(y*z + x*y + x*z)",
    "x*y*z*(x^2*y^2 + x^2*z^2 + y^2*z^2 + 4*x*y^2*z + 4*x^2*y*z + 4*x*y*z^2)",
]


@check("dumont-symmetry", 6, "C_{n+1}(x,y,z) = xyz(dx+dy+dz) C_n(x,y,z); symmetric in x, y, z")
def _dumont(max_n, rng):
    p = x
    for n, g in enumerate(TRIVARIATE_GOLDENS):
        if n <= max_n:
            expect(trivariate_enum(n), parse_poly(g), f"reference C_{n}(x,y,z)")
    for n in range(max_n + 1):
        expect(p, trivariate_enum(n), f"Dumont operator vs Q_{n} enumeration")
        if n >= 1:
            for perm in itertools.permutations("xyz"):
                swapped = p.subs({"x": var(perm[0]), "y": var(perm[1]), "z": var(perm[2])})
                expect(swapped, p, f"symmetry {perm} n={n}")
        p = dumont_operator(p)


@check("trivariate-grammar", 6, "D_G^n(x) = D_G^n(y) = D_G^n(z) = C_n(x,y,z)")
def _trivariate_grammar(max_n, rng):
    for n in range(max_n + 1):
        enum = trivariate_enum(n)
        if n >= 1:
            for v in "xyz":
                expect(TRIVARIATE.iterate(var(v), n), enum, f"D^{n}({v})")
        expect(trivariate(n), enum, f"C_{n}(x,y,z)")
        expect(enum.is_homogeneous() and enum.degree() == 2 * n + 1, True, f"degree 2n+1 n={n}")


@check("gamma-extraction", 7, "C_n(x,y,z) = D_H^{n-1}(w), support i+2j+3k = 2n+1")
def _gamma(max_n, rng):
    sym = {"u": x + y + z, "v": x * y + y * z + z * x, "w": x * y * z}
    for n in range(1, max_n + 1):
        g = gamma_poly(n)
        for m, c in g.items():
            d = dict(m)
            expect(d.get("u", 0) + 2 * d.get("v", 0) + 3 * d.get("w", 0), 2 * n + 1, f"support of {m} n={n}")
            expect(c > 0, True, f"gamma coefficient sign {m} n={n}")
        expect(g.subs(sym), TRIVARIATE.iterate(x, n), f"substitution n={n}")
    for v, img in (("u", "3*w"), ("v", "2*u*w"), ("w", "v*w")):
        expect(TRIVARIATE.derive(sym[v]), parse_poly(img).subs(sym), f"change of grammar D({v})")


@check("e-grammar", 6, "D_G^n(yz) = sum over Q^(1)_{n+1} of x^plat y^des z^asc")
def _e_grammar(max_n, rng):
    for n in range(max_n + 1):
        enum = gen_poly(q1_spec(n + 1), [("plat", "x"), ("des", "y"), ("asc", "z")])
        expect(TRIVARIATE.iterate(y * z, n), enum, f"D^{n}(yz)")
    if max_n >= 2:
        expect(
            TRIVARIATE.iterate(y * z, 2),
            parse_poly("x^2*y^3*z+4*x^2*y^2*z^2+x*y^3*z^2+x^2*y*z^3+x*y^2*z^3"),
            "reference D^2(yz)",
        )


def _e_from_recurrence(n_max: int) -> list[dict]:
    """E_{n,i,j} tables for n = 1..n_max from the coefficient recurrence."""
    tables = [None, {(0, 1): 1}]
    for n in range(1, n_max):
        prev = tables[n]
        nxt: dict = {}
        for i in range(2 * n + 3):
            for j in range(2 * n + 3):
                v = (
                    i * prev.get((i, j - 1), 0)
                    + j * prev.get((i - 1, j), 0)
                    + (2 * n - i - j + 2) * prev.get((i - 1, j - 1), 0)
                )
                if v:
                    nxt[(i, j)] = v
        tables.append(nxt)
    return tables


@check("e-recurrence", 6, "E_{n+1,i,j} = iE_{n,i,j-1} + jE_{n,i-1,j} + (2n-i-j+2)E_{n,i-1,j-1}")
def _e_recurrence(max_n, rng):
    tables = _e_from_recurrence(max_n + 1)
    for n in range(1, max_n + 2):
        poly = Polynomial.from_exponents(({"x": i, "y": j, "z": 2 * n - i - j}, c) for (i, j), c in tables[n].items())
        expect(poly, e_poly(n), f"E_{n} from coefficient recurrence")
        if n >= 2:
            expect(dumont_operator(e_poly(n - 1)), e_poly(n), f"E_{n} = xyz(dx+dy+dz)E_{n - 1}")


@check("e-count", 6, "#Q^(1)_{n+1} = E_{n+1}(1,1,1) = (2n)!! = #S_n^B")
def _e_count(max_n, rng):
    for n in range(max_n + 1):
        want = double_factorial(2 * n)
        expect(sum(1 for _ in stirling_permutations(q1_spec(n + 1))), want, f"#Q^(1)_{n + 1}")
        expect(e_poly(n + 1).evaluate({"x": 1, "y": 1, "z": 1}), want, f"E_{n + 1}(1,1,1)")
        expect(sum(1 for _ in signed_permutations(n)), want, f"#S_{n}^B")


@check("cxyz-convolution", 6, "C_{n+1}(x,y,z) = sum_k binom(n,k) C_k(x,y,z) E_{n-k+1}(x,y,z)")
def _cxyz(max_n, rng):
    for n in range(max_n + 1):
        rhs = sum((math.comb(n, k) * trivariate_enum(k) * e_poly(n - k + 1) for k in range(n + 1)), const(0))
        expect(trivariate(n + 1), rhs, f"n={n}")
        leib = sum(
            (math.comb(n, k) * TRIVARIATE.iterate(x, k) * TRIVARIATE.iterate(y * z, n - k) for k in range(n + 1)),
            const(0),
        )
        expect(TRIVARIATE.iterate(x * y * z, n), leib, f"Leibniz n={n}")


# -- section: signed permutations and restricted Stirling permutations ---------


@check("mw-convolutions", 6, "2^n A_n = sum binom W_i W_{n-i};  B_n = sum binom M_i W_{n-i}")
def _mw(max_n, rng):
    M = [gen_poly(q_spec(i), [("ap", "x")]) for i in range(max_n + 1)]
    W = [gen_poly(q_spec(i), [("lap", "x")]) for i in range(max_n + 1)]
    for n in range(max_n + 1):
        ww = sum((math.comb(n, i) * W[i] * W[n - i] for i in range(n + 1)), const(0))
        expect(ww, 2**n * A(n), f"W convolution n={n}")
        mw = sum((math.comb(n, i) * M[i] * W[n - i] for i in range(n + 1)), const(0))
        expect(mw, brenti_b(n), f"M/W convolution n={n}")


@check("brenti", 6, "B_n(x) = sum x^(exc+single) = sum x^(exc+fix)")
def _brenti(max_n, rng):
    for n in range(max_n + 1):
        b = brenti_b(n)
        expect(signed_gen_poly(n, [("exc", "x"), ("fix", "x")]), b, f"exc+fix n={n}")
        expect(type_b(n), b, f"grammar a->ab^2, b->a^2b n={n}")


@check("ma24-grammar", 6, "D_G^n(I) = I * six-variable signed polynomial")
def _signed_grammar(max_n, rng):
    I = var("I")
    p = I
    for n in range(max_n + 1):
        expect(p.divide_by_monomial({"I": 1}), six_signed(n), f"n={n}")
        p = SIGNED.derive(p)
    expect(SIGNED.derive(I), parse_poly("q*I*(t+s*p)"), "D(I)")


@check("bnqn", 6, "six-variable polynomial over Q^(1)_{n+1} equals the one over S_n^B")
def _bnqn(max_n, rng):
    for n in range(max_n + 1):
        expect(six_stirling(n), six_signed(n), f"n={n}")
    if max_n >= 2:
        expect(six_stirling(2), parse_poly("x*y*q*(1+p)^2 + q^2*(t+s*p)^2"), "n=2 value")


@check("cor-bpq", 6, "B_n(x,p,q) = sum over Q^(1)_{n+1} of x^ap p^even q^tr")
def _cor_bpq(max_n, rng):
    for n in range(max_n + 1):
        lhs = signed_gen_poly(n, [("exc", "x"), ("single", "x"), ("neg", "p"), ("cyc", "q")])
        rhs = gen_poly(q1_spec(n + 1), [("ap", "x"), ("even", "p"), ("trace", "q")])
        expect(lhs, rhs, f"n={n}")


@check("derangements", 6, "d_n and d_n^B as restricted sums of x^pap")
def _derangements(max_n, rng):
    names = ("pap", "bk2", "even")
    for n in range(max_n + 1):
        d_a = signed_gen_poly(n, [("exc", "x")], where={"fix": 0}, negatives=False)
        d_b = signed_gen_poly(n, [("exc", "x")], where={"fix": 0})
        expect(q1_filtered(n, names, lambda d: d["bk2"] == 0 and d["even"] == 0, "pap"), d_a, f"d_{n}")
        expect(q1_filtered(n, names, lambda d: d["bk2"] == 0, "pap"), d_b, f"d_{n}^B")


def corl2_rhs(n: int) -> Polynomial:
    """(1+p)^n y^n A_n(x/y, (t+sp)/(y+py), q), expanded term by term."""
    tsp = var("t") + var("s") * var("p")
    onep = 1 + var("p")
    total = const(0)
    for m, c in apq_poly(n).items():
        d = dict(m)
        a, b, k = d.get("x", 0), d.get("p", 0), d.get("q", 0)
        total = total + c * x**a * tsp**b * var("q") ** k * y ** (n - a - b) * onep ** (n - b)
    return total


@check("corl2", 6, "six-variable polynomial = (1+p)^n y^n A_n(x/y, (t+sp)/(y+py), q)")
def _corl2(max_n, rng):
    for n in range(max_n + 1):
        expect(six_stirling(n), corl2_rhs(n), f"n={n}")
    for n in range(max_n + 1):
        # the special case quoted in the introduction
        lhs = gen_poly(q1_spec(n + 1), [("impap", "s"), ("bk2", "t"), ("trace", "q")])
        rhs = const(0)
        for m, c in apq_poly(n).items():
            d = dict(m)
            rhs = rhs + c * 2 ** (n - d.get("p", 0)) * (var("t") + var("s")) ** d.get("p", 0) * var("q") ** d.get("q", 0)
        expect(lhs, rhs, f"(t+s)/2 specialization n={n}")


# -- section: (cD)^n, box sorting and tableaux --------------------------------


@check("xd-normal-order", 8, "(xD)^n = sum_k S(n,k) x^k D^k")
def _xd(max_n, rng):
    for n in range(max_n + 1):
        binding = c_binding(n, x, lambda i: 1 if i == 1 else 0)
        lhs = specialize(cd_expand(n, "f"), binding)
        rhs = sum((stirling2(n, k) * x**k * var(f_name(k)) for k in range(n + 1)), const(0))
        expect(lhs, rhs, f"n={n}")
    for n in range(max_n + 1):
        for m in range(max_n + 1):
            expect(sum(stirling2(n, k) * falling(m, k) for k in range(n + 1)), m**n, f"action on x^{m}, n={n}")


@check("exd-normal-order", 8, "(e^x D)^n = e^{nx} sum_k c(n,k) D^k")
def _exd(max_n, rng):
    E = var("E")
    for n in range(1, max_n + 1):
        table = a_table(n)
        for k in range(1, n + 1):
            total = sum(a for lam, a in table.items() if sum(lam) == n - k)
            expect(total, stirling1(n, k), f"sum a(n,lambda), n={n} k={k}")
        lhs = specialize(cd_expand(n, "f"), c_binding(n, E, lambda i: E))
        rhs = sum((stirling1(n, k) * E**n * var(f_name(k)) for k in range(1, n + 1)), const(0))
        expect(lhs, rhs, f"specialization c_i -> e^x, n={n}")


@check("owp-expansion", 8, "(cD)^n c = sum over OWP_n of w(p)")
def _owp(max_n, rng):
    for n in range(max_n + 1):
        total: Counter = Counter()
        count = 0
        for p in ordered_weak_partitions(n):
            count += 1
            for m, c in owp_weight(p).items():
                total[m] += c
        expect(count, math.factorial(n), f"#OWP_{n}")
        expect(Polynomial(total), cd_expand(n, "c"), f"n={n}")


@check("fnk-shape", 10, "F_{n,k} = sum_{lambda |- n-k} a(n,lambda) c^(n-len) c_lambda with a > 0")
def _fnk(max_n, rng):
    for n in range(1, max_n + 1):
        try:
            table = a_table(n)
        except ValueError as exc:
            raise CheckFailure(f"n={n}: {exc}") from None
        expect(all(a > 0 for a in table.values()), True, f"positivity n={n}")
        F = cd_coefficients(n)
        expect(F[n], var("c") ** n, f"F_{n},{n}")
        for k, poly in F.items():
            allowed = {c_name(i) for i in range(n - k + 1)}
            expect(set(poly.variables()) <= allowed, True, f"F_{n},{k} depends on c..c_{n - k}")
        for m, _ in cd_expand(n, "f").items():
            d = dict(m)
            fs = [v for v in d if v.startswith("f")]
            cdeg = sum(e for v, e in d.items() if v.startswith("c"))
            expect((len(fs), d[fs[0]] if fs else 0, cdeg), (1, 1, n), f"monomial shape {m} n={n}")


@check("comtet-numbers", 8, "S(n,k) = a(n,1^(n-k)), c(n,k) = sum a, Eulerian(n,k) = sum over len = n-k")
def _comtet(max_n, rng):
    for n in range(1, max_n + 1):
        table = a_table(n)
        for k in range(1, n + 1):
            expect(table.get((1,) * (n - k), 0), stirling2(n, k), f"Stirling2 n={n} k={k}")
            expect(sum(a for lam, a in table.items() if sum(lam) == n - k), stirling1(n, k), f"Stirling1 n={n} k={k}")
        for k in range(n + 1):
            expect(
                sum(a for lam, a in table.items() if len(lam) == n - k),
                eulerian_number(n, k),
                f"Eulerian n={n} k={k}",
            )


@check("phi-weight", 8, "w(p) = w(phi(p)), phi(p) is standard, and (cD)^n c = sum_T (prod sigma_i) w(T)")
def _phi_weight(max_n, rng):
    for n in range(max_n + 1):
        for p in ordered_weak_partitions(n):
            if not sorts_to_standard(p):
                raise CheckFailure(f"phi({p}) is not standard")
            expect(owp_weight(p), syt_weight(phi(p)) if n else owp_weight(p), f"weight of {p}")
        expect(syt_expansion(n), cd_expand(n, "c"), f"(cD)^n c tableau expansion n={n}")


@check("g-index-product", 7, "#phi^{-1}(T) = prod sigma_i(T)")
def _g_index(max_n, rng):
    for n in range(1, max_n + 1):
        fibers = fiber_counts(n)
        total = 0
        for T in standard_tableaux(n):
            sigma, prod = g_index(T)
            expect(fibers[T], prod, f"T={T.to_json()}")
            expect(sigma[0] == 1 and min(sigma) >= 1, True, f"sigma range T={T.to_json()}")
            total += prod
        expect(total, math.factorial(n), f"sum of g-indices n={n}")
        expect(cd_expand(n, "c"), syt_expansion(n), f"(cD)^n c tableau expansion n={n}")


def _syt_sum(n: int, weight: Callable) -> Polynomial:
    total = const(0)
    for T in standard_tableaux(n):
        total = total + g_index(T)[1] * weight(T)
    return total


def _descent_enum(n: int) -> Polynomial:
    counts: Counter = Counter()
    for pi in itertools.permutations(range(1, n + 1)):
        counts[(sum(1 for a, b in zip(pi, pi[1:]) if a > b) + 1,)] += 1
    return Polynomial.from_counts(("x",), counts)


@check("syt-eulerian", 8, "A_n(x) = sum_T (prod sigma_i) x^len(T)")
def _syt_eulerian(max_n, rng):
    for n in range(1, max_n + 1):
        expect(_syt_sum(n, lambda T: x**T.length), A(n), f"tableau sum n={n}")
        expect(specialize(cd_expand(n, "c"), c_binding(n, 1, lambda i: x)), A(n), f"c=1, c_i=x n={n}")
        expect(_descent_enum(n), A(n), f"des+1 over S_{n}")


@check("syt-c-via-a", 8, "C_n(x) = sum_T (prod sigma_i) prod A_i(x)^w_i")
def _syt_c_via_a(max_n, rng):
    def weight(T):
        w, _ = row_profile(T)
        out = const(1)
        for i, e in enumerate(w, start=1):
            if e:
                out = out * A(i) ** e
        return out

    for n in range(1, max_n + 1):
        expect(_syt_sum(n, weight), C(n), f"n={n}")
        expect(specialize(cd_expand(n, "c"), c_binding(n, 1, A)), C(n), f"specialization n={n}")
    if max_n >= 3:
        table = {
            ((1, 2, 3),): "x + 4*x^2 + x^3",
            ((1, 3), (2,)): "2*x*(x + x^2)",
            ((1, 2), (3,)): "2*x*(x + x^2)",
            ((1,), (2,), (3,)): "x^3",
        }
        for T in standard_tableaux(3):
            expect(g_index(T)[1] * weight(T), parse_poly(table[T.rows]), f"enumerator of {T.to_json()}")


@check("syt-c-factorial", 8, "C_n(x) = sum_T (prod sigma_i i!^w_i) x^(n+1-len)")
def _syt_c_factorial(max_n, rng):
    def weight(T):
        w, length = row_profile(T)
        k = 1
        for i, e in enumerate(w, start=1):
            k *= math.factorial(i) ** e
        return k * x ** (T.n + 1 - length)

    for n in range(1, max_n + 1):
        expect(_syt_sum(n, weight), C(n), f"n={n}")
        binding = c_binding(n, x, lambda i: math.factorial(i) * y ** (i + 1))
        expect(specialize(cd_expand(n, "c"), binding).subs({"y": 1}), C(n), f"specialization n={n}")


@check("syt-trivariate", 6, "C_{n+1}(x,y,z) over SYT(n;3) with c_1 = xy+yz+xz, c_2 = 2x+2y+2z, c_3 = 6")
def _syt_trivariate(max_n, rng):
    images = {1: x * y + y * z + x * z, 2: 2 * x + 2 * y + 2 * z, 3: const(6)}

    def weight(T):
        w, length = row_profile(T)
        out = (x * y * z) ** (T.n + 1 - length)
        for i, e in enumerate(w, start=1):
            if e:
                out = out * images.get(i, const(0)) ** e
        return out

    for n in range(1, max_n + 1):
        restricted = const(0)
        for T in standard_tableaux(n, max_columns=3):
            restricted = restricted + g_index(T)[1] * weight(T)
        expect(restricted, trivariate(n + 1), f"SYT(n;3) sum n={n}")
        expect(_syt_sum(n, weight), restricted, f"columns >= 4 vanish n={n}")
        binding = c_binding(n, x * y * z, lambda i: images.get(i, const(0)))
        expect(specialize(cd_expand(n, "c"), binding), trivariate_enum(n + 1), f"specialization n={n}")


@check("syt-typeb", 6, "x B_n(x^2) = sum_T (prod sigma_i c_i^w_i) x^(n+1-len), c_{2i-1} = 4^(i-1)(1+x^2), c_{2i} = 4^i x")
def _syt_typeb(max_n, rng):
    def image(i):
        if i % 2:
            return 4 ** ((i - 1) // 2) * (1 + x * x)
        return 4 ** (i // 2) * x

    def weight(T):
        w, length = row_profile(T)
        out = x ** (T.n + 1 - length)
        for i, e in enumerate(w, start=1):
            if e:
                out = out * image(i) ** e
        return out

    for n in range(1, max_n + 1):
        target = x * brenti_b(n).subs({"x": x * x})
        expect(_syt_sum(n, weight), target, f"n={n}")
        expect(specialize(cd_expand(n, "c"), c_binding(n, x, image)), target, f"specialization n={n}")


@check("rs-eulerian", 8, "A_n(x) = sum_lambda f^lambda sum_{T in SYT_lambda} x^(des(T)+1)")
def _rs(max_n, rng):
    for n in range(1, max_n + 1):
        by_shape: dict = {}
        for T in standard_tableaux(n):
            by_shape.setdefault(T.shape, []).append(T)
        total = const(0)
        for shape, ts in by_shape.items():
            inner = sum((x ** (len(descent_set(T)) + 1) for T in ts), const(0))
            total = total + len(ts) * inner
        expect(total, A(n), f"n={n}")


@check("basic-equidistribution", 7, "asc, des and plat are equidistributed over Q_n")
def _equidistribution(max_n, rng):
    for n in range(1, max_n + 1):
        dist = distribution(q_spec(n), ("asc", "des", "plat"))
        marg = [Counter() for _ in range(3)]
        for vec, c in dist.items():
            for i in range(3):
                marg[i][vec[i]] += c
        expect(marg[0], marg[1], f"asc vs des n={n}")
        expect(marg[1], marg[2], f"des vs plat n={n}")
        for vec, c in dist.items():
            expect(sum(vec), 2 * n + 1, f"asc+des+plat n={n}")


@check("grammar-examples", 8, "Grammars for A_n, C_n, B_n and the operator forms behind the tableau expansions")
def _grammar_examples(max_n, rng):
    a, b = var("a"), var("b")
    for n in range(1, max_n + 1):
        hA = homogenize(A(n), "a", "b", n + 1)
        expect(EULERIAN.iterate(a, n), hA, f"D^{n}(a) under a->ab, b->ab")
        expect(EULERIAN.iterate(b, n), hA, f"D^{n}(b) under a->ab, b->ab")
        hC = homogenize(C(n), "a", "b", 2 * n + 1)
        expect(SECOND_EULERIAN.iterate(a, n), hC, f"D^{n}(a) under a->ab^2, b->ab^2")
        expect(SECOND_EULERIAN.iterate(b, n), hC, f"D^{n}(b) under a->ab^2, b->ab^2")
        if n <= 6:
            hB = homogenize(brenti_b(n), "a", "b", 2 * n + 2, scale=2, shift=1)
            expect(TYPE_B.iterate(a * b, n), hB, f"D^{n}(ab) under a->ab^2, b->a^2b")
    # (cD)^n c realised by multiplying a grammar derivative by c
    cases = [
        (Grammar({"x": "x*y", "y": "x*y"}), y, lambda n: homogenize(C(n), "x", "y", 2 * n + 1)),
        (Grammar({"x": "y^2", "y": "y^2"}), x, lambda n: homogenize(C(n), "x", "y", 2 * n + 1)),
        (Grammar({"x": "x", "y": "x"}), y, lambda n: A(n)),
        (Grammar({"x": "1", "y": "1", "z": "1"}), x * y * z, lambda n: trivariate(n + 1)),
    ]
    for G, c, want in cases:
        p = c
        for n in range(1, max_n + 1):
            p = c * G.derive(p)
            got = p.subs({"y": 1}) if G == Grammar({"x": "x", "y": "x"}) else p
            expect(got, want(n), f"(cD_G)^{n}(c) for G={G}, c={c}")
    G = Grammar({"x": "y", "y": "x"})
    p = x * y
    for n in range(1, min(max_n, 6) + 1):
        p = x * y * G.derive(p)
        expect(p.subs({"y": 1}), x * brenti_b(n).subs({"x": x * x}), f"(xyD)^{n}(xy) at y=1")
