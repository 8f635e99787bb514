"""Acceptance criteria 1-11.

Each criterion prints one PASS/FAIL line (also collected into the pytest
summary).  Run directly with ``python tests/test_acceptance.py`` for the lines
alone.
"""

import random
import sys
import time
from collections import Counter
from pathlib import Path


sys.path.insert(0, str(Path(__file__).parent))

from eulerkit.exactpoly import Polynomial, hessenberg_det, parse_poly, var  # noqa: E402
from eulerkit.grammar import Grammar, TRIVARIATE, parse_rules  # noqa: E402
from eulerkit.identities import dumont_operator, run_check  # noqa: E402
from eulerkit.oracles import laplace_det  # noqa: E402
from eulerkit.permstats import stirling_permutations, q_spec  # noqa: E402
from eulerkit.sequences import second_eulerian, trivariate  # noqa: E402
from eulerkit.tableaux import SYT, standard_tableaux  # noqa: E402
from eulerkit.weyl import cd_expand  # noqa: E402
from helpers import (  # noqa: E402
    CRITERIA_LINES,
    random_hessenberg,
    random_poly,
    random_stirling_word,
    slot_types,
    symmetrize,
)

CASES = 1000


def criterion(number: int, title: str, limit: float | None, body) -> None:
    start = time.perf_counter()
    error = None
    try:
        body()
    except AssertionError as exc:
        error = exc
    elapsed = time.perf_counter() - start
    too_slow = limit is not None and elapsed >= limit
    ok = error is None and not too_slow
    budget = f"limit {limit:g} s" if limit is not None else "no time limit"
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} - {title} ({elapsed:.2f} s, {budget})"
    if error is not None:
        line += f" :: {str(error)[:200]}"
    elif too_slow:
        line += " :: over time limit"
    CRITERIA_LINES.append(line)
    print(line)
    assert ok, line


def checks(*names_and_bounds):
    def body():
        for name, bound in names_and_bounds:
            r = run_check(name, bound)
            assert r.passed, f"{name}: {r.witness}"

    return body


# -- 1 ------------------------------------------------------------------------

TRIVARIATE_REFERENCE = [
    "x",
    "x*y*z",
    "x*y*z*(y*z + x*y + x*z)",
    "x*y*z*(x^2*y^2 + x^2*z^2 + y^2*z^2 + 4*x*y^2*z + 4*x^2*y*z + 4*x*y*z^2)",
]
CD_REFERENCE = [
    "f",
    "c*f1",
    "c*c1*f1 + c^2*f2",
    "(c*c1^2 + c^2*c2)*f1 + (3*c^2*c1)*f2 + (c^3)*f3",
    "(c*c1^3 + 4*c^2*c1*c2 + c^3*c3)*f1 + (7*c^2*c1^2 + 4*c^3*c2)*f2 + (6*c^3*c1)*f3 + (c^4)*f4",
]


def _reference_goldens():
    for n, text in enumerate(TRIVARIATE_REFERENCE):
        assert trivariate(n) == parse_poly(text), f"C_{n}(x,y,z)"
        words = Counter()
        if n:
            for w in stirling_permutations(q_spec(n)):
                t = slot_types(w)
                words[(t.count("asc"), t.count("des"), t.count("plat"))] += 1
            assert Polynomial.from_counts(("x", "y", "z"), words) == parse_poly(text), f"Q_{n} enumeration"
    for n, text in enumerate(CD_REFERENCE):
        assert cd_expand(n, "f") == parse_poly(text), f"(cD)^{n} f"
    G = parse_rules("x -> x*y*z; y -> x*y*z; z -> x*y*z")
    assert G.iterate(parse_poly("y*z"), 2).to_text() == "x*y^2*z^3 + x*y^3*z^2 + x^2*y*z^3 + 4*x^2*y^2*z^2 + x^2*y^3*z"
    assert second_eulerian(4).to_text() == "x + 22*x^2 + 58*x^3 + 24*x^4"
    assert run_check("hessenberg", 4).passed


def test_criterion_01_reference_goldens():
    criterion(1, "reference polynomial goldens", 1.0, _reference_goldens)


def test_criterion_02_sequence_goldens():
    criterion(
        2,
        "C_n(1) = (2n-1)!!, series-reduced values and recurrence, (2n)!! counts",
        10.0,
        checks(("double-factorial", 10), ("series-reduced-trees", 8), ("e-count", 6)),
    )


def test_criterion_03_convolutions_and_determinant():
    criterion(
        3,
        "convolution identities (n <= 10) and Hessenberg determinant (n <= 8)",
        30.0,
        checks(("lemma-convolution", 10), ("gessel-convolution", 10), ("hessenberg", 8)),
    )


def test_criterion_04_real_roots():
    criterion(4, "binomial convolution is real-rooted by exact Sturm counts", 10.0, checks(("conv-realroots", 8)))


def test_criterion_05_grammars():
    criterion(
        5,
        "grammar equivalences against enumeration",
        60.0,
        checks(
            ("trivariate-grammar", 6),
            ("e-grammar", 6),
            ("gamma-extraction", 7),
            ("cxyz-convolution", 6),
        ),
    )


def test_criterion_06_six_variable_identity():
    criterion(6, "six-variable Stirling vs signed polynomial (n <= 6)", 90.0, checks(("bnqn", 6)))


def test_criterion_07_corollaries():
    criterion(
        7,
        "B_n(x,p,q), derangement and (1+p)^n y^n A_n corollaries",
        60.0,
        checks(("cor-bpq", 6), ("derangements", 6), ("corl2", 6)),
    )


def test_criterion_08_box_sorting():
    criterion(
        8,
        "box sorting chain: OWP sum, phi weights, fibers, tableau expansion",
        60.0,
        checks(("owp-expansion", 8), ("phi-weight", 8), ("g-index-product", 7)),
    )


def test_criterion_09_number_extractions():
    criterion(
        9,
        "Stirling and Eulerian numbers from a(n, lambda)",
        5.0,
        checks(("comtet-numbers", 8), ("fnk-shape", 10)),
    )


def test_criterion_10_tableau_expansions():
    criterion(
        10,
        "SYT expansions of A_n, C_n, C_{n+1}(x,y,z) and x B_n(x^2)",
        60.0,
        checks(
            ("syt-eulerian", 8),
            ("rs-eulerian", 8),
            ("syt-c-via-a", 8),
            ("syt-c-factorial", 8),
            ("syt-trivariate", 6),
            ("syt-typeb", 6),
        ),
    )


# -- 11 -----------------------------------------------------------------------


def _ring_axioms(rng):
    for _ in range(CASES):
        a, b, c = (random_poly(rng, big=True) for _ in range(3))
        assert a + b == b + a and a * b == b * a
        assert (a + b) + c == a + (b + c) and (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + 0 == a and a * 1 == a and a - a == 0


def _product_rules(rng):
    G = Grammar({"x": "x*y*z", "y": "c1 + 2", "c1": "x^2 - z"})
    for _ in range(CASES):
        a, b = random_poly(rng), random_poly(rng)
        v = rng.choice(("x", "y", "c10"))
        assert (a * b).partial(v) == a.partial(v) * b + a * b.partial(v)
        assert G.derive(a * b) == G.derive(a) * b + a * G.derive(b)
        assert G.derive(a + b) == G.derive(a) + G.derive(b)


def _round_trips(rng):
    for _ in range(CASES):
        p = random_poly(rng, big=True)
        assert parse_poly(p.to_text()) == p
        assert Polynomial.from_json(p.to_json()) == p
        n = rng.randint(1, 7)
        T = rng.choice(list(standard_tableaux(n)))
        assert SYT.from_json(T.to_json()) == T
        G = Grammar({v: random_poly(rng, max_terms=2) for v in rng.sample(["x", "y", "z", "c1"], rng.randint(1, 4))})
        assert parse_rules(str(G)) == G


def _hessenberg_oracle(rng):
    for _ in range(CASES):
        n = rng.randint(0, 5)
        H = random_hessenberg(rng, n, rng.random() < 0.5)
        assert hessenberg_det(H) == laplace_det(H)


def _equidistribution(rng):
    # the gap-type update under pair insertion is what makes asc, des, plat equidistributed
    for _ in range(CASES):
        n = rng.randint(0, 9)
        w = random_stirling_word(rng, n)
        k = rng.randint(0, len(w))
        types = slot_types(w)
        want = Counter(types)
        want[types[k]] -= 1
        want.update(("asc", "des", "plat"))
        assert Counter(slot_types(w[:k] + (n + 1, n + 1) + w[k:])) == +want


def _symmetry(rng):
    perms = [("y", "x", "z"), ("z", "y", "x"), ("y", "z", "x")]
    for _ in range(CASES):
        p = symmetrize(random_poly(rng, ("x", "y", "z"), max_terms=3, max_exp=2))
        q = dumont_operator(p)
        perm = rng.choice(perms)
        images = {v: var(w) for v, w in zip("xyz", perm)}
        assert q.subs(images) == q
        n = rng.randint(1, 6)
        C = trivariate(n)
        assert C.subs(images) == C
        assert TRIVARIATE.iterate(var(rng.choice("xyz")), n) == C


PROPERTIES = [
    ("ring axioms", _ring_axioms),
    ("product and Leibniz rules", _product_rules),
    ("serialization round trips", _round_trips),
    ("Hessenberg recursion vs cofactor expansion", _hessenberg_oracle),
    ("asc/des/plat gap update under insertion", _equidistribution),
    ("trivariate symmetry", _symmetry),
]


def test_criterion_11_property_suite():
    def body():
        for i, (label, fn) in enumerate(PROPERTIES):
            try:
                fn(random.Random(1000 + i))
            except AssertionError as exc:
                raise AssertionError(f"{label}: {exc}") from exc

    criterion(11, f"property suite, {CASES} seeded cases for each of {len(PROPERTIES)} properties", None, body)


if __name__ == "__main__":
    tests = [f for name, f in sorted(globals().items()) if name.startswith("test_criterion_")]
    failed = 0
    for t in tests:
        try:
            t()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
