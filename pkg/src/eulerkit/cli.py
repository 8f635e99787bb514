"""Command-line front end: ``eulerkit {seq,enumerate,expand,grammar,verify}``.

Exit codes: 0 success, 1 check failure, 2 usage, parse or bound error.
Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Sequence

from .exactpoly import ParseError, Polynomial, parse_poly
from .grammar import parse_rules
from .identities import REGISTRY, run_all, run_check
from .permstats import BoundError, format_word, q1_spec, q_spec, stat_record, stirling_permutations
from .sequences import FAMILIES, family_value
from .signedperm import cycle_stats, signed_permutations
from .tableaux import g_index, partitions, standard_tableaux
from .weyl import MAX_EXPAND_N, cd_expand, ordered_weak_partitions, owp_weight

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
MAX_GRAMMAR_N = 12


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="eulerkit", description="Exact second-order Eulerian polynomial toolkit.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("seq", help="tabulate a polynomial family for n up to --n-max")
    s.add_argument("family", choices=sorted(FAMILIES))
    s.add_argument("--n-max", type=_nonneg, required=True)
    s.add_argument("--format", choices=("text", "json", "csv"), default="text")

    e = sub.add_parser("enumerate", help="dump combinatorial objects with their statistics")
    e.add_argument("kind", choices=("stirling", "stirling1", "signed", "perm", "syt", "owp", "partitions"))
    e.add_argument("--n", type=_nonneg, required=True)
    e.add_argument("--format", choices=("text", "json"), default="text")

    x = sub.add_parser("expand", help="print (cD)^n f or a grammar iterate")
    x.add_argument("kind", choices=("cd", "grammar"))
    x.add_argument("--n", type=_nonneg, required=True)
    x.add_argument("--target", choices=("f", "c"), default="f", help="expand (cD)^n f or (cD)^n c")
    x.add_argument("--rules")
    x.add_argument("--start")
    x.add_argument("--format", choices=("text", "json"), default="text")

    g = sub.add_parser("grammar", help="parse rules and print them canonically")
    g.add_argument("--rules", required=True)

    v = sub.add_parser("verify", help="run identity checks; JSON lines on stdout")
    v.add_argument("--check", required=True, help="check name or 'all'")
    v.add_argument("--n-max", type=_nonneg)
    v.add_argument("--seed", type=int)
    v.add_argument("--jobs", type=_nonneg, default=1)
    v.add_argument("--fail-fast", action="store_true")
    v.add_argument("--list", action="store_true", help="print check names and claims instead of running")
    return p


def _render_value(value, fmt: str):
    if isinstance(value, Polynomial):
        return value.to_text() if fmt == "text" else value.to_json()
    return str(value) if fmt == "text" else value


def cmd_seq(args, out) -> int:
    fn, first, univariate = FAMILIES[args.family]
    if args.format == "csv" and not univariate:
        raise UsageError(f"csv output needs a univariate family; {args.family} is multivariate")
    rows = [(n, family_value(args.family, n)) for n in range(first, args.n_max + 1)]
    if args.format == "text":
        for n, v in rows:
            out.write(f"{n}: {_render_value(v, 'text')}\n")
    elif args.format == "json":
        for n, v in rows:
            out.write(json.dumps({"n": n, "value": _render_value(v, "json")}) + "\n")
    else:
        coeff_rows = [[v] if isinstance(v, int) else v.univariate_coeffs() for _, v in rows]
        width = max((len(c) for c in coeff_rows), default=0)
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["n"] + [f"c{k}" for k in range(width)])
        for (n, _), coeffs in zip(rows, coeff_rows):
            w.writerow([n] + list(coeffs) + [0] * (width - len(coeffs)))
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    n, kind = args.n, args.kind
    as_json = args.format == "json"
    if kind in ("stirling", "stirling1"):
        spec = q_spec(n) if kind == "stirling" else q1_spec(n)
        for w in stirling_permutations(spec):
            rec = stat_record(w)
            if as_json:
                out.write(json.dumps(rec.to_json()) + "\n")
            else:
                s = rec.to_json()["stats"]
                out.write(f"{format_word(w)} asc={s['asc']} des={s['des']} plat={s['plat']}\n")
    elif kind in ("signed", "perm"):
        for pi in signed_permutations(n, negatives=kind == "signed"):
            st = cycle_stats(pi).as_dict()
            if as_json:
                out.write(json.dumps({"perm": list(pi), "stats": st}) + "\n")
            else:
                out.write(" ".join(map(str, pi)) + "  " + " ".join(f"{k}={v}" for k, v in st.items()) + "\n")
    elif kind == "syt":
        for T in standard_tableaux(n):
            sigma, prod = g_index(T)
            if as_json:
                out.write(json.dumps({"rows": T.to_json(), "sigma": sigma, "g_index": prod}) + "\n")
            else:
                out.write(f"{json.dumps(T.to_json())} sigma={sigma} g={prod}\n")
    elif kind == "owp":
        for p in ordered_weak_partitions(n):
            w = owp_weight(p).to_text()
            if as_json:
                out.write(json.dumps({"blocks": [list(b) for b in p], "weight": w}) + "\n")
            else:
                out.write(f"{json.dumps([list(b) for b in p])} {w}\n")
    else:
        for lam in partitions(n):
            out.write((json.dumps(list(lam)) if as_json else " ".join(map(str, lam)) or "()") + "\n")
    return EXIT_OK


def cmd_expand(args, out) -> int:
    if args.kind == "cd":
        if args.n > MAX_EXPAND_N:
            raise BoundError(f"n={args.n} exceeds bound {MAX_EXPAND_N}")
        result = cd_expand(args.n, args.target)
    else:
        if args.rules is None or args.start is None:
            raise UsageError("expand grammar needs --rules and --start")
        if args.n > MAX_GRAMMAR_N:
            raise BoundError(f"n={args.n} exceeds bound {MAX_GRAMMAR_N}")
        result = parse_rules(args.rules).iterate(parse_poly(args.start), args.n)
    out.write((result.to_text() if args.format == "text" else json.dumps(result.to_json())) + "\n")
    return EXIT_OK


def cmd_grammar(args, out) -> int:
    out.write(str(parse_rules(args.rules)) + "\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if args.list:
        for name, entry in REGISTRY.items():
            out.write(f"{name}\t{entry.default_n}\t{entry.claim}\n")
        return EXIT_OK
    if args.check == "all":
        overrides = {name: args.n_max for name in REGISTRY} if args.n_max is not None else None
        reports = []
        if args.jobs > 1:
            reports = run_all(overrides, fail_fast=args.fail_fast, seed=args.seed, jobs=args.jobs)
            for r in reports:
                out.write(r.to_json() + "\n")
        else:
            for name in REGISTRY:
                r = run_check(name, args.n_max, args.seed)
                out.write(r.to_json() + "\n")
                out.flush()
                reports.append(r)
                if args.fail_fast and not r.passed:
                    break
    else:
        if args.check not in REGISTRY:
            raise UsageError(f"unknown check {args.check!r}; see 'verify --check all --list'")
        reports = [run_check(args.check, args.n_max, args.seed)]
        out.write(reports[0].to_json() + "\n")
    failed = [r.name for r in reports if not r.passed]
    if failed:
        print(f"failed: {', '.join(failed)}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


COMMANDS = {"seq": cmd_seq, "enumerate": cmd_enumerate, "expand": cmd_expand, "grammar": cmd_grammar, "verify": cmd_verify}


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"eulerkit: error: {exc}", file=sys.stderr)
    except ParseError as exc:
        print(f"eulerkit: parse error: {exc}", file=sys.stderr)
    except (BoundError, ValueError) as exc:
        print(f"eulerkit: error: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
