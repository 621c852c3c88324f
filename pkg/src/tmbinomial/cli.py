"""Command-line front end: ``tmbinomial <command> ...``.

Exit status: 0 success, 1 verification mismatch, 2 invalid input,
3 resource cap exceeded.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Callable, Optional

from . import limits
from .factorization import NotAFactor, factorization_summary
from .factors import abelian_complexity, factor_complexity, kbinomial_complexity
from .formulas import (
    FormulaDomainError,
    abelian_b1,
    edge_count_E,
    main_bk,
    starosta_p,
    y_count_Y,
)
from .rauzy import build_graph, eulerian_check, export_graph, shift_isomorphism_check, y_sets
from .verify import DEFAULT_SEED, SUITES, run_suite
from .words import Word, tm_prefix

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


class UsageError(ValueError):
    pass


def _alphabet(text: str) -> int:
    m = int(text)
    if m < 2:
        raise argparse.ArgumentTypeError("alphabet size must be >= 2")
    return m


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    caps = p.add_argument_group("resource caps (also TMBINOMIAL_<NAME> env vars)")
    caps.add_argument("--max-prefix", type=_positive, help="longest word ever materialized")
    caps.add_argument("--max-signature-domain", type=_positive, help="largest subword domain per signature")
    caps.add_argument("--max-factor-length", type=_positive, help="longest factor length enumerated")
    caps.add_argument("--max-certificate-exponent", type=_positive, help="largest prefix exponent scanned")
    p.add_argument("-o", "--output", help="write to this file instead of stdout")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="tmbinomial",
        description="Binomial complexities of generalized Thue-Morse words t_m.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", parents=[common], help="print a prefix of t_m")
    g.add_argument("--m", type=_alphabet, required=True)
    g.add_argument("--length", type=_non_negative, required=True)
    g.add_argument("--format", choices=["plain", "json"], default="plain")

    c = sub.add_parser("complexity", parents=[common], help="complexity sweep against the closed forms")
    c.add_argument("--m", type=_alphabet, required=True)
    c.add_argument("--kind", choices=["factor", "abelian", "binomial"], required=True)
    c.add_argument("--k", type=_positive, default=2, help="depth for --kind binomial")
    c.add_argument("--from", dest="lo", type=_non_negative, required=True)
    c.add_argument("--to", dest="hi", type=_non_negative, required=True)
    c.add_argument("--check", action="store_true", help="exit 1 on any mismatch")
    c.add_argument("--format", choices=["csv", "json", "plain"], default="csv")

    f = sub.add_parser("factorize", parents=[common], help="sigma^k-factorizations of a factor")
    f.add_argument("--m", type=_alphabet, required=True)
    f.add_argument("--k", type=_positive, required=True)
    f.add_argument("--word", required=True, help="digits, or comma-separated letters")
    f.add_argument("--format", choices=["plain", "json"], default="plain")

    r = sub.add_parser("rauzy", parents=[common], help="export an abelian Rauzy graph")
    r.add_argument("--m", type=_alphabet, required=True)
    r.add_argument("--order", type=int, required=True)
    r.add_argument("--format", choices=["dot", "json"], default="json")
    r.add_argument("--check", action="store_true", help="compare counts with the closed forms")

    v = sub.add_parser("verify", parents=[common], help="run theorem regression checks")
    v.add_argument("--suite", choices=["all", *SUITES], default="all")
    v.add_argument("--m", type=_alphabet, required=True)
    v.add_argument("--k", type=_positive, required=True)
    v.add_argument("--max-n", type=_non_negative)
    v.add_argument("--seed", type=int, default=DEFAULT_SEED)
    v.add_argument("--format", choices=["plain", "json"], default="plain")
    v.add_argument("--no-timing", action="store_true", help="omit elapsed_ms for byte-stable output")
    return parser


# -- commands -----------------------------------------------------------------


def cmd_generate(args) -> tuple[int, str]:
    w = tm_prefix(args.m, args.length)
    if args.format == "json":
        return EXIT_OK, json.dumps({"m": args.m, "length": args.length, "word": str(w)}) + "\n"
    return EXIT_OK, (str(w) + "\n") if args.length else ""


def _complexity_fns(kind: str, m: int, k: int) -> tuple[Callable[[int], int], Callable[[int], int]]:
    if kind == "factor":
        return (lambda n: factor_complexity(m, n)), (lambda n: starosta_p(m, n))
    if kind == "abelian" or k == 1:
        return (lambda n: abelian_complexity(m, n)), (lambda n: abelian_b1(m, n))
    return (lambda n: kbinomial_complexity(m, k, n)), (lambda n: main_bk(m, k, n))


def cmd_complexity(args) -> tuple[int, str]:
    if args.lo > args.hi:
        raise UsageError(f"empty range: --from {args.lo} > --to {args.hi}")
    computed, formula = _complexity_fns(args.kind, args.m, args.k)
    rows = []
    for n in range(args.lo, args.hi + 1):
        value = computed(n)
        try:
            expected: Optional[int] = formula(n)
        except FormulaDomainError:
            expected = None
        rows.append((n, value, expected, expected is None or expected == value))
    status = EXIT_MISMATCH if args.check and not all(r[3] for r in rows) else EXIT_OK
    if args.format == "json":
        data = [
            {"n": n, "computed": v, "formula": e, "match": ok} for n, v, e, ok in rows
        ]
        return status, json.dumps(data) + "\n"
    if args.format == "plain":
        lines = [f"{n:>5} {v:>8} {'' if e is None else e:>8} {'ok' if ok else 'MISMATCH'}" for n, v, e, ok in rows]
        return status, "\n".join(lines) + "\n"
    buf = io.StringIO()
    out = csv.writer(buf, lineterminator="\n")
    out.writerow(["n", "computed", "formula", "match"])
    for n, v, e, ok in rows:
        out.writerow([n, v, "" if e is None else e, "true" if ok else "false"])
    return status, buf.getvalue()


def _describe(f: dict) -> str:
    def show(w: str) -> str:
        return w if w else "-"

    return f"x={show(f['x'])} u={show(f['u'])} y={show(f['y'])} a={f['a']} b={f['b']}"


def _describe_dt(dt: dict) -> str:
    parts = ", ".join(p if p else "-" for p in dt["parts"])
    digits = ",".join(map(str, dt["digits"]))
    return f"{dt['side']} of image of {dt['anchor']}: digits ({digits}) parts [{parts}]"


def cmd_factorize(args) -> tuple[int, str]:
    try:
        word = Word.parse(args.word, args.m)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    try:
        summary = factorization_summary(args.m, args.k, word)
    except NotAFactor as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "json":
        return EXIT_OK, json.dumps(summary) + "\n"
    lines = [
        f"U = {summary['word'] or '-'}  (m={args.m}, k={args.k}, |U|={len(word)})",
        f"valid sigma^{args.k}-factorizations: {len(summary['factorizations'])}",
    ]
    lines += ["  " + _describe(f) for f in summary["factorizations"]]
    if "unique" in summary:
        lines.append("unique: " + _describe(summary["unique"]))
        lines.append(f"p_U = {summary['p'] or '-'}  {_describe_dt(summary['p_decomposition'])}")
        lines.append(f"s_U = {summary['s'] or '-'}  {_describe_dt(summary['s_decomposition'])}")
    return EXIT_OK, "\n".join(lines) + "\n"


def rauzy_checks(m: int, order: int) -> list[tuple[str, object, object]]:
    """(quantity, computed, expected) rows for G_{m,order}."""
    g = build_graph(m, order)
    y = y_sets(m, order)
    rows: list[tuple[str, object, object]] = [
        ("vertices", len(g.vertices), abelian_b1(m, order)),
        ("y_right_equals_left", len(y.right) == len(y.left), True),
    ]
    if order <= 2 * m:
        rows.append(("edges", len(g.edges), edge_count_E(m, order)))
    if order < 2 * m:
        rows.append(("y_total", y.total, y_count_Y(m, order)))
    if order < m:
        rows.append(("eulerian", eulerian_check(g), True))
    if m <= order < 2 * m:
        rows.append(("shift_isomorphic_t1", shift_isomorphism_check(m, order, 1), True))
    return rows


def cmd_rauzy(args) -> tuple[int, str]:
    if args.order < 1:
        raise UsageError(f"order must be >= 1, got {args.order}")
    text = export_graph(build_graph(args.m, args.order), args.format)
    status = EXIT_OK
    if args.check:
        for name, got, want in rauzy_checks(args.m, args.order):
            ok = got == want
            print(f"{name}: {got} (expected {want}) {'ok' if ok else 'MISMATCH'}", file=sys.stderr)
            if not ok:
                status = EXIT_MISMATCH
    return status, text


def cmd_verify(args) -> tuple[int, str]:
    reports = run_suite(args.suite, args.m, args.k, args.max_n, args.seed)
    status = EXIT_OK if all(r.passed for r in reports) else EXIT_MISMATCH
    timing = not args.no_timing
    if args.format == "json":
        return status, json.dumps([r.to_dict(timing) for r in reports], default=str) + "\n"
    lines = []
    for r in reports:
        verdict = "PASS" if r.passed else f"FAIL ({len(r.failures)} failures)"
        params = " ".join(f"{key}={val}" for key, val in r.params.items() if val is not None)
        head = f"{r.check:<17} {params}: {r.instances} instances, {verdict}"
        if timing:
            head += f" [{r.elapsed_ms:.0f} ms]"
        lines.append(head)
        if r.check == "prop41":
            lines += [f"  j={row['j']}: difference {row['difference']} (expected {row['expected']})" for row in r.rows]
        lines += [f"  {json.dumps(fail, default=str)}" for fail in r.failures[:5]]
    return status, "\n".join(lines) + "\n"


COMMANDS = {
    "generate": cmd_generate,
    "complexity": cmd_complexity,
    "factorize": cmd_factorize,
    "rauzy": cmd_rauzy,
    "verify": cmd_verify,
}


def _caps(args) -> dict:
    return {
        name: getattr(args, name)
        for name in ("max_prefix", "max_signature_domain", "max_factor_length", "max_certificate_exponent")
        if getattr(args, name, None) is not None
    }


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with limits.override(**_caps(args)):
            status, text = COMMANDS[args.command](args)
    except limits.ResourceCapExceeded as exc:
        print(f"tmbinomial: resource cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, FormulaDomainError, ValueError) as exc:
        print(f"tmbinomial: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
