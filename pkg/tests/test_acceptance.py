"""The twelve acceptance criteria, exact integer equality throughout.

Each criterion prints one PASS/FAIL line; the lines are repeated in the
pytest terminal summary.  Run this file directly for the lines alone.
"""
from __future__ import annotations

import sys
from typing import Callable

import pytest

from tmbinomial.factors import (
    abelian_complexity,
    factor_complexity,
    kbinomial_complexity,
    shortest_equivalent_pair,
)
from tmbinomial.formulas import (
    abelian_b1,
    edge_count_E,
    lcw_b2,
    llr_b2k,
    main_bk,
    starosta_p,
    y_count_Y,
)
from tmbinomial.rauzy import build_graph, eulerian_check, shift_isomorphism_check, y_sets
from tmbinomial.verify import (
    DEFAULT_SEED,
    check_characterization,
    check_lemma44_bigdiff,
    check_main_equiv,
    check_prop41,
)

RESULTS: list[str] = []

# b^1 for 1 <= l < m, rows m = 2..8.
TABLE2 = {
    2: [2],
    3: [3, 6],
    4: [4, 10, 12],
    5: [5, 15, 20, 25],
    6: [6, 21, 30, 39, 42],
    7: [7, 28, 42, 56, 63, 70],
    8: [8, 36, 56, 76, 88, 100, 104],
}


def _period(top: int, low: int, mid: int, run: int) -> list[int]:
    return [top] + [low] * run + [mid] + [low] * run + [mid] + [low] * run


def _compare(label: str, got, want) -> list[str]:
    return [] if got == want else [f"{label}: got {got}, expected {want}"]


def table1() -> list[str]:
    bad = []
    bad += _compare("k=2", [kbinomial_complexity(3, 2, n) for n in range(18, 27)], _period(49, 45, 48, 2))
    bad += _compare("k=3", [kbinomial_complexity(3, 3, n) for n in range(54, 81)], _period(175, 171, 174, 8))
    return bad


def binary_closed_form() -> list[str]:
    bad = []
    for k in (2, 3, 4):
        for n in range(2 ** (k + 2) + 1):
            bad += _compare(f"k={k} n={n}", kbinomial_complexity(2, k, n), llr_b2k(k, n))
    return bad


def depth_two_closed_form() -> list[str]:
    bad = []
    for m in (3, 4):
        for n in range(m * m, 3 * m * m + 1):
            bad += _compare(f"m={m} n={n}", kbinomial_complexity(m, 2, n), lcw_b2(m, n))
    return bad


def factor_counts() -> list[str]:
    bad = []
    for m in (2, 3, 4, 5):
        for n in range(101):
            bad += _compare(f"m={m} n={n}", factor_complexity(m, n), starosta_p(m, n))
    return bad


def abelian_counts() -> list[str]:
    bad = []
    for m in range(2, 9):
        for n in range(3 * m + 1):
            bad += _compare(f"m={m} n={n}", abelian_complexity(m, n), abelian_b1(m, n))
        bad += _compare(f"table m={m}", [abelian_b1(m, l) for l in range(1, m)], TABLE2[m])
        bad += _compare(f"table enum m={m}", [abelian_complexity(m, l) for l in range(1, m)], TABLE2[m])
    return bad


def general_formula() -> list[str]:
    bad = []
    for m, k in [(2, 2), (2, 3), (3, 2)]:
        for n in range(3 * m**k):
            bad += _compare(f"m={m} k={k} n={n}", main_bk(m, k, n), kbinomial_complexity(m, k, n))
        n, u, v = shortest_equivalent_pair(m, k)
        bad += _compare(f"shortest pair m={m} k={k}", n, 2 * m ** (k - 1))
        if u == v:
            bad.append(f"shortest pair m={m} k={k}: witnesses coincide")
    return bad


def rauzy_graphs() -> list[str]:
    bad = []
    for m in range(2, 7):
        for l in range(1, 2 * m):
            g = build_graph(m, l)
            bad += _compare(f"vertices m={m} l={l}", len(g.vertices), abelian_b1(m, l))
            bad += _compare(f"edges m={m} l={l}", len(g.edges), edge_count_E(m, l))
            bad += _compare(f"Y m={m} l={l}", y_sets(m, l).total, y_count_Y(m, l))
            if l < m and not eulerian_check(g):
                bad.append(f"eulerian m={m} l={l}")
            if l >= m:
                for t in (1, 2):
                    if not shift_isomorphism_check(m, l, t):
                        bad.append(f"shift m={m} l={l} t={t}")
    return bad


def discriminant_gap() -> list[str]:
    bad = []
    for m, k in [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (4, 2)]:
        report = check_prop41(m, k)
        if not report.passed:
            bad.append(f"m={m} k={k}: {report.failures[:3]}")
        diffs = {row["difference"] for row in report.rows}
        bad += _compare(f"difference m={m} k={k}", diffs, {m ** (k * (k - 1) // 2)})
    return bad


def big_difference() -> list[str]:
    bad = []
    for m, k in [(2, 2), (2, 3), (3, 2)]:
        report = check_lemma44_bigdiff(m, k, 200, seed=DEFAULT_SEED)
        bad += _compare(f"instances m={m} k={k}", report.instances, 200)
        if not report.passed:
            bad.append(f"m={m} k={k}: {len(report.failures)} failures")
    return bad


def characterization() -> list[str]:
    bad = []
    for m, k, max_n in [(2, 2, 16), (2, 3, 20), (3, 2, 20)]:
        report = check_characterization(m, k, max_n)
        if not report.passed:
            bad.append(f"m={m} k={k}: {report.failures[:3]}")
    return bad


def pair_classes() -> list[str]:
    bad = []
    for m, k, ns in [(3, 2, range(18, 28)), (2, 2, range(8, 17))]:
        for n in ns:
            report = check_main_equiv(m, k, n)
            if not report.passed:
                bad.append(f"m={m} k={k} n={n}: {report.failures[:3]}")
    return bad


def periodicity() -> list[str]:
    bad = []
    for n in range(9, 28):
        bad += _compare(f"formula n={n}", main_bk(3, 2, n + 9), main_bk(3, 2, n))
        bad += _compare(f"enumeration n={n}", kbinomial_complexity(3, 2, n + 9), kbinomial_complexity(3, 2, n))
    return bad


CRITERIA: list[tuple[int, str, Callable[[], list[str]]]] = [
    (1, "ternary period tables, k = 2 and 3", table1),
    (2, "binary closed form, k = 2..4", binary_closed_form),
    (3, "2-binomial closed form, m = 3, 4", depth_two_closed_form),
    (4, "factor complexity, m = 2..5, n <= 100", factor_counts),
    (5, "abelian complexity and short-length table, m = 2..8", abelian_counts),
    (6, "general b^k formula and shortest equivalent pair", general_formula),
    (7, "abelian Rauzy graph counts, m = 2..6", rauzy_graphs),
    (8, "discriminant gap m^C(k,2)", discriminant_gap),
    (9, "large-difference identity, 200 instances", big_difference),
    (10, "factorization characterization", characterization),
    (11, "pair classes = binomial classes", pair_classes),
    (12, "periodicity of b^k for m = 3, k = 2", periodicity),
]


def run_criterion(number: int, title: str, fn: Callable[[], list[str]]) -> tuple[str, list[str]]:
    problems = fn()
    verdict = "PASS" if not problems else f"FAIL ({len(problems)} mismatches)"
    return f"criterion {number:>2} {verdict}: {title}", problems


@pytest.mark.parametrize("number,title,fn", CRITERIA, ids=[f"c{n:02d}" for n, _, _ in CRITERIA])
def test_criterion(number, title, fn):
    line, problems = run_criterion(number, title, fn)
    RESULTS.append(line)
    print(line)
    assert not problems, "\n".join(problems[:20])


if __name__ == "__main__":
    failed = 0
    for number, title, fn in CRITERIA:
        line, problems = run_criterion(number, title, fn)
        print(line, flush=True)
        for p in problems[:10]:
            print("   ", p)
        failed += bool(problems)
    sys.exit(1 if failed else 0)
