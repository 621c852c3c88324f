"""Brute-force oracles for the discernment lemmas, the characterization of ~_k
on t_m and the pair-counting theorem, packaged as deterministic reports.

Every check enumerates its instances from small to large, so the first
recorded failure is also a smallest reproducing instance.
"""
from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from itertools import product
from math import comb
from typing import Iterable, Optional, Sequence

from .binomial import binom, signature
from .factorization import (
    enumerate_factorizations,
    equiv_k_pairs,
    pair_classes,
    pair_population,
)
from .factors import (
    abelian_complexity,
    factor_complexity,
    factor_set,
    kbinomial_complexity,
    shortest_equivalent_pair,
)
from .formulas import (
    FormulaDomainError,
    abelian_b1,
    lcw_b2,
    llr_b2k,
    main_bk,
    main_equiv_count,
    starosta_p,
)
from .words import Word, parikh, sigma_image, sigma_power

DEFAULT_SEED = 1729
DEFAULT_INSTANCES = 200

SUITES = (
    "prop41",
    "cor42",
    "bothdir",
    "lemma43",
    "bigdiff",
    "characterization",
    "main-equiv",
    "theorems",
)


@dataclass
class CheckReport:
    check: str
    params: dict
    instances: int = 0
    failures: list = field(default_factory=list)
    elapsed_ms: float = 0.0
    rows: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, **details) -> None:
        self.failures.append(details)

    def to_dict(self, timing: bool = True) -> dict:
        out = {
            "check": self.check,
            "params": self.params,
            "instances": self.instances,
            "failures": self.failures,
        }
        if timing:
            out["elapsed_ms"] = round(self.elapsed_ms, 3)
        if self.rows:
            out["rows"] = self.rows
        return out

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), default=str)


class _Timed:
    def __init__(self, report: CheckReport):
        self.report = report

    def __enter__(self) -> CheckReport:
        self._start = time.perf_counter()
        return self.report

    def __exit__(self, *exc) -> None:
        self.report.elapsed_ms = (time.perf_counter() - self._start) * 1000.0


def discriminant(m: int, k: int) -> Word:
    """The word 0 (-1) (-2) ... (-k) over A_m."""
    return Word._make(m, tuple((-i) % m for i in range(k + 1)))


def _words(m: int, length: int) -> Iterable[Word]:
    for letters in product(range(m), repeat=length):
        yield Word._make(m, letters)


def default_max_len(m: int) -> int:
    return 3 if m <= 3 else 2


# -- identities on sigma^k images ---------------------------------------------


def check_prop41(m: int, k: int) -> CheckReport:
    report = CheckReport("prop41", {"m": m, "k": k})
    with _Timed(report):
        e = discriminant(m, k)
        expected = m ** comb(k, 2)
        base = binom(sigma_power(m, k, [0]), e)
        others = {}
        for j in range(1, m):
            value = binom(sigma_power(m, k, [j]), e)
            others[j] = value
            report.instances += 1
            report.rows.append({"j": j, "difference": base - value, "expected": expected})
            if base - value != expected:
                report.fail(j=j, subword=str(e), lhs=base - value, rhs=expected)
        report.instances += 1
        if len(set(others.values())) > 1:
            report.fail(reason="coefficients differ across j != 0", values=others)
    return report


def _same_length_pairs(
    m: int, max_len: int, samples: Optional[int], seed: int
) -> Iterable[tuple[Word, Word]]:
    if samples is None:
        for length in range(max_len + 1):
            pool = list(_words(m, length))
            for u in pool:
                for v in pool:
                    yield u, v
        return
    rng = random.Random(f"{seed}:{m}:{max_len}")
    for _ in range(samples):
        length = rng.randint(0, max_len)
        yield (
            Word._make(m, tuple(rng.randrange(m) for _ in range(length))),
            Word._make(m, tuple(rng.randrange(m) for _ in range(length))),
        )


def check_cor42(
    m: int,
    k: int,
    samples: Optional[int] = None,
    max_len: Optional[int] = None,
    seed: int = DEFAULT_SEED,
) -> CheckReport:
    """Difference identity for the discriminant on sigma^k-images.

    With samples=None every same-length pair up to max_len is tested.
    """
    max_len = default_max_len(m) if max_len is None else max_len
    report = CheckReport(
        "cor42", {"m": m, "k": k, "samples": samples, "max_len": max_len, "seed": seed}
    )
    with _Timed(report):
        e = discriminant(m, k)
        scale = m ** comb(k, 2)
        cache: dict[Word, tuple] = {}

        def data(w: Word) -> tuple:
            if w not in cache:
                img = sigma_power(m, k, w)
                cache[w] = (binom(img, e), signature(img, k + 1) if len(img) else None)
            return cache[w]

        for u, v in _same_length_pairs(m, max_len, samples, seed):
            report.instances += 1
            (bu, su), (bv, sv) = data(u), data(v)
            rhs = (u.count(0) - v.count(0)) * scale
            if bu - bv != rhs:
                report.fail(u=str(u), v=str(v), lhs=bu - bv, rhs=rhs)
            elif parikh(u) != parikh(v) and su == sv:
                report.fail(u=str(u), v=str(v), reason="images are (k+1)-equivalent")
    return report


def check_prop23_bothdir(m: int, k: int, max_len: Optional[int] = None) -> CheckReport:
    """x ~_1 y  iff  sigma^k(x) ~_{k+1} sigma^k(y), exhaustively."""
    max_len = default_max_len(m) if max_len is None else max_len
    report = CheckReport("bothdir", {"m": m, "k": k, "max_len": max_len})
    with _Timed(report):
        sigs: dict[Word, object] = {}
        for x, y in _same_length_pairs(m, max_len, None, 0):
            for w in (x, y):
                if w not in sigs:
                    sigs[w] = signature(sigma_power(m, k, w), k + 1)
            report.instances += 1
            left = parikh(x) == parikh(y)
            right = sigs[x] == sigs[y]
            if left != right:
                report.fail(x=str(x), y=str(y), abelian=left, images_equivalent=right)
    return report


def check_lemma43(
    m: int,
    k: int,
    ell: Optional[int] = None,
    u=None,
    j: Optional[int] = None,
    max_len: int = 2,
) -> CheckReport:
    """binom(sigma^k(u), 0 -1 .. -(l-1)) is invariant under shifting the subword.

    Unset parameters are swept: l over 1..k, u over all words of length
    1..max_len, j over A_m.
    """
    report = CheckReport(
        "lemma43",
        {"m": m, "k": k, "ell": ell, "u": None if u is None else str(u), "j": j, "max_len": max_len},
    )
    with _Timed(report):
        ells = range(1, k + 1) if ell is None else [ell]
        if ell is not None and not 1 <= ell <= k:
            raise ValueError(f"need 1 <= l <= k, got l={ell}")
        if u is None:
            us = [w for length in range(1, max_len + 1) for w in _words(m, length)]
        else:
            us = [u if isinstance(u, Word) else Word.parse(str(u), m)]
        js = range(m) if j is None else [j]
        for w in us:
            img = sigma_power(m, k, w)
            for length in ells:
                base = binom(img, Word._make(m, tuple((-i) % m for i in range(length))))
                for shift in js:
                    target = Word._make(m, tuple((-(shift + i)) % m for i in range(length)))
                    report.instances += 1
                    value = binom(img, target)
                    if value != base:
                        report.fail(u=str(w), ell=length, j=shift, lhs=base, rhs=value)
    return report


# -- the big-difference lemma -------------------------------------------------


def lemma44_lhs(m: int, k: int, u, u2, g, g2, d, d2) -> int:
    e = discriminant(m, k)
    left = sigma_power(m, k - 1, g + sigma_power(m, 1, u) + d)
    right = sigma_power(m, k - 1, g2 + sigma_power(m, 1, u2) + d2)
    return binom(left, e) - binom(right, e)


def lemma44_rhs(m: int, k: int, u, u2, g, g2, d, d2) -> int:
    c = comb(k, 2)
    minus1 = (m - 1) % m
    head = u.count(0) - u2.count(0) + len(u) * (
        g.count(0) - g2.count(0) + d.count(minus1) - d2.count(minus1)
    )
    gd, gd2 = g + d, g2 + d2
    tail = 0
    for b in range(m):
        tail += binom(gd, Word._make(m, (b, minus1))) - binom(gd2, Word._make(m, (b, minus1)))
        tail += binom(gd, Word._make(m, (0, b))) - binom(gd2, Word._make(m, (0, b)))
    return m**c * head + m ** (c - 1) * tail


def _suffix_of_image(m: int, a: int, length: int) -> Word:
    return sigma_image(m, a)[m - length :] if length else Word.empty(m)


def _prefix_of_image(m: int, b: int, length: int) -> Word:
    return sigma_image(m, b)[:length]


def lemma44_instances(
    m: int, k: int, count: int = DEFAULT_INSTANCES, seed: int = DEFAULT_SEED, arbitrary: bool = False
) -> list[tuple[Word, ...]]:
    """Seeded (u, u', g, g', d, d') tuples with g d ~_1 g' d' and |u| = |u'|.

    By default g, g' are proper suffixes and d, d' proper prefixes of
    sigma-images and u, u' are factors of t_m; `arbitrary` drops those
    restrictions and only keeps the two hypotheses.
    """
    rng = random.Random(f"lemma44:{seed}:{m}:{k}:{int(arbitrary)}")
    out = []
    for _ in range(count):
        length = rng.randint(0, 4)
        if arbitrary:
            u = Word._make(m, tuple(rng.randrange(m) for _ in range(length)))
            u2 = Word._make(m, tuple(rng.randrange(m) for _ in range(length)))
            g = Word._make(m, tuple(rng.randrange(m) for _ in range(rng.randint(0, 3))))
            d = Word._make(m, tuple(rng.randrange(m) for _ in range(rng.randint(0, 3))))
            letters = list((g + d).letters)
            rng.shuffle(letters)
            cut = rng.randint(0, len(letters))
            g2 = Word._make(m, tuple(letters[:cut]))
            d2 = Word._make(m, tuple(letters[cut:]))
        else:
            pool = factor_set(m, length).sorted()
            u, u2 = rng.choice(pool), rng.choice(pool)
            g = _suffix_of_image(m, rng.randrange(m), rng.randrange(m))
            d = _prefix_of_image(m, rng.randrange(m), rng.randrange(m))
            target = parikh(g + d)
            total = len(g) + len(d)
            candidates = []
            for a, b in product(range(m), repeat=2):
                for i in range(max(0, total - m + 1), min(m - 1, total) + 1):
                    cg, cd = _suffix_of_image(m, a, i), _prefix_of_image(m, b, total - i)
                    if parikh(cg + cd) == target:
                        candidates.append((cg, cd))
            candidates = sorted(set(candidates))
            others = [c for c in candidates if c != (g, d)]
            g2, d2 = rng.choice(others or candidates)
        out.append((u, u2, g, g2, d, d2))
    return out


def check_lemma44_bigdiff(
    m: int,
    k: int,
    instances: "int | Sequence[tuple]" = DEFAULT_INSTANCES,
    seed: int = DEFAULT_SEED,
    arbitrary: bool = False,
) -> CheckReport:
    if k < 2:
        raise ValueError("k must be >= 2")
    if isinstance(instances, int):
        params = {"m": m, "k": k, "instances": instances, "seed": seed, "arbitrary": arbitrary}
        cases = lemma44_instances(m, k, instances, seed, arbitrary)
    else:
        cases = list(instances)
        params = {"m": m, "k": k, "instances": len(cases), "explicit": True}
    report = CheckReport("bigdiff", params)
    with _Timed(report):
        for case in cases:
            u, u2, g, g2, d, d2 = case
            if parikh(g + d) != parikh(g2 + d2) or len(u) != len(u2):
                raise ValueError(f"instance violates the hypotheses: {[str(w) for w in case]}")
            report.instances += 1
            lhs = lemma44_lhs(m, k, *case)
            rhs = lemma44_rhs(m, k, *case)
            if lhs != rhs:
                names = ("u", "u2", "g", "g2", "d", "d2")
                report.fail(**{n: str(w) for n, w in zip(names, case)}, lhs=lhs, rhs=rhs)
    return report


# -- characterization, pair counting, complexity sweeps -----------------------


def _factorization_keys(m: int, j: int, U: Word) -> set:
    return {(f.x, f.y, parikh(f.u)) for f in enumerate_factorizations(m, j, U)}


def check_characterization(m: int, k: int, max_n: int) -> CheckReport:
    """U ~_k V iff some sigma^(k-1)-factorizations share outer blocks and
    have abelian-equivalent cores, for all factors of length <= max_n."""
    if k < 2:
        raise ValueError("k must be >= 2")
    report = CheckReport("characterization", {"m": m, "k": k, "max_n": max_n})
    with _Timed(report):
        for n in range(max_n + 1):
            factors = factor_set(m, n).sorted()
            buckets: dict[tuple, set] = {}
            keys = {}
            for U in factors:
                keys[U] = _factorization_keys(m, k - 1, U)
                for key in keys[U]:
                    buckets.setdefault(key, set()).add(U)
            sig_class: dict[object, set] = {}
            sigs = {U: signature(U, k) if n else None for U in factors}
            for U in factors:
                sig_class.setdefault(sigs[U], set()).add(U)
            for U in factors:
                related = set().union(*(buckets[key] for key in keys[U])) if keys[U] else set()
                equivalent = sig_class[sigs[U]]
                report.instances += len(factors)
                if related != equivalent:
                    V = min(related ^ equivalent)
                    report.fail(
                        n=n, U=str(U), V=str(V), binomially_equivalent=V in equivalent,
                        factorizations_match=V in related,
                    )
        shortest = 2 * m ** (k - 1)
        if max_n >= shortest:
            report.instances += 1
            found = shortest_equivalent_pair(m, k)[0]
            if found != shortest:
                report.fail(reason="shortest equivalent pair", found=found, expected=shortest)
    return report


def check_main_equiv(m: int, k: int, n: int) -> CheckReport:
    """Pair classes, the closed count and b^k agree; =_k matches ~_k pairwise."""
    report = CheckReport("main-equiv", {"m": m, "k": k, "n": n})
    with _Timed(report):
        population = pair_population(m, k, n)
        classes = pair_classes(m, k, population.values())
        counted = len(classes)
        formula = main_equiv_count(m, k, n)
        empirical = kbinomial_complexity(m, k, n)
        report.rows.append({"n": n, "pair_classes": counted, "formula": formula, "binomial": empirical})
        report.instances += 1
        if not counted == formula == empirical:
            report.fail(n=n, pair_classes=counted, formula=formula, binomial=empirical)
        for cls in classes:
            for p in cls:
                for q in cls:
                    if not equiv_k_pairs(m, k, p, q):
                        report.fail(n=n, reason="not transitive", p=[str(p.p), str(p.s)], q=[str(q.p), str(q.s)])
                        break
        factors = sorted(population)
        sigs = {U: signature(U, k) for U in factors}
        for i, U in enumerate(factors):
            for V in factors[i:]:
                report.instances += 1
                by_pair = equiv_k_pairs(m, k, population[U], population[V])
                by_sig = sigs[U] == sigs[V]
                if by_pair != by_sig:
                    report.fail(n=n, U=str(U), V=str(V), pair_equivalent=by_pair, binomially_equivalent=by_sig)
    return report


def _maybe(fn, *args) -> Optional[int]:
    try:
        return fn(*args)
    except FormulaDomainError:
        return None


def complexity_row(m: int, k: int, n: int) -> dict:
    """Empirical complexities at n next to every formula that applies there."""
    row = {
        "n": n,
        "factor": factor_complexity(m, n),
        "starosta_p": starosta_p(m, n),
        "abelian": abelian_complexity(m, n),
        "abelian_b1": abelian_b1(m, n),
    }
    if k >= 2:
        row["binomial"] = kbinomial_complexity(m, k, n)
        row["main_bk"] = main_bk(m, k, n)
        if m == 2:
            row["llr_b2k"] = llr_b2k(k, n)
        if k == 2:
            value = _maybe(lcw_b2, m, n)
            if value is not None:
                row["lcw_b2"] = value
    return row


def _row_mismatches(row: dict) -> list[str]:
    bad = []
    if row["factor"] != row["starosta_p"]:
        bad.append("starosta_p")
    if row["abelian"] != row["abelian_b1"]:
        bad.append("abelian_b1")
    for key in ("main_bk", "llr_b2k", "lcw_b2"):
        if key in row and row[key] != row["binomial"]:
            bad.append(key)
    return bad


def check_complexity_theorems(m: int, k: int, n_range: Iterable[int]) -> CheckReport:
    n_values = list(n_range)
    report = CheckReport(
        "theorems", {"m": m, "k": k, "n_from": min(n_values, default=None), "n_to": max(n_values, default=None)}
    )
    with _Timed(report):
        for n in n_values:
            row = complexity_row(m, k, n)
            report.rows.append(row)
            report.instances += 1
            bad = _row_mismatches(row)
            if bad:
                report.fail(n=n, formulas=bad, row=row)
    return report


def run_suite(
    suite: str, m: int, k: int, max_n: Optional[int] = None, seed: int = DEFAULT_SEED
) -> list[CheckReport]:
    """Run one named suite (or 'all') with desk-scale default grids."""
    if suite == "all":
        return [r for name in SUITES for r in run_suite(name, m, k, max_n, seed)]
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    if suite == "prop41":
        return [check_prop41(m, k)]
    if suite == "cor42":
        return [check_cor42(m, k, seed=seed)]
    if suite == "bothdir":
        return [check_prop23_bothdir(m, k)]
    if suite == "lemma43":
        return [check_lemma43(m, k)]
    if suite == "bigdiff":
        return [check_lemma44_bigdiff(m, max(k, 2), DEFAULT_INSTANCES, seed)]
    if suite == "characterization":
        return [check_characterization(m, max(k, 2), 2 * m**k + 2 if max_n is None else max_n)]
    if suite == "main-equiv":
        lo = 2 * m**k
        hi = 3 * m**k if max_n is None else max_n
        return [check_main_equiv(m, k, n) for n in range(lo, hi + 1)]
    hi = 3 * m**k if max_n is None else max_n
    return [check_complexity_theorems(m, k, range(0, hi + 1))]
