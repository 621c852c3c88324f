"""Certified enumeration of Fac_n(t_m) and the empirical complexity functions.

Every enumeration route only ever produces genuine factors, so its count can
never exceed the closed-form factor complexity; matching it exactly is the
completeness certificate carried by each :class:`FactorSet`.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache

from . import limits
from .binomial import BinomialSignature, domain_size, signature
from .formulas import starosta_p
from .words import Word, as_word, parikh, sigma_image, tm_prefix


class InternalInvariantViolation(AssertionError):
    """Something that the theory guarantees did not happen: a bug."""


@dataclass(frozen=True)
class FactorSet:
    m: int
    n: int
    factors: frozenset
    method: str  # "desubstitution" or "prefix"
    exponent: int  # prefix exponent j scanned, or desubstitution depth
    certified_count: int

    def __len__(self) -> int:
        return len(self.factors)

    def __contains__(self, w: object) -> bool:
        return w in self.factors

    def __iter__(self):
        return iter(self.factors)

    def sorted(self) -> list[Word]:
        return sorted(self.factors)

    def to_json(self) -> str:
        return json.dumps([str(w) for w in self.sorted()])


@dataclass(frozen=True)
class ClassPartition:
    k: int
    classes: list = field(default_factory=list)  # [(signature, tuple[Word, ...])]

    def __len__(self) -> int:
        return len(self.classes)

    def class_of(self, w: Word) -> tuple:
        for _, members in self.classes:
            if w in members:
                return members
        raise KeyError(str(w))


def _start_exponent(m: int, n: int) -> int:
    target = max(n, 2)
    j = 0
    while m**j < target:
        j += 1
    return j + 1


def _certify(m: int, n: int, found: int) -> int:
    expected = starosta_p(m, n)
    if found > expected:
        raise InternalInvariantViolation(
            f"{found} factors of length {n} in t_{m}, formula allows {expected}"
        )
    return expected


@lru_cache(maxsize=None)
def _images(m: int) -> tuple:
    return tuple(sigma_image(m, a).letters for a in range(m))


@lru_cache(maxsize=1024)
def _desubstituted(m: int, n: int) -> tuple[frozenset, int]:
    # Fac_n = windows of sigma(w), w in Fac_{n'}, n' = ceil((n-1)/m) + 1;
    # n = 2 is the fixpoint of that rule seeded with the prefix 01 of t_m.
    images = _images(m)
    if n == 2:
        pairs = {(0, 1)}
        frontier = set(pairs)
        while frontier:
            fresh = set()
            for a, b in frontier:
                img = images[a] + images[b]
                fresh.update(img[i : i + 2] for i in range(2 * m - 1))
            frontier = fresh - pairs
            pairs |= frontier
        return frozenset(pairs), 1
    if n == 1:
        pairs, depth = _desubstituted(m, 2)
        return frozenset(p[:1] for p in pairs), depth
    parent_len = -(-(n - 1) // m) + 1
    parents, depth = _desubstituted(m, parent_len)
    out = set()
    for w in parents:
        img = tuple(x for a in w for x in images[a])
        out.update(img[i : i + n] for i in range(len(img) - n + 1))
    return frozenset(out), depth + 1


def factor_set(m: int, n: int) -> FactorSet:
    """All length-n factors of t_m, certified against the closed formula.

    Every length-n factor of t_m = sigma(t_m) sits inside sigma(w) for some
    factor w of length ceil((n-1)/m) + 1, which gives an exact recursion
    down to length 2.
    """
    if m < 2:
        raise ValueError("m must be >= 2")
    if n < 0:
        raise ValueError("n must be non-negative")
    limits.check("max_factor_length", n)  # outside the cache, so hits are capped too
    return _factor_set(m, n)


@lru_cache(maxsize=512)
def _factor_set(m: int, n: int) -> FactorSet:
    if n == 0:
        return FactorSet(m, 0, frozenset([Word.empty(m)]), "desubstitution", 0, 1)
    windows, depth = _desubstituted(m, n)
    expected = _certify(m, n, len(windows))
    if len(windows) != expected:
        raise InternalInvariantViolation(
            f"desubstitution found {len(windows)} factors of length {n} in t_{m}, "
            f"formula says {expected}"
        )
    return FactorSet(
        m, n, frozenset(Word._make(m, w) for w in windows), "desubstitution", depth, expected
    )


def prefix_factor_set(m: int, n: int) -> FactorSet:
    """Same set, from windows of ever longer prefixes t_m[:m^j].

    Stops when the count reaches the closed formula.  Only practical for
    small m: some squares aa first occur near position m^m.
    """
    if n == 0:
        return FactorSet(m, 0, frozenset([Word.empty(m)]), "prefix", 0, 1)
    limits.check("max_factor_length", n)
    j = _start_exponent(m, n)
    cap = limits.current().max_certificate_exponent
    while True:
        if j > cap:
            raise limits.ResourceCapExceeded("max_certificate_exponent", j, cap)
        letters = tm_prefix(m, m**j).letters
        windows = {letters[i : i + n] for i in range(len(letters) - n + 1)}
        expected = _certify(m, n, len(windows))
        if len(windows) == expected:
            return FactorSet(
                m, n, frozenset(Word._make(m, w) for w in windows), "prefix", j, expected
            )
        j += 1


def is_factor(m: int, w) -> bool:
    w = as_word(m, w)
    return w in factor_set(m, len(w))


def factor_complexity(m: int, n: int) -> int:
    return len(factor_set(m, n))


def abelian_complexity(m: int, n: int) -> int:
    return len({parikh(w) for w in factor_set(m, n)})


def factor_signatures(m: int, k: int, n: int) -> dict:
    """Map each length-n factor to its depth-k signature."""
    limits.check("max_signature_domain", domain_size(m, k))
    return _factor_signatures(m, k, n)


@lru_cache(maxsize=256)
def _factor_signatures(m: int, k: int, n: int) -> dict:
    return {w: signature(w, k) for w in factor_set(m, n)}


def kbinomial_complexity(m: int, k: int, n: int) -> int:
    """Number of ~_k classes among the length-n factors of t_m."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1:
        return abelian_complexity(m, n)
    return len(set(factor_signatures(m, k, n).values()))


def class_partition(m: int, k: int, n: int) -> ClassPartition:
    groups: dict[BinomialSignature, list[Word]] = {}
    for w, sig in factor_signatures(m, k, n).items():
        groups.setdefault(sig, []).append(w)
    classes = [(sig, tuple(sorted(ws))) for sig, ws in groups.items()]
    classes.sort(key=lambda c: c[1][0])
    return ClassPartition(k, classes)


def shortest_equivalent_pair(m: int, k: int) -> tuple[int, Word, Word]:
    """Smallest n with two distinct ~_k-equivalent factors, plus a witness pair."""
    if k < 2:
        raise ValueError("k must be >= 2")
    n = 1
    while True:
        for _, members in class_partition(m, k, n).classes:
            if len(members) > 1:
                return n, members[0], members[1]
        n += 1


def has_overlap(w: Word) -> bool:
    """True if w contains a factor a u a u a (a a letter, u possibly empty)."""
    s = w.letters
    n = len(s)
    for period in range(1, (n - 1) // 2 + 1):
        run = 0
        for i in range(period, n):
            if s[i] == s[i - period]:
                run += 1
                if run >= period + 1:
                    return True
            else:
                run = 0
    return False
