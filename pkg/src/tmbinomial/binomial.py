"""Binomial coefficients of words, k-binomial signatures and ~_k.

All counts are exact Python integers.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator

from . import limits
from .words import Word, WordLike, _same_alphabet, as_word, parikh


def binom(u: Word, w: Word) -> int:
    """Number of occurrences of `w` as a (scattered) subword of `u`."""
    _same_alphabet(u, w)
    target = w.letters
    n = len(target)
    if n == 0:
        return 1
    if n > len(u):
        return 0
    ways = [1] + [0] * n
    for c in u.letters:
        for j in range(n, 0, -1):
            if target[j - 1] == c:
                ways[j] += ways[j - 1]
    return ways[n]


def domain_size(m: int, k: int) -> int:
    """Number of nonempty words of length <= k over A_m."""
    return (m ** (k + 1) - m) // (m - 1)


def _offset(m: int, length: int) -> int:
    # index of the first word of the given length in canonical order
    return (m**length - m) // (m - 1)


def word_index(w: Word) -> int:
    idx = 0
    for a in w.letters:
        idx = idx * w.m + a
    return _offset(w.m, len(w)) + idx


@lru_cache(maxsize=None)
def canonical_words(m: int, k: int) -> tuple[Word, ...]:
    """All nonempty words of length <= k, length first then lexicographic."""
    return tuple(
        Word._make(m, letters)
        for length in range(1, k + 1)
        for letters in product(range(m), repeat=length)
    )


@lru_cache(maxsize=None)
def _update_plan(m: int, k: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    # for each letter c: (index, prefix index) pairs of words ending in c,
    # longest words first so each update reads pre-letter prefix counts
    plans = []
    for c in range(m):
        steps = []
        for length in range(k, 1, -1):
            off, prev_off = _offset(m, length), _offset(m, length - 1)
            for p in range(m ** (length - 1)):
                steps.append((off + p * m + c, prev_off + p))
        plans.append(tuple(steps))
    return tuple(plans)


@dataclass(frozen=True)
class BinomialSignature:
    """Counts of every nonempty subword of length <= k, in canonical order.

    Equality of signatures is exactly k-binomial equivalence.
    """

    m: int
    k: int
    length: int
    counts: tuple

    def __getitem__(self, w: WordLike) -> int:
        w = as_word(self.m, w)
        if not 1 <= len(w) <= self.k:
            raise KeyError(f"{w!s} is outside the depth-{self.k} domain")
        return self.counts[word_index(w)]

    def items(self) -> Iterator[tuple[Word, int]]:
        return zip(canonical_words(self.m, self.k), self.counts)

    def as_dict(self) -> dict[Word, int]:
        return dict(self.items())

    def to_json(self) -> str:
        return json.dumps(
            {
                "m": self.m,
                "k": self.k,
                "length": self.length,
                "counts": {str(w): str(c) for w, c in self.items()},
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "BinomialSignature":
        data = json.loads(text)
        m, k = data["m"], data["k"]
        counts = [0] * domain_size(m, k)
        seen = 0
        for key, value in data["counts"].items():
            counts[word_index(Word.parse(key, m))] = int(value)
            seen += 1
        if seen != len(counts):
            raise ValueError("signature JSON does not cover the full domain")
        return cls(m, k, data["length"], tuple(counts))

    def differences(self, other: "BinomialSignature") -> list[tuple[Word, int, int]]:
        return [
            (w, a, b)
            for w, a, b in zip(canonical_words(self.m, self.k), self.counts, other.counts)
            if a != b
        ]


def signature(u: Word, k: int) -> BinomialSignature:
    """All subword counts of `u` up to length k, in one left-to-right pass."""
    if k < 1:
        raise ValueError("depth k must be >= 1")
    m = u.m
    size = domain_size(m, k)
    limits.check("max_signature_domain", size)
    counts = [0] * size
    plan = _update_plan(m, k)
    for c in u.letters:
        for idx, prev in plan[c]:
            counts[idx] += counts[prev]
        counts[c] += 1
    return BinomialSignature(m, k, len(u), tuple(counts))


def equivalent_k(u: Word, v: Word, k: int) -> bool:
    """u ~_k v."""
    _same_alphabet(u, v)
    if len(u) != len(v):
        return False
    if u == v:
        return True
    if parikh(u) != parikh(v):
        return False
    if k == 1:
        return True
    return signature(u, k) == signature(v, k)
