"""sigma^k-factorizations of factors of t_m, Dumont-Thomas block decompositions,
the (p_U, s_U) pair attached to a long factor, and the pair relation =_k.

A factorization U = x sigma^k(u) y is *valid* when x is a proper suffix of
sigma^k(a), y a proper prefix of sigma^k(b), and a u b occurs in t_m (a and
b are dropped when x, resp. y, is empty).
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .factors import InternalInvariantViolation, factor_set, is_factor
from .words import Word, WordLike, _digit_sums, as_word, concat, sigma_power


class NotAFactor(ValueError):
    """The word does not occur in t_m."""


class TooShort(ValueError):
    """Uniqueness of the factorization needs |U| >= 2 m^k."""


class MalformedPair(ValueError):
    """A block that should be a sigma-image does not decode."""


@lru_cache(maxsize=64)
def _image_sums(m: int, k: int) -> tuple:
    # sigma^k(a)[p] = a + s[p] (mod m)
    return tuple(_digit_sums(m, m**k))


def _image_slice(m: int, k: int, a: int, start: int, stop: int) -> tuple:
    sums = _image_sums(m, k)
    return tuple((a + sums[p]) % m for p in range(start, stop))


def _decode_blocks(m: int, k: int, w: tuple) -> Optional[tuple]:
    """Letters u with sigma^k(u) == w, or None."""
    size = m**k
    if len(w) % size:
        return None
    sums = _image_sums(m, k)
    out = []
    for start in range(0, len(w), size):
        a = w[start]
        for p in range(size):
            if w[start + p] != (a + sums[p]) % m:
                return None
        out.append(a)
    return tuple(out)


# -- factorizations -----------------------------------------------------------


@dataclass(frozen=True)
class SigmaFactorization:
    m: int
    k: int
    x: Word
    u: Word
    y: Word
    a: Optional[int]
    b: Optional[int]

    def reassemble(self) -> Word:
        return self.x + sigma_power(self.m, self.k, self.u) + self.y

    def context(self) -> Word:
        """The word a u b, with absent letters dropped."""
        head = () if self.a is None else (self.a,)
        tail = () if self.b is None else (self.b,)
        return Word._make(self.m, head + self.u.letters + tail)

    def as_dict(self) -> dict:
        return {
            "x": str(self.x),
            "u": str(self.u),
            "y": str(self.y),
            "a": self.a,
            "b": self.b,
            "k": self.k,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict())

    @classmethod
    def from_json(cls, text: str, m: int) -> "SigmaFactorization":
        d = json.loads(text)
        return cls(
            m,
            d["k"],
            Word.parse(d["x"], m),
            Word.parse(d["u"], m),
            Word.parse(d["y"], m),
            d["a"],
            d["b"],
        )


def _require_factor(m: int, U: Word) -> None:
    if U not in factor_set(m, len(U)):
        raise NotAFactor(f"{U} is not a factor of t_{m}")


def _candidate(m: int, k: int, U: Word, cut: int) -> Optional[SigmaFactorization]:
    size = m**k
    s = U.letters
    a = b = None
    if cut:
        a = (s[cut - 1] + k) % m  # sigma^k(a) ends with a - k
        if s[:cut] != _image_slice(m, k, a, size - cut, size):
            return None
    rest = s[cut:]
    blocks = len(rest) // size
    core = _decode_blocks(m, k, rest[: blocks * size])
    if core is None:
        return None
    tail = rest[blocks * size :]
    if tail:
        b = tail[0]
        if tail != _image_slice(m, k, b, 0, len(tail)):
            return None
    return SigmaFactorization(
        m, k, Word._make(m, s[:cut]), Word._make(m, core), Word._make(m, tail), a, b
    )


def enumerate_factorizations(m: int, k: int, U: WordLike) -> list[SigmaFactorization]:
    """Every valid sigma^k-factorization of the factor U, ordered by |x|."""
    if k < 1:
        raise ValueError("k must be >= 1")
    U = as_word(m, U)
    _require_factor(m, U)
    out = []
    for cut in range(min(m**k, len(U) + 1)):
        f = _candidate(m, k, U, cut)
        if f is not None and is_factor(m, f.context()):
            out.append(f)
    return out


def unique_factorization(m: int, k: int, U: WordLike) -> SigmaFactorization:
    U = as_word(m, U)
    _require_factor(m, U)
    if len(U) < 2 * m**k:
        raise TooShort(f"|U| = {len(U)} < 2 m^k = {2 * m**k}")
    found = enumerate_factorizations(m, k, U)
    if len(found) != 1:
        raise InternalInvariantViolation(
            f"{U} has {len(found)} sigma^{k}-factorizations, expected exactly one"
        )
    return found[0]


# -- Dumont-Thomas decompositions ---------------------------------------------


@dataclass(frozen=True)
class DTDecomposition:
    """A proper prefix (or suffix) of sigma^k(anchor) peeled into layers.

    Prefix side: word = prod_i sigma^(k-i)(v_i), digits most significant first.
    Suffix side: word = prod_i sigma^(i-1)(v_i), digits least significant first.
    """

    m: int
    k: int
    side: str
    anchor: int
    digits: tuple
    parts: tuple

    def reassemble(self) -> Word:
        if self.side == "prefix":
            layers = [sigma_power(self.m, self.k - i, v) for i, v in enumerate(self.parts, 1)]
        else:
            layers = [sigma_power(self.m, i - 1, v) for i, v in enumerate(self.parts, 1)]
        return concat(self.m, layers)

    def length(self) -> int:
        if self.side == "prefix":
            return sum(c * self.m ** (self.k - i) for i, c in enumerate(self.digits, 1))
        return sum(c * self.m ** (i - 1) for i, c in enumerate(self.digits, 1))

    def as_dict(self) -> dict:
        return {
            "side": self.side,
            "anchor": self.anchor,
            "digits": list(self.digits),
            "parts": [str(v) for v in self.parts],
        }


def _check_length(m: int, k: int, L: int) -> None:
    if k < 1:
        raise ValueError("k must be >= 1")
    if not 0 <= L < m**k:
        raise ValueError(f"length {L} is not in [0, {m**k})")


def image_prefix(m: int, k: int, j: int, L: int) -> tuple[Word, DTDecomposition]:
    """The length-L prefix of sigma^k(j) and its greedy layer decomposition."""
    _check_length(m, k, L)
    j %= m
    digits, parts = [], []
    letter, rest = j, L
    for level in range(k - 1, -1, -1):
        c, rest = divmod(rest, m**level)
        digits.append(c)
        parts.append(Word._make(m, tuple((letter + t) % m for t in range(c))))
        letter = (letter + c) % m
    word = Word._make(m, _image_slice(m, k, j, 0, L))
    return word, DTDecomposition(m, k, "prefix", j, tuple(digits), tuple(parts))


def image_suffix(m: int, k: int, j: int, L: int) -> tuple[Word, DTDecomposition]:
    """The length-L suffix of sigma^k(j) and its greedy layer decomposition."""
    _check_length(m, k, L)
    j %= m
    digits, parts = [0] * k, [Word.empty(m)] * k
    letter, rest = j, L
    for level in range(k - 1, -1, -1):
        c, rest = divmod(rest, m**level)
        digits[level] = c
        # last c letters of sigma(letter) = letter + m - c, ..., letter + m - 1
        parts[level] = Word._make(m, tuple((letter - c + t) % m for t in range(c)))
        letter = (letter - 1 - c) % m
    size = m**k
    word = Word._make(m, _image_slice(m, k, j, size - L, size))
    return word, DTDecomposition(m, k, "suffix", j, tuple(digits), tuple(parts))


# -- (p_U, s_U) pairs ---------------------------------------------------------


@dataclass(frozen=True, order=True)
class PSPair:
    m: int
    k: int
    p: Word
    s: Word

    def __post_init__(self) -> None:
        size = self.m**self.k
        if len(self.p) >= size or len(self.s) >= size:
            raise MalformedPair(f"blocks must be shorter than m^k = {size}")

    def p_anchor(self) -> Optional[int]:
        return (self.p[-1] + self.k) % self.m if len(self.p) else None

    def s_anchor(self) -> Optional[int]:
        return self.s[0] if len(self.s) else None

    def p_decomposition(self) -> DTDecomposition:
        word, dt = image_suffix(self.m, self.k, self.p_anchor() or 0, len(self.p))
        if word != self.p:
            raise MalformedPair(f"{self.p} is not a suffix of a sigma^{self.k}-image")
        return dt

    def s_decomposition(self) -> DTDecomposition:
        word, dt = image_prefix(self.m, self.k, self.s_anchor() or 0, len(self.s))
        if word != self.s:
            raise MalformedPair(f"{self.s} is not a prefix of a sigma^{self.k}-image")
        return dt


def ps_pair(m: int, k: int, U: WordLike) -> PSPair:
    f = unique_factorization(m, k, U)
    return PSPair(m, k, f.x, f.y)


def _split_pair(pair: PSPair) -> tuple[tuple, tuple, tuple, tuple]:
    # p = x sigma^(k-1)(p'), s = sigma^(k-1)(q') y with |x|, |y| < m^(k-1)
    m, k = pair.m, pair.k
    block = m ** (k - 1)
    p, s = pair.p.letters, pair.s.letters
    cut_p = len(p) % block
    cut_s = len(s) - len(s) % block
    inner_p = _decode_blocks(m, k - 1, p[cut_p:])
    inner_s = _decode_blocks(m, k - 1, s[:cut_s])
    if inner_p is None or inner_s is None:
        raise MalformedPair(f"({pair.p}, {pair.s}) has a block that is not a sigma^{k - 1}-image")
    return p[:cut_p], inner_p, inner_s, s[cut_s:]


def _parikh_letters(m: int, letters: tuple) -> list[int]:
    counts = [0] * m
    for a in letters:
        counts[a] += 1
    return counts


def equiv_k_pairs(m: int, k: int, pair1: PSPair, pair2: PSPair) -> bool:
    """The relation =_k between two (p, s) pairs."""
    if k < 2:
        raise ValueError("k must be >= 2")
    for pair in (pair1, pair2):
        if pair.m != m or pair.k != k:
            raise MalformedPair("pair parameters do not match (m, k)")
    x1, p1, q1, y1 = _split_pair(pair1)
    x2, p2, q2, y2 = _split_pair(pair2)
    if x1 != x2 or y1 != y2:
        return False
    left = _parikh_letters(m, p1 + q1)
    right = _parikh_letters(m, p2 + q2)
    diff = {a - b for a, b in zip(left, right)}
    return diff == {0} or diff == {1} or diff == {-1}


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, i: int) -> int:
        while self.parent[i] != i:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def union(self, i: int, j: int) -> None:
        ri, rj = self.find(i), self.find(j)
        if ri != rj:
            self.parent[max(ri, rj)] = min(ri, rj)


def pair_population(m: int, k: int, n: int) -> dict[Word, PSPair]:
    """ps_pair of every factor of length n >= 2 m^k."""
    if n < 2 * m**k:
        raise TooShort(f"n = {n} < 2 m^k = {2 * m**k}")
    return {U: ps_pair(m, k, U) for U in factor_set(m, n).sorted()}


def pair_classes(m: int, k: int, pairs) -> list[list[PSPair]]:
    """Group pairs into connected components of =_k, smallest pair first."""
    pairs = sorted(set(pairs))
    uf = _UnionFind(len(pairs))
    for i in range(len(pairs)):
        for j in range(i + 1, len(pairs)):
            if equiv_k_pairs(m, k, pairs[i], pairs[j]):
                uf.union(i, j)
    groups: dict[int, list[PSPair]] = {}
    for i, pair in enumerate(pairs):
        groups.setdefault(uf.find(i), []).append(pair)
    return sorted(groups.values())


def count_pair_classes(m: int, k: int, n: int) -> int:
    """Number of =_k classes among the pairs (p_U, s_U), U of length n."""
    return len(pair_classes(m, k, pair_population(m, k, n).values()))


def factorization_summary(m: int, k: int, U: WordLike) -> dict:
    """Everything the CLI prints for one word, as plain data."""
    U = as_word(m, U)
    found = enumerate_factorizations(m, k, U)
    out: dict = {
        "m": m,
        "k": k,
        "word": str(U),
        "factorizations": [f.as_dict() for f in found],
    }
    if len(U) >= 2 * m**k:
        pair = ps_pair(m, k, U)
        out["unique"] = unique_factorization(m, k, U).as_dict()
        out["p"] = str(pair.p)
        out["s"] = str(pair.s)
        out["p_decomposition"] = pair.p_decomposition().as_dict()
        out["s_decomposition"] = pair.s_decomposition().as_dict()
    return out


__all__ = [
    "DTDecomposition",
    "MalformedPair",
    "NotAFactor",
    "PSPair",
    "SigmaFactorization",
    "TooShort",
    "count_pair_classes",
    "enumerate_factorizations",
    "equiv_k_pairs",
    "factorization_summary",
    "image_prefix",
    "image_suffix",
    "pair_classes",
    "pair_population",
    "ps_pair",
    "unique_factorization",
]
