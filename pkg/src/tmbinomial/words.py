"""Words over A_m = Z/mZ, the symmetric morphism sigma_m, the shift tau_m and t_m."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union, overload

from . import limits

ParikhVector = tuple  # tuple[int, ...] of length m


class AlphabetMismatch(ValueError):
    pass


@dataclass(frozen=True, order=True, slots=True)
class Word:
    """An immutable finite word over {0, ..., m-1}.

    Letters are stored as a tuple of ints.  Two words compare equal iff they
    share the alphabet size and their letters agree; ordering is lexicographic.
    """

    m: int
    letters: tuple

    def __post_init__(self) -> None:
        if self.m < 2:
            raise ValueError(f"alphabet size must be >= 2, got {self.m}")
        letters = tuple(self.letters)
        for a in letters:
            if not 0 <= a < self.m:
                raise ValueError(f"letter {a} outside alphabet of size {self.m}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def _make(cls, m: int, letters: tuple) -> "Word":
        # trusted constructor: letters already reduced, m already validated
        w = object.__new__(cls)
        object.__setattr__(w, "m", m)
        object.__setattr__(w, "letters", letters)
        return w

    @classmethod
    def empty(cls, m: int) -> "Word":
        return cls(m, ())

    @classmethod
    def parse(cls, text: str, m: int) -> "Word":
        """Parse digit-string (m <= 10) or comma-separated notation."""
        text = text.strip()
        if not text:
            return cls(m, ())
        if "," in text or m > 10:
            letters = tuple(int(tok) for tok in text.split(","))
        else:
            letters = tuple(int(ch) for ch in text)
        return cls(m, letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    @overload
    def __getitem__(self, i: int) -> int: ...
    @overload
    def __getitem__(self, i: slice) -> "Word": ...

    def __getitem__(self, i):
        if isinstance(i, slice):
            return Word._make(self.m, self.letters[i])
        return self.letters[i]

    def __add__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        _same_alphabet(self, other)
        return Word._make(self.m, self.letters + other.letters)

    def __mul__(self, times: int) -> "Word":
        return Word._make(self.m, self.letters * times)

    def __str__(self) -> str:
        return serialize(self)

    def __repr__(self) -> str:
        return f"Word({serialize(self)!r}, m={self.m})"

    def count(self, a: int) -> int:
        return self.letters.count(a % self.m)


def _same_alphabet(u: Word, v: Word) -> None:
    if u.m != v.m:
        raise AlphabetMismatch(f"alphabet sizes differ: {u.m} vs {v.m}")


def serialize(w: Word) -> str:
    if w.m <= 10:
        return "".join(map(str, w.letters))
    return ",".join(map(str, w.letters))


WordLike = Union[Word, str, Sequence[int]]


def as_word(m: int, w: WordLike) -> Word:
    """Coerce a string or letter sequence into a :class:`Word` over A_m."""
    if isinstance(w, Word):
        if w.m != m:
            raise AlphabetMismatch(f"word over A_{w.m} used where A_{m} expected")
        return w
    if isinstance(w, str):
        return Word.parse(w, m)
    return Word(m, tuple(w))


def concat(m: int, parts: Iterable[Word]) -> Word:
    letters: list[int] = []
    for p in parts:
        if p.m != m:
            raise AlphabetMismatch(f"word over A_{p.m} used where A_{m} expected")
        letters.extend(p.letters)
    return Word._make(m, tuple(letters))


def sigma_image(m: int, a: int) -> Word:
    """sigma_m(a) = a (a+1) ... (a+m-1)."""
    a %= m
    return Word._make(m, tuple((a + i) % m for i in range(m)))


def _digit_sums(m: int, length: int) -> list[int]:
    # s[p] = (sum of base-m digits of p) mod m, via carry propagation
    limits.check("max_prefix", length)
    out = [0] * length
    digits: list[int] = []
    s = 0
    for p in range(1, length):
        i = 0
        while i < len(digits) and digits[i] == m - 1:
            digits[i] = 0
            s -= m - 1
            i += 1
        if i == len(digits):
            digits.append(1)
        else:
            digits[i] += 1
        s += 1
        out[p] = s % m
    return out


def sigma_power(m: int, k: int, w: WordLike) -> Word:
    """Apply sigma_m k times.  The result has length m**k * |w|."""
    if k < 0:
        raise ValueError("k must be non-negative")
    w = as_word(m, w)
    if k == 0:
        return w
    block = m**k
    limits.check("max_prefix", block * len(w))
    # sigma^k(a)[p] = a + s_m(p) mod m
    base = _digit_sums(m, block)
    letters: list[int] = []
    for a in w.letters:
        letters.extend((a + s) % m for s in base)
    return Word._make(m, tuple(letters))


def tau_apply(m: int, j: int, w: WordLike) -> Word:
    """Add j (mod m) to every letter."""
    w = as_word(m, w)
    j %= m
    return Word._make(m, tuple((a + j) % m for a in w.letters))


def tm_letter(m: int, j: int) -> int:
    """The j-th letter of t_m: base-m digit sum of j, reduced mod m."""
    if j < 0:
        raise ValueError("index must be non-negative")
    s = 0
    while j:
        j, d = divmod(j, m)
        s += d
    return s % m


def tm_prefix(m: int, length: int) -> Word:
    """First `length` letters of t_m, built in O(length)."""
    if m < 2:
        raise ValueError("m must be >= 2")
    if length < 0:
        raise ValueError("length must be non-negative")
    return Word._make(m, tuple(_digit_sums(m, length)))


def parikh(w: Word) -> ParikhVector:
    counts = [0] * w.m
    for a in w.letters:
        counts[a] += 1
    return tuple(counts)
