"""Closed-form complexity functions of the generalized Thue-Morse word t_m.

Each evaluator is exact integer arithmetic and refuses (FormulaDomainError)
to evaluate outside the range its source result covers.
"""
from __future__ import annotations

from math import comb
from typing import Callable, Optional


class FormulaDomainError(ValueError):
    """A formula was asked for a value outside its stated hypotheses."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


def starosta_p(m: int, n: int) -> int:
    """Factor complexity p(n) of t_m."""
    if m < 1:
        raise FormulaDomainError(f"starosta_p: m={m} < 1")
    if n < 0:
        raise FormulaDomainError(f"starosta_p: n={n} < 0")
    if n == 0:
        return 1
    if m == 1:
        return 1
    if n == 1:
        return m
    if n <= m:
        return m * m * (n - 1) - m * (n - 2)
    # unique k >= 1 with m^k + 1 <= n <= m^(k+1)
    k = 1
    while m ** (k + 1) < n:
        k += 1
    mk = m**k
    base = m * m * (n - 1) - m * mk + mk
    knee = 2 * mk - mk // m
    if n <= knee:
        return base
    # slope drops to m^2 - m past the knee
    return base - m * (n - knee - 1)


def abelian_b1(m: int, n: int) -> int:
    """Abelian complexity of t_m (short lengths and the periodic regime)."""
    if m < 2:
        raise FormulaDomainError(f"abelian_b1: m={m} < 2")
    if n < 0:
        raise FormulaDomainError(f"abelian_b1: n={n} < 0")
    if n == 0:
        return 1
    if n < m:
        if n % 2:
            h = n // 2
            return m * (1 - h - h * h + h * m)
        return m * (6 - n * n - 2 * m + 2 * n * m) // 4
    nu = n % m
    if m % 2:
        if nu == 0:
            return m * (m * m - 1) // 4 + 1
        return m * (m - 1) ** 2 // 4 + m
    if nu == 0:
        return m**3 // 4 + 1
    if nu % 2 == 0:
        return (m * (m - 1) ** 2 + 5 * m) // 4
    return m * m * (m - 2) // 4 + m


def lcw_b2(m: int, n: int) -> int:
    """2-binomial complexity of t_m for m >= 3 and n >= m^2."""
    if m < 3 or n < m * m:
        raise FormulaDomainError(f"lcw_b2 needs m >= 3 and n >= m^2, got m={m}, n={n}")
    if n % m == 0:
        return abelian_b1(m, n // m) + m * (m - 1) * (m * (m - 1) + 1)
    return m**4 - 2 * m**3 + 2 * m**2


def llr_b2k(k: int, n: int) -> int:
    """k-binomial complexity of the classical Thue-Morse word t_2."""
    if k < 1 or n < 0:
        raise FormulaDomainError(f"llr_b2k needs k >= 1, n >= 0, got k={k}, n={n}")
    if n < 2**k:
        return starosta_p(2, n)
    return 3 * 2**k - (3 if n % 2**k == 0 else 4)


def edge_count_E(m: int, nu: int) -> int:
    """Number of edges of the abelian Rauzy graph G_{m,nu}, 1 <= nu <= 2m."""
    if not 1 <= nu <= 2 * m:
        raise FormulaDomainError(f"edge_count_E needs 1 <= nu <= 2m, got m={m}, nu={nu}")
    if nu < m:
        return m * (1 + nu * m - nu)
    return m**3 - m**2 + m


def y_count_Y(m: int, nu: int) -> int:
    """#Y_m(nu) = #Y_{m,R}(nu) + #Y_{m,L}(nu), 1 <= nu < 2m."""
    if not 1 <= nu < 2 * m:
        raise FormulaDomainError(f"y_count_Y needs 1 <= nu < 2m, got m={m}, nu={nu}")
    if nu < m:
        return 2 * m * (1 + nu * m - nu) - m * nu * (nu - 1)
    return m**3 - m**2 + 2 * m


def _periodic_tail(m: int, nu: int) -> int:
    # G_{m, l + j m} is isomorphic to G_{m, l} for m <= l < 2m
    return nu if nu < 2 * m else m + (nu - m) % m


def prop55_bk(
    m: int,
    k: int,
    j: int,
    r: int,
    edges: Optional[Callable[[int], int]] = None,
    ysize: Optional[Callable[[int], int]] = None,
    b1: Optional[Callable[[int], int]] = None,
) -> int:
    """b^k(j m^(k-1) + r) from abelian Rauzy graph quantities.

    `edges`, `ysize` and `b1` map an order l to #E_m(l), #Y_m(l) and b^1(l);
    by default the closed forms are used, so passing brute-force counts
    turns this into an independent cross-check.
    """
    if k < 2 or j < 2 or not 0 <= r < m ** (k - 1):
        raise FormulaDomainError(
            f"prop55_bk needs k >= 2, j >= 2, 0 <= r < m^(k-1); got k={k}, j={j}, r={r}"
        )
    if edges is None:
        edges = lambda l: edge_count_E(m, _periodic_tail(m, l))  # noqa: E731
    if ysize is None:
        ysize = lambda l: y_count_Y(m, _periodic_tail(m, l))  # noqa: E731
    if b1 is None:
        b1 = lambda l: abelian_b1(m, l)  # noqa: E731
    block = m ** (k - 1)
    if r == 0:
        return (block - 1) * edges(j) + b1(j)
    return (r - 1) * edges(j + 1) + (block - r - 1) * edges(j) + ysize(j)


def main_equiv_count(m: int, k: int, n: int) -> int:
    """Number of classes of (p_U, s_U) pairs under the pair equivalence, n >= 2 m^k."""
    if k < 2 or n < 2 * m**k:
        raise FormulaDomainError(f"main_equiv_count needs k >= 2, n >= 2m^k; got k={k}, n={n}")
    block = m ** (k - 1)
    nu, mu = divmod(n % m**k, block)
    head = (block - 1) * (m**3 - m**2 + m)
    return head + (abelian_b1(m, m + nu) if mu == 0 else m)


def main_bk(m: int, k: int, n: int) -> int:
    """k-binomial complexity of t_m for every n >= 0 (k >= 2)."""
    if m < 2 or k < 2 or n < 0:
        raise FormulaDomainError(f"main_bk needs m >= 2, k >= 2, n >= 0; got {m}, {k}, {n}")
    block = m ** (k - 1)
    if n < 2 * block:
        return starosta_p(m, n)
    if n < 2 * m**k:
        nu, mu = divmod(n, block)
        if mu == 0:
            return (block - 1) * edge_count_E(m, nu) + abelian_b1(m, nu)
        return (
            (mu - 1) * edge_count_E(m, nu + 1)
            + (block - mu - 1) * edge_count_E(m, nu)
            + y_count_Y(m, nu)
        )
    return main_equiv_count(m, k, n)


def prop41_difference(m: int, k: int) -> int:
    return m ** comb(k, 2)
