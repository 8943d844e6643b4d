"""Closed-form generators for Eulerian-type polynomial families.

Eulerian polynomials here count *weak* excedances, so ``A_1 = t`` and
``A_n`` is the descent Eulerian polynomial shifted by one degree for n >= 1.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .polycore import ONE, ZERO, Poly, Rational

__all__ = [
    "eulerian_numbers", "eulerian_polynomial", "derangement_polynomial",
    "binomial_eulerian", "stirling2", "stirling_polynomial",
]


@lru_cache(maxsize=None)
def eulerian_numbers(n: int) -> tuple[int, ...]:
    """Row n of the descent triangle: entry k counts permutations with k descents."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    row = (1,)
    for m in range(1, n + 1):
        # E(m, k) = (k+1) E(m-1, k) + (m-k) E(m-1, k-1)
        prev = row + (0,)
        row = tuple((k + 1) * prev[k] + (m - k) * (prev[k - 1] if k else 0)
                    for k in range(m))
    return row


@lru_cache(maxsize=None)
def eulerian_polynomial(n: int) -> Poly:
    """A_n(t), e.g. ``A_3 = t + 4t^2 + t^3``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return ONE
    return Poly((0,) + eulerian_numbers(n))


@lru_cache(maxsize=None)
def derangement_polynomial(n: int) -> Poly:
    """Excedance polynomial over derangements of [n].

    Solved from ``A_n = sum_k C(n,k) t^(n-k) d_k`` by peeling off the k < n
    terms.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    acc = eulerian_polynomial(n)
    for k in range(n):
        acc = acc - derangement_polynomial(k).shift(n - k) * comb(n, k)
    return acc


def binomial_eulerian(n: int, r: Rational = 1) -> Poly:
    """The image of ``(r t + 1)**n`` under the Eulerian transformation."""
    r = Fraction(r)
    if n < 0 or r <= 0:
        raise ValueError("need n >= 0 and r > 0")
    return sum((eulerian_polynomial(k) * (comb(n, k) * r ** k) for k in range(n + 1)), ZERO)


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    if n == k:
        return 1
    if k <= 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def stirling_polynomial(l: int) -> Poly:
    """``sum_k k! S(l,k) t^k``, with the empty-flag convention ``S_0 = 1``."""
    if l < 0:
        raise ValueError("l must be nonnegative")
    if l == 0:
        return ONE
    return Poly([0] + [factorial(k) * stirling2(l, k) for k in range(1, l + 1)])
