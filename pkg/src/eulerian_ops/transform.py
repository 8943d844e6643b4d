"""The Eulerian transformation and the decompositions built on it."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from .errors import SizeBoundError
from .eulerian import eulerian_polynomial
from .polycore import (
    T, ZERO, Poly, Rational, divide_exact, f_to_h, is_real_rooted,
    is_unimodal, reverse,
)

__all__ = [
    "NotSymmetricError", "SymmetricDecomposition", "GammaVector",
    "apply_operator", "elementary_symmetric", "operator_on_linear_factors",
    "eulerian_series_polynomial", "symmetric_decomposition",
    "is_alternatingly_increasing", "has_unimodal_decomposition",
    "gamma_expansion", "cone_coordinates",
    "cone_polynomial", "probe_conjecture", "probe_vector", "newton_ok",
    "shifted_power_image",
]

ONE_MINUS_T = Poly([1, -1])


class NotSymmetricError(ValueError):
    pass


def apply_operator(f: Poly) -> Poly:
    """Linear extension of ``t**k -> A_k(t)``."""
    return sum((eulerian_polynomial(k) * c for k, c in enumerate(f.coeffs) if c), ZERO)


def shifted_power_image(n: int, q: Rational) -> Poly:
    """The image of ``(t + q)**n``."""
    return apply_operator(Poly([q, 1]) ** n)


def elementary_symmetric(values: Sequence) -> list:
    """``[e_0, e_1, ..., e_n]`` of the given values (numbers or polynomials)."""
    es = [1] + [0] * len(values)
    for i, v in enumerate(values):
        for k in range(i + 1, 0, -1):
            es[k] = es[k] + es[k - 1] * v
    return es


def operator_on_linear_factors(thetas: Sequence[Rational]) -> Poly:
    """``sum_k e_{n-k}(thetas) A_k``, the image of ``prod (t + theta_i)``."""
    thetas = [Fraction(x) for x in thetas]
    n = len(thetas)
    es = elementary_symmetric(thetas)
    return sum((eulerian_polynomial(k) * es[n - k] for k in range(n + 1)), ZERO)


def eulerian_series_polynomial(n: int, x: Rational) -> Poly:
    """Image of ``(1 + x t / n)**n``; real-rootedness fails for large n."""
    x = Fraction(x)
    if n < 1 or x <= 0:
        raise ValueError("need n >= 1 and x > 0")
    return apply_operator(Poly([1, x / n]) ** n)


@dataclass(frozen=True)
class SymmetricDecomposition:
    a: Poly
    b: Poly
    n: int

    def __post_init__(self):
        if self.a != reverse(self.a, self.n):
            raise NotSymmetricError("a is not palindromic of degree n")
        if self.n > 0 and self.b != reverse(self.b, self.n - 1):
            raise NotSymmetricError("b is not palindromic of degree n-1")
        if self.n == 0 and self.b:
            raise NotSymmetricError("b must vanish when n = 0")

    def recombine(self) -> Poly:
        return self.a + T * self.b


def symmetric_decomposition(f: Poly, n: int) -> SymmetricDecomposition:
    """Unique ``f = a + t b`` with a symmetric about n and b about n - 1."""
    rev = reverse(f, n)
    a = divide_exact(f - T * rev, ONE_MINUS_T)
    b = divide_exact(rev - f, ONE_MINUS_T)
    dec = SymmetricDecomposition(a, b, n)
    assert dec.recombine() == f
    return dec


def is_alternatingly_increasing(f: Poly, n: int) -> bool:
    """Check ``0 <= c_0 <= c_n <= c_1 <= c_{n-1} <= ...``."""
    if not f.is_zero() and f.degree > n:
        raise ValueError(f"degree {f.degree} exceeds {n}")
    chain = [f[i // 2] if i % 2 == 0 else f[n - i // 2] for i in range(n + 1)]
    return chain[0] >= 0 and all(u <= v for u, v in zip(chain, chain[1:]))


def has_unimodal_decomposition(f: Poly, n: int) -> bool:
    """Both parts of the symmetric decomposition are nonnegative and unimodal."""
    dec = symmetric_decomposition(f, n)
    return all(
        all(c >= 0 for c in part.coeffs) and is_unimodal(part.coeffs)
        for part in (dec.a, dec.b)
    )


@dataclass(frozen=True)
class GammaVector:
    gammas: tuple[Fraction, ...]
    n: int

    def polynomial(self) -> Poly:
        one_t = Poly([1, 1])
        return sum((one_t ** (self.n - 2 * k) * g).shift(k)
                   for k, g in enumerate(self.gammas)) or ZERO

    @property
    def positive(self) -> bool:
        return all(g >= 0 for g in self.gammas)


def gamma_expansion(f: Poly, n: int) -> GammaVector:
    """Coefficients of f in the basis ``t^k (1+t)^(n-2k)``."""
    if reverse(f, n) != f:
        raise NotSymmetricError(f"{f} is not palindromic with respect to {n}")
    one_t = Poly([1, 1])
    residual = f
    gammas = []
    for k in range(n // 2 + 1):
        g = residual[k]
        gammas.append(g)
        if g:
            residual = residual - (one_t ** (n - 2 * k)).shift(k) * g
    assert residual.is_zero(), "gamma peeling left a residual"
    return GammaVector(tuple(gammas), n)


# --- the nonnegative cone spanned by t^k (1+t)^(n-k) ---------------------

def cone_polynomial(a: Sequence[Rational]) -> Poly:
    n = len(a) - 1
    one_t = Poly([1, 1])
    return sum(((one_t ** (n - k)).shift(k) * c for k, c in enumerate(a) if c), ZERO)


def cone_coordinates(f: Poly, n: int) -> list[Fraction]:
    """Coordinates of f in the basis ``t^k (1+t)^(n-k)``, k = 0..n."""
    h = f_to_h(f, n)
    return [h[k] for k in range(n + 1)]


def newton_ok(f: Poly) -> bool:
    """Newton's inequalities ``b_k^2 >= b_{k-1} b_{k+1}`` for ``f = sum b_k t^k / k!``."""
    b = [c * factorial(k) for k, c in enumerate(f.coeffs)]
    return all(b[k] ** 2 >= b[k - 1] * b[k + 1] for k in range(1, len(b) - 1))


def probe_vector(a: Sequence[int]) -> dict:
    """Report real-rootedness of the image of a cone polynomial with coordinates a."""
    if any(x < 0 for x in a):
        raise ValueError(f"coordinates {list(a)} are outside the nonnegative cone")
    f = cone_polynomial(a)
    img = apply_operator(f)
    if img.is_zero():
        raise ValueError("zero coordinate vector")
    return {
        "input_vector": [int(x) if Fraction(x).denominator == 1 else str(x) for x in a],
        "real_rooted": is_real_rooted(img),
        "newton": newton_ok(img),
    }


def probe_conjecture(n: int, trials: int, seed: int, low: int = 0, high: int = 20,
                     max_n: int = 12) -> list[dict]:
    """Sample random nonnegative integer cone points and test real-rootedness.

    Deterministic for fixed arguments.  All-zero draws are redrawn.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > max_n:
        raise SizeBoundError(f"n = {n} exceeds probe bound {max_n}")
    rng = random.Random(seed)
    report = []
    while len(report) < trials:
        a = [rng.randint(low, high) for _ in range(n + 1)]
        if not any(a):
            continue
        report.append(probe_vector(a))
    return report
