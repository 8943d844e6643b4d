"""Brute-force permutation statistics used as independent oracles.

Permutations are tuples of images in one-line notation, 1-indexed values:
``(2, 1, 3)`` sends 1 -> 2, 2 -> 1, 3 -> 3.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from typing import Iterator, Sequence

from .errors import SizeBoundError
from .polycore import ONE, ZERO, Poly, Rational

__all__ = [
    "DEFAULT_MAX_N", "PermStats", "DecoratedPermutation", "statistics",
    "parse_perm", "all_permutations", "decorated_generating_polynomial",
    "exc_fixed_polynomial", "des_bad_polynomial", "gamma_counts",
    "decorated_permutations", "phi", "cycle_words", "orbit", "orbit_check",
    "f_polynomials_bruteforce", "p_polynomials_recursive",
    "is_double_excedance", "is_double_antiexcedance",
]

DEFAULT_MAX_N = 9

Perm = tuple[int, ...]


def _check_bound(n: int, max_n: int) -> None:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > max_n:
        raise SizeBoundError(f"n = {n} exceeds enumeration bound {max_n}")


def parse_perm(text: str) -> Perm:
    perm = tuple(int(tok) for tok in text.replace(" ", "").split(",") if tok)
    _validate(perm)
    return perm


def _validate(perm: Sequence[int]) -> None:
    if sorted(perm) != list(range(1, len(perm) + 1)):
        raise ValueError(f"{perm} is not a permutation of 1..{len(perm)}")


def _inverse(perm: Perm) -> Perm:
    inv = [0] * len(perm)
    for i, v in enumerate(perm, 1):
        inv[v - 1] = i
    return tuple(inv)


@dataclass(frozen=True)
class PermStats:
    exc: int
    fixed_points: frozenset
    double_exc: frozenset
    double_antiexc: frozenset
    des: int
    bad: int


def statistics(perm: Perm) -> PermStats:
    """Excedances, fixed points, double (anti-)excedances, descents and bad indices.

    The bad statistic reads ``sigma(0) = 0``, so position 1 is bad exactly when
    ``sigma(1)`` is smaller than every later value.
    """
    _validate(perm)
    n = len(perm)
    inv = _inverse(perm)
    s = (0,) + tuple(perm)  # s[i] = sigma(i), s[0] = 0
    exc = sum(1 for i in range(1, n + 1) if s[i] > i)
    fixed = frozenset(i for i in range(1, n + 1) if s[i] == i)
    dexc = frozenset(i for i in range(1, n + 1) if s[i] > i > inv[i - 1])
    danti = frozenset(i for i in range(1, n + 1) if s[i] < i < inv[i - 1])
    des = sum(1 for i in range(1, n) if s[i] > s[i + 1])
    bad = 0
    suffix_min = n + 1
    for k in range(n, 0, -1):
        if s[k - 1] < s[k] < suffix_min:
            bad += 1
        suffix_min = min(suffix_min, s[k])
    return PermStats(exc, fixed, dexc, danti, des, bad)


def all_permutations(n: int) -> Iterator[Perm]:
    return permutations(range(1, n + 1))


@lru_cache(maxsize=None)
def _exc_fixedset_counts(n: int) -> tuple[tuple[tuple[int, frozenset], int], ...]:
    counts = Counter()
    for perm in all_permutations(n):
        exc = 0
        fixed = []
        for i, v in enumerate(perm, 1):
            if v > i:
                exc += 1
            elif v == i:
                fixed.append(i)
        counts[exc, frozenset(fixed)] += 1
    return tuple(sorted(counts.items(), key=lambda kv: (kv[0][0], sorted(kv[0][1]))))


@lru_cache(maxsize=None)
def _stat_pair_counts(n: int) -> tuple[dict, dict]:
    """Joint distributions of (exc, #fixed) and (des, bad) over S_n."""
    left, right = Counter(), Counter()
    for perm in all_permutations(n):
        st = statistics(perm)
        left[st.exc, len(st.fixed_points)] += 1
        right[st.des, st.bad] += 1
    return dict(left), dict(right)


def decorated_generating_polynomial(n: int, thetas: Sequence[Rational],
                                    max_n: int = DEFAULT_MAX_N) -> Poly:
    """Sum over decorated permutations of ``t^exc * prod_{i in F_0} theta_i``.

    A color-1 fixed point contributes t and a color-0 one contributes
    theta_i, so each plain permutation contributes
    ``t^exc prod_{i fixed} (t + theta_i)``.
    """
    _check_bound(n, max_n)
    if len(thetas) != n:
        raise ValueError("need exactly n theta values")
    lin = [Poly([Fraction(th), 1]) for th in thetas]
    total = ZERO
    for (exc, fixed), count in _exc_fixedset_counts(n):
        term = ONE
        for i in sorted(fixed):
            term = term * lin[i - 1]
        total = total + term.shift(exc) * count
    return total


def exc_fixed_polynomial(n: int, q: Rational, max_n: int = DEFAULT_MAX_N) -> Poly:
    """``sum_sigma t^exc (t+q)^|F|`` by enumeration."""
    _check_bound(n, max_n)
    base = Poly([Fraction(q), 1])
    left, _ = _stat_pair_counts(n)
    return sum(((base ** f).shift(e) * c for (e, f), c in left.items()), ZERO)


def des_bad_polynomial(n: int, q: Rational, max_n: int = DEFAULT_MAX_N) -> Poly:
    """``sum_sigma t^des (t+q)^bad`` by enumeration."""
    _check_bound(n, max_n)
    base = Poly([Fraction(q), 1])
    _, right = _stat_pair_counts(n)
    return sum(((base ** b).shift(d) * c for (d, b), c in right.items()), ZERO)


def gamma_counts(n: int, max_n: int = DEFAULT_MAX_N) -> tuple[int, ...]:
    """Entry k counts permutations of [n] with k excedances and no double excedance."""
    _check_bound(n, max_n)
    counts = [0] * (n // 2 + 1)
    for perm in all_permutations(n):
        inv = _inverse(perm)
        exc = 0
        ok = True
        for i, v in enumerate(perm, 1):
            if v > i:
                exc += 1
                if i > inv[i - 1]:
                    ok = False
                    break
        if ok:
            counts[exc] += 1
    return tuple(counts)


# --- decorated permutations and the involutions phi_i --------------------

@dataclass(frozen=True)
class DecoratedPermutation:
    perm: Perm
    colors: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self):
        _validate(self.perm)
        object.__setattr__(self, "colors", tuple(sorted(self.colors)))
        fixed = [i for i, v in enumerate(self.perm, 1) if v == i]
        if [i for i, _ in self.colors] != fixed:
            raise ValueError("colors must be keyed exactly by the fixed points")
        if any(c not in (0, 1) for _, c in self.colors):
            raise ValueError("colors are 0 or 1")

    @classmethod
    def plain(cls, perm: Sequence[int], color: int = 0) -> "DecoratedPermutation":
        perm = tuple(perm)
        return cls(perm, tuple((i, color) for i, v in enumerate(perm, 1) if v == i))

    @property
    def n(self) -> int:
        return len(self.perm)

    def color(self, i: int) -> int:
        return dict(self.colors)[i]

    @property
    def exc(self) -> int:
        return sum(1 for i, v in enumerate(self.perm, 1) if v > i) + sum(c for _, c in self.colors)

    def to_json(self) -> dict:
        return {"perm": list(self.perm), "colors": {str(i): c for i, c in self.colors}}


def decorated_permutations(n: int) -> Iterator[DecoratedPermutation]:
    for perm in all_permutations(n):
        fixed = [i for i, v in enumerate(perm, 1) if v == i]
        for cols in product((0, 1), repeat=len(fixed)):
            yield DecoratedPermutation(perm, tuple(zip(fixed, cols)))


def is_double_excedance(perm: Perm, i: int) -> bool:
    return perm[i - 1] > i > perm.index(i) + 1


def is_double_antiexcedance(perm: Perm, i: int) -> bool:
    return perm[i - 1] < i < perm.index(i) + 1


def cycle_words(perm: Perm) -> list[list[int]]:
    """Cycles of length >= 2 as words ``x_0 x_1 ... x_l`` with ``x_0 = x_l = max``."""
    seen = set()
    words = []
    for start in range(1, len(perm) + 1):
        if start in seen or perm[start - 1] == start:
            continue
        cyc = [start]
        seen.add(start)
        j = perm[start - 1]
        while j != start:
            cyc.append(j)
            seen.add(j)
            j = perm[j - 1]
        top = cyc.index(max(cyc))
        cyc = cyc[top:] + cyc[:top]
        words.append(cyc + [cyc[0]])
    return words


def _perm_from_words(n: int, words: list[list[int]]) -> Perm:
    images = list(range(1, n + 1))
    for w in words:
        for a, b in zip(w, w[1:]):
            images[a - 1] = b
    return tuple(images)


def phi(sigma: DecoratedPermutation, i: int) -> DecoratedPermutation:
    """The involution phi_i: flip a fixed point's color, or move i within its cycle."""
    n = sigma.n
    if not 1 <= i <= n:
        raise ValueError(f"index {i} outside 1..{n}")
    perm = sigma.perm
    if perm[i - 1] == i:
        cols = tuple((j, 1 - c if j == i else c) for j, c in sigma.colors)
        return DecoratedPermutation(perm, cols)
    words = cycle_words(perm)
    w = next(w for w in words if i in w[:-1])
    k = w.index(i)
    if is_double_antiexcedance(perm, i):
        # smallest m > k with x_m < x_k < x_{m+1}
        m = next(m for m in range(k + 1, len(w) - 1) if w[m] < i < w[m + 1])
        new = w[:k] + w[k + 1:m + 1] + [i] + w[m + 1:]
    elif is_double_excedance(perm, i):
        # greatest m < k with x_{m-1} > x_k > x_m
        m = next(m for m in range(k - 1, 0, -1) if w[m - 1] > i > w[m])
        new = w[:m] + [i] + w[m:k] + w[k + 1:]
    else:
        return sigma
    words = [new if ww is w else ww for ww in words]
    return DecoratedPermutation(_perm_from_words(n, words), sigma.colors)


def orbit(sigma: DecoratedPermutation) -> set[DecoratedPermutation]:
    seen = {sigma}
    todo = [sigma]
    while todo:
        s = todo.pop()
        for i in range(1, s.n + 1):
            nxt = phi(s, i)
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return seen


@dataclass(frozen=True)
class OrbitReport:
    orbit_size: int
    sigma_hat: DecoratedPermutation
    orbit_sum: Poly
    identity_holds: bool


def orbit_check(sigma: DecoratedPermutation, max_n: int = DEFAULT_MAX_N) -> OrbitReport:
    """Verify ``sum_{pi in Orb} t^exc(pi) = t^exc(hat) (1+t)^(n - 2 exc(hat))``."""
    _check_bound(sigma.n, max_n)
    orb = orbit(sigma)
    hats = [p for p in orb
            if not any(c for _, c in p.colors)
            and not any(is_double_excedance(p.perm, i) for i in range(1, p.n + 1))]
    if len(hats) != 1:
        raise AssertionError(f"expected a unique canonical orbit member, found {len(hats)}")
    hat = hats[0]
    total = sum((ONE.shift(p.exc) for p in orb), ZERO)
    a = sigma.n - 2 * hat.exc
    ok = a >= 0 and total == (Poly([1, 1]) ** a).shift(hat.exc)
    return OrbitReport(len(orb), hat, total, ok)


# --- the f_{n,i} / p_{n,i} families ----------------------------------------

def f_polynomials_bruteforce(n: int, q: Rational, max_n: int = DEFAULT_MAX_N) -> list[Poly]:
    """``f_{n,i} = sum_{sigma(1)=i} t^des (t+q)^bad`` for i = 1..n."""
    _check_bound(n, max_n)
    base = Poly([Fraction(q), 1])
    buckets = [Counter() for _ in range(n)]
    for perm in all_permutations(n):
        st = statistics(perm)
        buckets[perm[0] - 1][st.des, st.bad] += 1
    return [sum(((base ** b).shift(d) * c for (d, b), c in bk.items()), ZERO)
            for bk in buckets]


def p_polynomials_recursive(n: int, q: Rational) -> list[Poly]:
    """Build ``p_{n,1..n}`` from ``p_{1,1} = 1`` by the insertion recursions."""
    if n < 1:
        raise ValueError("n must be positive")
    lin = Poly([Fraction(q), 1])
    ps = [ONE]
    for m in range(1, n):
        nxt = [lin * ps[0] + sum(ps[1:], ZERO)]
        for i in range(2, m + 2):
            nxt.append(sum(ps[:i - 1], ZERO).shift(1) + sum(ps[i - 1:], ZERO))
        ps = nxt
    return ps
