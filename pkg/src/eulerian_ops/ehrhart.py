"""Lattice-point counting and h*-polynomials of small lattice polytopes.

Membership is decided by exact linear programming over the rationals: a
point x lies in conv(V) iff some convex combination of V equals x.  No
facet description is ever computed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb, factorial, prod
from typing import Sequence

from .errors import InconsistencyError, SizeBoundError
from .eulerian import eulerian_polynomial
from .polycore import ONE, ZERO, Poly
from .transform import apply_operator

__all__ = [
    "VPolytope", "EhrhartData", "HStarReport", "make_P", "standard_simplex",
    "pyramid_over", "contains", "count_lattice_points", "count_interior_points",
    "ehrhart_and_hstar", "hstar_from_counts", "interpolate", "check_hstar_theorem",
    "half_open_box_hstar", "lp_maximize", "DEFAULT_MAX_DIM",
]

DEFAULT_MAX_DIM = 4


# --- exact simplex ----------------------------------------------------------

def lp_maximize(A: Sequence[Sequence], b: Sequence, c: Sequence):
    """Maximise ``c.x`` subject to ``A x = b, x >= 0`` in exact arithmetic.

    Two-phase tableau simplex with Bland's rule.  Returns ``(value, x)``, or
    ``None`` when infeasible.  Unbounded problems raise ``ValueError``.
    """
    m, nv = len(A), len(c)
    rows = []
    for i in range(m):
        row = [Fraction(v) for v in A[i]]
        rhs = Fraction(b[i])
        if rhs < 0:
            row, rhs = [-v for v in row], -rhs
        rows.append(row + [Fraction(int(j == i)) for j in range(m)] + [rhs])
    basis = [nv + i for i in range(m)]
    width = nv + m

    def pivot(r, col):
        pv = rows[r][col]
        rows[r] = [v / pv for v in rows[r]]
        for i in range(m):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * p for a, p in zip(rows[i], rows[r])]
        basis[r] = col

    def run(cost, allowed):
        while True:
            # reduced costs for maximisation
            z = [sum(cost[basis[i]] * rows[i][j] for i in range(m)) - cost[j] for j in range(width)]
            enter = next((j for j in allowed if z[j] < 0), None)
            if enter is None:
                return
            best = None
            for i in range(m):
                if rows[i][enter] > 0:
                    ratio = rows[i][-1] / rows[i][enter]
                    if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                        best = (ratio, i)
            if best is None:
                raise ValueError("linear program is unbounded")
            pivot(best[1], enter)

    phase1 = [Fraction(0)] * nv + [Fraction(-1)] * m
    run(phase1, range(width))
    if any(rows[i][-1] for i in range(m) if basis[i] >= nv):
        return None
    # drive remaining (zero-valued) artificials out of the basis
    for i in range(m):
        if basis[i] >= nv:
            col = next((j for j in range(nv) if rows[i][j]), None)
            if col is not None:
                pivot(i, col)
    cost = [Fraction(v) for v in c] + [Fraction(0)] * m
    run(cost, [j for j in range(nv)])
    x = [Fraction(0)] * nv
    for i in range(m):
        if basis[i] < nv:
            x[basis[i]] = rows[i][-1]
    return sum(ci * xi for ci, xi in zip(cost, x)), x


# --- polytopes ----------------------------------------------------------------

@dataclass(frozen=True)
class VPolytope:
    dim: int
    generators: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        gens = tuple(sorted(set(tuple(int(x) for x in g) for g in self.generators)))
        if not gens:
            raise ValueError("a polytope needs at least one generator")
        if any(len(g) != self.dim for g in gens):
            raise ValueError("generator dimension mismatch")
        object.__setattr__(self, "generators", gens)

    def affine_rank(self) -> int:
        base = self.generators[0]
        vecs = [[Fraction(a - b) for a, b in zip(g, base)] for g in self.generators[1:]]
        rank = 0
        for col in range(self.dim):
            piv = next((r for r in range(rank, len(vecs)) if vecs[r][col]), None)
            if piv is None:
                continue
            vecs[rank], vecs[piv] = vecs[piv], vecs[rank]
            for r in range(len(vecs)):
                if r != rank and vecs[r][col]:
                    f = vecs[r][col] / vecs[rank][col]
                    vecs[r] = [a - f * b for a, b in zip(vecs[r], vecs[rank])]
            rank += 1
        return rank

    @property
    def full_dimensional(self) -> bool:
        return self.affine_rank() == self.dim


def make_P(thetas: Sequence[int]) -> VPolytope:
    """conv(-standard simplex  union  box [0, theta_1] x ... x [0, theta_d])."""
    d = len(thetas)
    if d < 1:
        raise ValueError("need at least one theta")
    if any(int(t) != t or t < 1 for t in thetas):
        raise ValueError(f"thetas must be positive integers, got {list(thetas)}")
    gens = [tuple(0 for _ in range(d))]
    gens += [tuple(-int(i == j) for j in range(d)) for i in range(d)]
    gens += list(product(*[(0, int(t)) for t in thetas]))
    return VPolytope(d, tuple(gens))


def standard_simplex(d: int) -> VPolytope:
    return VPolytope(d, tuple([tuple([0] * d)] + [tuple(int(i == j) for j in range(d)) for i in range(d)]))


def pyramid_over(P: VPolytope) -> VPolytope:
    """conv((P x {1}) union {0}) in one dimension higher."""
    return VPolytope(P.dim + 1, tuple([tuple([0] * (P.dim + 1))] + [g + (1,) for g in P.generators]))


def contains(P: VPolytope, x: Sequence[int], n: int = 1) -> bool:
    """Is x in the n-th dilate of P?"""
    gens = P.generators
    if n == 0:
        return all(v == 0 for v in x)
    A = [[g[i] * n for g in gens] for i in range(P.dim)] + [[1] * len(gens)]
    b = list(x) + [1]
    return lp_maximize(A, b, [0] * len(gens)) is not None


def contains_interior(P: VPolytope, x: Sequence[int], n: int = 1) -> bool:
    """Strict membership: x is a combination with every weight positive.

    Writes weights as ``mu + s`` with ``mu, s >= 0`` and maximises s.
    """
    gens = P.generators
    k = len(gens)
    if n == 0:
        return False
    A = [[g[i] * n for g in gens] + [sum(g[i] for g in gens) * n] for i in range(P.dim)]
    A.append([1] * k + [k])
    res = lp_maximize(A, list(x) + [1], [0] * k + [1])
    return res is not None and res[0] > 0


def _box(P: VPolytope, n: int) -> list[range]:
    return [range(n * min(g[i] for g in P.generators), n * max(g[i] for g in P.generators) + 1)
            for i in range(P.dim)]


def count_lattice_points(P: VPolytope, n: int, max_dim: int = DEFAULT_MAX_DIM) -> int:
    if P.dim > max_dim:
        raise SizeBoundError(f"dimension {P.dim} exceeds bound {max_dim}")
    if n < 0:
        raise ValueError("dilation factor must be nonnegative")
    return sum(1 for x in product(*_box(P, n)) if contains(P, x, n))


def count_interior_points(P: VPolytope, n: int, max_dim: int = DEFAULT_MAX_DIM) -> int:
    if P.dim > max_dim:
        raise SizeBoundError(f"dimension {P.dim} exceeds bound {max_dim}")
    return sum(1 for x in product(*_box(P, n)) if contains_interior(P, x, n))


def interpolate(values: Sequence[int]) -> Poly:
    """Lagrange interpolation through ``(k, values[k])`` for k = 0..len-1."""
    pts = range(len(values))
    out = ZERO
    for j, y in zip(pts, values):
        if not y:
            continue
        basis, denom = ONE, 1
        for m in pts:
            if m != j:
                basis = basis * Poly([-m, 1])
                denom *= j - m
        out = out + basis * Fraction(y, denom)
    return out


def hstar_from_counts(counts: Sequence[int], d: int) -> Poly:
    """``h*_j = sum_{i<=j} (-1)^(j-i) C(d+1, j-i) L(i)`` for j = 0..d."""
    return Poly(sum((-1) ** (j - i) * comb(d + 1, j - i) * counts[i] for i in range(j + 1))
                for j in range(d + 1))


@dataclass(frozen=True)
class EhrhartData:
    counts: tuple[int, ...]
    ehrhart_poly: Poly
    h_star: Poly

    def to_json(self) -> dict:
        from .polycore import format_poly
        return {"L": list(self.counts), "ehrhart": format_poly(self.ehrhart_poly),
                "h_star": format_poly(self.h_star)}


def _check_hstar(h: Poly) -> None:
    if any(c.denominator != 1 or c < 0 for c in h.coeffs):
        raise InconsistencyError(f"h* = {h} is not a nonnegative integer vector")


def ehrhart_and_hstar(P: VPolytope, max_dim: int = DEFAULT_MAX_DIM) -> EhrhartData:
    if P.dim > max_dim:
        raise SizeBoundError(f"dimension {P.dim} exceeds bound {max_dim}")
    if not P.full_dimensional:
        raise ValueError("polytope is not full-dimensional")
    d = P.dim
    counts = tuple(count_lattice_points(P, n, max_dim) for n in range(d + 1))
    ehr = interpolate(counts)
    h = hstar_from_counts(counts, d)
    _check_hstar(h)
    if ehr.degree != d or ehr.lead != Fraction(h(1), factorial(d)):
        raise InconsistencyError("Ehrhart leading coefficient disagrees with h*(1)/d!")
    return EhrhartData(counts, ehr, h)


@dataclass(frozen=True)
class HStarReport:
    theta: tuple[int, ...]
    data: EhrhartData
    A_product: Poly

    @property
    def equal(self) -> bool:
        return self.data.h_star == self.A_product


def check_hstar_theorem(thetas: Sequence[int], max_dim: int = DEFAULT_MAX_DIM) -> HStarReport:
    """Counted h* of P_d(theta) against the transform of prod(theta_i t + 1)."""
    P = make_P(thetas)
    data = ehrhart_and_hstar(P, max_dim)
    target = apply_operator(prod((Poly([1, t]) for t in thetas), start=ONE))
    return HStarReport(tuple(int(t) for t in thetas), data, target)


def half_open_box_hstar(thetas: Sequence[int], max_dim: int = DEFAULT_MAX_DIM,
                        enumerate_up_to: int = 2) -> Poly:
    """h* of the half-open box ``0 < x_i <= theta_i``.

    Counts are the closed form ``prod(n theta_i)``, cross-checked by direct
    enumeration for ``n <= enumerate_up_to``.  The result is asserted equal to
    ``prod(theta) * A_d``.
    """
    d = len(thetas)
    if d > max_dim:
        raise SizeBoundError(f"dimension {d} exceeds bound {max_dim}")
    if d < 1 or any(t < 1 for t in thetas):
        raise ValueError("need at least one positive theta")
    counts = [prod(n * t for t in thetas) for n in range(d + 1)]
    for n in range(min(d, enumerate_up_to) + 1):
        direct = sum(1 for x in product(*[range(0, n * t + 1) for t in thetas])
                     if all(0 < xi <= n * t for xi, t in zip(x, thetas)))
        if direct != counts[n]:
            raise InconsistencyError(f"half-open box count mismatch at n = {n}")
    h = hstar_from_counts(counts, d)
    _check_hstar(h)
    expected = eulerian_polynomial(d) * prod(thetas)
    if h != expected:
        raise InconsistencyError(f"half-open box h* {h} != {expected}")
    return h
