"""Simplicial complexes, their f- and h-polynomials, and the flag complex Delta'.

Dimension is *combinatorial*: a face with k vertices has dimension k, so
the empty face has dimension 0 and f_0 = 1.  This is one more than the
usual topological dimension.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from itertools import combinations
from math import factorial
from typing import Iterable, Iterator

from .errors import InvalidComplexError, SizeBoundError
from .eulerian import stirling2, stirling_polynomial
from .polycore import ZERO, Poly, f_to_h
from .transform import apply_operator

__all__ = [
    "SimplicialComplex", "DeltaPrimeComplex", "f_polynomial", "h_polynomial",
    "build_delta_prime", "check_topoint", "TopointReport", "all_complexes",
    "random_complex", "chains_ending_at", "load_complex", "flag_count",
]

Face = frozenset


@dataclass(frozen=True)
class SimplicialComplex:
    n: int
    faces: frozenset

    def __post_init__(self):
        faces = frozenset(frozenset(f) for f in self.faces)
        object.__setattr__(self, "faces", faces)
        if frozenset() not in faces:
            raise InvalidComplexError("a complex must contain the empty face")
        for f in faces:
            if any(not 1 <= v <= self.n for v in f):
                raise InvalidComplexError(f"face {sorted(f)} is not inside [{self.n}]")
            for v in f:
                if f - {v} not in faces:
                    raise InvalidComplexError(
                        f"face {sorted(f)} present but {sorted(f - {v})} missing")

    @classmethod
    def from_maximal_faces(cls, n: int, maximal: Iterable[Iterable[int]]) -> "SimplicialComplex":
        faces = {frozenset()}
        for top in maximal:
            top = sorted(set(top))
            for k in range(1, len(top) + 1):
                faces.update(frozenset(c) for c in combinations(top, k))
        return cls(n, frozenset(faces))

    @property
    def dim(self) -> int:
        return max(len(f) for f in self.faces)

    def maximal_faces(self) -> list[list[int]]:
        tops = [f for f in self.faces if not any(f < g for g in self.faces)]
        return sorted((sorted(f) for f in tops), key=lambda f: (len(f), f))

    def f_vector(self) -> list[int]:
        counts = [0] * (self.dim + 1)
        for f in self.faces:
            counts[len(f)] += 1
        return counts

    def to_json(self) -> dict:
        return {"n": self.n, "maximal_faces": self.maximal_faces()}


def load_complex(obj: dict | str) -> SimplicialComplex:
    if isinstance(obj, str):
        obj = json.loads(obj)
    return SimplicialComplex.from_maximal_faces(int(obj["n"]), obj.get("maximal_faces", []))


def f_polynomial(cx: SimplicialComplex) -> Poly:
    return Poly(cx.f_vector())


def h_polynomial(cx: SimplicialComplex) -> Poly:
    return f_to_h(f_polynomial(cx), cx.dim)


# --- Delta' -------------------------------------------------------------

@dataclass(frozen=True)
class DeltaPrimeComplex:
    """Delta' with vertices relabelled 1..N.

    ``labels[v-1]`` is ``("F", (sorted face))`` for a face-vertex or
    ``("P", i)`` for the primed vertex i'.
    """
    complex: SimplicialComplex
    labels: tuple
    source: SimplicialComplex

    @property
    def dim(self) -> int:
        return self.complex.dim


def chains_ending_at(top: Face, faces: Iterable[Face]) -> Iterator[tuple[Face, ...]]:
    """Strict chains ``F_1 < ... < F_k = top`` of nonempty faces (k >= 1)."""
    below = [f for f in faces if f and f < top]

    def extend(cur: Face) -> Iterator[tuple[Face, ...]]:
        yield (cur,)
        for f in below:
            if f < cur:
                for ch in extend(f):
                    yield ch + (cur,)

    yield from extend(top)


def build_delta_prime(cx: SimplicialComplex, max_n: int = 5) -> DeltaPrimeComplex:
    if cx.n > max_n:
        raise SizeBoundError(f"groundset size {cx.n} exceeds bound {max_n}")
    nonempty = sorted((f for f in cx.faces if f), key=lambda f: (len(f), sorted(f)))
    labels = [("F", tuple(sorted(f))) for f in nonempty] + [("P", i) for i in range(1, cx.n + 1)]
    index = {lab: k for k, lab in enumerate(labels, 1)}
    ground = set(range(1, cx.n + 1))

    faces = set()
    flags: list[tuple[Face, ...]] = [()]
    for top in nonempty:
        flags.extend(chains_ending_at(top, nonempty))
    for flag in flags:
        free = sorted(ground - (flag[-1] if flag else set()))
        fverts = [index["F", tuple(sorted(f))] for f in flag]
        for k in range(len(free) + 1):
            for S in combinations(free, k):
                faces.add(frozenset(fverts + [index["P", i] for i in S]))
    # SimplicialComplex validates downward closure
    complex_ = SimplicialComplex(len(labels), frozenset(faces))
    return DeltaPrimeComplex(complex_, tuple(labels), cx)


@dataclass(frozen=True)
class TopointReport:
    h_direct: Poly
    A_of_f: Poly
    f_prime: Poly
    f_prime_formula: Poly

    @property
    def equal(self) -> bool:
        return self.h_direct == self.A_of_f

    @property
    def f_identity(self) -> bool:
        return self.f_prime == self.f_prime_formula


def check_topoint(cx: SimplicialComplex, max_n: int = 5) -> TopointReport:
    """Compare h(Delta') by enumeration with the transform of f(Delta)."""
    dp = build_delta_prime(cx, max_n)
    f_prime = f_polynomial(dp.complex)
    h_direct = f_to_h(f_prime, dp.dim)
    fv = cx.f_vector()
    one_t = Poly([1, 1])
    formula = sum((one_t ** (cx.n - l) * stirling_polynomial(l) * c for l, c in enumerate(fv)), ZERO)
    return TopointReport(h_direct, apply_operator(f_polynomial(cx)), f_prime, formula)


def flag_count(l: int, k: int) -> int:
    return factorial(k) * stirling2(l, k)


# --- generators for tests ---------------------------------------------------

def all_complexes(n: int) -> Iterator[SimplicialComplex]:
    """Every downward-closed family on [n] containing the empty face."""
    if n > 4:
        raise SizeBoundError("exhaustive complex enumeration is limited to n <= 4")
    subsets = [frozenset(c) for k in range(1, n + 1) for c in combinations(range(1, n + 1), k)]
    for mask in range(1 << len(subsets)):
        fam = {frozenset()} | {s for b, s in enumerate(subsets) if mask >> b & 1}
        if all(f - {v} in fam for f in fam for v in f):
            yield SimplicialComplex(n, frozenset(fam))


def random_complex(n: int, rng: random.Random, max_faces: int = 4) -> SimplicialComplex:
    tops = []
    for _ in range(rng.randint(0, max_faces)):
        k = rng.randint(1, n)
        tops.append(rng.sample(range(1, n + 1), k))
    return SimplicialComplex.from_maximal_faces(n, tops)
