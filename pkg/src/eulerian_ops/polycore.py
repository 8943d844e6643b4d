"""Exact univariate polynomials over the rationals.

Coefficients are stored densely, constant term first, as :class:`Fraction`.
Real-root questions are answered exactly with Sturm sequences; nothing in
this module except :func:`numeric_roots` touches floating point.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Union[int, Fraction]

__all__ = [
    "Poly", "T", "ONE", "ZERO",
    "NotDivisibleError", "NotRealRootedError",
    "RootCertificate", "Relation", "InterlacingVerdict",
    "reverse", "divide_exact", "poly_gcd", "squarefree_part",
    "real_root_certificate", "is_real_rooted", "interlaces",
    "is_interlacing_sequence", "f_to_h", "h_to_f", "numeric_roots",
    "is_unimodal", "parse_poly", "format_poly", "poly_to_json",
    "poly_from_json",
]


class NotDivisibleError(ArithmeticError):
    """Raised when an exact division leaves a nonzero remainder."""


class NotRealRootedError(ValueError):
    """Raised when a polynomial required to be real-rooted is not."""


class Poly:
    """Immutable dense polynomial with rational coefficients.

    >>> Poly([1, 1]) * Poly([1, 1])
    Poly('1,2,1')
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Rational] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def monomial(cls, k: int, c: Rational = 1) -> "Poly":
        return cls([0] * k + [c])

    @classmethod
    def from_roots(cls, roots: Iterable[Rational], lead: Rational = 1) -> "Poly":
        p = cls([lead])
        for r in roots:
            p = p * cls([-Fraction(r), 1])
        return p

    @property
    def degree(self) -> int | None:
        """Degree, or ``None`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}{'*' + mono if mono else ''}")
        return " + ".join(terms).replace("+ -", "- ")

    @staticmethod
    def _coerce(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(c * other for c in self.coeffs)
        if not isinstance(other, Poly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return ZERO
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x):
        acc = 0 if isinstance(x, (int, Fraction)) else x * 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly(i * c for i, c in enumerate(self.coeffs) if i)

    def shift(self, k: int) -> "Poly":
        """Multiply by t**k."""
        return Poly([0] * k + list(self.coeffs)) if self.coeffs else ZERO

    def compose(self, other: "Poly") -> "Poly":
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        return self * (1 / self.lead)

    def __divmod__(self, other: "Poly"):
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dg = len(other.coeffs) - 1
        lead = other.lead
        if len(rem) <= dg:
            return ZERO, self
        quot = [Fraction(0)] * (len(rem) - dg)
        for k in range(len(rem) - 1, dg - 1, -1):
            c = rem[k] / lead
            quot[k - dg] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k - dg + j] -= c * b
        return Poly(quot), Poly(rem[:dg])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def is_palindromic(self, n: int) -> bool:
        return reverse(self, n) == self


ZERO = Poly()
ONE = Poly([1])
T = Poly([0, 1])


def reverse(f: Poly, n: int) -> Poly:
    """Return ``t**n * f(1/t)``; requires ``deg f <= n``."""
    if f.is_zero():
        return ZERO
    if n < f.degree:
        raise ValueError(f"degree {f.degree} exceeds reversal degree {n}")
    return Poly(f[n - i] for i in range(n + 1))


def divide_exact(f: Poly, g: Poly) -> Poly:
    q, r = divmod(f, g)
    if r:
        raise NotDivisibleError(f"{f} is not divisible by {g} (remainder {r})")
    return q


# --- integer helpers used by the Sturm machinery -------------------------

def _primitive(cs: Sequence[Rational]) -> list[int]:
    """Integer coefficient list with positive content 1 and the same sign."""
    cs = [Fraction(c) for c in cs]
    den = 1
    for c in cs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in cs]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    return [c // g for c in ints] if g > 1 else ints


def _trim(cs: list[int]) -> list[int]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder lc(b)**(deg a - deg b + 1) * a mod b."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    delta = len(a) - len(b) + 1
    if delta <= 0:
        return a
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        a = [x * lb for x in a]
        if c:
            for j, bj in enumerate(b):
                a[k - db + j] -= c * bj
    return _trim(a[:db])


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _int_gcd_poly(a: list[int], b: list[int]) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        r = _prem(a, b)
        a, b = b, (_primitive(r) if r else [])
    return _primitive(a) if a else []


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor (zero if both are zero)."""
    if f.is_zero() and g.is_zero():
        return ZERO
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    return Poly(_int_gcd_poly(_primitive(f.coeffs), _primitive(g.coeffs))).monic()


def squarefree_part(f: Poly) -> Poly:
    if f.is_zero():
        raise ValueError("zero polynomial has no square-free part")
    if f.degree == 0:
        return ONE
    return divide_exact(f, poly_gcd(f, f.derivative())).monic()


class _Sturm:
    """Sturm chain of a square-free polynomial in primitive integer form."""

    def __init__(self, p: Poly):
        p0 = _primitive(p.coeffs)
        if p0[-1] < 0:
            p0 = [-c for c in p0]
        self.p = p0
        chain = [p0]
        if len(p0) > 1:
            chain.append(_primitive([i * c for i, c in enumerate(p0) if i]))
            while len(chain[-1]) > 1:
                a, b = chain[-2], chain[-1]
                r = _prem(a, b)
                if not r:
                    break
                # prem = lc(b)**delta * rem; flip to get -rem up to a positive factor
                delta = len(a) - len(b) + 1
                s = -1 if (b[-1] < 0 and delta % 2) else 1
                chain.append([-s * c for c in _primitive(r)])
        self.chain = chain

    @staticmethod
    def _eval_sign(cs: list[int], x: Fraction) -> int:
        # homogenised evaluation keeps everything in integers
        a, b = x.numerator, x.denominator
        acc = 0
        bpow = 1
        for c in reversed(cs):
            acc = acc * a + c * bpow
            bpow *= b
        return _sign(acc)

    def sign_at(self, x: Fraction) -> int:
        return self._eval_sign(self.p, x)

    def variations(self, x: Fraction) -> int:
        signs = [s for s in (self._eval_sign(c, x) for c in self.chain) if s]
        return sum(1 for u, v in zip(signs, signs[1:]) if u != v)

    def variations_inf(self, positive: bool) -> int:
        signs = []
        for c in self.chain:
            s = _sign(c[-1])
            if not positive and (len(c) - 1) % 2:
                s = -s
            signs.append(s)
        return sum(1 for u, v in zip(signs, signs[1:]) if u != v)

    def count(self, lo: Fraction, hi: Fraction) -> int:
        """Distinct roots in the open interval (lo, hi); endpoints must be non-roots."""
        return self.variations(lo) - self.variations(hi)

    def total(self) -> int:
        return self.variations_inf(False) - self.variations_inf(True)

    def bound(self) -> Fraction:
        lead = abs(self.p[-1])
        return 1 + Fraction(max((abs(c) for c in self.p[:-1]), default=0), lead)

    def isolate(self) -> list[tuple[Fraction, Fraction]]:
        """Disjoint isolating intervals, ascending; (r, r) marks an exact rational root."""
        if len(self.p) == 1:
            return []
        B = self.bound()
        out = []
        stack = [(-B, B, self.count(-B, B))]
        while stack:
            a, b, c = stack.pop()
            if c == 0:
                continue
            if c == 1:
                out.append((a, b))
                continue
            m = (a + b) / 2
            if self.sign_at(m) == 0:
                out.append((m, m))
                delta = (b - a) / 4
                while (self.sign_at(m - delta) == 0 or self.sign_at(m + delta) == 0
                       or self.count(m - delta, m + delta) != 1):
                    delta /= 2
                stack.append((a, m - delta, self.count(a, m - delta)))
                stack.append((m + delta, b, self.count(m + delta, b)))
            else:
                stack.append((a, m, self.count(a, m)))
                stack.append((m, b, self.count(m, b)))
        out.sort()
        return out

    def has_root_in(self, iv: tuple[Fraction, Fraction]) -> bool:
        lo, hi = iv
        if lo == hi:
            return self.sign_at(lo) == 0
        return self.count(lo, hi) == 1


def _multiplicity_chain(f: Poly) -> list[_Sturm]:
    """Sturm chains of sqf(D_k) where D_0 = f and D_{k+1} = gcd(D_k, D_k')."""
    out = []
    d = f
    while d.degree and d.degree > 0:
        out.append(_Sturm(squarefree_part(d)))
        d = poly_gcd(d, d.derivative())
    return out


def _multiplicity(chain: list[_Sturm], iv) -> int:
    m = 0
    for s in chain:
        if not s.has_root_in(iv):
            break
        m += 1
    return m


@dataclass(frozen=True)
class RootCertificate:
    squarefree_part: Poly
    distinct_real_roots: int
    isolating_intervals: tuple[tuple[Fraction, Fraction, int], ...]
    degree: int

    @property
    def real_rooted(self) -> bool:
        return self.distinct_real_roots == self.squarefree_part.degree

    @property
    def real_roots_with_multiplicity(self) -> int:
        return sum(m for _, _, m in self.isolating_intervals)


def real_root_certificate(f: Poly) -> RootCertificate:
    """Count and isolate the real roots of ``f`` exactly.

    Each interval ``(lo, hi, m)`` either has ``lo < hi`` and contains exactly
    one root in its interior, or ``lo == hi`` is an exact rational root.
    ``m`` is the multiplicity of that root in ``f``.
    """
    if f.is_zero():
        raise ValueError("real_root_certificate of the zero polynomial")
    sqf = squarefree_part(f)
    sturm = _Sturm(sqf)
    ivs = sturm.isolate()
    chain = _multiplicity_chain(f)
    intervals = tuple((lo, hi, _multiplicity(chain, (lo, hi))) for lo, hi in ivs)
    total = sturm.total() if sqf.degree else 0
    assert total == len(intervals)
    return RootCertificate(sqf, len(intervals), intervals, f.degree)


def is_real_rooted(f: Poly) -> bool:
    """True for nonzero f whose zeros are all real (constants count as real-rooted)."""
    return real_root_certificate(f).real_rooted


class Relation(enum.Enum):
    STRICT = "InterlacesStrictly"
    WEAK = "Interlaces"
    NONE = "DoesNotInterlace"


@dataclass(frozen=True)
class InterlacingVerdict:
    relation: Relation
    # ascending (lo, hi, multiplicity in g, multiplicity in f)
    witness: tuple[tuple[Fraction, Fraction, int, int], ...] = ()
    reason: str = ""

    @property
    def holds(self) -> bool:
        """True for both the weak and the strict relation."""
        return self.relation is not Relation.NONE

    @property
    def strict(self) -> bool:
        return self.relation is Relation.STRICT


def interlaces(g: Poly, f: Poly) -> InterlacingVerdict:
    """Decide whether ``g`` interlaces ``f`` (and whether strictly).

    Zeros of f are ``a1 >= a2 >= ...`` and of g ``b1 >= b2 >= ...``; g interlaces
    f when ``... <= b2 <= a2 <= b1 <= a1``.  The zero polynomial interlaces and
    is interlaced by everything, never strictly.
    """
    if g.is_zero() or f.is_zero():
        return InterlacingVerdict(Relation.WEAK, reason="zero polynomial convention")
    for name, p in (("g", g), ("f", f)):
        if p.lead <= 0:
            raise ValueError(f"{name} must have a positive leading coefficient")
    if not (g.degree <= f.degree <= g.degree + 1):
        _require_real_rooted(g, f)
        return InterlacingVerdict(Relation.NONE, reason="degree constraint violated")

    joint = _Sturm(squarefree_part(f * g)) if (f * g).degree else None
    ivs = joint.isolate() if joint else []
    cf, cg = _multiplicity_chain(f), _multiplicity_chain(g)
    witness = tuple((lo, hi, _multiplicity(cg, (lo, hi)), _multiplicity(cf, (lo, hi)))
                    for lo, hi in ivs)
    if sum(w[3] for w in witness) != f.degree or sum(w[2] for w in witness) != g.degree:
        raise NotRealRootedError("interlacing is only defined for real-rooted polynomials")

    # roots as positions in the joint ascending order, listed largest first
    alphas = [k for k in range(len(witness) - 1, -1, -1) for _ in range(witness[k][3])]
    betas = [k for k in range(len(witness) - 1, -1, -1) for _ in range(witness[k][2])]
    merged = []
    for i in range(max(len(alphas), len(betas))):
        if i < len(alphas):
            merged.append(alphas[i])
        if i < len(betas):
            merged.append(betas[i])
    weak = all(u >= v for u, v in zip(merged, merged[1:]))
    if not weak:
        return InterlacingVerdict(Relation.NONE, witness, "root order violated")
    strict = all(u > v for u, v in zip(merged, merged[1:]))
    return InterlacingVerdict(Relation.STRICT if strict else Relation.WEAK, witness)


def _require_real_rooted(*ps: Poly) -> None:
    for p in ps:
        if not is_real_rooted(p):
            raise NotRealRootedError(f"{p} is not real-rooted")


def is_interlacing_sequence(fs: Sequence[Poly]) -> tuple[bool, tuple[int, int] | None]:
    """Check ``fs[i]`` interlaces ``fs[j]`` for every ``i < j``.

    Returns ``(True, None)`` or ``(False, (i, j))`` for the first failing pair.
    """
    for j in range(len(fs)):
        for i in range(j):
            if not interlaces(fs[i], fs[j]).holds:
                return False, (i, j)
    return True, None


def _binomial_row(d: int, sign: int) -> list[Poly]:
    # (1 + sign*t)**k for k = 0..d
    base = Poly([1, sign])
    row = [ONE]
    for _ in range(d):
        row.append(row[-1] * base)
    return row


def f_to_h(f: Poly, d: int) -> Poly:
    """``(1-t)**d * f(t/(1-t))``."""
    if not f.is_zero() and f.degree > d:
        raise ValueError(f"degree {f.degree} exceeds {d}")
    pw = _binomial_row(d, -1)
    return sum((pw[d - i].shift(i) * c for i, c in enumerate(f.coeffs) if c), ZERO)


def h_to_f(h: Poly, d: int) -> Poly:
    """Inverse of :func:`f_to_h`: ``(1+t)**d * h(t/(1+t))``."""
    if not h.is_zero() and h.degree > d:
        raise ValueError(f"degree {h.degree} exceeds {d}")
    pw = _binomial_row(d, 1)
    return sum((pw[d - i].shift(i) * c for i, c in enumerate(h.coeffs) if c), ZERO)


def is_unimodal(cs: Sequence[Rational]) -> bool:
    """Nondecreasing then nonincreasing (plateaus allowed)."""
    i, n = 0, len(cs)
    while i + 1 < n and cs[i] <= cs[i + 1]:
        i += 1
    while i + 1 < n and cs[i] >= cs[i + 1]:
        i += 1
    return i >= n - 1


def numeric_roots(f: Poly, residuals: bool = False):
    """Approximate complex roots via numpy's companion-matrix solver.

    Diagnostic only. With ``residuals=True`` returns ``(roots, |f(root)|)``.
    """
    import numpy as np

    if f.is_zero():
        raise ValueError("numeric_roots of the zero polynomial")
    roots = list(np.roots([float(c) for c in reversed(f.coeffs)]))
    roots = [complex(r) for r in roots]
    # a few Newton steps in complex floating point to polish
    df = f.derivative()
    fc = [complex(float(c)) for c in f.coeffs]
    dc = [complex(float(c)) for c in df.coeffs]

    def ev(cs, z):
        acc = 0j
        for c in reversed(cs):
            acc = acc * z + c
        return acc

    polished = []
    for z in roots:
        for _ in range(3):
            d = ev(dc, z)
            if d == 0:
                break
            z2 = z - ev(fc, z) / d
            if abs(ev(fc, z2)) >= abs(ev(fc, z)):
                break
            z = z2
        polished.append(z)
    polished.sort(key=lambda z: (z.real, z.imag))
    if residuals:
        return polished, [abs(ev(fc, z)) for z in polished]
    return polished


# --- text / JSON formats --------------------------------------------------

def parse_poly(text: str) -> Poly:
    """Parse ``"1,4651/3125,2551/3125"`` (constant term first)."""
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial text")
    try:
        return Poly(Fraction(tok.strip()) for tok in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad polynomial text {text!r}: {exc}") from None


def format_poly(f: Poly) -> str:
    if f.is_zero():
        return "0"
    return ",".join(str(c) for c in f.coeffs)


def poly_to_json(f: Poly) -> dict:
    return {"coeffs": [str(c) for c in f.coeffs]}


def poly_from_json(obj: dict) -> Poly:
    return Poly(Fraction(c) for c in obj["coeffs"])
