import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from eulerian_ops.errors import SizeBoundError
from eulerian_ops.eulerian import binomial_eulerian, eulerian_polynomial
from eulerian_ops.polycore import ONE, T, ZERO, Poly, is_real_rooted, reverse
from eulerian_ops.transform import (
    GammaVector, NotSymmetricError, SymmetricDecomposition, apply_operator,
    cone_coordinates, cone_polynomial, elementary_symmetric,
    eulerian_series_polynomial, gamma_expansion, has_unimodal_decomposition,
    is_alternatingly_increasing, newton_ok, operator_on_linear_factors,
    probe_conjecture, probe_vector, shifted_power_image, symmetric_decomposition,
)


def rand_poly(rng, deg, lo=-9, hi=9):
    return Poly([Fraction(rng.randint(lo, hi), rng.randint(1, 5)) for _ in range(deg + 1)])


def test_apply_operator_examples():
    assert apply_operator(Poly([1, 2, 1])) == Poly([1, 3, 1])
    assert apply_operator(T ** 3) == Poly([0, 1, 4, 1])
    assert apply_operator(ZERO) == ZERO
    assert apply_operator(ONE) == ONE


def test_linearity():
    rng = random.Random(101)
    for _ in range(100):
        f = rand_poly(rng, rng.randint(0, 8))
        g = rand_poly(rng, rng.randint(0, 8))
        a, b = Fraction(rng.randint(-5, 5), rng.randint(1, 4)), Fraction(rng.randint(-5, 5), 3)
        assert apply_operator(f * a + g * b) == apply_operator(f) * a + apply_operator(g) * b


def test_elementary_symmetric_by_subsets():
    vals = [Fraction(1, 2), 3, -2, Fraction(5, 7)]
    es = elementary_symmetric(vals)
    for k in range(len(vals) + 1):
        expect = sum((_prod(c) for c in combinations(vals, k)), Fraction(0))
        assert es[k] == expect


def _prod(xs):
    out = Fraction(1)
    for x in xs:
        out *= x
    return out


def test_operator_on_linear_factors_matches_product():
    rng = random.Random(5)
    for n in range(0, 8):
        thetas = [Fraction(rng.randint(0, 9), rng.randint(1, 4)) for _ in range(n)]
        prod = ONE
        for th in thetas:
            prod = prod * Poly([th, 1])
        assert operator_on_linear_factors(thetas) == apply_operator(prod)


def test_shifted_power_image_examples():
    assert shifted_power_image(3, 1) == binomial_eulerian(3)
    assert shifted_power_image(2, 0) == eulerian_polynomial(2)


def test_series_polynomial_counterexample():
    f = eulerian_series_polynomial(5, 1)
    assert f.degree == 5
    assert not is_real_rooted(f)
    with pytest.raises(ValueError):
        eulerian_series_polynomial(5, 0)


def test_series_polynomial_small_n_real():
    # n = 2: (1 + t/2)^2 = 1 + t + t^2/4 maps to 1 + t + (t + t^2)/4
    assert eulerian_series_polynomial(1, 1) == Poly([1, 1])
    f = eulerian_series_polynomial(2, 1)
    assert f == Poly([1, Fraction(5, 4), Fraction(1, 4)])
    assert is_real_rooted(f)


# --- symmetric decomposition --------------------------------------------------

def test_decomposition_examples():
    dec = symmetric_decomposition(eulerian_polynomial(3), 3)
    assert dec.a == ZERO
    assert dec.b == Poly([1, 4, 1])
    dec = symmetric_decomposition(Poly([1, 3, 1]), 2)
    assert dec.a == Poly([1, 3, 1]) and dec.b == ZERO
    # (1 + 2t + 2t^2 + t^3) + t (1 + 2t + t^2)
    dec = symmetric_decomposition(Poly([1, 3, 4, 2]), 3)
    assert dec.a == Poly([1, 2, 2, 1]) and dec.b == Poly([1, 2, 1])


def test_decomposition_rejects_non_palindromic_parts():
    with pytest.raises(NotSymmetricError):
        SymmetricDecomposition(Poly([1, 2]), ZERO, 2)


def test_decomposition_random_invariants():
    rng = random.Random(202)
    for _ in range(200):
        n = rng.randint(0, 9)
        f = rand_poly(rng, rng.randint(0, n))
        dec = symmetric_decomposition(f, n)
        assert dec.a + T * dec.b == f
        assert reverse(dec.a, n) == dec.a
        if n:
            assert reverse(dec.b, n - 1) == dec.b
        # uniqueness: any symmetric pair recombining to f is this one
        a2 = rand_poly(rng, n)
        a2 = a2 + reverse(a2, n)
        shifted = symmetric_decomposition(f + a2, n)
        assert shifted.a == dec.a + a2 and shifted.b == dec.b
        # reversing f swaps the roles: I_n f = a + b
        assert reverse(f, n) == dec.a + dec.b


def test_alternatingly_increasing_examples():
    assert is_alternatingly_increasing(eulerian_polynomial(4), 4)
    assert is_alternatingly_increasing(Poly([1, 3, 2]), 2)
    assert not is_alternatingly_increasing(Poly([2, 3, 1]), 2)
    assert not is_alternatingly_increasing(Poly([-1, 0, 1]), 2)
    with pytest.raises(ValueError):
        is_alternatingly_increasing(Poly([1, 1, 1]), 1)


def test_alternatingly_increasing_implies_unimodal_parts():
    rng = random.Random(3)
    for _ in range(200):
        n = rng.randint(1, 7)
        a = [rng.randint(0, 6) for _ in range(n + 1)]
        f = apply_operator(cone_polynomial(a))
        if is_alternatingly_increasing(f, n):
            assert has_unimodal_decomposition(f, n)


def test_cone_images_alternatingly_increasing_small():
    rng = random.Random(77)
    for n in range(1, 7):
        for _ in range(20):
            a = [Fraction(rng.randint(0, 10), rng.randint(1, 3)) for _ in range(n + 1)]
            assert is_alternatingly_increasing(apply_operator(cone_polynomial(a)), n)


def test_cone_coordinates_roundtrip():
    a = [3, 0, 2, 1]
    f = cone_polynomial(a)
    assert cone_coordinates(f, 3) == [3, 0, 2, 1]
    assert cone_polynomial([1, 1]) == Poly([1, 2])


# --- gamma ------------------------------------------------------------------------

def test_gamma_examples():
    g = gamma_expansion(binomial_eulerian(3), 3)
    assert g.gammas == (1, 4)
    assert g.polynomial() == binomial_eulerian(3)
    assert gamma_expansion(Poly([1, 1]), 1).gammas == (1,)
    assert gamma_expansion(ONE, 0).gammas == (1,)
    with pytest.raises(NotSymmetricError):
        gamma_expansion(Poly([1, 2]), 2)


@given(st.integers(0, 8).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.integers(-20, 20), min_size=n // 2 + 1, max_size=n // 2 + 1))))
def test_gamma_roundtrip(args):
    n, gs = args
    gv = GammaVector(tuple(Fraction(g) for g in gs), n)
    f = gv.polynomial()
    if f.is_zero():
        return
    assert gamma_expansion(f, n).gammas == gv.gammas


def test_gamma_of_binomial_eulerian_positive():
    for n in range(0, 10):
        assert gamma_expansion(binomial_eulerian(n), n).positive


# --- probe --------------------------------------------------------------------

def test_probe_vector_schema():
    rep = probe_vector([1, 2, 3])
    assert set(rep) == {"input_vector", "real_rooted", "newton"}
    assert rep["input_vector"] == [1, 2, 3]
    assert rep["real_rooted"] is True
    with pytest.raises(ValueError):
        probe_vector([1, -1])


def test_probe_deterministic():
    a = probe_conjecture(4, 30, seed=9)
    b = probe_conjecture(4, 30, seed=9)
    assert a == b and len(a) == 30
    assert all(0 <= x <= 20 for r in a for x in r["input_vector"])
    with pytest.raises(SizeBoundError):
        probe_conjecture(13, 1, seed=0)


def test_newton_diagnostic():
    # real-rooted images satisfy Newton's inequalities
    for n in range(1, 8):
        assert newton_ok(eulerian_polynomial(n))
    # necessary but not sufficient: the non-real-rooted image still passes
    assert newton_ok(eulerian_series_polynomial(5, 1))
