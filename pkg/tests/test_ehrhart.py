from fractions import Fraction
from itertools import product
from math import gcd

import pytest

from eulerian_ops.errors import SizeBoundError
from eulerian_ops.eulerian import eulerian_polynomial
from eulerian_ops.polycore import ONE, Poly, is_unimodal
from eulerian_ops.transform import apply_operator, cone_coordinates, is_alternatingly_increasing
from eulerian_ops.ehrhart import (
    VPolytope, check_hstar_theorem, contains, contains_interior,
    count_interior_points, count_lattice_points, ehrhart_and_hstar,
    half_open_box_hstar, hstar_from_counts, interpolate, lp_maximize, make_P,
    pyramid_over, standard_simplex,
)


# --- independent 2D oracle -----------------------------------------------------

def hull_2d(points):
    pts = sorted(set(points))

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def pick_count(verts):
    """Lattice points of a lattice polygon via Pick: L = A + B/2 + 1."""
    twice_area = abs(sum(x1 * y2 - x2 * y1 for (x1, y1), (x2, y2)
                         in zip(verts, verts[1:] + verts[:1])))
    boundary = sum(gcd(abs(x2 - x1), abs(y2 - y1)) for (x1, y1), (x2, y2)
                   in zip(verts, verts[1:] + verts[:1]))
    return Fraction(twice_area, 2) + Fraction(boundary, 2) + 1


def test_pentagon_hull():
    P = make_P([2, 1])
    assert sorted(hull_2d(P.generators)) == sorted([(-1, 0), (0, -1), (2, 0), (2, 1), (0, 1)])


@pytest.mark.parametrize("theta", [(1, 1), (2, 1), (1, 3), (3, 2), (3, 3)])
def test_counts_match_pick(theta):
    P = make_P(list(theta))
    for n in range(0, 4):
        verts = hull_2d([tuple(n * c for c in g) for g in P.generators])
        expected = pick_count(verts) if n else 1
        assert count_lattice_points(P, n) == expected


def test_P21_data():
    data = ehrhart_and_hstar(make_P([2, 1]))
    assert data.counts == (1, 8, 23)
    assert data.h_star == Poly([1, 5, 2])
    assert data.ehrhart_poly == Poly([1, 3, 4])


# --- LP ----------------------------------------------------------------------

def test_lp_basic():
    # max x + y s.t. x + 2y + s = 4, 3x + y + u = 6
    val, x = lp_maximize([[1, 2, 1, 0], [3, 1, 0, 1]], [4, 6], [1, 1, 0, 0])
    assert val == Fraction(14, 5)
    assert x[:2] == [Fraction(8, 5), Fraction(6, 5)]


def test_lp_infeasible_and_unbounded():
    assert lp_maximize([[1, 1]], [-1], [0, 0]) is None
    with pytest.raises(ValueError):
        lp_maximize([[1, -1]], [0], [1, 0])


def test_membership():
    P = make_P([2, 1])
    assert contains(P, (2, 1))
    assert contains(P, (-1, 0))
    assert not contains(P, (-1, 1))
    assert contains(P, (4, 2), 2) and not contains(P, (5, 2), 2)
    assert contains_interior(P, (0, 0))
    assert not contains_interior(P, (2, 0))


# --- reciprocity -------------------------------------------------------------

@pytest.mark.parametrize("P", [make_P([2, 1]), make_P([1]), make_P([3]), make_P([1, 1])],
                         ids=["P(2,1)", "P(1)", "P(3)", "P(1,1)"])
def test_reciprocity(P):
    L = ehrhart_and_hstar(P).ehrhart_poly
    for n in (1, 2):
        assert (-1) ** P.dim * L(-n) == count_interior_points(P, n)


# --- interpolation and h* --------------------------------------------------------

def test_interpolate():
    assert interpolate([1, 8, 23]) == Poly([1, 3, 4])
    assert interpolate([5]) == Poly([5])


def test_hstar_formula_on_cube():
    # unit square: L(n) = (n+1)^2, h* = 1 + t
    assert hstar_from_counts([1, 4, 9], 2) == Poly([1, 1])


def test_simplex_and_pyramid():
    D2 = standard_simplex(2)
    assert ehrhart_and_hstar(D2).h_star == ONE
    assert ehrhart_and_hstar(pyramid_over(D2)).h_star == ONE


def test_segment():
    data = ehrhart_and_hstar(make_P([3]))
    # [-1, 3]: L(n) = 4n + 1, h* = 1 + 3t
    assert data.counts == (1, 5)
    assert data.h_star == Poly([1, 3])


def test_bounds():
    with pytest.raises(SizeBoundError):
        count_lattice_points(standard_simplex(5), 1)
    with pytest.raises(ValueError):
        make_P([0, 1])
    with pytest.raises(ValueError):
        ehrhart_and_hstar(VPolytope(2, ((0, 0), (1, 1))))


@pytest.mark.parametrize("theta", list(product([1, 2, 3], repeat=2)))
def test_hstar_theorem_2d(theta):
    rep = check_hstar_theorem(theta)
    assert rep.equal
    assert is_unimodal(rep.data.h_star.coeffs)


@pytest.mark.parametrize("theta", [(1,), (2, 3), (1, 2, 3), (3, 3)])
def test_half_open_box(theta):
    expect = eulerian_polynomial(len(theta))
    for t in theta:
        expect = expect * t
    assert half_open_box_hstar(list(theta)) == expect


@pytest.mark.parametrize("theta", list(product([1, 2, 3], repeat=3)))
def test_box_product_image_alternatingly_increasing(theta):
    # theta t + 1 = (1 + t) + (theta - 1) t, so the product sits in the cone
    f = Poly([1])
    for t in theta:
        f = f * Poly([1, t])
    assert all(c >= 0 for c in cone_coordinates(f, 3))
    assert is_alternatingly_increasing(apply_operator(f), 3)
