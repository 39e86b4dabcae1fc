from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hankel_lab import favard
from hankel_lab.exactmat import det_bareiss
from hankel_lab.structured import hankel_from_terms

FAMILIES = favard.FavardData.tagged()


@pytest.mark.parametrize("f", FAMILIES, ids=lambda f: f.name)
def test_reconstruct_tagged_sequences(f):
    assert favard.sequence_check(f, 20).passed


@pytest.mark.parametrize("f", FAMILIES, ids=lambda f: f.name)
def test_factorization_and_product(f):
    for n in range(8):
        assert favard.factorization_check(f, n).passed
    assert favard.product_check(f, 12).passed


@pytest.mark.parametrize("f", FAMILIES, ids=lambda f: f.name)
def test_moment_expansion(f):
    assert favard.moment_expansion_check(f, 10).passed


def test_known_triangles():
    assert favard.triangle_closed_form_check(favard.FavardData.shift1(), 15).passed
    assert favard.triangle_closed_form_check(favard.FavardData.aerated_central_binomial(), 15).passed
    with pytest.raises(ValueError):
        favard.triangle_closed_form_check(favard.FavardData.aerated_catalan(), 3)


def test_two_power_determinants():
    cb = favard.FavardData.central_binomial()
    acb = favard.FavardData.aerated_central_binomial()
    for n in range(1, 13):
        assert favard.hankel_det_product(cb, n) == 2 ** (n - 1)
        assert favard.hankel_det_product(acb, n) == 2 ** (n - 1)


def test_triangle_is_unitriangular():
    tri = favard.triangle(favard.FavardData.central_binomial(), 6)
    assert all(tri(n, n) == 1 for n in range(7))
    assert tri(2, 5) == 0 and tri(3, -1) == 0


@given(st.lists(st.integers(-3, 3), min_size=9, max_size=9),
       st.lists(st.integers(1, 4), min_size=9, max_size=9))
def test_arbitrary_jfraction_product(s, t):
    """For any (s, t) the Hankel determinant of a_n(0) is the product of t's."""
    f = favard.FavardData.from_lists(s, t)
    n = 5
    terms = favard.reconstruct_sequence(f, 2 * n - 2)
    assert det_bareiss(hankel_from_terms(terms, n)) == favard.hankel_det_product(f, n)
    assert favard.factorization_check(f, n).passed
    assert favard.moment_expansion_check(f, 6).passed


def test_rational_coefficients():
    f = favard.FavardData.from_lists([Fraction(1, 2)] * 8, [Fraction(1, 3)] * 8)
    assert favard.product_check(f, 4).passed


def test_finite_stream_overrun():
    f = favard.FavardData.from_lists([0], [1])
    with pytest.raises(IndexError):
        favard.triangle(f, 4)


def test_orthogonal_polynomials_recurrence():
    polys = favard.orthogonal_polynomials(favard.FavardData.aerated_catalan(), 4)
    # Chebyshev U_n(x/2): x^2 - 1, x^3 - 2x, x^4 - 3x^2 + 1
    assert polys[2] == [-1, 0, 1]
    assert polys[3] == [0, -2, 0, 1]
    assert polys[4] == [1, 0, -3, 0, 1]
