from math import comb

import pytest
from hypothesis import given, strategies as st

from hankel_lab import lucas
from hankel_lab.exactmat import ExactMatrix
from hankel_lab.lucas import IntPolynomial, X
from hankel_lab.structured import alpha, alpha_beta, beta, gamma, gamma_k

polys = st.lists(st.integers(-6, 6), max_size=8).map(IntPolynomial)


def test_polynomial_basics():
    p = IntPolynomial([1, 0, 2, 0])
    assert p.degree == 2 and p.leading == 2
    assert IntPolynomial().degree == -1
    assert (X + 1) ** 2 == IntPolynomial([1, 2, 1])
    assert p(3) == 19
    assert (X - 2).reflect() == -X - 2


def test_polynomial_rejects_non_integers():
    with pytest.raises((TypeError, ValueError)):
        IntPolynomial([0.5])


@given(polys, polys, st.integers(-5, 5))
def test_ring_operations_agree_with_evaluation(p, q, x):
    assert (p + q)(x) == p(x) + q(x)
    assert (p * q)(x) == p(x) * q(x)
    assert (p - q)(x) == p(x) - q(x)


def test_first_lucas_polynomials():
    assert lucas.lucas_poly(0) == 2
    assert lucas.lucas_poly(1) == X
    assert lucas.lucas_poly(2) == X ** 2 - 2
    assert lucas.lucas_poly(3) == X ** 3 - 3 * X
    assert lucas.lucas_bar(0) == 1
    assert lucas.lucas_bar(4) == lucas.lucas_poly(4)


@given(st.integers(1, 25))
def test_lucas_closed_form(n):
    assert lucas.lucas_closed_form(n) == lucas.lucas_poly(n)


@given(st.integers(1, 20))
def test_lucas_values_at_plus_minus_two(n):
    # L_n(t + 1/t) = t^n + t^-n at t = 1 and t = -1
    assert lucas.lucas_poly(n)(2) == 2
    assert lucas.lucas_poly(n)(-2) == 2 * (-1) ** n


@given(st.integers(1, 15))
def test_char_poly_relations(n):
    g, a, b = lucas.char_polys(n)
    gm1 = lucas.g_poly(n - 1)
    assert a == g - gm1
    assert b == g + gm1
    assert b == lucas.lucas_poly(n)
    assert g == lucas.lucas_sum([(-1) ** (n - k) for k in range(n + 1)])


@given(st.integers(1, 7))
def test_char_polys_by_interpolation(n):
    g, a, b = lucas.char_polys(n)
    assert lucas.charpoly_by_interpolation(gamma(n)) == g
    assert lucas.charpoly_by_interpolation(alpha(n)) == a
    assert lucas.charpoly_by_interpolation(beta(n)) == b


@given(st.integers(0, 18))
def test_monomial_in_lucas_basis(n):
    expected = [0] * (n + 1)
    for k in range(n // 2 + 1):
        expected[n - 2 * k] = comb(n, k)
    assert lucas.lucas_expand(X ** n) == expected


@given(polys)
def test_lucas_expansion_round_trip(p):
    assert lucas.lucas_sum(lucas.lucas_expand(p)) == p


@given(st.integers(1, 9), st.integers(0, 7))
def test_lucas_of_alpha_beta(n, k):
    lk = lucas.lucas_poly(k)
    assert lucas.eval_at_matrix(lk, alpha(n)) == alpha_beta(k, n, 1)
    assert lucas.eval_at_matrix(lk, beta(n)) == alpha_beta(k, n, -1)


@given(st.integers(1, 9), st.integers(0, 7))
def test_lucas_of_gamma_truncates(n, k):
    assert lucas.eval_at_gamma(lucas.lucas_poly(k), n) == gamma_k(k, n)


@given(polys, st.integers(1, 7))
def test_eval_at_gamma_is_exact_truncation(p, n):
    big = lucas.eval_at_matrix(p, gamma(n + max(p.degree, 0) + 1)).leading(n)
    assert lucas.eval_at_gamma(p, n) == big


def test_eval_at_matrix_constant_term():
    m = ExactMatrix([[1, 2], [3, 4]])
    assert lucas.eval_at_matrix(IntPolynomial([5]), m) == ExactMatrix.identity(2) * 5
    assert lucas.eval_at_matrix(X ** 2 - 5 * X - 2, m).is_zero()  # Cayley-Hamilton


def test_interpolate():
    xs = [0, 1, 2, 3]
    assert lucas.interpolate(xs, [(x ** 3 - x) for x in xs]) == X ** 3 - X
