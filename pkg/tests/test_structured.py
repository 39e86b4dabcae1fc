from math import comb

import pytest
from hypothesis import given, strategies as st

from hankel_lab import structured as sf
from hankel_lab.exactmat import ExactMatrix, det_bareiss
from hankel_lab.lucas import b_poly, eval_at_matrix, g_poly


def test_sequence_terms():
    assert [sf.SequenceSpec.binomial_shift(0).term(n) for n in range(5)] == [1, 2, 6, 20, 70]
    assert [sf.SequenceSpec.binomial_shift(3).term(n) for n in range(3)] == [1, 5, 21]
    assert [sf.SequenceSpec.aerated_catalan().term(n) for n in range(7)] == [1, 0, 1, 0, 2, 0, 5]
    assert [sf.SequenceSpec.aerated_central_binomial().term(n) for n in range(5)] == [1, 0, 2, 0, 6]
    # r/(2n+r) C(2n+r, n) with r = 1 is the Catalan sequence
    assert [sf.SequenceSpec.dprime(1).term(n) for n in range(6)] == [1, 1, 2, 5, 14, 42]


def test_dprime_needs_positive_r():
    with pytest.raises(ValueError):
        sf.SequenceSpec.dprime(0)


def test_hankel_shape_and_entries():
    h = sf.hankel(sf.SequenceSpec.binomial_shift(1), 3)
    assert h == ExactMatrix([[1, 3, 10], [3, 10, 35], [10, 35, 126]])
    assert h.is_symmetric()


def test_binom_outside_range_is_zero():
    assert sf.binom(3, -1) == 0
    assert sf.binom(3, 4) == 0
    assert sf.binom(-1, 0) == 0


def test_gamma_family():
    assert sf.gamma_k(0, 3) == ExactMatrix.identity(3) * 2
    assert sf.gamma(3) == ExactMatrix([[1, 1, 0], [1, 0, 1], [0, 1, 0]])
    g2 = sf.gamma_k(2, 4)
    assert g2 == ExactMatrix([[0, 1, 1, 0], [1, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]])
    assert all(sf.gamma_k(k, 6).is_symmetric() for k in range(8))


def test_alpha_beta_are_corner_perturbations():
    for n in range(1, 8):
        corner = ExactMatrix.from_function(n, n, lambda i, j: int(i == j == n - 1))
        assert sf.alpha(n) == sf.gamma(n) + corner
        assert sf.beta(n) == sf.gamma(n) - corner
        assert sf.alpha(n) == sf.alpha_beta(1, n, 1)
        assert sf.beta(n) == sf.alpha_beta(1, n, -1)


def test_Q_and_sigma():
    q = sf.Q(3)
    assert q.shape == (3, 6)
    assert q @ q.T == ExactMatrix.identity(3) * 2
    s = sf.sigma(4, 1)
    assert s ** 4 == ExactMatrix.identity(4)
    assert sf.sigma(4, -1) ** 4 == ExactMatrix.identity(4) * -1


@given(st.integers(1, 12), st.integers(0, 10))
def test_alpha_beta_average_is_gamma_k(n, k):
    avg = (sf.alpha_beta(k, n, 1) + sf.alpha_beta(k, n, -1)) / 2
    if k <= 2 * n:
        assert avg == sf.gamma_k(k, n)


@given(st.integers(1, 14))
def test_beta_plus_two_inverse(n):
    inv = sf.beta_plus2_inverse(n)
    assert (sf.beta(n) + 2) @ inv == ExactMatrix.identity(n)
    assert sf.det_beta_plus2(n) == 2 == det_bareiss(sf.beta(n) + 2)


@given(st.integers(1, 12).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n - 1))))
def test_structure_of_g_at_alpha_beta(nk):
    n, k = nk
    assert eval_at_matrix(g_poly(k), sf.alpha(n)) == sf.structure_g_alpha(k, n)
    assert eval_at_matrix(g_poly(k), sf.beta(n)) == sf.structure_g_beta(k, n)


@given(st.integers(2, 12).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n - 1))))
def test_structure_of_b_at_alpha_beta(nk):
    n, k = nk
    assert eval_at_matrix(b_poly(k), sf.alpha(n)) == sf.structure_b_alpha(k, n)
    assert eval_at_matrix(b_poly(k), sf.beta(n)) == sf.structure_b_beta(k, n)


def test_structure_rejects_k_at_least_N():
    with pytest.raises(ValueError):
        sf.structure_g_alpha(3, 3)
    with pytest.raises(ValueError):
        sf.structure_b_beta(0, 3)


@given(st.integers(0, 15), st.integers(0, 6))
def test_pascal_conjugation(n, k):
    a = sf.matrix_A(n)
    lhs = a @ sf.gamma_k(k, n) @ a.T
    assert all(lhs[i, j] == comb(2 * i + 2 * j + 2, i + j + 1 - k) if i + j + 1 - k >= 0 else lhs[i, j] == 0
               for i in range(n) for j in range(n))
