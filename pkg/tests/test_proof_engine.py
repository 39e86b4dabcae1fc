import warnings

import pytest
from hypothesis import given, settings, strategies as st

from hankel_lab import proof_engine as pe
from hankel_lab.exactmat import ExactMatrix, det_bareiss


def test_shift_params():
    assert pe.shift_params(1) == (0, 0)
    assert pe.shift_params(4) == (2, 1)
    assert pe.shift_params(5) == (2, 2)
    with pytest.raises(ValueError):
        pe.shift_params(0)


def test_case_sizes():
    assert pe.case_size(2, 2, 0) == 3
    assert pe.case_size(4, 2, 1) == 6
    assert pe.case_size(7, 3, 1) == 10
    with pytest.raises(ValueError):
        pe.case_size(8, 1, 0)


def test_closed_form_lookup():
    assert pe.closed_form(5, 13) == -144
    assert pe.closed_form(5, 2) is None
    assert pe.closed_form(2, 4) == pe.closed_form_value(7, 1, 1) == pe.d_r_direct(2, 4)
    # the stated forms for the even-r middle classes miss a factor k^(k-1)
    assert pe.closed_form(4, 2) == -4
    assert pe.closed_form(4, 2, corrected=True) == -8 == pe.d_r_direct(4, 2)


def test_overlapping_classes_agree():
    # for r = 2 the classes 2kn+k and 2kn+1 coincide
    for N in range(1, 12):
        pe.closed_form(2, N)


@pytest.mark.parametrize("case_id", pe.ALL_CASES)
def test_corrected_closed_forms_match_direct(case_id):
    for k in range(1, 4):
        for n in range(3):
            r, N = pe.case_r(case_id, k), pe.case_size(case_id, k, n)
            assert pe.closed_form_value(case_id, k, n, corrected=True) == pe.d_r_direct(r, N)


@pytest.mark.parametrize("case_id", [1, 2, 3, 5, 6])
def test_stated_closed_forms_match_direct(case_id):
    for k in range(1, 4):
        for n in range(4):
            r, N = pe.case_r(case_id, k), pe.case_size(case_id, k, n)
            assert pe.closed_form_value(case_id, k, n) == pe.d_r_direct(r, N)


def test_stated_forms_differ_only_by_k_power():
    for case_id in (4, 7):
        for k in range(1, 4):
            for n in range(3):
                stated = pe.closed_form_value(case_id, k, n)
                assert pe.closed_form_value(case_id, k, n, corrected=True) == stated * k ** (k - 1)


@settings(max_examples=40)
@given(st.integers(1, 8), st.integers(0, 14))
def test_three_routes_agree(r, N):
    k, l = pe.shift_params(r)
    if N < max(k + l, 1):
        return
    direct = pe.d_r_direct(r, N)
    assert pe.d_r_via_gamma(r, N) == direct
    assert pe.d_r_via_alpha_beta(r, N) == direct


def test_small_N_warns_and_falls_back():
    with pytest.warns(pe.TheoremPreconditionWarning):
        assert pe.d_r_via_gamma(6, 2) == pe.d_r_direct(6, 2)
    with pytest.warns(pe.TheoremPreconditionWarning):
        assert pe.d_r_via_alpha_beta(6, 0) == 1


def test_mu_iteration_matches_definition():
    for r, N in [(3, 4), (4, 6), (5, 8), (6, 9)]:
        for state in pe.mu_states(r, N):
            assert state.mu == pe.mu_direct(r, N, state.i)


@pytest.mark.parametrize("case_id", pe.ALL_CASES)
def test_lemmas_with_repaired_witness(case_id):
    for k in range(1, 3):
        for n in range(3):
            case = pe.CaseSpec.for_case(case_id, k, n)
            if case.N < case.k + case.l or case.N == 0:
                continue
            value = pe.lemma_for_case(case_id, k, n, corrected=True)
            assert value == pe.det_mu_l(case.r, case.N)


def test_stated_w4_violates_a_hypothesis_for_k_at_least_two():
    with pytest.raises(pe.HypothesisViolation):
        pe.lemma_for_case(4, 2, 1)
    # k = 1 is fine either way
    assert pe.lemma_for_case(4, 1, 1) == pe.d_r_direct(2, 3)


def test_witness_vectors_are_integral_columns():
    for case_id in pe.ALL_CASES:
        for k in range(1, 4):
            for n in range(3):
                if pe.case_size(case_id, k, n) == 0:
                    continue
                w = pe.witness_vector(case_id, k, n)
                assert w.shape == (pe.case_size(case_id, k, n), 1)
                assert all(type(x) is int for x in w.column_values())
    with pytest.raises(ValueError):
        pe.witness_vector(0, 1, 1)


def test_lemma_main1_rejects_bad_dimensions():
    case = pe.CaseSpec.for_case(1, 1, 1)
    with pytest.raises(pe.HypothesisViolation):
        pe.lemma_main1(case, ExactMatrix.zeros(case.N + 1, 1))


def test_verify_case_records():
    rep = pe.verify_case(3, k_max=2, n_max=2)
    assert rep.passed
    assert [r.params["k"] for r in rep.records] == sorted(r.params["k"] for r in rep.records)
    bad = pe.verify_case(7, k_max=2, n_max=1)
    assert not bad.passed
    assert bad.counterexample.params == {"case": 7, "r": 4, "k": 2, "n": 0, "N": 3}
    assert pe.verify_case(7, k_max=2, n_max=1, corrected=True).passed


def test_verify_instance_detail_lists_all_routes():
    rec = pe.verify_instance(5, 2, 1)
    for key in ("closed_form", "direct", "via_alpha_beta", "lemma", "det_mu_l"):
        assert key in rec.detail
