import pytest

from qinv.hilbert import (
    dim_cov,
    dim_cov_total,
    dim_inv_slocc,
    hilbert_lsut_coeffs,
    hilbert_lsut_ct,
    hilbert_lut_coeffs,
    hilbert_lut_ct,
    lsut3_closed_form_table,
    lsut4_closed_form_table,
    lut3_closed_form_coeffs,
    lut4_closed_form_coeffs,
    slocc4_closed_form_coeffs,
)


@pytest.mark.parametrize("k", [2, 3, 4, 5, 6])
def test_degree2_and_degree3_dimension_formulas(k):
    assert dim_cov_total(2, k) == 2 ** (k - 1)
    assert 2 * dim_cov_total(3, k) == 3 ** (k - 1) + 1
    expected_multilinear = (2 ** (k - 1) + (-1) ** k) // 3
    assert dim_cov(3, k, (1,) * k) == expected_multilinear


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_quadratic_slocc_invariants_exist_iff_even(k):
    assert dim_inv_slocc(2, k) == (1 if k % 2 == 0 else 0)


def test_odd_degrees_vanish():
    assert dim_inv_slocc(3, 4) == 0
    assert dim_cov(2, 3, (1, 0, 0)) == 0  # parity-inadmissible multidegree


@pytest.mark.parametrize("k", [2, 3])
def test_lut_character_equals_constant_term(k):
    assert hilbert_lut_coeffs(k, 10) == hilbert_lut_ct(k, 10)


def test_lut3_closed_form_agrees():
    char = hilbert_lut_coeffs(3, 12)
    closed = lut3_closed_form_coeffs(12)
    assert char == closed
    assert char[:7] == [1, 0, 1, 0, 4, 0, 5]


def test_lut4_low_degrees_and_table():
    char = hilbert_lut_coeffs(4, 6)
    assert char[2] == 1 and char[4] == 8 and char[6] == 20
    closed = lut4_closed_form_coeffs(6)
    assert closed == char


def test_lsut3_character_ct_and_closed_form_agree():
    char = hilbert_lsut_coeffs(3, 4, 4)
    ct = hilbert_lsut_ct(3, 4, 4)
    closed = lsut3_closed_form_table(4, 4)
    assert char == ct == closed


def test_lsut_diagonal_matches_lut():
    # Summing an LSUT table row over the conjugate degree at equal bidegree
    # reproduces the LUT coefficient: dim LUT(n) = table[n][n].
    t = hilbert_lsut_coeffs(3, 6, 6)
    lut = hilbert_lut_coeffs(3, 12)
    for n in range(7):
        assert t[n][n] == lut[2 * n]


def test_lsut4_closed_form_low_orders():
    t = lsut4_closed_form_table(3, 3)
    char = hilbert_lsut_coeffs(4, 3, 3)
    assert t == char


def test_slocc4_corrected_closed_form():
    char = [dim_inv_slocc(d, 4) for d in range(0, 9)]
    closed = slocc4_closed_form_coeffs(8)
    assert char == closed
    assert char[::2] == [1, 1, 3, 4, 7]


def test_slocc3_series_is_hyperdeterminant_only():
    # For 3 qubits the invariant ring is generated by the quartic
    # hyperdeterminant: dimensions 1,0,1,0,1,... in even degrees 0,2,4,...
    vals = [dim_inv_slocc(d, 3) for d in range(0, 13)]
    assert vals == [1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1]


def test_consistency_total_vs_multidegree_sum():
    # dim_cov_total must equal the sum over admissible multidegrees.
    from itertools import product

    for k in (2, 3):
        for n in (2, 3, 4):
            total = 0
            for d in product(range(n + 1), repeat=k):
                total += dim_cov(n, k, d)
            assert total == dim_cov_total(n, k)
