"""Hermitian pairings, the 3-qubit generator identities, syzygies and the
Jacobian independence certificate."""

from fractions import Fraction

import pytest

from qinv.catalog import b_family, catalog_3, ground_form
from qinv.gaussian import GaussianRational
from qinv.invariants import (
    JACOBIAN_POINT,
    InvariantExpr,
    b_pairing,
    degree6_invariants_4,
    delta_invariant,
    evaluate_exact,
    f7_bracket_form,
    f7_check,
    f_squared_relation_check,
    lut3_generator,
    lut3_generator_sum,
    jacobian_determinant,
    jacobian_matrix,
    jacobian_rank,
    lsut_degree4_basis,
    lut_degree4_basis,
    norm_invariant,
    pairing,
    s2_invariant,
    syzygy_checks,
)
from qinv.linalg import rank
from qinv.poly import Polynomial, amp


def test_pairing_bidegree_and_name():
    f = ground_form(3)
    t = catalog_3("T")
    inv = pairing(t, f, "s2")
    assert inv.bidegree == (3, 1)
    assert inv.name == "s2"
    assert inv.conjugate().bidegree == (1, 3)


def test_pairing_multidegree_mismatch_is_zero():
    hx = catalog_3("Hx")
    hy = catalog_3("Hy")
    assert pairing(hx, hy).is_zero()


def test_pairing_of_norm_form():
    # <f|f> = sum_i a_i conj(a_i): 2^k terms, all coefficient 1.
    a = norm_invariant(3)
    assert len(a.poly.terms) == 8
    assert all(c == GaussianRational(1) for c in a.poly.terms.values())


def test_pairing_weight_counts_repeated_aux():
    # <f^2|f^2> at k=1 has weight 2 on the squared auxiliary monomials.
    f = ground_form(1)
    inv = pairing(f * f, f * f)
    # Evaluate at a_0=1, a_1=0: only the x_0^2 monomial contributes, with
    # coefficient a_0^2 conj(a_0)^2 and weight 2! = 2.
    val = evaluate_exact(inv.poly, {0: GaussianRational(1), 1: GaussianRational(0)})
    assert val == GaussianRational(2)


def test_invariant_expr_rejects_aux_and_mixed_bidegree():
    from qinv.poly import aux

    with pytest.raises(ValueError):
        InvariantExpr(Polynomial.variable(2, aux(1, 0)), (1, 0))
    p = Polynomial.variable(2, amp(0))
    with pytest.raises(ValueError):
        InvariantExpr(p, (2, 0))


def test_invariant_arithmetic_bidegrees():
    a = norm_invariant(2)
    assert (a * a).bidegree == (2, 2)
    assert (a ** 3).bidegree == (3, 3)
    with pytest.raises(ValueError):
        a + a * a


@pytest.mark.parametrize("k", [2, 3, 4])
def test_f_squared_relation(k):
    ok, diff = f_squared_relation_check(k)
    assert ok, f"residual has {len(diff.terms)} terms"


@pytest.mark.parametrize("k,size", [(2, 2), (3, 4), (4, 8)])
def test_lut_degree4_basis_counts_and_rank(k, size):
    basis = lut_degree4_basis(k)
    assert len(basis) == size
    assert rank([b.poly for b in basis]) == size


@pytest.mark.parametrize("k,size", [(2, 6), (3, 8), (4, 20)])
def test_lsut_degree4_basis_counts_and_rank(k, size):
    basis = lsut_degree4_basis(k)
    assert len(basis) == size
    assert rank([b.poly for b in basis]) == size


def test_lut3_generator_index_validation():
    with pytest.raises(ValueError):
        lut3_generator(0)
    with pytest.raises(ValueError):
        lut3_generator(8)


def test_lut3_generator1_is_norm():
    assert lut3_generator(1).poly == norm_invariant(3).poly


@pytest.mark.parametrize(
    "idx,perms",
    [
        (2, ((1, 0), (1, 0), (0, 1))),
        (3, ((1, 0), (0, 1), (1, 0))),
        (4, ((0, 1), (1, 0), (1, 0))),
        (5, ((1, 0, 2), (0, 2, 1), (2, 1, 0))),
    ],
)
def test_lut3_generator_permutation_sums(idx, perms):
    assert lut3_generator_sum(*perms).poly == lut3_generator(idx).poly


def test_lut3_generator_sum_size_mismatch():
    with pytest.raises(ValueError):
        lut3_generator_sum((0, 1), (0, 1), (0,))


def test_f7_reconciliation():
    report = f7_check()
    # The literal brace reading produces a non-invariant sum, so the literal
    # displays disagree; the equal-last-index reading gives the sum -s2 and
    # reconciles everything exactly.
    assert not report["literal_equal"]
    assert not report["literal_sum_is_s2"]
    assert report["corrected_sum_ratio_on_s2"] == GaussianRational(-1)
    assert report["bracket_equals_conj_delta_s2_squared"]
    assert report["decomposition_residual_zero"]
    assert report["printed_display_gap_zero"]
    assert report["literal_residual_terms"] > 0


def test_f7_bracket_form_bidegree():
    assert f7_bracket_form().bidegree == (6, 6)


def test_s2_and_delta():
    assert s2_invariant().bidegree == (3, 1)
    assert delta_invariant().bidegree == (4, 0)
    assert delta_invariant().poly == catalog_3("Delta").poly


def test_syzygies_hold():
    assert syzygy_checks() == (True, True)


def test_jacobian_rank_is_seven():
    assert jacobian_rank() == 7


def test_jacobian_matrix_shape():
    j = jacobian_matrix()
    assert len(j) == 7 and all(len(row) == 16 for row in j)


def test_jacobian_literal_determinant_vanishes():
    # Structural: the Delta row is a linear combination of the eight
    # holomorphic coordinate rows, so the literal 16x16 determinant is zero.
    assert jacobian_determinant(literal=True) == GaussianRational(0)


def test_jacobian_completion_determinant_nonzero():
    d = jacobian_determinant()
    assert d == GaussianRational(4834273876992, 8517530164224)


def test_degree6_invariants_4_count_and_rank():
    pairs = degree6_invariants_4()
    assert len(pairs) == 20
    assert rank([expr.poly for _, expr in pairs]) == 20


def test_evaluate_exact_simple():
    p = Polynomial.variable(3, amp(0)) * Polynomial.variable(3, amp(0))
    z = GaussianRational(3, 3)
    assert evaluate_exact(p, JACOBIAN_POINT) == z * z


def test_pairing_sesquilinearity_numeric(rng):
    # <phi|psi> evaluated on a state equals conj(<psi|phi>) evaluated there.
    from qinv.poly import random_state

    t = catalog_3("T")
    f3 = ground_form(3)
    fwd = pairing(t, f3)
    bwd = pairing(f3, t)
    for _ in range(5):
        s = random_state(3, rng)
        assert fwd.evaluate(s) == pytest.approx(
            bwd.evaluate(s).conjugate(), rel=1e-10, abs=1e-12
        )
