import pytest

from qinv.catalog import (
    b_family,
    b_family_all,
    b_multidegrees,
    catalog_3,
    catalog_4,
    cayley_hyperdet,
    covariant_by_name,
    degree3_multilinear_basis,
    degree4_invariants,
    ground_form,
)
from qinv.hilbert import dim_cov
from qinv.linalg import rank
from qinv.transvection import transvect


def test_ground_form_shape():
    f = ground_form(3)
    assert len(f.poly.terms) == 8
    assert f.amp_degree == 1
    assert f.multidegree == (1, 1, 1)


def test_b_multidegrees_even_zero_count():
    for k in (2, 3, 4):
        ds = b_multidegrees(k)
        assert len(ds) == 2 ** (k - 1)
        assert all(d.count(0) % 2 == 0 for d in ds)


def test_b_family_rejects_odd_zero_count():
    with pytest.raises(ValueError):
        b_family(3, (2, 2, 0))


@pytest.mark.parametrize("k", [2, 3, 4])
def test_degree2_family_rank(k):
    fam = b_family_all(k)
    assert rank([c.poly for c in fam]) == 2 ** (k - 1)


def test_b_222_equals_f_squared():
    f = ground_form(3)
    assert b_family(3, (2, 2, 2)).poly == (f * f).poly


def test_hessian_proportional_to_b():
    # B_200 = (f,f)^(0,1,1) equals 2 H_x with the literal Omega operator.
    hx = catalog_3("Hx")
    b = b_family(3, (2, 0, 0))
    assert b.poly == hx.poly * 2


def test_delta_is_twice_cayley_hyperdet():
    delta = catalog_3("Delta")
    assert delta.poly == cayley_hyperdet() * 2


def test_cayley_hyperdet_term_count():
    # 4 squared-pair terms, 6 with coefficient -2, 2 with coefficient 4.
    p = cayley_hyperdet()
    assert len(p.terms) == 12
    from collections import Counter

    counts = Counter(complex(c) for c in p.terms.values())
    assert counts == {1 + 0j: 4, -2 + 0j: 6, 4 + 0j: 2}


def test_t_multidegree():
    t = catalog_3("T")
    assert t.amp_degree == 3
    assert t.multidegree == (1, 1, 1)


@pytest.mark.parametrize("k,count", [(2, 1), (3, 1), (4, 3)])
def test_degree3_multilinear_basis_counts(k, count):
    basis = degree3_multilinear_basis(k)
    assert len(basis) == count
    assert len(basis) == dim_cov(3, k, (1,) * k)


@pytest.mark.parametrize("k,count", [(2, 1), (3, 1), (4, 3)])
def test_degree4_invariant_counts(k, count):
    basis = degree4_invariants(k)
    assert len(basis) == count
    assert all(c.is_invariant() for c in basis)


def test_catalog_4_multidegrees_match_names():
    for name in ("C1_1111", "C2_1111", "C_3111", "C_1311", "C_1131",
                 "C_1113", "D_4000", "D_0400", "D_0040", "D_0004",
                 "D_2200", "E_3111"):
        cov = catalog_4(name)
        digits = tuple(int(c) for c in name.split("_")[1])
        assert cov.multidegree == digits, name


def test_catalog_4_chain_reproduces_direct_transvection():
    f = ground_form(4)
    b = b_family(4, (2, 2, 0, 0))
    direct = transvect(f, b, (1, 1, 0, 0))
    assert catalog_4("C1_1111").poly == direct.poly


def test_covariant_by_name_dispatch():
    assert covariant_by_name(3, "Delta").name == "Delta"
    assert covariant_by_name(4, "B_2200").multidegree == (2, 2, 0, 0)
    assert covariant_by_name(2, "f").k == 2
    with pytest.raises(KeyError):
        covariant_by_name(3, "nonsense")
    with pytest.raises(KeyError):
        covariant_by_name(2, "B_200")
