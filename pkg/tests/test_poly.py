import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qinv.gaussian import GaussianRational
from qinv.poly import (
    DimensionError,
    EvaluationError,
    Polynomial,
    State,
    amp,
    amp_conj,
    aux,
    basis_state,
    ghz,
    mono_mul,
    random_state,
    w_state,
)

K = 2
VARS = [amp(i) for i in range(4)] + [amp_conj(i) for i in range(4)]

coeffs = st.builds(
    GaussianRational,
    st.fractions(min_value=-5, max_value=5, max_denominator=6),
    st.fractions(min_value=-5, max_value=5, max_denominator=6),
)
monomials = st.lists(
    st.tuples(st.sampled_from(VARS), st.integers(1, 3)),
    max_size=3,
).map(lambda pairs: tuple(sorted(dict(pairs).items())))
polys = st.dictionaries(monomials, coeffs, max_size=5).map(
    lambda d: Polynomial(K, {m: c for m, c in d.items() if c})
)


@given(polys, polys, polys)
@settings(max_examples=60, deadline=None)
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p + q == q + p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@given(polys)
@settings(max_examples=60, deadline=None)
def test_zero_and_negation(p):
    z = Polynomial.zero(K)
    assert p + z == p
    assert p - p == z
    assert p * z == z


@given(polys, polys)
@settings(max_examples=40, deadline=None)
def test_evaluate_is_homomorphism(p, q):
    gen = np.random.default_rng(0)
    s = random_state(K, gen)
    assert (p + q).evaluate(s) == pytest.approx(
        p.evaluate(s) + q.evaluate(s), abs=1e-9
    )
    assert (p * q).evaluate(s) == pytest.approx(
        p.evaluate(s) * q.evaluate(s), abs=1e-9
    )


@given(polys)
@settings(max_examples=40, deadline=None)
def test_conjugate_evaluation(p):
    gen = np.random.default_rng(1)
    s = random_state(K, gen)
    assert p.conjugate().evaluate(s) == pytest.approx(
        p.evaluate(s).conjugate(), abs=1e-9
    )


@given(polys)
@settings(max_examples=40, deadline=None)
def test_batch_evaluator_matches_evaluate(p):
    gen = np.random.default_rng(2)
    states = [random_state(K, gen) for _ in range(3)]
    run = p.batch_evaluator()
    got = run(np.array([s.amplitudes for s in states]))
    want = [p.evaluate(s) for s in states]
    assert np.allclose(got, want, atol=1e-9)


def test_partial_derivative_product_rule():
    x = Polynomial.variable(K, amp(0))
    y = Polynomial.variable(K, amp(1))
    p = (x + y) * (x * x + y)
    v = amp(0)
    lhs = p.partial(v)
    rhs = (x + y).partial(v) * (x * x + y) + (x + y) * (x * x + y).partial(v)
    assert lhs == rhs


def test_partial_lowers_degree():
    x = Polynomial.variable(K, amp(0))
    p = x * x * x
    assert p.partial(amp(0)) == 3 * (x * x)
    assert p.partial(amp(1)) == Polynomial.zero(K)


def test_mono_mul_merges_sorted():
    m1 = ((amp(0), 1), (amp(2), 2))
    m2 = ((amp(0), 1), (amp(1), 1))
    assert mono_mul(m1, m2) == ((amp(0), 2), (amp(1), 1), (amp(2), 2))


def test_dimension_mismatch_raises():
    p2 = Polynomial.variable(2, amp(0))
    p3 = Polynomial.variable(3, amp(0))
    with pytest.raises(DimensionError):
        p2 + p3
    with pytest.raises(DimensionError):
        p2 * p3


def test_conjugate_rejects_transvection_intermediates():
    p = Polynomial.variable(K, aux(1, 0, copy=1))
    with pytest.raises(ValueError):
        p.conjugate()


def test_unresolved_aux_raises():
    p = Polynomial.variable(K, aux(1, 0))
    s = basis_state(K, 0)
    with pytest.raises(EvaluationError):
        p.evaluate(s)


def test_state_json_round_trip(tmp_path):
    s = State(3, tuple(complex(i, -i) / 10 for i in range(8)))
    path = tmp_path / "s.json"
    s.save(path)
    with open(path) as fh:
        raw = json.load(fh)
    assert raw["k"] == 3
    assert len(raw["amplitudes"]) == 8
    assert raw["amplitudes"][1] == [0.1, -0.1]
    assert State.load(path) == s


def test_state_validation():
    with pytest.raises(ValueError):
        State(2, (1, 0, 0))


def test_named_states():
    g = ghz(3)
    assert g.amplitudes[0] == pytest.approx(2 ** -0.5)
    assert g.amplitudes[7] == pytest.approx(2 ** -0.5)
    w = w_state(3)
    assert sum(abs(a) ** 2 for a in w.amplitudes) == pytest.approx(1.0)
    assert w.amplitudes[1] == pytest.approx(3 ** -0.5)
    assert basis_state(2, 3).amplitudes == (0, 0, 0, 1)
