"""Dimension formulas and Hilbert series of the invariant algebras.

Two independent routes are provided for the unitary Hilbert series:

* the character route, summing squares/products of covariant-space
  dimensions obtained from symmetric-group characters, and
* truncated constant-term extraction of the rational-series formulas
  (geometric expansion in z and exact Laurent bookkeeping in the compact
  torus variables), in place of a full partial-fraction algorithm.

Closed forms quoted from the literature (3-qubit LUT/LSUT, 4-qubit tables)
are expanded for cross-validation; the 4-qubit numerator tables ship as
JSON data files.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from itertools import product

from .characters import mn_character, partitions, z_lambda


# -- character-route dimensions -------------------------------------------


@lru_cache(maxsize=None)
def dim_cov(n: int, k: int, d: tuple) -> int:
    """Dimension of the space of covariants of amplitude degree n and
    auxiliary multidegree d, as a product of two-row characters paired with
    the trivial character."""
    if len(d) != k:
        raise ValueError("multidegree length must equal k")
    if any(x < 0 or x > n or (n - x) % 2 for x in d):
        return 0
    shapes = tuple(((n + x) // 2, (n - x) // 2) if x < n else (n,) for x in d)
    total = Fraction(0)
    for mu in partitions(n):
        prod_val = 1
        for shape in shapes:
            prod_val *= mn_character(shape, mu)
            if prod_val == 0:
                break
        if prod_val:
            total += Fraction(prod_val, z_lambda(mu))
    assert total.denominator == 1
    return int(total)


def dim_inv_slocc(degree: int, k: int) -> int:
    """Dimension of the degree-d SLOCC invariants (0 in odd degree)."""
    if degree % 2:
        return 0
    return dim_cov(degree, k, (0,) * k)


@lru_cache(maxsize=None)
def dim_cov_total(d: int, k: int) -> int:
    """Total covariant dimension in amplitude degree d, all multidegrees."""
    if d == 0:
        return 1
    total = Fraction(0)
    two_row = [lam for lam in partitions(d) if len(lam) <= 2]
    for mu in partitions(d):
        s = sum(mn_character(lam, mu) for lam in two_row)
        total += Fraction(s ** k, z_lambda(mu))
    assert total.denominator == 1
    return int(total)


def _multidegrees(n: int, k: int):
    vals = range(n % 2, n + 1, 2)
    return product(vals, repeat=k)


def hilbert_lut_coeffs(k: int, nmax: int):
    """Coefficients of z^0..z^nmax of the LUT Hilbert series, character route."""
    out = [0] * (nmax + 1)
    out[0] = 1
    for deg in range(2, nmax + 1, 2):
        n = deg // 2
        out[deg] = sum(dim_cov(n, k, d) ** 2 for d in _multidegrees(n, k))
    return out


def hilbert_lsut_coeffs(k: int, n1max: int, n2max: int):
    """Bidegree table t[n1][n2] of LSUT invariant dimensions, character route."""
    table = [[0] * (n2max + 1) for _ in range(n1max + 1)]
    table[0][0] = 1
    for n1 in range(n1max + 1):
        for n2 in range(n2max + 1):
            if n1 == n2 == 0:
                continue
            if (n1 - n2) % 2:
                continue
            table[n1][n2] = sum(
                dim_cov(n1, k, d) * dim_cov(n2, k, d)
                for d in _multidegrees(min(n1, n2), k)
            )
    return table


# -- truncated constant-term engine ---------------------------------------


def ct_series(factors, grading_bounds, prefactor, allowed_final, divisor=1):
    """Constant-term extraction of prefactor / prod(1 - z^g * m) by truncated
    geometric expansion.

    factors: list of (g, v) where g is the tuple of grading exponents (the
        variables the series is expanded in; every factor must have g != 0)
        and v the tuple of compact-variable exponents carried per expansion
        step.
    grading_bounds: max order per grading variable.
    prefactor: dict mapping compact-exponent tuples to int coefficients.
    allowed_final: per compact variable, the tuple of exponents that can
        still be cancelled by the prefactor (used both for the final
        extraction and for pruning).
    divisor: final rational division (e.g. 2^k for the Weyl integration
        normalization).

    Returns a dict mapping grading tuples to Fractions.
    """
    ng = len(grading_bounds)
    for g, _v in factors:
        if all(x == 0 for x in g):
            raise ValueError("denominator factor with zero grading order")
        if any(x < 0 for x in g):
            raise ValueError("denominator factor with negative grading order")

    zero_g = (0,) * ng
    nv = len(allowed_final)
    series = {zero_g: {(0,) * nv: 1}}

    def remaining(gvec):
        return sum(b - x for b, x in zip(grading_bounds, gvec))

    def prune(coeffs, rem):
        out = {}
        for e, c in coeffs.items():
            ok = True
            for i in range(nv):
                if min(abs(e[i] - fin) for fin in allowed_final[i]) > rem:
                    ok = False
                    break
            if ok:
                out[e] = c
        return out

    for g, v in factors:
        step = sum(g)
        new: dict = {}
        for gvec, coeffs in series.items():
            # m = 0 term: copy
            tgt = new.setdefault(gvec, {})
            for e, c in coeffs.items():
                tgt[e] = tgt.get(e, 0) + c
            m = 1
            while True:
                ng_vec = tuple(x + m * y for x, y in zip(gvec, g))
                if any(x > b for x, b in zip(ng_vec, grading_bounds)):
                    break
                shift = tuple(m * y for y in v)
                tgt = new.setdefault(ng_vec, {})
                for e, c in coeffs.items():
                    ne = tuple(a + b for a, b in zip(e, shift))
                    tgt[ne] = tgt.get(ne, 0) + c
                m += 1
        series = {
            gvec: prune(coeffs, remaining(gvec)) for gvec, coeffs in new.items()
        }
        series = {g2: c2 for g2, c2 in series.items() if c2}

    result = {}
    for gvec, coeffs in series.items():
        total = 0
        for pe, pc in prefactor.items():
            me = tuple(-x for x in pe)
            total += pc * coeffs.get(me, 0)
        if total:
            result[gvec] = Fraction(total, divisor)
    return result


def _u_prefactor(k: int, extra_vars: int = 0):
    """Expansion of prod_i (1 - u_i^2)(1 - u_i^-2) over (extra_vars + k)
    compact vars, the extra leading variables (e.g. t) untouched.

    This is the Weyl-measure factor over both roots of each SL(2); the
    printed source shows (1 - u_i^-2)^2, which fails the z^0 = 1
    normalization check, while this form reproduces the character route.
    """
    base = {2: -1, 0: 2, -2: -1}
    pref = {(): 1}
    for _ in range(k):
        new = {}
        for e, c in pref.items():
            for de, dc in base.items():
                new[e + (de,)] = new.get(e + (de,), 0) + c * dc
        pref = new
    return {(0,) * extra_vars + e: c for e, c in pref.items()}


def hilbert_lut_ct(k: int, nmax: int):
    """LUT Hilbert series coefficients z^0..z^nmax by constant-term
    extraction of the Weyl-integration formula.

    Denominator: product over a = +-1 and alpha in {+-1}^k of
    (1 - t^a z u^alpha); constant term in t and u, divided by 2^k.
    """
    factors = []
    for a in (1, -1):
        for alpha in product((1, -1), repeat=k):
            factors.append(((1,), (a,) + alpha))
    prefactor = _u_prefactor(k, extra_vars=1)
    allowed = [(0,)] + [(-2, 0, 2)] * k
    res = ct_series(factors, (nmax,), prefactor, allowed, divisor=2 ** k)
    out = [0] * (nmax + 1)
    for (n,), c in res.items():
        assert c.denominator == 1, (n, c)
        out[n] = int(c)
    return out


def hilbert_lsut_ct(k: int, n1max: int, n2max: int):
    """LSUT bidegree table by constant-term extraction: denominator
    product over alpha in {+-1}^k of (1 - z u^alpha)(1 - zbar u^alpha)."""
    factors = []
    for alpha in product((1, -1), repeat=k):
        factors.append(((1, 0), alpha))
        factors.append(((0, 1), alpha))
    prefactor = _u_prefactor(k)
    allowed = [(-2, 0, 2)] * k
    res = ct_series(factors, (n1max, n2max), prefactor, allowed, divisor=2 ** k)
    table = [[0] * (n2max + 1) for _ in range(n1max + 1)]
    for (n1, n2), c in res.items():
        assert c.denominator == 1, (n1, n2, c)
        table[n1][n2] = int(c)
    return table


# -- closed-form expansion ------------------------------------------------


def _series_mul(a: dict, b: dict, bounds):
    out: dict = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            if any(x > bnd for x, bnd in zip(e, bounds)):
                continue
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def _geom(evec, bounds):
    """Truncated expansion of 1/(1 - z^evec)."""
    out = {}
    cur = tuple(0 for _ in bounds)
    while all(x <= bnd for x, bnd in zip(cur, bounds)):
        out[cur] = 1
        cur = tuple(x + y for x, y in zip(cur, evec))
    return out


def expand_closed_form(numerator: dict, denominator, bounds):
    """Truncated coefficients of P/Q.

    numerator: dict exponent-tuple -> int; denominator: list of
    (exponent-tuple, multiplicity) meaning (1 - z^e)^mult; bounds: max
    order per variable.
    """
    series = {e: c for e, c in numerator.items()
              if all(x <= bnd for x, bnd in zip(e, bounds))}
    for evec, mult in denominator:
        g = _geom(evec, bounds)
        for _ in range(mult):
            series = _series_mul(series, g, bounds)
    return series


def expand_closed_form_1d(numerator: dict, denominator, nmax: int):
    """Univariate convenience wrapper returning a coefficient list."""
    num = {(e,): c for e, c in numerator.items()}
    den = [((e,), m) for e, m in denominator]
    res = expand_closed_form(num, den, (nmax,))
    out = [0] * (nmax + 1)
    for (e,), c in res.items():
        out[e] = c
    return out


# -- shipped closed forms -------------------------------------------------

LUT3_NUMERATOR = {0: 1, 24: -1}
LUT3_DENOMINATOR = [(2, 1), (4, 3), (6, 1), (8, 1), (12, 1)]

SLOCC4_NUMERATOR = {0: 1}
SLOCC4_DENOMINATOR = [(2, 1), (4, 2), (6, 1)]

LSUT3_NUMERATOR = {(0, 0): 1, (2, 2): 1, (3, 3): 1, (5, 5): 1}
LSUT3_DENOMINATOR = [
    ((1, 1), 1), ((4, 0), 1), ((2, 2), 2), ((0, 4), 1), ((1, 3), 1), ((3, 1), 1),
]

LUT4_DENOMINATOR = [(10, 1), (8, 4), (6, 6), (4, 7), (2, 1)]
LSUT4_DENOMINATOR = [
    ((1, 1), 1), ((2, 2), 4), ((3, 3), 1),
    ((2, 0), 1), ((4, 0), 2), ((6, 0), 1),
    ((0, 2), 1), ((0, 4), 2), ((0, 6), 1),
    ((3, 1), 3), ((1, 3), 3),
    ((2, 4), 1), ((4, 2), 1), ((1, 5), 1), ((5, 1), 1),
]


def _load_data(name: str) -> dict:
    with resources.files("qinv.data").joinpath(name).open() as fh:
        return json.load(fh)


@lru_cache(maxsize=None)
def lut4_numerator() -> dict:
    """P(z) = 1 + sum a_i z^i from the shipped 4-qubit LUT table."""
    raw = _load_data("table_lu4.json")
    num = {0: 1}
    for key, val in raw.items():
        if val:
            num[int(key)] = val
    return num


@lru_cache(maxsize=None)
def lsut4_numerator() -> dict:
    """P(z, zbar) = sum a_ij z^i zbar^j, symmetric completion a_ji = a_ij."""
    raw = _load_data("table_lsu4.json")
    num = {}
    for key, val in raw.items():
        i, j = (int(x) for x in key.split(","))
        num[(i, j)] = val
        num[(j, i)] = val
    return num


def lut4_closed_form_coeffs(nmax: int):
    return expand_closed_form_1d(lut4_numerator(), LUT4_DENOMINATOR, nmax)


def lut3_closed_form_coeffs(nmax: int):
    return expand_closed_form_1d(LUT3_NUMERATOR, LUT3_DENOMINATOR, nmax)


def slocc4_closed_form_coeffs(nmax: int):
    return expand_closed_form_1d(SLOCC4_NUMERATOR, SLOCC4_DENOMINATOR, nmax)


def lsut3_closed_form_table(n1max: int, n2max: int):
    res = expand_closed_form(LSUT3_NUMERATOR, LSUT3_DENOMINATOR, (n1max, n2max))
    table = [[0] * (n2max + 1) for _ in range(n1max + 1)]
    for (i, j), c in res.items():
        table[i][j] = c
    return table


def lsut4_closed_form_table(n1max: int, n2max: int):
    res = expand_closed_form(lsut4_numerator(), LSUT4_DENOMINATOR, (n1max, n2max))
    table = [[0] * (n2max + 1) for _ in range(n1max + 1)]
    for (i, j), c in res.items():
        table[i][j] = c
    return table
