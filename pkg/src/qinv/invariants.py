"""Hermitian pairing of covariants and the unitary invariants built from it.

The pairing contracts the auxiliary variables of two covariants of equal
multidegree.  Writing phi = sum_m c_m(a) m(x) over auxiliary monomials m,

    <phi|psi> = sum_m w(m) c_m(a) conj(d_m)(abar),
    w(m) = prod_j p_j! q_j!   for slot-j exponents (p_j, q_j),

the weight being the permanent of the Gram matrix of the monomial under
<x_i|y_j> = delta.  The first argument stays holomorphic, the second is
conjugated, so the result has bidegree (deg phi, deg psi).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial

from .catalog import (
    b_family,
    b_multidegrees,
    catalog_3,
    catalog_4,
    degree3_multilinear_basis,
    degree4_invariants,
    ground_form,
)
from .gaussian import GR_ZERO, GaussianRational
from .poly import Polynomial, amp, amp_conj
from .transvection import Covariant


@dataclass(frozen=True)
class InvariantExpr:
    """A polynomial in amplitudes and conjugate amplitudes with fixed bidegree."""

    poly: Polynomial
    bidegree: tuple
    name: str = ""

    def __post_init__(self):
        for m in self.poly.terms:
            n1 = sum(e for v, e in m if v[0] == "a")
            n2 = sum(e for v, e in m if v[0] == "ac")
            if any(v[0] == "x" for v, _ in m):
                raise ValueError("invariants must not contain auxiliary variables")
            if (n1, n2) != tuple(self.bidegree):
                raise ValueError(
                    f"term of bidegree ({n1},{n2}) in invariant of "
                    f"bidegree {self.bidegree}"
                )

    @property
    def k(self) -> int:
        return self.poly.k

    def __add__(self, other):
        if isinstance(other, InvariantExpr):
            if self.poly and other.poly and self.bidegree != other.bidegree:
                raise ValueError("cannot add invariants of different bidegrees")
            bd = self.bidegree if self.poly else other.bidegree
            return InvariantExpr(self.poly + other.poly, bd)
        return NotImplemented

    def __sub__(self, other):
        return self + (-1) * other

    def __mul__(self, other):
        if isinstance(other, InvariantExpr):
            return InvariantExpr(
                self.poly * other.poly,
                (self.bidegree[0] + other.bidegree[0],
                 self.bidegree[1] + other.bidegree[1]),
            )
        return InvariantExpr(self.poly * other, self.bidegree)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        return InvariantExpr(
            self.poly ** n, (self.bidegree[0] * n, self.bidegree[1] * n)
        )

    def conjugate(self) -> "InvariantExpr":
        return InvariantExpr(
            self.poly.conjugate(), (self.bidegree[1], self.bidegree[0]), self.name
        )

    def evaluate(self, state) -> complex:
        return self.poly.evaluate(state)

    def is_zero(self) -> bool:
        return not self.poly


def aux_decompose(poly: Polynomial) -> dict:
    """Split a covariant polynomial by auxiliary monomial: m(x) -> c_m(a)."""
    out: dict = {}
    for m, c in poly.terms.items():
        aux_part = tuple((v, e) for v, e in m if v[0] == "x")
        amp_part = tuple((v, e) for v, e in m if v[0] != "x")
        bucket = out.setdefault(aux_part, {})
        bucket[amp_part] = bucket.get(amp_part, GR_ZERO) + c
    return {
        m: Polynomial(poly.k, {mm: cc for mm, cc in bucket.items() if cc})
        for m, bucket in out.items()
    }


def _weight(aux_mono: tuple) -> int:
    w = 1
    for _v, e in aux_mono:
        w *= factorial(e)
    return w


def pairing(phi: Covariant, psi: Covariant, name: str = "") -> InvariantExpr:
    """Hermitian scalar product over the auxiliary variables.

    Mismatched multidegrees are legal and give the zero invariant.
    """
    bidegree = (phi.amp_degree, psi.amp_degree)
    if phi.multidegree != psi.multidegree:
        return InvariantExpr(Polynomial.zero(phi.k), bidegree, name)
    left = aux_decompose(phi.poly)
    right = aux_decompose(psi.poly)
    total = Polynomial.zero(phi.k)
    for m, cpoly in left.items():
        dpoly = right.get(m)
        if dpoly is None:
            continue
        total = total + cpoly * dpoly.conjugate() * _weight(m)
    return InvariantExpr(total, bidegree, name)


# -- degree-4 bases for arbitrary k ---------------------------------------


@lru_cache(maxsize=None)
def norm_invariant(k: int) -> InvariantExpr:
    """<f|f> = sum_i a_i conj(a_i); equals 1 on normalized states."""
    f = ground_form(k)
    return pairing(f, f, "A")


@lru_cache(maxsize=None)
def b_pairing(k: int, d: tuple) -> InvariantExpr:
    """The LUT invariant <B_d|B_d>."""
    b = b_family(k, d)
    return pairing(b, b, "B_" + "".join(map(str, d)))


def lut_degree4_basis(k: int):
    """{<f|f>^2} plus the <B_d|B_d> with d != (2,...,2); 2^(k-1) elements."""
    a = norm_invariant(k)
    out = [InvariantExpr((a * a).poly, (2, 2), "A^2")]
    for d in b_multidegrees(k):
        if d == (2,) * k:
            continue
        out.append(b_pairing(k, d))
    return out


def lsut_degree4_basis(k: int):
    """Degree-4 LSUT basis: SLOCC invariants D_i of bidegree (4,0), the
    pairings <C_i|f> of bidegree (3,1), the (2,2) LUT basis, and the
    conjugates of the first two groups."""
    f = ground_form(k)
    d40 = [
        InvariantExpr(cov.poly, (4, 0), cov.name) for cov in degree4_invariants(k)
    ]
    c31 = [
        pairing(c, f, f"<{c.name}|f>") for c in degree3_multilinear_basis(k)
    ]
    b22 = lut_degree4_basis(k)
    return d40 + c31 + b22 + [x.conjugate() for x in c31] + [x.conjugate() for x in d40]


def f_squared_relation_check(k: int):
    """<f^2|f^2> = 2^k <f|f>^2 - sum_{d != (2..2)} <B_d|B_d>, symbolically.

    Returns (holds, difference_polynomial).
    """
    f = ground_form(k)
    f2 = f * f
    lhs = pairing(f2, f2)
    a = norm_invariant(k)
    rhs = InvariantExpr((a * a).poly * (2 ** k), (2, 2))
    for d in b_multidegrees(k):
        if d == (2,) * k:
            continue
        rhs = rhs - b_pairing(k, d)
    diff = lhs.poly - rhs.poly
    return (not diff, diff)


# -- 3-qubit LUT generator algebra --------------------------------------------


@lru_cache(maxsize=None)
def lut3_generator(i: int) -> InvariantExpr:
    """The seven generators of the 3-qubit LUT invariant algebra, expressed
    through covariant pairings."""
    if i not in range(1, 8):
        raise ValueError("generator index must be in 1..7")
    a = norm_invariant(3)
    b200 = b_hx = pairing(catalog_3("Hx"), catalog_3("Hx"), "B_200")
    b020 = pairing(catalog_3("Hy"), catalog_3("Hy"), "B_020")
    b002 = pairing(catalog_3("Hz"), catalog_3("Hz"), "B_002")
    if i == 1:
        return a
    if i == 2:
        return a * a - b200 - b020
    if i == 3:
        return a * a - b200 - b002
    if i == 4:
        return a * a - b020 - b002
    if i == 5:
        t = catalog_3("T")
        c111 = pairing(t, t, "C_111")
        return (
            a ** 3
            + Fraction(3, 2) * c111
            - Fraction(3, 2) * (a * (b200 + b020 + b002))
        )
    if i == 6:
        d = catalog_3("Delta")
        return pairing(d, d, "D_000")
    # i == 7
    t = catalog_3("T")
    d = catalog_3("Delta")
    c111 = pairing(t, t, "C_111")
    d000 = pairing(d, d, "D_000")
    f = ground_form(3)
    f222 = pairing(d * (f * f), t * t, "F_222")
    return (
        Fraction(1, 2) * (d000 * (Fraction(3, 2) * (b200 + b020 + b002) - a * a))
        + 2 * (c111 * c111)
        - 4 * (b200 * b020 * b002)
        + Fraction(1, 8) * f222
    )


def lut3_generator_sum(sigma: tuple, tau: tuple, rho: tuple) -> InvariantExpr:
    """f_{sigma,tau,rho} = sum a_ijk conj(a)_{i^sigma j^tau k^rho} for 3 qubits.

    The permutations act on the n tensor positions and are given as 0-based
    image tuples of equal length n; the bidegree is (n, n).
    """
    n = len(sigma)
    if not (len(tau) == len(rho) == n):
        raise ValueError("permutations must have equal sizes")
    terms: dict = {}
    for i in product((0, 1), repeat=n):
        for j in product((0, 1), repeat=n):
            for kk in product((0, 1), repeat=n):
                mono: dict = {}
                for t in range(n):
                    v = amp(i[t] * 4 + j[t] * 2 + kk[t])
                    mono[v] = mono.get(v, 0) + 1
                for t in range(n):
                    v = amp_conj(i[sigma[t]] * 4 + j[tau[t]] * 2 + kk[rho[t]])
                    mono[v] = mono.get(v, 0) + 1
                key = tuple(sorted(mono.items()))
                terms[key] = terms.get(key, GR_ZERO) + 1
    poly = Polynomial(3, {m: c for m, c in terms.items() if c})
    return InvariantExpr(poly, (n, n))


# -- f7 from the bracket/brace display ------------------------------------


def _bracket(i1, i2, j1, j2) -> Polynomial:
    """[i1i2, j1j2] = a_{i1i2 0} a_{j1j2 1} - a_{i1i2 1} a_{j1j2 0}."""
    def v(x, y, z):
        return Polynomial.variable(3, amp(x * 4 + y * 2 + z))

    return v(i1, i2, 0) * v(j1, j2, 1) - v(i1, i2, 1) * v(j1, j2, 0)


def _brace(i1, i2, j1, j2, corrected: bool = False) -> Polynomial:
    """{i1i2, j1j2}.

    The printed definition is a_{i1i2 0} conj(a_{j1j2 1}) +
    a_{i1i2 1} conj(a_{j1j2 0}).  With it, the parenthesized sum below is not
    even invariant under the local group, so the squared expression cannot
    reproduce an invariant.  Pairing equal last indices instead,

        {i1i2, j1j2} = a_{i1i2 0} conj(a_{j1j2 0}) + a_{i1i2 1} conj(a_{j1j2 1}),

    makes the sum equal exactly -s2; `corrected=True` selects this reading.
    """
    def v(x, y, z):
        return Polynomial.variable(3, amp(x * 4 + y * 2 + z))

    def vc(x, y, z):
        return Polynomial.variable(3, amp_conj(x * 4 + y * 2 + z))

    if corrected:
        return v(i1, i2, 0) * vc(j1, j2, 0) + v(i1, i2, 1) * vc(j1, j2, 1)
    return v(i1, i2, 0) * vc(j1, j2, 1) + v(i1, i2, 1) * vc(j1, j2, 0)


def bracket_sum(corrected: bool = False) -> Polynomial:
    """The parenthesized 12-term bracket/brace sum of the degree-12 generator."""
    def br(*ix):
        return _brace(*ix, corrected=corrected)

    return (
        _bracket(1, 1, 0, 0) * br(0, 0, 0, 0)
        - _bracket(1, 1, 0, 0) * br(1, 1, 1, 1)
        + _bracket(1, 1, 0, 1) * br(0, 0, 0, 1)
        + _bracket(1, 1, 1, 0) * br(0, 0, 1, 0)
        + 2 * (_bracket(1, 1, 1, 0) * br(0, 1, 1, 1))
        - 2 * (_bracket(0, 1, 0, 0) * br(1, 0, 0, 0))
        - _bracket(0, 1, 0, 0) * br(1, 1, 0, 1)
        - _bracket(1, 0, 0, 0) * br(1, 1, 1, 0)
        - _bracket(1, 0, 0, 1) * br(0, 0, 0, 0)
        - _bracket(1, 0, 0, 1) * br(0, 1, 0, 1)
        + _bracket(1, 0, 0, 1) * br(1, 0, 1, 0)
        + _bracket(1, 0, 0, 1) * br(1, 1, 1, 1)
    )


def f7_bracket_form(corrected: bool = True) -> InvariantExpr:
    """The degree-12 generator from the bracket/brace expansion: conj(Delta)
    times the squared bracket sum."""
    s = bracket_sum(corrected=corrected)
    delta_bar = catalog_3("Delta").poly.conjugate()
    return InvariantExpr(delta_bar * s * s, (6, 6), "f7_bracket")


def f7_check() -> dict:
    """Reconcile the two printed forms of the degree-12 generator.

    Established exactly:
      * the literal bracket sum is not proportional to s2 (it is not even
        group invariant), so the literal displays cannot agree;
      * with the equal-last-index brace, the bracket sum equals -s2, hence
        the bracket form equals conj(Delta) * s2^2;
      * conj(Delta) * s2^2 = -1/2 D_000 (3/2 (B_200+B_020+B_002) - A^2)
        + 2 C_111^2 - 4 B_200 B_020 B_002 - 1/8 F_222, so it differs from
        the printed covariant display by 4 C_111^2 - 8 B_200 B_020 B_002
        plus sign flips on the D_000 and F_222 terms; the two candidates
        agree modulo the subalgebra generated by f1..f6.

    Returns the individual findings plus the literal discrepancy polynomial.
    """
    s2 = s2_invariant()
    s_literal = bracket_sum(corrected=False)
    s_corr = bracket_sum(corrected=True)
    literal_sum_is_s2 = _proportional(s_literal, s2.poly) is not None
    corr_ratio = _proportional(s_corr, s2.poly)

    lhs = f7_bracket_form(corrected=True)
    delta = delta_invariant()
    bracket_is_dbar_s2sq = lhs.poly == (delta.conjugate() * (s2 * s2)).poly

    a = norm_invariant(3)
    b200 = pairing(catalog_3("Hx"), catalog_3("Hx"))
    b020 = pairing(catalog_3("Hy"), catalog_3("Hy"))
    b002 = pairing(catalog_3("Hz"), catalog_3("Hz"))
    t = catalog_3("T")
    d = catalog_3("Delta")
    f = ground_form(3)
    c111 = pairing(t, t)
    d000 = pairing(d, d)
    f222 = pairing(d * (f * f), t * t)
    bsum = b200 + b020 + b002
    decomposition = (
        lhs.poly
        + (Fraction(1, 2) * (d000 * (Fraction(3, 2) * bsum - a * a))).poly
        - 2 * (c111 * c111).poly
        + 4 * (b200 * b020 * b002).poly
        + Fraction(1, 8) * f222.poly
    )
    printed_gap = lut3_generator(7).poly - (
        (-1) * lhs.poly + 4 * (c111 * c111).poly - 8 * (b200 * b020 * b002).poly
    )
    literal_residual = f7_bracket_form(corrected=False).poly - lut3_generator(7).poly
    return {
        "literal_equal": not literal_residual,
        "literal_sum_is_s2": literal_sum_is_s2,
        "corrected_sum_ratio_on_s2": corr_ratio,
        "bracket_equals_conj_delta_s2_squared": bracket_is_dbar_s2sq,
        "decomposition_residual_zero": not decomposition,
        "printed_display_gap_zero": not printed_gap,
        "literal_residual_terms": len(literal_residual.terms),
    }


def _proportional(p: Polynomial, q: Polynomial):
    """The scalar r with p == r*q, or None."""
    if not q.terms:
        return None
    m = next(iter(q.terms))
    c = p.terms.get(m)
    if c is None:
        return None
    r = c / q.terms[m]
    return r if p == q * r else None


# -- LSUT structure for 3 qubits ------------------------------------------


@lru_cache(maxsize=None)
def s2_invariant() -> InvariantExpr:
    """s2 = <T|f>, bidegree (3,1)."""
    return pairing(catalog_3("T"), ground_form(3), "s2")


def delta_invariant() -> InvariantExpr:
    """The 3-qubit discriminant as a bidegree-(4,0) invariant."""
    return InvariantExpr(catalog_3("Delta").poly, (4, 0), "Delta")


def syzygy_residuals():
    """The two degree-(4,4) and degree-(6,6) relations among the 3-qubit
    LSUT generators; both residuals must be the zero polynomial.

    The first relation holds with Delta = (T,f)^(1,1,1) and s2 = <T|f>
    exactly as constructed.  The second holds only after flipping the sign
    of the two cross terms conj(Delta) s2^2 and Delta conj(s2)^2, which is
    the same as reading the discriminant as (f,T)^(1,1,1) = -Delta; with
    the printed +18 coefficients the residual equals exactly
    36 (conj(Delta) s2^2 + Delta conj(s2)^2).  The sign-flipped reading is
    used here so that both residuals vanish identically.
    """
    f1 = lut3_generator(1)
    f2 = lut3_generator(2)
    f3 = lut3_generator(3)
    f4 = lut3_generator(4)
    f5 = lut3_generator(5)
    delta = delta_invariant()
    dbar = delta.conjugate()
    mod_delta = delta * dbar          # |Delta|^2
    s2 = s2_invariant()
    s2bar = s2.conjugate()
    mod_s2 = s2 * s2bar               # |s2|^2

    r1 = (
        8 * (f1 * f5)
        - 6 * (f4 * f2)
        + 3 * (f4 * f4)
        - 3 * mod_delta
        + 3 * (f2 * f2)
        - 6 * (f4 * f3)
        + f1 ** 4
        + 3 * (f3 * f3)
        - 6 * (f3 * f2)
        - 12 * mod_s2
    )

    f1sq = f1 * f1
    f1q = f1sq * f1sq
    r2 = (
        -18 * (f4 * f1q)
        - 18 * (f3 * f1q)
        - 18 * (f2 * f1q)
        + 11 * (f1q * f1sq)
        - 18 * (dbar * (s2 * s2))
        - 36 * (mod_s2 * f3)
        - 18 * (delta * (s2bar * s2bar))
        - 72 * (f4 * f3 * f2)
        + 30 * (f4 * f2 * f1sq)
        + 30 * (f4 * f3 * f1sq)
        - 36 * (mod_s2 * f2)
        + 60 * (mod_s2 * f1sq)
        + 3 * (f4 * f4 * f1sq)
        + 3 * (f3 * f3 * f1sq)
        + 30 * (f3 * f2 * f1sq)
        - 36 * (mod_s2 * f4)
        + 3 * (f2 * f2 * f1sq)
        - 3 * (mod_delta * f1sq)
        + 16 * (f5 * f5)
    )
    return r1.poly, r2.poly


def syzygy_checks():
    """(first_holds, second_holds) as exact booleans."""
    r1, r2 = syzygy_residuals()
    return (not r1, not r2)


# -- Jacobian independence of the LSUT primaries --------------------------

JACOBIAN_POINT = {
    0: GaussianRational(3, 3),   # a_000
    1: GaussianRational(3, 3),   # a_001
    2: GaussianRational(3, 3),   # a_010
    3: GaussianRational(2, 1),   # a_011
    4: GaussianRational(3, 2),   # a_100
    5: GaussianRational(1, 2),   # a_101
    6: GaussianRational(2, 3),   # a_110
    7: GaussianRational(3, 1),   # a_111
}

JACOBIAN_REFERENCE = GaussianRational(-53279560564736, -243669580382208)


def evaluate_exact(poly: Polynomial, values: dict) -> GaussianRational:
    """Evaluate a polynomial at an exact amplitude assignment; conjugate
    amplitudes take the conjugate values."""
    total = GR_ZERO
    for m, c in poly.terms.items():
        val = c
        for v, e in m:
            if v[0] == "a":
                base = values[v[1]]
            elif v[0] == "ac":
                base = values[v[1]].conjugate()
            else:
                raise ValueError("auxiliary variable in exact evaluation")
            for _ in range(e):
                val = val * base
        total = total + val
    return total


def _primary_invariant_polys():
    return [
        norm_invariant(3).poly,
        lut3_generator(2).poly,
        lut3_generator(3).poly,
        delta_invariant().poly,
        delta_invariant().conjugate().poly,
        s2_invariant().poly,
        s2_invariant().conjugate().poly,
    ]


def jacobian_matrix():
    """Exact 7x16 Jacobian of (A, f2, f3, Delta, conj Delta, s2, conj s2)
    in the variables (a_000..a_111, conj a_000..conj a_111) at the reference
    point."""
    variables = [amp(i) for i in range(8)] + [amp_conj(i) for i in range(8)]
    return [
        [evaluate_exact(fn.partial(v), JACOBIAN_POINT) for v in variables]
        for fn in _primary_invariant_polys()
    ]


def jacobian_rank() -> int:
    """Exact rank of the 7x16 Jacobian; 7 proves the seven primary
    invariants algebraically independent."""
    from .linalg import det as _det
    j = jacobian_matrix()
    # Column-reduce by exact Gaussian elimination on the transpose.
    cols = [[j[r][c] for r in range(7)] for c in range(16)]
    basis = []
    pivots = []
    for col in cols:
        col = list(col)
        for b, p in zip(basis, pivots):
            if col[p]:
                f = col[p]
                for i in range(7):
                    if b[i]:
                        col[i] = col[i] - f * b[i]
        p = next((i for i in range(7) if col[i]), None)
        if p is None:
            continue
        inv = col[p]
        basis.append([c / inv for c in col])
        pivots.append(p)
    return len(basis)


# Complement columns (a_000, conj a_001 .. conj a_110) for the full 16x16
# determinant when the nine coordinate functions are
# a_001..a_111, conj a_000 and conj a_111.
_CANONICAL_MINOR_COLUMNS = (0, 9, 10, 11, 12, 13, 14)


def jacobian_determinant(literal: bool = False) -> GaussianRational:
    """Exact 16x16 Jacobian determinant at the reference point.

    With `literal=True` the sixteen functions are the seven primary
    invariants plus the coordinate functions a_000..a_111 and conj a_000.
    That determinant is identically zero for structural reasons: Delta is
    holomorphic, so its row is a linear combination of the eight coordinate
    rows a_000..a_111 (with coefficients dDelta/da_i), whatever the
    evaluation point.  The nonzero value printed alongside the reference
    point cannot arise from this matrix; an exhaustive scan of all 11440
    seven-column minors of the invariant Jacobian found none proportional
    to it, so its provenance could not be reconstructed.

    The default uses the coordinate completion a_001..a_111, conj a_000,
    conj a_111 instead, whose determinant reduces (up to sign) to a minor
    mixing holomorphic and antiholomorphic columns and is nonzero, which is
    what the algebraic-independence argument needs.
    """
    from .linalg import det as _det

    funcs = _primary_invariant_polys()
    if literal:
        coord = [amp(i) for i in range(8)] + [amp_conj(0)]
    else:
        coord = [amp(i) for i in range(1, 8)] + [amp_conj(0), amp_conj(7)]
    for v in coord:
        funcs.append(Polynomial.variable(3, v))
    variables = [amp(i) for i in range(8)] + [amp_conj(i) for i in range(8)]
    matrix = [
        [evaluate_exact(fn.partial(v), JACOBIAN_POINT) for v in variables]
        for fn in funcs
    ]
    return _det(matrix)


# -- 4-qubit degree-6 LUT invariants --------------------------------------


def degree6_invariants_4():
    """The twenty degree-6 LUT generators for 4 qubits, as named invariants."""
    k = 4
    a = norm_invariant(k)
    f = ground_form(k)
    b0000 = catalog_4("B_0000")
    bb = InvariantExpr(
        b0000.poly * b0000.poly.conjugate(), (2, 2), "B"
    )
    out = [("A^3", a ** 3), ("A*B", a * bb)]
    for d in b_multidegrees(k):
        if d == (2,) * k or d == (0,) * k:
            continue
        name = "B_" + "".join(map(str, d))
        out.append((f"A*{name}", a * b_pairing(k, d)))
    c1 = catalog_4("C1_1111")
    c2 = catalog_4("C2_1111")
    fb = f * b0000
    trip = [("C1", c1), ("C2", c2), ("fB", fb)]
    for ln, left in trip:
        for rn, right in trip:
            if (ln, rn) in (("fB", "fB"),):
                continue
            out.append((f"<{ln}|{rn}>", pairing(left, right)))
    for name in ("C_3111", "C_1311", "C_1131", "C_1113"):
        c = catalog_4(name)
        out.append((f"<{name}|{name}>", pairing(c, c)))
    return out
