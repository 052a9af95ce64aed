"""A tour of covariant construction by transvection.

The ground form of a k-qubit state is the multilinear polynomial
f = sum_i a_i x_{1,i_1} ... x_{k,i_k} in one auxiliary binary variable pair
per qubit.  Transvection applies the omega operator (the polarized 2x2
determinant of partial derivatives) once per selected slot and then
identifies the copies again; iterating it generates the whole covariant
algebra.  This script builds the small catalog by hand and prints what each
step produces.
"""

from qinv.catalog import b_family, catalog_3, cayley_hyperdet, ground_form
from qinv.transvection import transvect


def show(title, cov):
    print(f"{title}:")
    print(f"  amplitude degree {cov.amp_degree}, multidegree {cov.multidegree},"
          f" {len(cov.poly.terms)} terms")


def main():
    print("== two qubits ==")
    f = ground_form(2)
    show("ground form f", f)

    # One transvection in both slots kills all auxiliary variables and
    # leaves twice the 2x2 determinant of the amplitude matrix.
    b00 = transvect(f, f, (1, 1))
    show("(f,f)^(1,1) = B_00", b00)
    print(f"  B_00 = {b00.poly.pretty()}")

    print("\n== three qubits ==")
    f = ground_form(3)
    show("ground form f", f)

    # Transvecting in two of three slots gives a quadratic covariant that
    # still depends on the auxiliary pair of the remaining slot: twice the
    # Hessian-type form of that slot.
    b200 = b_family(3, (2, 0, 0))
    show("(f,f)^(0,1,1) = B_200", b200)
    assert b200.poly == catalog_3("Hx").poly * 2

    # The degree-3 covariant T = (f, B_200)^(1,0,0) is again multilinear.
    t = catalog_3("T")
    show("T = (f,B_200)^(1,0,0)", t)

    # One more transvection in all three slots produces the quartic
    # invariant Delta, twice the Cayley hyperdeterminant.
    delta = catalog_3("Delta")
    show("Delta = (T,f)^(1,1,1)", delta)
    assert delta.poly == cayley_hyperdet() * 2
    print("  Delta equals 2 x the 2x2x2 hyperdeterminant (exact check passed)")

    # The sign rule (phi,psi)^eps = (-1)^|eps| (psi,phi)^eps.
    lhs = transvect(f, b200, (1, 0, 0)).poly
    rhs = transvect(b200, f, (1, 0, 0)).poly
    assert lhs == rhs * (-1)
    print("  sign symmetry (f,B)^eps = -(B,f)^eps verified exactly")


if __name__ == "__main__":
    main()
