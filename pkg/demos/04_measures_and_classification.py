"""Entanglement measures and 3-qubit orbit classification.

The Meyer-Wallach measure Q is evaluated from its determinant definition
and again through the degree-2 covariant pairings; the 3-qubit SLOCC orbit
is read off the vanishing pattern of (B_200, B_020, B_002, |Delta|^2).
"""

import numpy as np

from qinv.measures import classify3, hyperdet3, meyer_wallach, onion_leq
from qinv.poly import State, basis_state, ghz, random_state, w_state
from qinv.transvection import act_on_state, random_sl2


def main():
    print("== Meyer-Wallach measure, two routes ==")
    for name, s in (("|000>", basis_state(3, 0)), ("GHZ_3", ghz(3)),
                    ("W_3", w_state(3))):
        direct = meyer_wallach(s, "direct")
        cov = meyer_wallach(s, "covariant")
        print(f"{name:7} Q_direct = {direct.q:.12f}  "
              f"Q_covariant = {cov.q:.12f}  "
              f"difference = {abs(direct.q - cov.q):.2e}")

    rng = np.random.default_rng(7)
    s = random_state(4, rng)
    a = meyer_wallach(s, "direct")
    b = meyer_wallach(s, "covariant")
    print(f"random 4-qubit state: routes differ by {abs(a.q - b.q):.2e}")

    print("\n== hyperdeterminant ==")
    print(f"Det(GHZ_3) = {hyperdet3(ghz(3)):.4f}   "
          f"Det(W_3) = {hyperdet3(w_state(3)):.4f}")

    print("\n== orbit classification ==")
    reps = {
        "GHZ": ghz(3),
        "W": w_state(3),
        "B1": State(3, (0, 1, 1, 0, 0, 0, 0, 0)),
        "B2": State(3, (0, 1, 0, 0, 1, 0, 0, 0)),
        "B3": State(3, (0, 0, 1, 0, 1, 0, 0, 0)),
        "SEPARABLE": basis_state(3, 0),
    }
    for label, s in reps.items():
        result = classify3(s)
        print(f"{label:10} flags {result.flags} -> {result.label}")

    print("\nlabels are SLOCC invariants; a random SL(2,C)^3 move keeps them:")
    g = tuple(random_sl2(rng) for _ in range(3))
    moved = act_on_state(g, ghz(3))
    print(f"g.GHZ_3 classifies as {classify3(moved, tol=1e-7).label}")

    print("\nonion (orbit-closure) order:")
    for a_lbl, b_lbl in (("SEPARABLE", "B1"), ("B1", "W"), ("W", "GHZ"),
                         ("GHZ", "W")):
        print(f"  {a_lbl} in closure of {b_lbl}: {onion_leq(a_lbl, b_lbl)}")


if __name__ == "__main__":
    main()
