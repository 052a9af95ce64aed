"""Exact covariants and local-unitary invariants of pure qubit states.

The package constructs SLOCC covariants by transvection over exact Gaussian
rational coefficients, derives unitary invariants through a hermitian
pairing, computes Hilbert series of the invariant algebras by two
independent routes, and evaluates entanglement measures and the 3-qubit
orbit classification.
"""

from .gaussian import GaussianRational
from .poly import (
    DimensionError,
    EvaluationError,
    Polynomial,
    State,
    amp,
    amp_conj,
    aux,
    basis_state,
    ghz,
    random_state,
    w_state,
)
from .transvection import (
    Covariant,
    act_on_state,
    random_sl2,
    random_su2,
    random_u2,
    transvect,
)
from .catalog import (
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
from .invariants import (
    InvariantExpr,
    b_pairing,
    degree6_invariants_4,
    f7_check,
    f_squared_relation_check,
    lut3_generator,
    lut3_generator_sum,
    jacobian_determinant,
    jacobian_rank,
    lsut_degree4_basis,
    lut_degree4_basis,
    norm_invariant,
    pairing,
    s2_invariant,
    syzygy_checks,
)
from .hilbert import (
    dim_cov,
    dim_cov_total,
    dim_inv_slocc,
    hilbert_lsut_coeffs,
    hilbert_lsut_ct,
    hilbert_lut_coeffs,
    hilbert_lut_ct,
)
from .measures import (
    MeasureReport,
    OrbitLabel,
    classify3,
    d1,
    hyperdet3,
    meyer_wallach,
    onion_leq,
)

__all__ = [
    "GaussianRational", "DimensionError", "EvaluationError", "Polynomial",
    "State", "amp", "amp_conj", "aux", "basis_state", "ghz", "random_state",
    "w_state", "Covariant", "act_on_state", "random_sl2", "random_su2",
    "random_u2", "transvect", "b_family", "b_family_all", "b_multidegrees",
    "catalog_3", "catalog_4", "cayley_hyperdet", "covariant_by_name",
    "degree3_multilinear_basis", "degree4_invariants", "ground_form",
    "InvariantExpr", "b_pairing", "degree6_invariants_4", "f7_check",
    "f_squared_relation_check", "lut3_generator", "lut3_generator_sum",
    "jacobian_determinant", "jacobian_rank", "lsut_degree4_basis",
    "lut_degree4_basis", "norm_invariant", "pairing", "s2_invariant",
    "syzygy_checks", "dim_cov", "dim_cov_total", "dim_inv_slocc",
    "hilbert_lsut_coeffs", "hilbert_lsut_ct", "hilbert_lut_coeffs",
    "hilbert_lut_ct", "MeasureReport", "OrbitLabel", "classify3", "d1",
    "hyperdet3", "meyer_wallach", "onion_leq",
]

__version__ = "0.1.0"
