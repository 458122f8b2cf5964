"""Exact arithmetic progressions of three cubes over quadratic fields.

Everything exact crosses the boundary as int or fractions.Fraction;
floats are rejected on input.
"""

from cubeprog._core import (
    __version__,
    a_d,
    ap_from_twist_point,
    classify,
    classify_with_witness,
    division_polynomial,
    factorize,
    is_prime,
    isogeny_f_to_e,
    kamienny_factor_scan,
    point_order,
    quartic_minus3_has_root,
    rational_roots,
    sqrt_in_field,
    squarefree_decompose,
    torsion_over_q,
    torsion_over_quadratic,
    twist_point_to_e,
    verify_table,
    witness_table,
)

__all__ = [
    "__version__",
    "a_d",
    "ap_from_twist_point",
    "classify",
    "classify_with_witness",
    "division_polynomial",
    "factorize",
    "is_prime",
    "isogeny_f_to_e",
    "kamienny_factor_scan",
    "point_order",
    "quartic_minus3_has_root",
    "rational_roots",
    "sqrt_in_field",
    "squarefree_decompose",
    "torsion_over_q",
    "torsion_over_quadratic",
    "twist_point_to_e",
    "verify_table",
    "witness_table",
]
