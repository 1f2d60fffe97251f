"""Exact toolkit for weighted homogeneous polynomials and their Milnor algebras."""

__version__ = "0.1.0"

from whmilnor._kernels import BACKEND
from whmilnor.equivalence import (
    EquivalenceVerdict, Substitution, apply_substitution, right_equivalent_wh,
    verify_substitution,
)
from whmilnor.grading import (
    INDETERMINATE, TruncatedDiffeo, diffeo_order, euler_check, graded_piece_basis,
    is_weighted_homogeneous, jet_truncate, order_of, weighted_degree,
)
from whmilnor.ideals import (
    GroebnerBasis, Ideal, groebner, ideal_equal, ideal_member, jacobian_ideal,
    milnor_algebra, normal_form, saito_check,
)
from whmilnor.orders import MonomialOrder
from whmilnor.parser import parse_polynomial
from whmilnor.pencil import (
    Pencil, exceptional_values, graded_jacobian_basis, mather_conditions, tangent_generators,
    transformation_matrix,
)
from whmilnor.poly import Polynomial, WeightSystem
from whmilnor.vector_fields import (
    VectorField, lie_algebra_a_basis, lie_bracket, lie_derivative, vf_order,
)

__all__ = [
    "BACKEND", "EquivalenceVerdict", "GroebnerBasis", "INDETERMINATE", "Ideal", "MonomialOrder",
    "Pencil", "Polynomial", "Substitution", "TruncatedDiffeo", "VectorField", "WeightSystem",
    "apply_substitution", "diffeo_order", "euler_check", "exceptional_values",
    "graded_jacobian_basis", "graded_piece_basis", "groebner", "ideal_equal", "ideal_member",
    "is_weighted_homogeneous", "jacobian_ideal", "jet_truncate", "lie_algebra_a_basis",
    "lie_bracket", "lie_derivative", "mather_conditions", "milnor_algebra", "normal_form",
    "order_of", "parse_polynomial", "right_equivalent_wh", "saito_check", "tangent_generators",
    "transformation_matrix", "verify_substitution", "vf_order", "weighted_degree",
]
