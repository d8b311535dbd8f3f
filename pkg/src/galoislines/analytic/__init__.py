"""Numeric Weierstrass oracle used to pin conventions and cross-check exact results."""

from .crosscheck import (cm_residual, ode_residual, periodicity_residual, random_points,
                         torsion_agreement, verify_matrix_numeric)
from .kernels import backend_name, lattice_sums, use_numba
from .weierstrass import (
    DEFAULT_SPEC,
    LatticeSpec,
    PoleProximityError,
    TruncationError,
    curve_vector,
    wp,
    wp_pair,
    wp_prime,
    wp_with_accuracy,
)

__all__ = [
    "DEFAULT_SPEC",
    "cm_residual",
    "ode_residual",
    "periodicity_residual",
    "random_points",
    "torsion_agreement",
    "verify_matrix_numeric",
    "LatticeSpec",
    "PoleProximityError",
    "TruncationError",
    "backend_name",
    "curve_vector",
    "lattice_sums",
    "use_numba",
    "wp",
    "wp_pair",
    "wp_prime",
    "wp_with_accuracy",
]
