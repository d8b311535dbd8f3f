"""Floating-point Weierstrass functions for the square lattice.

The lattice Z + Zi has g2 = Gamma(1/4)^8 / (16 pi^2) ~ 189.07 and g3 = 0.  All
public functions return the functions of the homothetic lattice on which
g2 = 1, so that (wp(z), wp_prime(z)) lies on y^2 = 4x^3 - x:

    wp(z) = P(z) / g2^(1/2),   wp_prime(z) = P'(z) / g2^(3/4)

where P is the classical function of Z + Zi and z is measured in units of
that lattice (so z = 1/4 maps to the 4-torsion point with x = (1 + sqrt2)/2).

The square-truncated sums are completed by the exact tails of the terms
3 z^2 w^-4 and 7 z^6 w^-8, using G4 in closed form and G8 = 3 G4^2 / 7; the
remaining tail is bounded by an integral estimate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .kernels import lattice_sums, truncated_power_sum

G4 = math.gamma(0.25) ** 8 / (960.0 * math.pi ** 2)
G8 = 3.0 * G4 * G4 / 7.0
G2_RAW = 60.0 * G4
_SCALE_X = math.sqrt(G2_RAW)
_SCALE_Y = G2_RAW ** 0.75

POLE_DISTANCE = 1e-6


class PoleProximityError(ValueError):
    pass


class TruncationError(ArithmeticError):
    pass


@dataclass(frozen=True)
class LatticeSpec:
    radius: int = 60
    accuracy: float = 1e-9

    def __post_init__(self):
        if self.radius < 10:
            raise ValueError("lattice radius must be at least 10")
        if not self.accuracy > 0:
            raise ValueError("target accuracy must be positive")


DEFAULT_SPEC = LatticeSpec()


def _distance_to_lattice(z: np.ndarray) -> np.ndarray:
    return np.abs(z - (np.round(z.real) + 1j * np.round(z.imag)))


def tail_bound(z, radius: int) -> np.ndarray:
    """Bound on the neglected terms k >= 10 of the tail expansion (times normalisation)."""
    r = np.abs(np.asarray(z, dtype=np.complex128))
    ratio = (r / radius) ** 4
    if np.any(ratio >= 0.5):
        raise TruncationError("|z| too large for the lattice radius")
    # sum_{k=10,14,..} (k+1) |z|^k sum_{|w|>N} |w|^-(k+2) <= 11 |z|^10 (8 / (10 N^10)) / (1 - ratio)^2
    raw = 11.0 * r ** 10 * 0.8 / radius ** 10 / (1.0 - ratio) ** 2
    return raw / _SCALE_X


def _evaluate(z, spec: LatticeSpec, backend: str | None):
    z = np.atleast_1d(np.asarray(z, dtype=np.complex128))
    if np.any(_distance_to_lattice(z) <= POLE_DISTANCE):
        raise PoleProximityError("argument within 1e-6 of a lattice point")
    s2, s3 = lattice_sums(z, spec.radius, backend)
    d4 = G4 - truncated_power_sum(spec.radius, 4)
    d8 = G8 - truncated_power_sum(spec.radius, 8)
    p = s2 + 3.0 * z ** 2 * d4 + 7.0 * z ** 6 * d8
    dp = -2.0 * s3 + 6.0 * z * d4 + 42.0 * z ** 5 * d8
    err = tail_bound(z, spec.radius) + 1e-15 * spec.radius / np.maximum(_distance_to_lattice(z), 1e-3) ** 3
    if np.any(err > spec.accuracy):
        raise TruncationError(f"estimated error {err.max():.2e} exceeds target {spec.accuracy:.1e}")
    return p / _SCALE_X, dp / _SCALE_Y, err


def wp_pair(z, spec: LatticeSpec = DEFAULT_SPEC, backend: str | None = None):
    """(wp, wp_prime, error estimate) as arrays, evaluated together."""
    return _evaluate(z, spec, backend)


def _unwrap(arr, z):
    return complex(arr[0]) if np.ndim(z) == 0 else arr


def wp(z, spec: LatticeSpec = DEFAULT_SPEC, backend: str | None = None):
    p, _, _ = _evaluate(z, spec, backend)
    return _unwrap(p, z)


def wp_prime(z, spec: LatticeSpec = DEFAULT_SPEC, backend: str | None = None):
    _, dp, _ = _evaluate(z, spec, backend)
    return _unwrap(dp, z)


def wp_with_accuracy(z, spec: LatticeSpec = DEFAULT_SPEC):
    """Scalar convenience: (wp, wp_prime, estimated absolute error)."""
    p, dp, err = _evaluate(z, spec, None)
    return complex(p[0]), complex(dp[0]), float(err[0])


def curve_vector(z, spec: LatticeSpec = DEFAULT_SPEC, backend: str | None = None) -> np.ndarray:
    """Rows (1, x^2, x, y) with x = wp(z), y = wp_prime(z); shape (len(z), 4)."""
    p, dp, _ = _evaluate(z, spec, backend)
    return np.stack([np.ones_like(p), p * p, p, dp], axis=1)
