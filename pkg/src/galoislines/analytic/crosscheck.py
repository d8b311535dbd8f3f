"""Numeric certification of exact results against the lattice sums."""

from __future__ import annotations

import numpy as np

from ..exactfield import embed_complex
from .weierstrass import DEFAULT_SPEC, LatticeSpec, curve_vector, wp_pair

MIN_POLE_DISTANCE = 0.08


def _far_from_lattice(z: np.ndarray) -> np.ndarray:
    d = np.abs(z - (np.round(z.real) + 1j * np.round(z.imag)))
    return d > MIN_POLE_DISTANCE


def sample_points(gamma, samples: int, seed: int) -> np.ndarray:
    """Seeded points z in the unit square with z and gamma(z) away from poles."""
    rng = np.random.default_rng(seed)
    out: list[complex] = []
    while len(out) < samples:
        z = rng.uniform(0.0, 1.0, 4 * samples) + 1j * rng.uniform(0.0, 1.0, 4 * samples)
        gz = np.array([gamma.apply_complex(v) for v in z])
        keep = _far_from_lattice(z) & _far_from_lattice(gz)
        out.extend(z[keep].tolist())
    return np.array(out[:samples])


def projective_residual(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Per-row distance between the lines spanned by a and b (rows of 4-vectors).

    b is rescaled onto a by least squares and the max deviation is reported
    relative to the largest coordinate of a.
    """
    s = np.sum(np.conj(b) * a, axis=1) / np.sum(np.conj(b) * b, axis=1)
    dev = np.abs(a - s[:, None] * b).max(axis=1)
    return dev / np.abs(a).max(axis=1)


def verify_matrix_numeric(gamma, M, samples: int = 100, seed: int = 0,
                          spec: LatticeSpec = DEFAULT_SPEC) -> float:
    """Max residual of f(gamma(z)) against M f(z), compared projectively."""
    if samples < 1:
        raise ValueError("samples must be positive")
    z = sample_points(gamma, samples, seed)
    gz = np.array([gamma.apply_complex(v) for v in z])
    m = np.array([[embed_complex(v) for v in row] for row in M.rows], dtype=np.complex128)
    lhs = curve_vector(gz, spec)
    rhs = curve_vector(z, spec) @ m.T
    return float(projective_residual(lhs, rhs).max())


def random_points(samples: int, seed: int) -> np.ndarray:
    """Seeded z in the unit square away from the lattice."""
    rng = np.random.default_rng(seed)
    out: list[complex] = []
    while len(out) < samples:
        z = rng.uniform(0.0, 1.0, 2 * samples) + 1j * rng.uniform(0.0, 1.0, 2 * samples)
        out.extend(z[_far_from_lattice(z)].tolist())
    return np.array(out[:samples])


def _rel(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.max(np.abs(a - b) / np.maximum(1.0, np.abs(b))))


def ode_residual(z: np.ndarray, spec: LatticeSpec = DEFAULT_SPEC) -> float:
    """max |wp'^2 - (4 wp^3 - wp)|, relative to the size of the right side."""
    p, dp, _ = wp_pair(z, spec)
    return _rel(dp * dp, 4 * p ** 3 - p)


def periodicity_residual(z: np.ndarray, spec: LatticeSpec = DEFAULT_SPEC) -> float:
    p, _, _ = wp_pair(z, spec)
    p1, _, _ = wp_pair(z + 1, spec)
    pi, _, _ = wp_pair(z + 1j, spec)
    return max(_rel(p1, p), _rel(pi, p))


def cm_residual(z: np.ndarray, spec: LatticeSpec = DEFAULT_SPEC) -> float:
    p, dp, _ = wp_pair(z, spec)
    q, dq, _ = wp_pair(1j * z, spec)
    return max(_rel(q, -p), _rel(dq, 1j * dp))


def torsion_agreement(points: dict, spec: LatticeSpec = DEFAULT_SPEC) -> float:
    """points: complex z -> exact CurvePoint; max deviation of (x, y) from (wp, wp')."""
    zs = np.array(list(points))
    p, dp, _ = wp_pair(zs, spec)
    worst = 0.0
    for k, pt in enumerate(points.values()):
        x, y = (complex(embed_complex(pt.x)), complex(embed_complex(pt.y)))
        worst = max(worst, abs(x - p[k]) / max(1.0, abs(x)), abs(y - dp[k]) / max(1.0, abs(y)))
    return worst
