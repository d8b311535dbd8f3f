from __future__ import annotations

import itertools

import numpy as np
import pytest

from galoislines.analytic import (DEFAULT_SPEC, LatticeSpec, PoleProximityError, cm_residual,
                                  lattice_sums, ode_residual, periodicity_residual, random_points,
                                  torsion_agreement, verify_matrix_numeric, wp, wp_prime,
                                  wp_with_accuracy)
from galoislines.analytic.kernels import NUMBA_AVAILABLE
from galoislines.ellcurve import (NAMED, QuarterLatticePoint, matrix_of, point_add,
                                  torsion_point)
from galoislines.linalg import Matrix

Z = random_points(100, 0)


def test_half_periods():
    assert abs(wp(0.5) - 0.5) < 1e-8
    assert abs(wp(0.5j) + 0.5) < 1e-8
    assert abs(wp_prime(0.5)) < 1e-8


def test_quarter_period():
    assert abs(wp(0.25) - (1 + 2 ** 0.5) / 2) < 1e-9


def test_accuracy_reported():
    p, dp, err = wp_with_accuracy(0.3 + 0.2j)
    assert 0 < err < DEFAULT_SPEC.accuracy
    assert p == wp(0.3 + 0.2j) and dp == wp_prime(0.3 + 0.2j)


def test_pole_proximity():
    with pytest.raises(PoleProximityError):
        wp(1 + 1e-8j)


def test_spec_validation():
    with pytest.raises(ValueError):
        LatticeSpec(radius=5)
    with pytest.raises(ValueError):
        LatticeSpec(accuracy=0)


def test_differential_equation():
    assert ode_residual(Z) < 1e-8


def test_periodicity():
    assert periodicity_residual(Z) < 1e-8


def test_cm_symmetry():
    assert cm_residual(Z) < 1e-8


def test_random_points_seeded():
    assert np.array_equal(random_points(10, 4), random_points(10, 4))
    assert not np.array_equal(random_points(10, 4), random_points(10, 5))


@pytest.mark.skipif(not NUMBA_AVAILABLE, reason="numba not importable")
def test_backends_agree():
    z = random_points(20, 2)
    a2, a3 = lattice_sums(z, 30, "numpy")
    b2, b3 = lattice_sums(z, 30, "numba")
    assert np.max(np.abs(a2 - b2) / np.abs(a2)) < 1e-12
    assert np.max(np.abs(a3 - b3) / np.abs(a3)) < 1e-12


def test_unknown_backend():
    with pytest.raises(ValueError):
        lattice_sums([0.3], 20, "fortran")


def test_matrix_examples():
    assert verify_matrix_numeric(NAMED["rho0"], Matrix.diag([1, 1, 1, -1])) < 1e-9
    assert verify_matrix_numeric(NAMED["sigma2"], matrix_of(NAMED["sigma2"])) < 1e-8
    assert verify_matrix_numeric(NAMED["sigma2"], matrix_of(NAMED["sigma3"])) > 1e-2


def test_sample_count_validated():
    with pytest.raises(ValueError):
        verify_matrix_numeric(NAMED["rho0"], Matrix.diag([1, 1, 1, -1]), samples=0)


def test_torsion_points_agree_with_wp():
    pts = {}
    for m, n in itertools.product(range(4), repeat=2):
        if (m, n) != (0, 0):
            t = QuarterLatticePoint(m, n)
            pts[t.complex()] = torsion_point(t)
    assert torsion_agreement(pts) < 1e-7


def test_addition_formula_numerically():
    # exact sums of torsion points against wp at the summed argument
    for (a, b), (c, d) in [((1, 0), (0, 1)), ((1, 1), (2, 1)), ((3, 2), (3, 3))]:
        s = point_add(torsion_point(QuarterLatticePoint(a, b)), torsion_point(QuarterLatticePoint(c, d)))
        z = complex(a + c, b + d) / 4
        z = complex(z.real % 1, z.imag % 1)
        assert torsion_agreement({z: s}) < 1e-7
