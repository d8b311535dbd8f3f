from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from galoislines.analytic import curve_vector, random_points
from galoislines.ellcurve import QuarterLatticePoint, torsion_point
from galoislines.exactfield import I, ONE, S, embed_complex
from galoislines.linalg import Matrix, SingularMatrixError
from galoislines.planeproj import (MONOMIALS, CenterNotOnLineError, CenterOnCurveError,
                                   PlaneQuartic, canonical_forms, change_coords, curve_image,
                                   image_of_line, project_curve, two_galois_point_catalog)
from galoislines.projgeom import ProjPoint, build_arrangement

R01 = ProjPoint((0, 0, 1, 0))
EXAMPLE = PlaneQuartic({(0, 0, 4): 1, (3, 1, 0): -1, (2, 2, 0): 8, (1, 3, 0): -16}, "XYW")
TORSION = [torsion_point(QuarterLatticePoint(m, n)) for m, n in itertools.product(range(4), repeat=2)]

small = st.sampled_from([0, 1, -1, 2, I, 1 + I, S])
matrices = st.lists(small, min_size=9, max_size=9).map(
    lambda v: Matrix([v[0:3], v[3:6], v[6:9]])).filter(lambda m: not m.det().is_zero())


@pytest.fixture(scope="module")
def arr():
    return build_arrangement()


def test_monomial_order():
    assert len(MONOMIALS) == 15
    assert MONOMIALS[0] == (4, 0, 0) and MONOMIALS[-1] == (0, 0, 4)


def test_example_projection():
    forms, names = canonical_forms(R01)
    assert names == ("X", "Y", "W")
    F = project_curve(R01)
    assert F == EXAMPLE
    assert str(F) == "X^3*Y - 8*X^2*Y^2 + 16*X*Y^3 - W^4"


def test_example_identity_on_parametrization():
    # W^4 - XY(X - 4Y)^2 at (1, x^2, y): (4x^3 - x)^2 - x^2 (1 - 4x^2)^2 = 0
    for p in TORSION:
        if not p.is_infinity:
            assert EXAMPLE((ONE, p.x * p.x, p.y)).is_zero()


def test_generic_center_numerically():
    center = ProjPoint((1, 1, 1, 1))
    forms, _ = canonical_forms(center)
    F = project_curve(center)
    f = np.array([[complex(embed_complex(c)) for c in row] for row in forms])
    pts = curve_vector(random_points(50, 3)) @ f.T
    for u in pts:
        u = u / np.abs(u).max()
        assert abs(F.evaluate_complex(u)) < 1e-9


def test_center_on_curve():
    p = TORSION[5]
    with pytest.raises(CenterOnCurveError):
        project_curve(ProjPoint((ONE, p.x * p.x, p.x, p.y)))
    with pytest.raises(CenterOnCurveError):
        project_curve(ProjPoint((0, 1, 0, 0)))


def test_images_of_lines(arr):
    assert image_of_line(R01, arr.z4_lines["sigma0"]) == ProjPoint((0, 0, 1))
    assert image_of_line(R01, arr.v4_lines[(1, 2)]) == ProjPoint((-4, 1, 0))
    with pytest.raises(CenterNotOnLineError):
        image_of_line(R01, arr.v4_lines[(0, 3)])


def test_example_v4_line_is_l12(arr):
    _, v4 = arr.lines_through(R01)
    assert v4 == [(1, 2)]
    # X + 4Y = W = 0 on l12
    assert all(r[0] + 4 * r[1] == 0 and r[3] == 0 for r in arr.v4_lines[(1, 2)].rows)


def test_takahashi_substitution():
    T = Matrix([[1, -I, 0], [-ONE / 4, -I / 4, 0], [0, 0, 1]])
    G = change_coords(EXAMPLE, T)
    assert G == PlaneQuartic({(4, 0, 0): 1, (2, 2, 0): 1, (0, 0, 4): 1})


def test_change_coords_identity_and_inverse():
    T = Matrix([[1, -I, 0], [-ONE / 4, -I / 4, 0], [0, 0, 1]])
    assert change_coords(EXAMPLE, Matrix.identity(3)) == EXAMPLE
    assert change_coords(change_coords(EXAMPLE, T), T.inverse()) == EXAMPLE


def test_change_coords_singular():
    with pytest.raises(SingularMatrixError):
        change_coords(EXAMPLE, Matrix([[1, 0, 0], [1, 0, 0], [0, 0, 1]]))


@settings(max_examples=30, deadline=None)
@given(matrices, matrices)
def test_change_coords_is_right_action(t1, t2):
    assert change_coords(change_coords(EXAMPLE, t1), t2) == change_coords(EXAMPLE, t1 @ t2)


def test_projection_independent_of_forms():
    center = ProjPoint((1, 2, 0, I))
    forms, _ = canonical_forms(center)
    A = Matrix([[1, 1, 0], [0, 1, S], [I, 0, 1]])
    mixed = tuple(tuple(sum((A[i, k] * forms[k][j] for k in range(3)), 0 * ONE) for j in range(4))
                  for i in range(3))
    F1 = project_curve(center, forms)
    F2 = project_curve(center, mixed)
    # u2 = A u1, so F2 is F1 after the substitution u1 = A^-1 u2
    assert F2 == change_coords(F1, A.inverse())


def test_custom_forms_validated():
    with pytest.raises(ValueError):
        project_curve(R01, [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)])
    with pytest.raises(ValueError):
        project_curve(R01, [(1, 0, 0, 0), (1, 0, 0, 0), (0, 0, 0, 1)])


def test_catalog(arr):
    entries = two_galois_point_catalog(arr)
    assert len(entries) == 8
    first = next(e for e in entries if e.label == "R01")
    assert first.quartic == EXAMPLE
    assert first.z4_point == ProjPoint((0, 0, 1)) and first.v4_point == ProjPoint((-4, 1, 0))
    for e in entries:
        z4, v4 = arr.lines_through(e.center)
        assert len(z4) == 1 and len(v4) == 1
        forms, _ = canonical_forms(e.center)
        assert all(e.quartic(curve_image(forms, p)).is_zero() for p in TORSION)


def test_catalog_quartics_vanish_numerically(arr):
    z = random_points(100, 11)
    vecs = curve_vector(z)
    for e in two_galois_point_catalog(arr):
        forms, _ = canonical_forms(e.center)
        f = np.array([[complex(embed_complex(c)) for c in row] for row in forms])
        for u in vecs @ f.T:
            assert abs(e.quartic.evaluate_complex(u / np.abs(u).max())) < 1e-9


def test_table_and_rendering():
    table = EXAMPLE.table()
    assert table == {"3,1,0": "1", "2,2,0": "-8", "1,3,0": "16", "0,0,4": "-1"}
    F = PlaneQuartic({(4, 0, 0): 1, (0, 4, 0): 1 + I, (0, 0, 4): -I / 2})
    assert str(F) == "U^4 + (1 + I)*V^4 - 1/2*I*W^4"


def test_quartic_validation():
    with pytest.raises(ValueError):
        PlaneQuartic({})
    with pytest.raises(ValueError):
        PlaneQuartic({(5, 0, 0): 1})
    with pytest.raises(ValueError):
        PlaneQuartic([1, 2, 3])
