from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from galoislines.exactfield import I, ONE, S, ZERO
from galoislines.linalg import (Matrix, SingularMatrixError, canonical_scale, det, nullspace, rank,
                                rref, solve)
from galoislines.polynomial import Poly, RatFunc, interpolate, poly_gcd, roots_in_field, squarefree_part

small = st.sampled_from([ZERO, ONE, -ONE, 2 * ONE, I, S, 1 + I, -I / 3])
square3 = st.lists(small, min_size=9, max_size=9).map(lambda v: Matrix([v[0:3], v[3:6], v[6:9]]))


def test_rref_and_rank():
    rows, piv = rref([[1, 2, 3], [2, 4, 6], [0, 1, I]])
    assert piv == [0, 1] and rank([[1, 2, 3], [2, 4, 6], [0, 1, I]]) == 2
    assert rows[2] == [ZERO, ZERO, ZERO]
    assert rref([]) == ([], [])


def test_nullspace():
    basis = nullspace([[1, 1, 0], [0, 0, 1]])
    assert basis == [(-ONE, ONE, ZERO)]
    assert len(nullspace([], 3)) == 3


def test_det_examples():
    assert det([[0, 1], [1, 0]]) == -1
    assert det(Matrix.diag([2, I, S])) == 2 * I * S
    assert det([[1, 2], [2, 4]]) == 0


def test_solve_and_singular():
    m = Matrix([[1, I], [0, 2]])
    x = solve(m, [1 + I, 2])
    assert x == (ONE, ONE)
    with pytest.raises(SingularMatrixError):
        solve(Matrix([[1, 1], [1, 1]]), [0, 1])
    with pytest.raises(SingularMatrixError):
        Matrix([[1, 1], [1, 1]]).inverse()


def test_canonical_scale():
    assert canonical_scale((ZERO, 2 * I, ONE)) == (ZERO, ONE, -I / 2)
    with pytest.raises(ValueError):
        canonical_scale((ZERO, ZERO))


def test_matrix_shape_validation():
    with pytest.raises(ValueError):
        Matrix([[1, 2], [3]])
    with pytest.raises(AttributeError):
        Matrix.identity(2).rows = ()


@settings(max_examples=40, deadline=None)
@given(square3, square3)
def test_det_multiplicative(a, b):
    assert det(a @ b) == det(a) * det(b)


@settings(max_examples=40, deadline=None)
@given(square3)
def test_inverse_when_invertible(a):
    if det(a).is_zero():
        assert rank(a.rows) < 3
    else:
        assert a @ a.inverse() == Matrix.identity(3)


def test_poly_arithmetic():
    x = Poly.x()
    p = (x - 1) * (x + I)
    assert p.degree == 2 and p(ONE) == ZERO and p(-I) == ZERO
    q, r = p.divmod(x - 1)
    assert q == x + I and r.is_zero()
    assert poly_gcd(p, (x - 1) * (x - 2)) == x - 1
    assert p.derivative() == 2 * x + (I - 1)


def test_interpolate():
    xs = [ZERO, ONE, I, S]
    target = Poly([1, 0, I, -2])
    assert interpolate(xs, [target(v) for v in xs]) == target


def test_squarefree_and_roots():
    x = Poly.x()
    p = (x - S) ** 2 * (x + I / 2) * (x * x - 3)
    assert squarefree_part(p) == ((x - S) * (x + I / 2) * (x * x - 3)).monic()
    roots = roots_in_field(p)
    assert set(roots) == {S, -I / 2}
    assert roots_in_field(Poly.const(5)) == []


def test_ratfunc():
    x = RatFunc.x()
    f = (x * x - 1) / (x - 1)
    assert f == x + 1
    assert (x / (x + 1))(ONE) == ONE / 2
    with pytest.raises(ZeroDivisionError):
        RatFunc(Poly.x(), Poly())
    with pytest.raises(ZeroDivisionError):
        RatFunc.const(0).inverse()
