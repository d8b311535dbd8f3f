from __future__ import annotations

import pytest

from galoislines import reference
from galoislines.ellcurve import MATRIX_LABELS, NAMED, RHO_LABELS, SIGMA_LABELS, matrix_of
from galoislines.exactfield import I, ONE, S
from galoislines.linalg import Matrix
from galoislines.lineig import (EigenShapeError, OrderExceededError, dual_scalar_check,
                                eigen_decompose, galois_line_of, scalar_power, vertex_of)
from galoislines.projgeom import ProjPoint

Q0, Q1, Q2, Q3 = (ProjPoint(v) for v in [(0, 0, 0, 1), (4, -1, 2, 0), (4, -1, -2, 0), (4, 1, 0, 0)])


def M(label):
    return matrix_of(NAMED[label])


def test_scalar_power_examples():
    assert scalar_power(Matrix.diag([1, 1, 1, -1])) == (2, ONE)
    assert scalar_power(Matrix.diag([1, 1, -1, I])) == (4, ONE)
    # the printed sigma2 display, with its -sqrt2*i prefactor
    assert scalar_power(reference.MATRICES["sigma2"]) == (4, 4 * ONE)


def test_scalar_power_of_canonical_sigma2():
    n, c = scalar_power(M("sigma2"))
    assert n == 4
    assert all(lam ** 4 == c for lam, _ in eigen_decompose(M("sigma2")).eigenvalues)


def test_scalar_power_bound():
    with pytest.raises(OrderExceededError):
        scalar_power(Matrix.diag([1, 1, 1, 2]))


def test_eigen_rho1():
    d = eigen_decompose(M("rho1"))
    assert d.pattern == (3, 1)
    assert ProjPoint(d.space_of(-2 * ONE)[0]) == Q1
    assert len(d.space_of(2 * ONE)) == 3


def test_eigen_sigma6():
    d = eigen_decompose(M("sigma6"))
    assert ProjPoint(d.space_of(2 * I)[0]) == ProjPoint((4, -1, 2 * I, 0))
    assert len(d.space_of(-2 * I)) == 2
    assert ProjPoint(d.space_of(2 * ONE)[0]) == Q3


def test_eigen_rho0():
    d = eigen_decompose(Matrix.diag([1, 1, 1, -1]))
    assert dict(d.eigenvalues) == {ONE: 3, -ONE: 1}


def test_eigen_pairs_exact_for_all_matrices():
    for k in MATRIX_LABELS:
        A = M(k)
        d = eigen_decompose(A)
        assert sum(m for _, m in d.eigenvalues) == 4
        for lam, basis in d.eigenspaces.items():
            for v in basis:
                assert A @ v == tuple(lam * x for x in v)


def test_multiplicity_patterns():
    assert all(eigen_decompose(M(k)).pattern == (3, 1) for k in RHO_LABELS)
    assert all(eigen_decompose(M(k)).pattern == (2, 1, 1) for k in SIGMA_LABELS)


def test_vertex_examples():
    assert vertex_of(M("rho1")) == Q1
    assert vertex_of(M("rho0")) == Q0
    assert vertex_of(M("rho3")) == Q3
    assert vertex_of(M("rho2")) == Q2


def test_vertex_shape_error():
    with pytest.raises(EigenShapeError):
        vertex_of(M("sigma0"))
    with pytest.raises(EigenShapeError):
        galois_line_of(M("rho0"))


def test_galois_line_sigma0():
    line = galois_line_of(M("sigma0"))
    assert line.contains(Q0) and line.contains(ProjPoint((0, 0, 1, 0)))
    # X = Y = 0
    assert all(r[0] == 0 and r[1] == 0 for r in line.rows)


def test_galois_line_of_printed_sigma2_display():
    # the printed display is the matrix of iz + (3 - i)/4, our sigma5
    line = galois_line_of(reference.MATRICES["sigma2"])
    assert line == galois_line_of(M("sigma5"))
    assert line.contains(Q2) and line.contains(ProjPoint((4, 1, 0, -2 * S * I)))


def test_galois_line_of_printed_sigma4_display():
    line = galois_line_of(reference.PULLBACKS["sigma4"])
    assert line == galois_line_of(M("sigma3"))
    assert line.contains(Q1) and line.contains(ProjPoint((4, 1, 0, 2 * S)))


def test_literal_sigma2_line_sits_at_q1():
    line = galois_line_of(M("sigma2"))
    assert line.contains(Q1) and not line.contains(Q2)


def test_lines_are_invariant_and_dual_scalar():
    for k in SIGMA_LABELS:
        A = M(k)
        line = galois_line_of(A)
        for p in line.points():
            assert line.contains(ProjPoint(A @ p.coords))
        assert dual_scalar_check(A, line)


def test_as_dict_shape():
    doc = eigen_decompose(M("sigma0")).as_dict()
    assert [e["multiplicity"] for e in doc] == sorted((e["multiplicity"] for e in doc), reverse=True)
    assert all(isinstance(x, str) for e in doc for v in e["basis"] for x in v)
