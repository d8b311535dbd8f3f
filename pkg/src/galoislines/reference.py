"""Published values for the j = 1728 quartic, transcribed as exact data.

Everything here is input to comparisons only; nothing in the pipeline reads
these tables to compute anything.  Matrices use the row convention of
:func:`galoislines.ellcurve.matrix_of` (row k holds the coordinates of the
k-th transformed basis function in the basis 1, x^2, x, y).

Where the printed source is ambiguous the reading chosen is noted inline.
"""

from __future__ import annotations

from fractions import Fraction as Fr

from .exactfield import I, ONE, S, FieldElement
from .linalg import Matrix

__all__ = [
    "MATRICES",
    "PULLBACKS",
    "EIGEN_TABLES",
    "VERTICES",
    "R_POINTS",
    "EXAMPLE_CENTER",
    "EXAMPLE_QUARTIC",
    "EXAMPLE_Z4_POINT",
    "EXAMPLE_V4_POINT",
    "EXAMPLE_SUBSTITUTION",
    "TAKAHASHI_QUARTIC",
    "GROUP_FACTS",
]

h = Fr(1, 2)
q = Fr(1, 4)
o = ONE
z = 0


def _m(rows) -> Matrix:
    return Matrix(rows)


# Displayed matrices keyed by the label printed above them.  The second
# rho-display is printed with the label rho0 as well; it is stored under
# "rho0#2" so the comparison can decide which automorphism it belongs to.
MATRICES: dict[str, Matrix] = {
    "rho0": _m([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, -1]]),
    "rho0#2": _m([[1, 4, -4, 0], [q, 1, 1, 0], [-h, 2, 0, 0], [0, 0, 0, 2]]),
    "rho2": _m([[1, 4, 4, 0], [q, 1, -1, 0], [h, -2, 0, 0], [0, 0, 0, 2]]),
    "rho3": _m([[0, 4, 0, 0], [q, 0, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]]),
    "sigma0": _m([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, I]]),
    "sigma1": _m([[0, 4, 0, 0], [q, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, I]]),
    # prefactor -sqrt2*i; "i/2 sqrt2" read as i/(2 sqrt2), the reading that
    # agrees with the printed pullback of sigma2
    "sigma2": _m([
        [(I + 1) / 4, -I - 1, -I + 1, -S * I],
        [-(1 + I) / 16, (1 + I) / 4, (-1 + I) / 4, -I / (2 * S)],
        [(1 - I) / 8, (-1 + I) / 2, (1 + I) / 2, 0],
        [I / (2 * S), S * I, 0, 0],
    ]).scale(-S * I),
    "sigma3": _m([
        [1 + I, -4 * (1 + I), 4 * (1 - I), -4 * S * I],
        [-(1 + I) / 4, 1 + I, -1 + I, S * I],
        [(1 - I) / 2, -2 * (1 - I), 2 * (1 + I), 0],
        [-S * I, -4 * S * I, 0, 0],
    ]),
    "sigma4": _m([
        [I, -4 * I, -4, -2 * S * (1 + I)],
        [-I / 4, I, 1, -(1 + I) * S],
        [-h, 2, 2 * I, 0],
        [-(1 + I) / S, 2 * S * (1 + I), 0, 0],
    ]),
    "sigma5": _m([
        [I, -4 * I, -4, 2 * S * (1 + I)],
        [-I / 4, I, 1, (1 + I) * S],
        [-h, 2, 2 * I, 0],
        [(1 + I) / S, 2 * S * (1 + I), 0, 0],
    ]),
    "sigma6": _m([[1, 4, 4, 0], [q, 1, -1, 0], [-h, 2, 0, 0], [0, 0, 0, -2 * I]]),
    "sigma7": _m([[1, 4, -4, 0], [q, 1, 1, 0], [h, -2, 0, 0], [0, 0, 0, -2 * I]]),
}

# Printed images of (1, x^2, x, y), each as coefficients on (1, x^2, x, y).
PULLBACKS: dict[str, Matrix] = {
    "rho0": _m([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, -1]]),
    "rho1": _m([[1, 4, -4, 0], [q, 1, 1, 0], [-h, 2, 0, 0], [0, 0, 0, 2]]),
    "rho2": _m([[1, 4, 4, 0], [q, 1, -1, 0], [h, -2, 0, 0], [0, 0, 0, 2]]),
    "rho3": _m([[0, 4, 0, 0], [q, 0, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]]),
    "sigma0": _m([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, I]]),
    # fourth entry printed as "i x"
    "sigma1": _m([[0, 4, 0, 0], [q, 0, 0, 0], [0, 0, 1, 0], [0, 0, I, 0]]),
    "sigma2": _m([
        [-S * (I - 1) / 4, S * (I - 1), -S * (1 + I), -2],
        [S * (I - 1) / 16, -S * (I - 1) / 4, S * (I + 1) / 4, -h],
        [-S * (1 + I) / 8, S * (1 + I) / 2, -S * (I - 1) / 2, 0],
        [h, 2, 0, 0],
    ]),
    "sigma3": _m([
        [1 + I, -4 * (1 + I), -4 * I * (1 + I), 4 * S * I],
        [-(1 + I) / 4, 1 + I, I * (1 + I), S * I],
        [-(I - 1) / 2, 2 * (I - 1), -2 * I * (I - 1), 0],
        [-S * I, -4 * S * I, 0, 0],
    ]),
    "sigma4": _m([
        [I, -4 * I, -4, -2 * S * (1 + I)],
        [-I / 4, I, 1, (-1 - I) / S],
        [-h, 2, 2 * I, 0],
        [-(1 + I) / S, -2 * S * (1 + I), 0, 0],
    ]),
    # second entry printed without y: "(1+i)/sqrt2 + i x^2 + x - i/4"
    "sigma5": _m([
        [I, -4 * I, -4, 2 * S * (1 + I)],
        [(1 + I) / S - I / 4, I, 1, 0],
        [-h, 2, 2 * I, 0],
        [(1 + I) / S, 4 * (1 + I) / S, 0, 0],
    ]),
    "sigma6": _m([[1, 4, 4, 0], [q, 1, -1, 0], [-h, 2, 0, 0], [0, 0, 0, -2 * I]]),
    "sigma7": _m([[1, 4, -4, 0], [q, 1, 1, 0], [h, -2, 0, 0], [0, 0, 0, -2 * I]]),
}


def _v(*xs) -> tuple[FieldElement, ...]:
    return tuple(FieldElement.coerce(x) for x in xs)


# label -> list of (eigenvalue, [eigenvectors]) in printed order
EIGEN_TABLES: dict[str, list[tuple[FieldElement, list[tuple[FieldElement, ...]]]]] = {
    "rho0": [(-o, [_v(0, 0, 0, 1)]),
             (o, [_v(1, 0, 0, 0), _v(0, 1, 0, 0), _v(0, 0, 1, 0)])],
    "rho1": [(-2 * o, [_v(4, -1, 2, 0)]),
             (2 * o, [_v(1, 0, -q, 0), _v(0, 1, 1, 0), _v(0, 0, 0, 1)])],
    "rho2": [(-2 * o, [_v(4, -1, -2, 0)]),
             (2 * o, [_v(4, 0, 1, 0), _v(0, 1, -1, 0), _v(0, 0, 0, 1)])],
    "rho3": [(4 * o, [_v(4, 1, 0, 0)]),
             (-4 * o, [_v(4, -1, 0, 0), _v(0, 0, 1, 0), _v(0, 0, 0, 1)])],
    "sigma0": [(-o, [_v(0, 0, 0, 1)]),
               (o, [_v(1, 0, 0, 0), _v(0, 1, 0, 0)]),
               (I, [_v(0, 0, 0, 1)])],
    "sigma1": [(-o, [_v(4, -1, 0, 0)]),
               (o, [_v(4, 1, 0, 0), _v(0, 0, 1, 0)]),
               (I, [_v(0, 0, 0, 1)])],
    "sigma2": [(S, [_v(4, -1, -2, 0)]),
               (-S * I, [_v(4, 0, 1, S * I), _v(0, 1, -1, S * I)]),
               (S * I, [_v(4, 1, 0, -2 * S * I)])],
    "sigma3": [(4 * I, [_v(4, -1, -2, 0)]),
               (4 * o, [_v(4, 0, 1, -2 * S * I), _v(0, 1, -1, -S * I)]),
               (-4 * o, [_v(4, 1, 0, 2 * S * I)])],
    "sigma4": [(-2 - 2 * I, [_v(4, 1, 0, 2 * S)]),
               (2 + 2 * I, [_v(4, 0, -1, -S), _v(0, 1, 1, S)]),
               (-2 + 2 * I, [_v(4, -1, 2, 0)])],
    "sigma5": [(-2 - 2 * I, [_v(4, 1, 0, -2 * S)]),
               (2 + 2 * I, [_v(4, 0, -1, S), _v(0, 1, 1, S)]),
               (-2 + 2 * I, [_v(4, -1, 2, 0)])],
    "sigma6": [(2 * I, [_v(4, -1, 2 * I, 0)]),
               (-2 * I, [_v(4, -1, -2, 0), _v(0, 0, 0, 1)]),
               (2 * o, [_v(4, 1, 0, 0)])],
    "sigma7": [(2 * I, [_v(4, -1, -2 * I, 0)]),
               (-2 * I, [_v(4, -1, 2 * I, 0), _v(0, 0, 0, 1)]),
               (2 * o, [_v(4, 1, 0, 0)])],
}

VERTICES: dict[str, tuple[FieldElement, ...]] = {
    "Q0": _v(0, 0, 0, 1),
    "Q1": _v(4, -1, 2, 0),
    "Q2": _v(4, -1, -2, 0),
    "Q3": _v(4, 1, 0, 0),
}

R_POINTS: dict[str, tuple[FieldElement, ...]] = {
    "R01": _v(0, 0, 1, 0),
    "R02": _v(4, -1, 0, 0),
    "R31": _v(4, -1, 2 * I, 0),
    "R32": _v(4, -1, -2 * I, 0),
    "R21": _v(4, 1, 0, -2 * S * I),
    "R22": _v(4, 1, 0, 2 * S * I),
    "R11": _v(4, 1, 0, 2 * S),
    "R12": _v(4, 1, 0, -2 * S),
}

EXAMPLE_CENTER = _v(0, 0, 1, 0)
# W^4 - X Y (X - 4Y)^2 = W^4 - X^3 Y + 8 X^2 Y^2 - 16 X Y^3, as {(eX, eY, eW): coeff}
EXAMPLE_QUARTIC = {(0, 0, 4): o, (3, 1, 0): -o, (2, 2, 0): 8 * o, (1, 3, 0): -16 * o}
EXAMPLE_Z4_POINT = _v(0, 0, 1)
EXAMPLE_V4_POINT = _v(-4, 1, 0)
# old = T * new, with (X, Y, W) = (X' - i Y', -(X' + i Y')/4, W')
EXAMPLE_SUBSTITUTION = _m([[1, -I, 0], [-q, -I / 4, 0], [0, 0, 1]])
# s^4 + s^2 u^2 + t^4 with (s, t, u) = (X', W', Y')
TAKAHASHI_QUARTIC = {(4, 0, 0): o, (2, 2, 0): o, (0, 0, 4): o}

GROUP_FACTS = {
    "G0_order": 8,
    "G0_histogram": {1: 1, 2: 7},
    "G_order": 32,
    "T_order": 8,
    "T_histogram": {1: 1, 2: 3, 4: 4},
    "G0_index": 4,
}
