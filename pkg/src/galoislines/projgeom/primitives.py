"""Points and lines of P^3 over Q(zeta_8), with exact incidence tests."""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from ..exactfield import FieldElement, embed_complex
from ..linalg import canonical_scale, det, nullspace, rank, rref

__all__ = ["ProjPoint", "ProjLine", "IdenticalPointsError", "line_through", "point_on_line",
           "lines_meet", "coplanar", "PLUCKER_PAIRS"]

PLUCKER_PAIRS = tuple(combinations(range(4), 2))


class IdenticalPointsError(ValueError):
    pass


class ProjPoint:
    """A point of projective space, stored with first nonzero coordinate 1."""

    __slots__ = ("coords",)

    def __init__(self, coords: Sequence):
        vals = tuple(FieldElement.coerce(c) for c in coords)
        if all(v.is_zero() for v in vals):
            raise ValueError("the zero vector is not a projective point")
        self.coords: tuple[FieldElement, ...] = canonical_scale(vals)

    @property
    def dim(self) -> int:
        return len(self.coords) - 1

    def __eq__(self, other):
        if isinstance(other, ProjPoint):
            return self.coords == other.coords
        return NotImplemented

    def __hash__(self):
        return hash(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)

    def __str__(self):
        return "(" + " : ".join(str(c) for c in self.coords) + ")"

    def __repr__(self):
        return f"ProjPoint{self}"

    def embed(self) -> tuple[complex, ...]:
        return tuple(embed_complex(c) for c in self.coords)


class ProjLine:
    """The span of two distinct points of P^3.

    ``rows`` is the reduced echelon basis of the span; ``plucker`` the six
    exterior coordinates p01, p02, p03, p12, p13, p23, canonically scaled.
    """

    __slots__ = ("rows", "plucker")

    def __init__(self, p: ProjPoint, q: ProjPoint):
        red, piv = rref([p.coords, q.coords])
        if len(piv) != 2:
            raise IdenticalPointsError(f"{p} and {q} do not span a line")
        self.rows = (tuple(red[0]), tuple(red[1]))
        r0, r1 = self.rows
        self.plucker = canonical_scale(tuple(r0[i] * r1[j] - r0[j] * r1[i] for i, j in PLUCKER_PAIRS))

    def points(self) -> tuple[ProjPoint, ProjPoint]:
        return ProjPoint(self.rows[0]), ProjPoint(self.rows[1])

    def plucker_relation(self) -> FieldElement:
        p01, p02, p03, p12, p13, p23 = self.plucker
        return p01 * p23 - p02 * p13 + p03 * p12

    def contains(self, p: ProjPoint) -> bool:
        return rank([*self.rows, p.coords]) == 2

    def linear_forms(self) -> list[tuple[FieldElement, ...]]:
        """A basis of the linear forms vanishing on the line."""
        return nullspace(self.rows, 4)

    def __eq__(self, other):
        if isinstance(other, ProjLine):
            return self.plucker == other.plucker
        return NotImplemented

    def __hash__(self):
        return hash(self.plucker)

    def __str__(self):
        a, b = self.points()
        return f"<{a}, {b}>"

    __repr__ = __str__


def line_through(p: ProjPoint, q: ProjPoint) -> ProjLine:
    if p == q:
        raise IdenticalPointsError(f"line through the identical points {p}")
    return ProjLine(p, q)


def point_on_line(p: ProjPoint, line: ProjLine) -> bool:
    return line.contains(p)


def lines_meet(l1: ProjLine, l2: ProjLine) -> ProjPoint | None:
    """Intersection point, or None for skew lines; equal lines raise ValueError."""
    r = rank([*l1.rows, *l2.rows])
    if r == 4:
        return None
    if r == 2:
        raise ValueError("lines coincide")
    # a r0 + b r1 - c s0 - d s1 = 0
    cols = [l1.rows[0], l1.rows[1], tuple(-v for v in l2.rows[0]), tuple(-v for v in l2.rows[1])]
    system = [[cols[k][i] for k in range(4)] for i in range(4)]
    (sol,) = nullspace(system, 4)
    a, b = sol[0], sol[1]
    return ProjPoint(tuple(a * u + b * v for u, v in zip(*l1.rows)))


def coplanar(*points: ProjPoint) -> bool:
    if len(points) != 4:
        raise ValueError("coplanarity test needs exactly four points")
    return det([p.coords for p in points]).is_zero()
