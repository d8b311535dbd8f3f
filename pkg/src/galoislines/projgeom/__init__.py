"""Projective geometry in P^3: incidence, the quadric pencil, the line arrangement."""

from .primitives import (PLUCKER_PAIRS, IdenticalPointsError, ProjLine, ProjPoint, coplanar,
                         line_through, lines_meet, point_on_line)
from .pencil import (ConeRankError, PencilDimensionError, Quadric, quadrics_through_curve,
                     singular_members)
from .arrangement import Arrangement, ArrangementError, build_arrangement

__all__ = [
    "PLUCKER_PAIRS", "IdenticalPointsError", "ProjLine", "ProjPoint", "coplanar", "line_through",
    "lines_meet", "point_on_line", "ConeRankError", "PencilDimensionError", "Quadric",
    "quadrics_through_curve", "singular_members", "Arrangement", "ArrangementError",
    "build_arrangement",
]
