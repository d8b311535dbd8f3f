"""Exact arithmetic for the Galois lines of the j = 1728 elliptic normal quartic.

Everything is computed over Q(zeta_8).  The main entry points:

>>> from galoislines import build_arrangement, run_verification
>>> len(build_arrangement().z4_lines)
8
"""

from __future__ import annotations

from .exactfield import FieldElement, ParseError, parse
from .ellcurve import NAMED, matrix_of
from .lineig import eigen_decompose
from .projgeom import ProjLine, ProjPoint, build_arrangement
from .planeproj import PlaneQuartic, project_curve
from .galgroup import closure, named_element
from .report import Settings, run_verification

__version__ = "0.1.0"

__all__ = [
    "FieldElement",
    "ParseError",
    "parse",
    "NAMED",
    "matrix_of",
    "eigen_decompose",
    "ProjLine",
    "ProjPoint",
    "build_arrangement",
    "PlaneQuartic",
    "project_curve",
    "closure",
    "named_element",
    "Settings",
    "run_verification",
    "__version__",
]
