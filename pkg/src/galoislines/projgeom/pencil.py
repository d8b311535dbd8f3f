"""The pencil of quadrics through the elliptic normal quartic and its cones."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from ..exactfield import ZERO, FieldElement
from ..linalg import Matrix, nullspace, rank
from ..polynomial import Poly, interpolate, roots_in_field
from .primitives import ProjPoint

__all__ = ["Quadric", "PencilDimensionError", "ConeRankError", "quadrics_through_curve",
           "singular_members", "curve_monomial", "QUADRIC_MONOMIALS"]

QUADRIC_MONOMIALS = tuple(combinations_with_replacement(range(4), 2))
# basis (1, x^2, x, y) as (power of x, power of y)
_BASIS = ((0, 0), (2, 0), (1, 0), (0, 1))


class PencilDimensionError(ArithmeticError):
    pass


class ConeRankError(ArithmeticError):
    pass


@dataclass(frozen=True)
class Quadric:
    gram: Matrix

    def __post_init__(self):
        if self.gram != self.gram.T:
            raise ValueError("Gram matrix must be symmetric")

    @classmethod
    def from_monomials(cls, coeffs) -> Quadric:
        """From coefficients on X_i X_j (i <= j) in QUADRIC_MONOMIALS order."""
        g = [[ZERO] * 4 for _ in range(4)]
        half = FieldElement(1) / 2
        for (i, j), c in zip(QUADRIC_MONOMIALS, coeffs):
            c = FieldElement.coerce(c)
            if i == j:
                g[i][i] = c
            else:
                g[i][j] = g[j][i] = c * half
        return cls(Matrix(g))

    def __call__(self, p) -> FieldElement:
        v = tuple(p)
        w = self.gram @ v
        acc = ZERO
        for a, b in zip(v, w):
            acc = acc + a * b
        return acc

    def monomial_coefficients(self) -> tuple[FieldElement, ...]:
        g = self.gram
        return tuple(g[i, i] if i == j else g[i, j] * 2 for i, j in QUADRIC_MONOMIALS)

    def rank(self) -> int:
        return rank(self.gram.rows)

    def vertex(self) -> ProjPoint:
        kernel = nullspace(self.gram.rows, 4)
        if len(kernel) != 1:
            raise ConeRankError(f"quadric has rank {4 - len(kernel)}, not 3")
        return ProjPoint(kernel[0])

    def __str__(self):
        names = "XYZW"
        terms = []
        for (i, j), c in zip(QUADRIC_MONOMIALS, self.monomial_coefficients()):
            if not c.is_zero():
                terms.append(f"({c})*{names[i]}*{names[j]}")
        return " + ".join(terms) or "0"


def curve_monomial(i: int, j: int) -> tuple[Poly, Poly]:
    """f_i f_j on the curve as A(x) + B(x) y, reduced with y^2 = 4x^3 - x."""
    (a1, b1), (a2, b2) = _BASIS[i], _BASIS[j]
    xp = Poly.x() ** (a1 + a2)
    yp = b1 + b2
    if yp == 2:
        return xp * Poly([0, -1, 0, 4]), Poly()
    if yp == 1:
        return Poly(), xp
    return xp, Poly()


def quadrics_through_curve() -> tuple[Quadric, Quadric]:
    """Basis of the quadrics containing the image of (1, x^2, x, y)."""
    # coordinates in L(8 P0): x^0..x^4, then y, xy, x^2 y
    cols = []
    for i, j in QUADRIC_MONOMIALS:
        A, B = curve_monomial(i, j)
        cols.append([A.coeff(k) for k in range(5)] + [B.coeff(k) for k in range(3)])
    system = [[cols[m][r] for m in range(len(cols))] for r in range(8)]
    kernel = nullspace(system, len(QUADRIC_MONOMIALS))
    if len(kernel) != 2:
        raise PencilDimensionError(f"expected a pencil, kernel has dimension {len(kernel)}")
    return tuple(Quadric.from_monomials(v) for v in kernel)


def _det_binary_form(A: Quadric, B: Quadric) -> Poly:
    """p(t) = det(t A + B); its degree drop counts roots at t = infinity."""
    ts = [FieldElement(k) for k in range(5)]
    vals = [(A.gram.scale(t) + B.gram).det() for t in ts]
    return interpolate(ts, vals)


def singular_members(pencil: tuple[Quadric, Quadric], denominator_bound: int = 64
                     ) -> list[tuple[Quadric, ProjPoint]]:
    """The four cones lambda A + mu B and their vertices."""
    A, B = pencil
    p = _det_binary_form(A, B)
    members: list[Quadric] = []
    if p.degree < 4:
        if p.degree < 3:
            raise PencilDimensionError("determinant form has a multiple root at infinity")
        members.append(A)
    roots = roots_in_field(p, denominator_bound)
    members.extend(Quadric(A.gram.scale(t) + B.gram) for t in roots)
    if len(members) != 4:
        raise PencilDimensionError(
            f"expected 4 distinct singular members, recognised {len(members)}")
    out = []
    for q in members:
        if q.rank() != 3:
            raise ConeRankError(f"singular member has rank {q.rank()}")
        out.append((q, q.vertex()))
    return out


def det_form(pencil) -> Poly:
    return _det_binary_form(*pencil)
