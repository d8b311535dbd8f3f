"""Projection of the quartic curve from a point of P^3 and implicitization.

The image of (1 : x^2 : x : y) under three linear forms is a plane curve; its
quartic equation is the kernel of the linear map taking the 15 coefficients of
a ternary quartic to its pullback in L(16 P0), with basis x^0..x^8, x^0..x^6 y.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .exactfield import ONE, ZERO, FieldElement, embed_complex
from .linalg import Matrix, SingularMatrixError, canonical_scale, nullspace, rank
from .polynomial import Poly
from .projgeom import ProjLine, ProjPoint, quadrics_through_curve
from .ellcurve import CURVE_RHS, CurvePoint

__all__ = [
    "MONOMIALS",
    "PlaneQuartic",
    "CenterOnCurveError",
    "DegenerateProjectionError",
    "CenterNotOnLineError",
    "canonical_forms",
    "project_curve",
    "image_of_line",
    "change_coords",
    "curve_image",
    "two_galois_point_catalog",
    "CatalogEntry",
]

# degree-4 exponent triples in graded-lex order
MONOMIALS: tuple[tuple[int, int, int], ...] = tuple(
    sorted(((a, b, 4 - a - b) for a in range(5) for b in range(5 - a)), reverse=True))
COORD_NAMES = ("X", "Y", "Z", "W")


class CenterOnCurveError(ValueError):
    pass


class DegenerateProjectionError(ArithmeticError):
    pass


class CenterNotOnLineError(ValueError):
    pass


# -- ternary polynomials as {exponents: coefficient} ------------------------------

def _poly_mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = out.get(e, ZERO) + c1 * c2
    return {e: c for e, c in out.items() if not c.is_zero()}


def _poly_pow(p: dict, n: int, nvars: int) -> dict:
    out = {(0,) * nvars: ONE}
    for _ in range(n):
        out = _poly_mul(out, p)
    return out


def _coef_str(c: FieldElement) -> str:
    s = str(c)
    if c.is_rational() or (" " not in s.lstrip("-")):
        return s
    return f"({s})"


class PlaneQuartic:
    """A ternary quartic in canonical scale (first nonzero coefficient is 1)."""

    __slots__ = ("coeffs", "names")

    def __init__(self, coeffs: Mapping | Sequence, names: Sequence[str] = ("U", "V", "W")):
        if isinstance(coeffs, Mapping):
            vals = [FieldElement.coerce(coeffs.get(m, 0)) for m in MONOMIALS]
            extra = set(coeffs) - set(MONOMIALS)
            if extra:
                raise ValueError(f"not quartic monomials: {sorted(extra)}")
        else:
            vals = [FieldElement.coerce(c) for c in coeffs]
            if len(vals) != len(MONOMIALS):
                raise ValueError("a plane quartic has 15 coefficients")
        if all(v.is_zero() for v in vals):
            raise ValueError("the zero form is not a curve")
        self.coeffs: tuple[FieldElement, ...] = canonical_scale(tuple(vals))
        self.names = tuple(names)

    def as_dict(self) -> dict:
        return {m: c for m, c in zip(MONOMIALS, self.coeffs) if not c.is_zero()}

    def __eq__(self, other):
        if isinstance(other, PlaneQuartic):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def renamed(self, names: Sequence[str]) -> PlaneQuartic:
        return PlaneQuartic(self.coeffs, names)

    def __call__(self, point) -> FieldElement:
        u = [FieldElement.coerce(v) for v in point]
        acc = ZERO
        for (a, b, c), k in zip(MONOMIALS, self.coeffs):
            if not k.is_zero():
                acc = acc + k * u[0] ** a * u[1] ** b * u[2] ** c
        return acc

    def evaluate_complex(self, point) -> complex:
        return sum(complex(embed_complex(k)) * point[0] ** a * point[1] ** b * point[2] ** c
                   for (a, b, c), k in zip(MONOMIALS, self.coeffs) if not k.is_zero())

    def table(self) -> dict[str, str]:
        return {f"{a},{b},{c}": str(k) for (a, b, c), k in zip(MONOMIALS, self.coeffs)
                if not k.is_zero()}

    def __str__(self):
        parts = []
        for exps, k in zip(MONOMIALS, self.coeffs):
            if k.is_zero():
                continue
            mono = "*".join(n if e == 1 else f"{n}^{e}" for n, e in zip(self.names, exps) if e)
            single = " " not in str(k).lstrip("-")
            neg = str(k).startswith("-") and single
            mag = -k if neg else k
            coef = "" if mag == ONE else _coef_str(mag) + "*"
            parts.append(("- " if neg else "+ ") + coef + mono)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[1:]

    def __repr__(self):
        return f"PlaneQuartic({self})"


# -- projection --------------------------------------------------------------------

def canonical_forms(center: ProjPoint) -> tuple[tuple[tuple[FieldElement, ...], ...], tuple[str, ...]]:
    """Three independent linear forms vanishing at the center, and display names.

    The center is completed to a basis with standard vectors in index order; the
    forms are the last three rows of the inverse basis matrix.
    """
    cols = [center.coords]
    for k in range(4):
        e = tuple(ONE if j == k else ZERO for j in range(4))
        trial = Matrix(cols + [e])
        if len(cols) < 4 and rank(trial.rows) == len(cols) + 1:
            cols.append(e)
    B = Matrix(cols).T
    forms = tuple(B.inverse().rows[1:])
    names = []
    for f in forms:
        nz = [j for j, v in enumerate(f) if not v.is_zero()]
        names.append(COORD_NAMES[nz[0]] if len(nz) == 1 else None)
    if None in names or len(set(names)) != 3:
        names = ["U", "V", "W"]
    return forms, tuple(names)


def _on_curve(center: ProjPoint) -> bool:
    # the curve is the base locus of its pencil of quadrics
    return all(q(center.coords).is_zero() for q in quadrics_through_curve())


def _form_on_curve(form) -> tuple[Poly, Poly]:
    c0, c1, c2, c3 = form
    return Poly([c0, c2, c1]), Poly([c3])


def _pair_mul(p, q):
    a1, b1 = p
    a2, b2 = q
    return a1 * a2 + b1 * b2 * CURVE_RHS, a1 * b2 + b1 * a2


def _pair_pow(p, n):
    out = (Poly([ONE]), Poly())
    for _ in range(n):
        out = _pair_mul(out, p)
    return out


def project_curve(center: ProjPoint, forms=None, names=None) -> PlaneQuartic:
    """Equation of the image of the curve under projection from ``center``.

    The kernel is required to be one-dimensional.  That also settles
    irreducibility: the image of the curve is an irreducible plane curve of
    some degree d, and for d < 4 its equation times every form of degree 4 - d
    would lie in the kernel, giving dimension at least 3.
    """
    if _on_curve(center):
        raise CenterOnCurveError(f"{center} lies on the curve")
    if forms is None:
        forms, default_names = canonical_forms(center)
        names = names or default_names
    else:
        forms = tuple(tuple(FieldElement.coerce(v) for v in f) for f in forms)
        if any(sum((a * b for a, b in zip(f, center.coords)), ZERO) != ZERO for f in forms):
            raise ValueError("linear forms must vanish at the center")
        if rank(forms) != 3:
            raise ValueError("linear forms must be independent")
        names = names or ("U", "V", "W")
    pulled = [_form_on_curve(f) for f in forms]
    powers = [[_pair_pow(p, k) for k in range(5)] for p in pulled]
    columns = []
    for a, b, c in MONOMIALS:
        A, B = _pair_mul(_pair_mul(powers[0][a], powers[1][b]), powers[2][c])
        if A.degree > 8 or B.degree > 6:
            raise ArithmeticError("pullback escaped L(16 P0)")
        columns.append([A.coeff(k) for k in range(9)] + [B.coeff(k) for k in range(7)])
    system = [[col[r] for col in columns] for r in range(16)]
    kernel = nullspace(system, len(MONOMIALS))
    if len(kernel) != 1:
        raise DegenerateProjectionError(f"kernel dimension {len(kernel)}, expected 1")
    return PlaneQuartic(kernel[0], names)


def curve_image(forms, point: CurvePoint) -> tuple[FieldElement, ...]:
    """Exact image of a curve point under the linear forms (O maps via (0,1,0,0))."""
    if point.is_infinity:
        v = (ZERO, ONE, ZERO, ZERO)
    else:
        v = (ONE, point.x * point.x, point.x, point.y)
    return tuple(sum((a * b for a, b in zip(f, v)), ZERO) for f in forms)


def image_of_line(center: ProjPoint, line: ProjLine, forms=None) -> ProjPoint:
    if not line.contains(center):
        raise CenterNotOnLineError(f"{center} is not on the line")
    if forms is None:
        forms, _ = canonical_forms(center)
    imgs = []
    for row in line.rows:
        img = tuple(sum((a * b for a, b in zip(f, row)), ZERO) for f in forms)
        if any(not v.is_zero() for v in img):
            imgs.append(ProjPoint(img))
    if not imgs or len(set(imgs)) != 1:
        raise ArithmeticError("line does not collapse to a single point")
    return imgs[0]


def change_coords(F: PlaneQuartic, T: Matrix) -> PlaneQuartic:
    """Substitute old = T * new; a right action: change(change(F, A), B) = change(F, A B)."""
    if T.shape != (3, 3):
        raise ValueError("coordinate change must be 3x3")
    if T.det().is_zero():
        raise SingularMatrixError("coordinate change is singular")
    lin = [{tuple(1 if j == k else 0 for j in range(3)): T[i, k] for k in range(3)
            if not T[i, k].is_zero()} for i in range(3)]
    pw = [[_poly_pow(lin[i], n, 3) for n in range(5)] for i in range(3)]
    total: dict = {}
    for (a, b, c), k in zip(MONOMIALS, F.coeffs):
        if k.is_zero():
            continue
        term = _poly_mul(_poly_mul(pw[0][a], pw[1][b]), pw[2][c])
        for e, v in term.items():
            total[e] = total.get(e, ZERO) + k * v
    return PlaneQuartic(total, F.names)


# -- catalog ------------------------------------------------------------------------

@dataclass(frozen=True)
class CatalogEntry:
    label: str
    center: ProjPoint
    quartic: PlaneQuartic
    z4_line: str
    v4_line: str
    z4_point: ProjPoint
    v4_point: ProjPoint

    def as_dict(self) -> dict:
        return {"center": [str(c) for c in self.center.coords], "quartic": str(self.quartic),
                "coefficients": self.quartic.table(), "z4_line": self.z4_line,
                "v4_line": self.v4_line, "z4_point": [str(c) for c in self.z4_point.coords],
                "v4_point": [str(c) for c in self.v4_point.coords]}


def two_galois_point_catalog(arrangement=None) -> list[CatalogEntry]:
    if arrangement is None:
        from .projgeom import build_arrangement
        arrangement = build_arrangement()
    out = []
    for r in arrangement.r_points:
        z4, v4 = arrangement.lines_through(r.point)
        if len(z4) != 1 or len(v4) != 1:
            raise ArithmeticError(f"{r.label} is on {len(z4)} Z4-lines and {len(v4)} V4-lines")
        forms, names = canonical_forms(r.point)
        F = project_curve(r.point, forms, names)
        zp = image_of_line(r.point, arrangement.z4_lines[z4[0]], forms)
        vp = image_of_line(r.point, arrangement.v4_lines[v4[0]], forms)
        out.append(CatalogEntry(r.label, r.point, F, z4[0], "l%d%d" % v4[0], zp, vp))
    return out
