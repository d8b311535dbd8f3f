"""The curve E: y^2 = 4x^3 - x, its automorphisms, and their action on |4 P0|.

Points of E correspond to z in C/(Z + Zi) through (wp(z), wp'(z)) (the
normalised functions of :mod:`galoislines.analytic`).  An automorphism
z -> eps*z + tau with eps a fourth root of unity and 4*tau in Z + Zi acts on
points as P -> [eps]P + P_tau, where [i](x, y) = (-x, i y).

The embedding f = (1 : x^2 : x : y) into P^3 is fixed; ``matrix_of`` returns
the matrix M with f(gamma(z)) proportional to M f(z).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .exactfield import I, ONE, ZERO, FieldElement, embed_complex, field_sqrt
from .linalg import Matrix, canonical_scale, nullspace
from .polynomial import Poly, RatFunc, lcm, roots_in_field

__all__ = [
    "CURVE_RHS",
    "CurvePoint",
    "INFINITY",
    "FunctionElement",
    "QuarterLatticePoint",
    "Automorphism",
    "NAMED",
    "RHO_LABELS",
    "SIGMA_LABELS",
    "MATRIX_LABELS",
    "SpanMembershipError",
    "DegenerateTranslationError",
    "on_curve",
    "point_add",
    "point_negate",
    "point_mul",
    "cm_i",
    "two_torsion_points",
    "quarter_point",
    "torsion_point",
    "pullback_basis",
    "matrix_of",
    "j_invariant",
    "BASIS_NAMES",
]

BASIS_NAMES = ("1", "x^2", "x", "y")
CURVE_RHS = Poly([0, -1, 0, 4])  # 4x^3 - x


class SpanMembershipError(ArithmeticError):
    """Transformed basis does not fit in span{1, x^2, x, y}."""


class DegenerateTranslationError(ArithmeticError):
    pass


# -- points -----------------------------------------------------------------

@dataclass(frozen=True)
class CurvePoint:
    x: FieldElement | None = None
    y: FieldElement | None = None

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __str__(self):
        return "O" if self.is_infinity else f"({self.x}, {self.y})"

    def embed(self) -> tuple[complex, complex] | None:
        if self.is_infinity:
            return None
        return embed_complex(self.x), embed_complex(self.y)


INFINITY = CurvePoint()


def on_curve(p: CurvePoint) -> bool:
    if p.is_infinity:
        return True
    return p.y * p.y == CURVE_RHS(p.x)


def _chord(x1, y1, x2, y2):
    lam = (y2 - y1) / (x2 - x1)
    x3 = lam * lam / 4 - x1 - x2
    y3 = -(y1 + lam * (x3 - x1))
    return x3, y3


def point_add(p: CurvePoint, q: CurvePoint) -> CurvePoint:
    if p.is_infinity:
        return q
    if q.is_infinity:
        return p
    if p.x == q.x:
        if (p.y + q.y).is_zero():
            return INFINITY
        lam = (12 * p.x * p.x - 1) / (2 * p.y)
        x3 = lam * lam / 4 - 2 * p.x
        y3 = -(p.y + lam * (x3 - p.x))
        return CurvePoint(x3, y3)
    return CurvePoint(*_chord(p.x, p.y, q.x, q.y))


def point_negate(p: CurvePoint) -> CurvePoint:
    return p if p.is_infinity else CurvePoint(p.x, -p.y)


def cm_i(p: CurvePoint) -> CurvePoint:
    """Complex multiplication by i: (x, y) -> (-x, i y)."""
    return p if p.is_infinity else CurvePoint(-p.x, I * p.y)


def point_mul(k: int, p: CurvePoint) -> CurvePoint:
    if k < 0:
        return point_mul(-k, point_negate(p))
    result, base = INFINITY, p
    while k:
        if k & 1:
            result = point_add(result, base)
        base = point_add(base, base)
        k >>= 1
    return result


def _numeric_point(z: complex):
    from .analytic import wp_pair

    p, dp, _ = wp_pair(z)
    return complex(p[0]), complex(dp[0])


def _nearest(candidates, target: complex):
    return min(candidates, key=lambda c: abs(embed_complex(c) - target))


@lru_cache(maxsize=1)
def two_torsion_points() -> dict[tuple[int, int], CurvePoint]:
    """P_{1/2}, P_{i/2}, P_{(1+i)/2}: roots of 4x^3 - x matched to wp numerically."""
    roots = roots_in_field(CURVE_RHS)
    if len(roots) != 3:
        raise ArithmeticError("expected three rational 2-torsion abscissae")
    out = {}
    for key, z in (((2, 0), 0.5), ((0, 2), 0.5j), ((2, 2), 0.5 + 0.5j)):
        x_num, _ = _numeric_point(z)
        out[key] = CurvePoint(_nearest(roots, x_num), ZERO)
    if len({p.x for p in out.values()}) != 3:
        raise ArithmeticError("2-torsion root matching is not a bijection")
    return out


@lru_cache(maxsize=1)
def quarter_point() -> CurvePoint:
    """P_{1/4}: a halving of P_{1/2}, with root and sign pinned by wp(1/4), wp'(1/4)."""
    half = two_torsion_points()[(2, 0)]
    x = Poly.x()
    # x(2Q) = (12x^2 - 1)^2 / (16 (4x^3 - x)) - 2x
    halving = (12 * x * x - 1) ** 2 - CURVE_RHS * 16 * (x * 2 + Poly.const(half.x))
    roots = roots_in_field(halving)
    x_num, y_num = _numeric_point(0.25)
    x0 = _nearest(roots, x_num)
    y0 = field_sqrt(CURVE_RHS(x0))
    if y0 is None:
        raise ArithmeticError("P_{1/4} has no ordinate in Q(zeta_8)")
    y0 = _nearest([y0, -y0], y_num)
    p = CurvePoint(x0, y0)
    if point_add(p, p) != half:
        raise ArithmeticError("pinned quarter point does not double to P_{1/2}")
    return p


@dataclass(frozen=True, order=True)
class QuarterLatticePoint:
    """tau = (m + n i)/4 modulo Z + Zi."""

    m: int
    n: int

    def __post_init__(self):
        object.__setattr__(self, "m", self.m % 4)
        object.__setattr__(self, "n", self.n % 4)

    def __add__(self, other: QuarterLatticePoint) -> QuarterLatticePoint:
        return QuarterLatticePoint(self.m + other.m, self.n + other.n)

    def __neg__(self):
        return QuarterLatticePoint(-self.m, -self.n)

    def rotate(self, eps: FieldElement) -> QuarterLatticePoint:
        """eps * tau for eps in {1, -1, i, -i}."""
        if eps == ONE:
            return self
        if eps == -ONE:
            return -self
        if eps == I:
            return QuarterLatticePoint(-self.n, self.m)
        if eps == -I:
            return QuarterLatticePoint(self.n, -self.m)
        raise ValueError(f"{eps} is not a fourth root of unity")

    def complex(self) -> complex:
        return complex(self.m, self.n) / 4

    def __str__(self):
        return f"({self.m}+{self.n}i)/4"


def torsion_point(tau: QuarterLatticePoint) -> CurvePoint:
    """Exact P_tau = m P_{1/4} + n P_{i/4}."""
    return _torsion_cached(tau.m, tau.n)


@lru_cache(maxsize=16)
def _torsion_cached(m: int, n: int) -> CurvePoint:
    q = quarter_point()
    return point_add(point_mul(m, q), point_mul(n, cm_i(q)))


# -- automorphisms ------------------------------------------------------------

_UNITS = (ONE, -ONE, I, -I)


@dataclass(frozen=True)
class Automorphism:
    epsilon: FieldElement
    tau: QuarterLatticePoint
    label: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.epsilon not in _UNITS:
            raise ValueError("epsilon must be one of 1, -1, i, -i")

    def compose(self, other: Automorphism) -> Automorphism:
        """self o other: z -> e1 (e2 z + t2) + t1."""
        return Automorphism(self.epsilon * other.epsilon,
                            other.tau.rotate(self.epsilon) + self.tau)

    __matmul__ = compose

    def inverse(self) -> Automorphism:
        e_inv = self.epsilon.inverse()
        return Automorphism(e_inv, (-self.tau).rotate(e_inv))

    def is_identity(self) -> bool:
        return self.epsilon == ONE and self.tau == QuarterLatticePoint(0, 0)

    def order(self) -> int:
        g, n = self, 1
        while not g.is_identity():
            g, n = self.compose(g), n + 1
        return n

    def apply_complex(self, z):
        return complex(embed_complex(self.epsilon)) * z + self.tau.complex()

    def apply_point(self, p: CurvePoint) -> CurvePoint:
        return point_add(_unit_action(self.epsilon, p), torsion_point(self.tau))

    @property
    def name(self) -> str:
        return self.label or f"z -> {self.epsilon}*z + {self.tau}"


def _unit_action(eps: FieldElement, p):
    if eps == ONE:
        return p
    if eps == -ONE:
        return point_negate(p)
    if eps == I:
        return cm_i(p)
    return point_negate(cm_i(p))


def _auto(label, eps, m, n):
    return Automorphism(eps, QuarterLatticePoint(m, n), label)


NAMED: dict[str, Automorphism] = {
    a.label: a
    for a in (
        _auto("rho0", -ONE, 0, 0),
        _auto("rho1", -ONE, 2, 0),
        _auto("rho2", -ONE, 0, 2),
        _auto("rho3", -ONE, 2, 2),
        _auto("sigma0", I, 0, 0),
        _auto("sigma1", I, 2, 2),
        _auto("sigma2", I, 3, 1),
        _auto("sigma3", I, 1, 3),
        _auto("sigma4", I, 1, 1),
        _auto("sigma5", I, 3, 3),
        _auto("sigma6", I, 2, 0),
        _auto("sigma7", I, 0, 2),
        _auto("alpha", ONE, 2, 0),
        _auto("beta", ONE, 3, 1),
    )
}
RHO_LABELS = tuple(f"rho{k}" for k in range(4))
SIGMA_LABELS = tuple(f"sigma{k}" for k in range(8))
MATRIX_LABELS = RHO_LABELS + SIGMA_LABELS


# -- function field -------------------------------------------------------------

class FunctionElement:
    """A(x) + B(x) y in the function field of E, reduced with y^2 = 4x^3 - x."""

    __slots__ = ("A", "B")

    def __init__(self, A: RatFunc, B: RatFunc | None = None):
        self.A = A if isinstance(A, RatFunc) else RatFunc.const(A)
        self.B = B if B is not None else RatFunc.const(ZERO)

    @classmethod
    def x(cls) -> FunctionElement:
        return cls(RatFunc.x())

    @classmethod
    def y(cls) -> FunctionElement:
        return cls(RatFunc.const(ZERO), RatFunc.const(ONE))

    @classmethod
    def const(cls, c) -> FunctionElement:
        return cls(RatFunc.const(c))

    def is_zero(self) -> bool:
        return self.A.is_zero() and self.B.is_zero()

    def _lift(self, other) -> FunctionElement:
        return other if isinstance(other, FunctionElement) else FunctionElement.const(other)

    def __add__(self, other):
        other = self._lift(other)
        return FunctionElement(self.A + other.A, self.B + other.B)

    __radd__ = __add__

    def __neg__(self):
        return FunctionElement(-self.A, -self.B)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (FieldElement, int, Fraction)):
            return FunctionElement(self.A * other, self.B * other)
        other = self._lift(other)
        rhs = RatFunc(CURVE_RHS)
        a = self.A * other.A + self.B * other.B * rhs
        b = self.A * other.B + self.B * other.A
        return FunctionElement(a, b)

    __rmul__ = __mul__

    def inverse(self) -> FunctionElement:
        norm = self.A * self.A - self.B * self.B * RatFunc(CURVE_RHS)
        if norm.is_zero():
            raise ZeroDivisionError("inverse of zero in the function field")
        inv = norm.inverse()
        return FunctionElement(self.A * inv, -(self.B * inv))

    def __truediv__(self, other):
        if isinstance(other, (FieldElement, int, Fraction)):
            return self * FieldElement.coerce(other).inverse()
        return self * self._lift(other).inverse()

    def __eq__(self, other):
        if isinstance(other, FunctionElement):
            return self.A == other.A and self.B == other.B
        return NotImplemented

    def __hash__(self):
        return hash((self.A, self.B))

    def evaluate(self, p: CurvePoint) -> FieldElement:
        return self.A(p.x) + self.B(p.x) * p.y

    def over_common_denominator(self) -> tuple[Poly, Poly, Poly]:
        """(P, Q, D) with self = (P + Q y) / D, D monic."""
        d = lcm(self.A.den, self.B.den)
        return self.A.num * (d // self.A.den), self.B.num * (d // self.B.den), d

    def __repr__(self):
        return f"FunctionElement({self.A!r} + ({self.B!r})*y)"


def pullback_basis(gamma: Automorphism) -> tuple[FunctionElement, ...]:
    """(1, x^2, x, y) composed with gamma, as elements of the function field."""
    gx, gy = FunctionElement.x(), FunctionElement.y()
    X, Y = _unit_action_generic(gamma.epsilon, gx, gy)
    t = torsion_point(gamma.tau)
    if not t.is_infinity:
        dx = X - FunctionElement.const(t.x)
        if dx.is_zero():
            raise DegenerateTranslationError("generic slope denominator vanishes identically")
        X, Y = _chord(X, Y, FunctionElement.const(t.x), FunctionElement.const(t.y))
    return (FunctionElement.const(ONE), X * X, X, Y)


def _unit_action_generic(eps, gx, gy):
    if eps == ONE:
        return gx, gy
    if eps == -ONE:
        return gx, -gy
    if eps == I:
        return -gx, gy * I
    return -gx, -(gy * I)


_SPAN_X_POWERS = {0: 0, 1: 2, 2: 1}  # basis index -> power of x (index 3 is y)


def matrix_of(gamma: Automorphism) -> Matrix:
    """Matrix M with f(gamma(z)) ~ M f(z), scaled so its first nonzero entry is 1.

    The transformed functions have poles away from P0, so a common multiplier h
    (itself in span{1, x^2, x, y}) is solved for together with the rows:
    h * (f_k o gamma) = row_k . (1, x^2, x, y) for every k, with row_0 = h.
    """
    return _matrix_cached(gamma.epsilon, gamma.tau)


@lru_cache(maxsize=64)
def _matrix_cached(eps: FieldElement, tau: QuarterLatticePoint) -> Matrix:
    funcs = pullback_basis(Automorphism(eps, tau))
    n_unknowns = 16  # h (4) + rows 1..3 (4 each)
    equations: list[list[Poly]] = []
    x = Poly.x()
    span_polys = [Poly.const(ONE), x * x, x]
    for k in (1, 2, 3):
        P, Q, D = funcs[k].over_common_denominator()
        eq0 = [Poly()] * n_unknowns
        eq1 = [Poly()] * n_unknowns
        for j in range(3):
            eq0[j] = span_polys[j] * P
            eq1[j] = span_polys[j] * Q
            eq0[4 * k + j] = -(span_polys[j] * D)
        eq0[3] = Q * CURVE_RHS
        eq1[3] = P
        eq1[4 * k + 3] = -D
        equations.extend([eq0, eq1])
    rows = []
    for eq in equations:
        top = max(p.degree for p in eq)
        for power in range(top + 1):
            rows.append([p.coeff(power) for p in eq])
    kernel = nullspace(rows, n_unknowns)
    if len(kernel) != 1:
        raise SpanMembershipError(
            f"expected a one-dimensional solution for the transformed basis, got {len(kernel)}")
    v = canonical_scale(kernel[0])
    m = Matrix([v[0:4], v[4:8], v[8:12], v[12:16]])
    flat = canonical_scale(tuple(m.entries()))
    return Matrix([flat[0:4], flat[4:8], flat[8:12], flat[12:16]])


def j_invariant() -> Fraction:
    """j = 1728 g2^3 / (g2^3 - 27 g3^2) for y^2 = 4x^3 - g2 x - g3 with g2 = 1, g3 = 0."""
    g2, g3 = Fraction(1), Fraction(0)
    return 1728 * g2 ** 3 / (g2 ** 3 - 27 * g3 ** 2)
