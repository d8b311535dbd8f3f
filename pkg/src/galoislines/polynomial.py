"""Univariate polynomials and rational functions over Q(zeta_8)."""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .exactfield import ONE, ZERO, FieldElement, embed_complex, recognize_algebraic


def _fe(v) -> FieldElement:
    return v if isinstance(v, FieldElement) else FieldElement.coerce(v)


class Poly:
    """Dense polynomial, coefficients in increasing degree, no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_fe(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs: tuple[FieldElement, ...] = tuple(cs)

    @classmethod
    def x(cls) -> Poly:
        return cls([ZERO, ONE])

    @classmethod
    def const(cls, c) -> Poly:
        return cls([c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> FieldElement:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def lead(self) -> FieldElement:
        return self.coeffs[-1] if self.coeffs else ZERO

    def __add__(self, other):
        other = other if isinstance(other, Poly) else Poly.const(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.coeff(k) + other.coeff(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = other if isinstance(other, Poly) else Poly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = _fe(other)
            return Poly(v * c for v in self.coeffs)
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = Poly.const(ONE)
        for _ in range(n):
            result = result * self
        return result

    def divmod(self, other: Poly) -> tuple[Poly, Poly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        inv_lead = other.lead().inverse()
        quot = [ZERO] * max(0, len(rem) - dq)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k]
            if c.is_zero():
                continue
            f = c * inv_lead
            quot[k - dq] = f
            for j, b in enumerate(other.coeffs):
                rem[k - dq + j] = rem[k - dq + j] - f * b
        return Poly(quot), Poly(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other: Poly) -> Poly:
        return self.divmod(other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return self.divmod(other)[1]

    def monic(self) -> Poly:
        if self.is_zero():
            return self
        return self * self.lead().inverse()

    def __call__(self, x):
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> Poly:
        return Poly(c * k for k, c in enumerate(self.coeffs) if k > 0)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c.is_zero():
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if not mono:
                parts.append(f"({c})")
            elif c == ONE:
                parts.append(mono)
            else:
                parts.append(f"({c})*{mono}")
        return " + ".join(parts)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


class RatFunc:
    """num/den in lowest terms with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None, reduce: bool = True):
        if den is None:
            den = Poly.const(ONE)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = Poly(), Poly.const(ONE)
            return
        if reduce:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
        lead = den.lead()
        if lead != ONE:
            inv = lead.inverse()
            num, den = num * inv, den * inv
        self.num, self.den = num, den

    @classmethod
    def const(cls, c) -> RatFunc:
        return cls(Poly.const(c))

    @classmethod
    def x(cls) -> RatFunc:
        return cls(Poly.x())

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other):
        other = other if isinstance(other, RatFunc) else RatFunc.const(other)
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        other = other if isinstance(other, RatFunc) else RatFunc.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, RatFunc):
            return RatFunc(self.num * _fe(other), self.den, reduce=False)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> RatFunc:
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        return RatFunc(self.den, self.num, reduce=False)

    def __truediv__(self, other):
        other = other if isinstance(other, RatFunc) else RatFunc.const(other)
        return self * other.inverse()

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __call__(self, x):
        return self.num(x) / self.den(x)

    def __repr__(self):
        if self.den.degree == 0:
            return f"RatFunc({self.num})"
        return f"RatFunc(({self.num}) / ({self.den}))"


def lcm(a: Poly, b: Poly) -> Poly:
    return (a * b // poly_gcd(a, b)).monic()


def interpolate(xs: Sequence[FieldElement], ys: Sequence[FieldElement]) -> Poly:
    """Lagrange interpolation through distinct nodes."""
    result = Poly()
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        term = Poly.const(yi)
        denom = ONE
        for j, xj in enumerate(xs):
            if j != i:
                term = term * Poly([-xj, ONE])
                denom = denom * (xi - xj)
        result = result + term * denom.inverse()
    return result


def squarefree_part(p: Poly) -> Poly:
    g = poly_gcd(p, p.derivative())
    return (p // g).monic() if g.degree > 0 else p.monic()


def roots_in_field(p: Poly, denominator_bound: int = 64) -> list[FieldElement]:
    """Distinct roots of ``p`` lying in Q(zeta_8).

    Works on the squarefree part so numeric roots are well conditioned; each
    recognised value is confirmed by exact evaluation.  Roots outside the
    field (or beyond the recognition bound) are simply absent, so callers
    needing completeness must check the count.
    """
    if p.degree < 1:
        return []
    p = squarefree_part(p)
    coeffs = [embed_complex(c) for c in reversed(p.coeffs)]
    found: list[FieldElement] = []
    dp = p.derivative()
    for z in np.roots(coeffs):
        zz = complex(z)
        for _ in range(2):
            den = embed_complex_poly(dp, zz)
            if den == 0:
                break
            zz -= embed_complex_poly(p, zz) / den
        r = recognize_algebraic(zz, denominator_bound)
        if r is not None and p(r).is_zero() and r not in found:
            found.append(r)
    return found


def embed_complex_poly(p: Poly, z: complex) -> complex:
    acc = 0j
    for c in reversed(p.coeffs):
        acc = acc * z + embed_complex(c)
    return acc
