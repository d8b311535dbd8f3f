"""Exact arithmetic in Q(zeta_8) = Q(i, sqrt 2).

An element is stored as four rationals ``(a, b, c, d)`` meaning
``a + b*i + c*sqrt2 + d*i*sqrt2``.  The text form is ``a + b*I + c*S + d*I*S``
where ``S`` stands for sqrt 2; zero terms are omitted and ``parse`` accepts
anything ``str`` produces (plus a few lenient spellings).
"""

from __future__ import annotations

import cmath
import math
import re
from fractions import Fraction
from numbers import Rational

import mpmath
import numpy as np

__all__ = [
    "FieldElement",
    "ZERO",
    "ONE",
    "I",
    "S",
    "ZETA8",
    "ParseError",
    "RecognitionError",
    "field_add",
    "field_mul",
    "field_neg",
    "field_inv",
    "field_sqrt",
    "embed_complex",
    "recognize_algebraic",
    "parse",
    "DEFAULT_DENOMINATOR_BOUND",
]

DEFAULT_DENOMINATOR_BOUND = 64
SQRT2 = math.sqrt(2.0)


class ParseError(ValueError):
    """Malformed field-element text; ``position`` is the offending column."""

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.text = text
        self.position = position


class RecognitionError(ArithmeticError):
    pass


def _frac(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, (int, Rational)):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise TypeError(f"cannot coerce {type(v).__name__} to an exact rational")


def _raw(n0: int, n1: int, n2: int, n3: int, den: int) -> "FieldElement":
    """Build from integer numerators over a common positive denominator."""
    g = math.gcd(n0, n1, n2, n3, den)
    if g != 1:
        n0, n1, n2, n3, den = n0 // g, n1 // g, n2 // g, n3 // g, den // g
    x = object.__new__(FieldElement)
    object.__setattr__(x, "_n", (n0, n1, n2, n3))
    object.__setattr__(x, "_den", den)
    object.__setattr__(x, "_hash", None)
    return x


class FieldElement:
    # integer numerators over one positive denominator, jointly reduced
    __slots__ = ("_n", "_den", "_hash")

    def __init__(self, a=0, b=0, c=0, d=0):
        fr = [_frac(v) for v in (a, b, c, d)]
        den = math.lcm(*(f.denominator for f in fr))
        n = [f.numerator * (den // f.denominator) for f in fr]
        g = math.gcd(*n, den)
        object.__setattr__(self, "_n", tuple(v // g for v in n))
        object.__setattr__(self, "_den", den // g)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    @classmethod
    def coerce(cls, v) -> FieldElement:
        if isinstance(v, FieldElement):
            return v
        if isinstance(v, int):
            return _raw(v, 0, 0, 0, 1)
        if isinstance(v, (Fraction, Rational)):
            return cls(v)
        if isinstance(v, str):
            return parse(v)
        raise TypeError(f"cannot coerce {type(v).__name__} to FieldElement")

    @property
    def a(self) -> Fraction:
        return Fraction(self._n[0], self._den)

    @property
    def b(self) -> Fraction:
        return Fraction(self._n[1], self._den)

    @property
    def c(self) -> Fraction:
        return Fraction(self._n[2], self._den)

    @property
    def d(self) -> Fraction:
        return Fraction(self._n[3], self._den)

    @property
    def coords(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return tuple(Fraction(v, self._den) for v in self._n)

    def is_zero(self) -> bool:
        n = self._n
        return not (n[0] or n[1] or n[2] or n[3])

    def is_rational(self) -> bool:
        n = self._n
        return not (n[1] or n[2] or n[3])

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- ring operations -------------------------------------------------

    @staticmethod
    def _lift(other):
        if isinstance(other, FieldElement):
            return other
        try:
            return FieldElement.coerce(other)
        except TypeError:
            return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        d1, d2 = self._den, other._den
        x, y = self._n, other._n
        if d1 == d2:
            return _raw(x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3], d1)
        return _raw(x[0] * d2 + y[0] * d1, x[1] * d2 + y[1] * d1,
                    x[2] * d2 + y[2] * d1, x[3] * d2 + y[3] * d1, d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        n = self._n
        return _raw(-n[0], -n[1], -n[2], -n[3], self._den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        # (p + q i)(p' + q' i) with p = a + c s, q = b + d s in Q(s), s^2 = 2
        a, b, c, d = self._n
        e, f, g, h = other._n
        pp_r = a * e + 2 * c * g
        pp_s = a * g + c * e
        qq_r = b * f + 2 * d * h
        qq_s = b * h + d * f
        pq_r = a * f + 2 * c * h
        pq_s = a * h + c * f
        qp_r = b * e + 2 * d * g
        qp_s = b * g + d * e
        return _raw(pp_r - qq_r, pq_r + qp_r, pp_s - qq_s, pq_s + qp_s, self._den * other._den)

    __rmul__ = __mul__

    def conj_i(self) -> FieldElement:
        """Image under i -> -i (sqrt2 fixed)."""
        n = self._n
        return _raw(n[0], -n[1], n[2], -n[3], self._den)

    def conj_s(self) -> FieldElement:
        """Image under sqrt2 -> -sqrt2 (i fixed)."""
        n = self._n
        return _raw(n[0], n[1], -n[2], -n[3], self._den)

    def inverse(self) -> FieldElement:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_8)")
        x_bar = self.conj_i()
        n = self * x_bar  # in Q(sqrt2)
        n_bar = n.conj_s()
        r = n * n_bar  # rational
        num = x_bar * n_bar
        # num / (r0 / rden) = num * rden / r0
        r0, rden = r._n[0], r._den
        sign = -1 if r0 < 0 else 1
        m = num._n
        return _raw(m[0] * rden * sign, m[1] * rden * sign, m[2] * rden * sign,
                    m[3] * rden * sign, num._den * abs(r0))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero in Q(zeta_8)")
            other = Fraction(other)
            p, q = other.numerator, other.denominator
            sign = -1 if p < 0 else 1
            n = self._n
            return _raw(n[0] * q * sign, n[1] * q * sign, n[2] * q * sign, n[3] * q * sign,
                        self._den * abs(p))
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return FieldElement.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def norm(self) -> Fraction:
        """Absolute norm down to Q (product of the four conjugates)."""
        n = self * self.conj_i()
        return (n * n.conj_s()).a

    # -- comparison / hashing --------------------------------------------

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self._den == other._den and self._n == other._n
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.a == other
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(self.coords) if not self.is_rational() else hash(self.a)
            object.__setattr__(self, "_hash", h)
        return h

    def __complex__(self):
        return embed_complex(self)

    def __repr__(self):
        return f"FieldElement({str(self)!r})"

    def __str__(self):
        terms = []
        for coef, unit in zip(self.coords, ("", "I", "S", "I*S")):
            if coef == 0:
                continue
            sign = "-" if coef < 0 else "+"
            mag = abs(coef)
            if unit and mag == 1:
                body = unit
            elif unit:
                body = f"{mag}*{unit}"
            else:
                body = str(mag)
            terms.append((sign, body))
        if not terms:
            return "0"
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


ZERO = FieldElement(0)
ONE = FieldElement(1)
I = FieldElement(0, 1)
S = FieldElement(0, 0, 1)
ZETA8 = (ONE + I) * S / 2  # e^{i pi/4}


def field_add(x: FieldElement, y: FieldElement) -> FieldElement:
    return x + y


def field_mul(x: FieldElement, y: FieldElement) -> FieldElement:
    return x * y


def field_neg(x: FieldElement) -> FieldElement:
    return -x


def field_inv(x: FieldElement) -> FieldElement:
    return x.inverse()


# -- text syntax ------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<unit>I\*S|S\*I|sqrt\(?2\)?|√2|I|i|S)|(?P<op>[+\-*/])|(?P<lp>\()|(?P<rp>\)))"
)


def parse(text: str) -> FieldElement:
    """Parse ``a + b*I + c*S + d*I*S`` style text (terms may appear in any order).

    Accepted units: ``I``/``i``, ``S``/``sqrt2``/``√2`` and ``I*S``.  Each term
    is an optional sign followed by a product of rationals and units,
    optionally divided by a rational (``S/2``).
    """
    pos = 0
    n = len(text)
    tokens: list[tuple[str, str, int]] = []
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise ParseError("unexpected character", text, pos)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    if not tokens:
        raise ParseError("empty field element", text, 0)

    units = {"I": I, "i": I, "S": S, "sqrt2": S, "sqrt(2)": S, "√2": S,
             "I*S": I * S, "S*I": I * S}
    total = ZERO
    k = 0
    while k < len(tokens):
        sign = 1
        while k < len(tokens) and tokens[k][0] == "op" and tokens[k][1] in "+-":
            if tokens[k][1] == "-":
                sign = -sign
            k += 1
        if k >= len(tokens):
            raise ParseError("dangling sign", text, tokens[-1][2])
        term = ONE
        expect_factor = True
        divide = False
        while k < len(tokens):
            kind, val, at = tokens[k]
            if kind == "op" and val in "+-" and not expect_factor:
                break
            if expect_factor:
                if kind == "num":
                    f = FieldElement(Fraction(val))
                elif kind == "unit":
                    f = units.get(val)
                    if f is None:
                        raise ParseError(f"unknown unit {val!r}", text, at)
                else:
                    raise ParseError(f"expected number or unit, got {val!r}", text, at)
                term = term / f if divide else term * f
                expect_factor = False
                divide = False
            else:
                if kind == "op" and val in "*/":
                    divide = val == "/"
                    expect_factor = True
                elif kind in ("num", "unit"):
                    # implicit multiplication, e.g. "2I"
                    expect_factor = True
                    continue
                else:
                    raise ParseError(f"unexpected {val!r}", text, at)
            k += 1
        if expect_factor:
            raise ParseError("incomplete term", text, tokens[k - 1][2] if k else 0)
        total = total + term * sign
    return total


# -- embedding and recognition --------------------------------------------

def embed_complex(x: FieldElement, precision: int = 15):
    """Complex value of ``x`` at zeta_8 = e^{i pi/4}.

    Precision up to 15 digits returns a Python ``complex``; anything larger
    returns an ``mpmath.mpc`` computed at that many decimal digits.
    """
    if precision < 15:
        raise ValueError("precision must be at least 15 digits")
    if precision <= 15:
        re_ = float(x.a) + float(x.c) * SQRT2
        im_ = float(x.b) + float(x.d) * SQRT2
        return complex(re_, im_)
    with mpmath.workdps(precision):
        s = mpmath.sqrt(2)
        re_ = mpmath.mpf(x.a.numerator) / x.a.denominator + s * x.c.numerator / x.c.denominator
        im_ = mpmath.mpf(x.b.numerator) / x.b.denominator + s * x.d.numerator / x.d.denominator
        return mpmath.mpc(re_, im_)


def _recognize_real(r: float, bound: int, height: int, tol: float):
    """Find rationals (a, c) with a + c*sqrt2 ~ r and denominators <= bound.

    Scans common denominators in increasing order first; for each, the integer
    pair with the smallest |c| inside the tolerance wins.  Pairs whose
    denominators differ fall through to the slower pair search.
    """
    if not math.isfinite(r):
        return None
    for q in range(1, bound + 1):
        cmax = height * q
        cs = np.arange(-cmax, cmax + 1, dtype=np.float64)
        target = r * q - cs * SQRT2
        a_int = np.rint(target)
        resid = np.abs(target - a_int)
        ok = np.nonzero(resid <= tol * q * max(1.0, abs(r)))[0]
        if ok.size == 0:
            continue
        best = ok[np.argmin(np.abs(cs[ok]))]
        a = Fraction(int(a_int[best]), q)
        c = Fraction(int(cs[best]), q)
        return a, c
    return _recognize_real_pairs(r, bound, height, tol)


def _recognize_real_pairs(r: float, bound: int, height: int, tol: float):
    """Fallback with separate denominators: c = k/dc, then a = r - c*sqrt2 by continued fractions.

    Convergents with denominator <= bound are the only candidates for a
    rational that close (Legendre), so a few vectorised steps decide every c.
    """
    dcs, ks = [], []
    for dc in range(1, bound + 1):
        k = np.arange(-height * dc, height * dc + 1, dtype=np.float64)
        ks.append(k)
        dcs.append(np.full(k.size, dc, dtype=np.float64))
    k = np.concatenate(ks)
    dc = np.concatenate(dcs)
    a = r - (k / dc) * SQRT2
    x = a.copy()
    h0, h1 = np.zeros_like(a), np.ones_like(a)
    k0, k1 = np.ones_like(a), np.zeros_like(a)
    active = np.ones(a.size, dtype=bool)
    hit_num = np.zeros_like(a)
    hit_den = np.zeros_like(a)
    limit = tol * max(1.0, abs(r))
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        while active.any():
            ai = np.floor(x)
            h2, k2 = ai * h1 + h0, ai * k1 + k0
            active &= k2 <= bound
            close = active & (hit_den == 0) & (np.abs(a - h2 / k2) <= limit)
            hit_num[close], hit_den[close] = h2[close], k2[close]
            frac = x - ai
            active &= (hit_den == 0) & (frac > 1e-12)
            x = np.where(active, 1.0 / np.where(active, frac, 1.0), 0.0)
            h0, h1, k0, k1 = h1, h2, k1, k2
    idx = np.nonzero(hit_den)[0]
    if idx.size == 0:
        return None
    # simplest candidate: smallest combined denominator, then smallest |c|
    cand = sorted((math.lcm(int(hit_den[j]), int(dc[j])), abs(k[j]) / dc[j], j) for j in idx)
    j = cand[0][2]
    return Fraction(int(hit_num[j]), int(hit_den[j])), Fraction(int(k[j]), int(dc[j]))


def recognize_algebraic(z, denominator_bound: int = DEFAULT_DENOMINATOR_BOUND,
                        height: int = 256) -> FieldElement | None:
    """Recover an element of Q(zeta_8) from its complex embedding.

    The real and imaginary parts are each matched against ``p + q*sqrt2`` with
    rational ``p, q`` of denominator at most ``denominator_bound`` each and
    ``|q| <= height``.  Returns ``None`` when nothing fits.
    """
    high_precision = isinstance(z, mpmath.mpc) or isinstance(z, mpmath.mpf)
    zc = complex(z)
    if not (math.isfinite(zc.real) and math.isfinite(zc.imag)):
        return None
    tol = 1e-11
    re_part = _recognize_real(zc.real, denominator_bound, height, tol)
    if re_part is None:
        return None
    im_part = _recognize_real(zc.imag, denominator_bound, height, tol)
    if im_part is None:
        return None
    x = FieldElement(re_part[0], im_part[0], re_part[1], im_part[1])
    scale = max(1.0, abs(zc))
    if high_precision:
        dps = mpmath.mp.dps
        err = abs(embed_complex(x, max(dps, 16)) - z)
        if err > mpmath.mpf(10) ** (-(dps - 5)) * scale:
            return None
    elif abs(embed_complex(x) - zc) >= 1e-9 * scale:
        return None
    return x


# -- square roots -----------------------------------------------------------

def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _sqrt_in_qs(a: Fraction, c: Fraction):
    """Square roots of a + c*sqrt2 inside Q(sqrt2), as (p, q) with (p + q s)^2 = a + c s."""
    if c == 0:
        r = _rational_sqrt(a)
        if r is not None:
            return (r, Fraction(0))
        r = _rational_sqrt(a / 2)
        if r is not None:
            return (Fraction(0), r)
        return None
    n = _rational_sqrt(a * a - 2 * c * c)
    if n is None:
        return None
    for p2 in ((a + n) / 2, (a - n) / 2):
        p = _rational_sqrt(p2)
        if p:
            return (p, c / (2 * p))
    return None


def _qs_elem(p: Fraction, q: Fraction) -> FieldElement:
    return FieldElement(p, 0, q, 0)


def _is_square_exact(x: FieldElement) -> FieldElement | None:
    """Decide squareness through the tower Q < Q(sqrt2) < Q(sqrt2)(i).

    Writing x = u + v*i with u, v in Q(sqrt2), a root p + q*i satisfies
    p^2 - q^2 = u, 2pq = v, so p^2 = (u + t)/2 with t^2 = u^2 + v^2.
    """
    if x.is_zero():
        return ZERO
    u = (x.a, x.c)
    v = (x.b, x.d)
    if v == (0, 0):
        r = _sqrt_in_qs(*u)
        if r is not None:
            return _qs_elem(*r)
        r = _sqrt_in_qs(-u[0], -u[1])
        if r is not None:
            return _qs_elem(*r) * I
        return None
    ue, ve = _qs_elem(*u), _qs_elem(*v)
    t2 = ue * ue + ve * ve
    t = _sqrt_in_qs(t2.a, t2.c)
    if t is None:
        return None
    te = _qs_elem(*t)
    for cand in ((ue + te) / 2, (ue - te) / 2):
        p = _sqrt_in_qs(cand.a, cand.c)
        if p is None or (p[0] == 0 and p[1] == 0):
            continue
        pe = _qs_elem(*p)
        qe = ve / (pe * 2)
        y = pe + qe * I
        if y * y == x:
            return y
    return None


def _canonical_branch(y: FieldElement) -> FieldElement:
    """Pick +-y whose embedding has argument in [0, pi)."""
    w = embed_complex(y)
    ang = cmath.phase(w)
    if ang < 0 or ang >= math.pi:
        return -y
    return y


def field_sqrt(x: FieldElement, denominator_bound: int = DEFAULT_DENOMINATOR_BOUND
               ) -> FieldElement | None:
    """A square root of ``x`` in Q(zeta_8), or ``None`` if there is none.

    The candidate comes from recognising the principal complex square root and
    is confirmed by squaring.  When recognition finds nothing, an exact tower
    test separates "not a square" (returns ``None``) from "square, but outside
    the recognition bound" (raises ``RecognitionError``).
    """
    if x.is_zero():
        return ZERO
    z = cmath.sqrt(embed_complex(x))
    y = recognize_algebraic(z, denominator_bound)
    if y is not None:
        for cand in (y, -y):
            if cand * cand == x:
                return _canonical_branch(cand)
    exact = _is_square_exact(x)
    if exact is None:
        return None
    raise RecognitionError(
        f"{x} is a square in Q(zeta_8) but its root was not recognised "
        f"with denominator bound {denominator_bound}"
    )
