"""Exact eigen-decomposition of the finite-order 4x4 matrices.

Every matrix here has some power equal to a scalar c, so each eigenvalue is an
n-th root of c.  Candidates are mu * zeta with mu one fixed root (iterated
square roots) and zeta an n-th root of unity; the ones that make M - lambda I
singular are kept and their eigenspaces found by elimination.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactfield import ONE, ZETA8, FieldElement, field_sqrt
from .linalg import Matrix, nullspace, rref
from .projgeom.primitives import ProjLine, ProjPoint, line_through

__all__ = [
    "OrderExceededError",
    "RootNotInFieldError",
    "EigenShapeError",
    "EigenDecomposition",
    "scalar_power",
    "eigen_decompose",
    "vertex_of",
    "galois_line_of",
    "dual_scalar_check",
    "MAX_ORDER",
]

MAX_ORDER = 8


class OrderExceededError(ArithmeticError):
    pass


class RootNotInFieldError(ArithmeticError):
    pass


class EigenShapeError(ValueError):
    pass


@dataclass(frozen=True)
class EigenDecomposition:
    eigenvalues: tuple[tuple[FieldElement, int], ...]
    eigenspaces: dict  # lambda -> tuple of canonical basis vectors

    @property
    def pattern(self) -> tuple[int, ...]:
        return tuple(sorted((m for _, m in self.eigenvalues), reverse=True))

    def simple_vectors(self) -> list[tuple[FieldElement, ...]]:
        return [self.eigenspaces[lam][0] for lam, m in self.eigenvalues if m == 1]

    def space_of(self, lam: FieldElement) -> tuple[tuple[FieldElement, ...], ...]:
        return self.eigenspaces.get(FieldElement.coerce(lam), ())

    def as_dict(self) -> list[dict]:
        return [{"eigenvalue": str(lam), "multiplicity": m,
                 "basis": [[str(c) for c in v] for v in self.eigenspaces[lam]]}
                for lam, m in self.eigenvalues]


def scalar_power(M: Matrix, bound: int = MAX_ORDER) -> tuple[int, FieldElement]:
    """Smallest n <= bound with M^n = c I; returns (n, c)."""
    if M.det().is_zero():
        raise ArithmeticError("matrix is singular")
    p = M
    for n in range(1, bound + 1):
        c = p.is_scalar()
        if c is not None:
            return n, c
        p = p @ M
    raise OrderExceededError(f"no scalar power up to exponent {bound}")


def _nth_root(c: FieldElement, n: int, denominator_bound: int) -> FieldElement:
    if n & (n - 1):
        raise RootNotInFieldError(f"order {n} is not a power of two")
    mu = c
    while n > 1:
        mu = field_sqrt(mu, denominator_bound)
        if mu is None:
            raise RootNotInFieldError(f"{c} has no root of the required order in the field")
        n //= 2
    return mu


def _roots_of_unity(n: int) -> list[FieldElement]:
    # n divides 8 here
    step = ZETA8 ** (8 // n)
    out, z = [], ONE
    for _ in range(n):
        out.append(z)
        z = z * step
    return out


def _kernel_basis(A: Matrix) -> tuple[tuple[FieldElement, ...], ...]:
    basis = nullspace(A.rows, A.shape[1])
    if not basis:
        return ()
    red, _ = rref(basis)
    return tuple(tuple(r) for r in red if any(not v.is_zero() for v in r))


def eigen_decompose(M: Matrix, denominator_bound: int = 64) -> EigenDecomposition:
    n, c = scalar_power(M)
    mu = _nth_root(c, n, denominator_bound)
    eye = Matrix.identity(4)
    values: list[tuple[FieldElement, int]] = []
    spaces: dict = {}
    for zeta in _roots_of_unity(n):
        lam = mu * zeta
        if lam in spaces:
            continue
        shifted = M - eye.scale(lam)
        if not shifted.det().is_zero():
            continue
        basis = _kernel_basis(shifted)
        for v in basis:
            if any(not w.is_zero() for w in (shifted @ v)):
                raise ArithmeticError("eigenvector check failed")
        values.append((lam, len(basis)))
        spaces[lam] = basis
    total = sum(m for _, m in values)
    if total != M.shape[0]:
        raise ArithmeticError(f"matrix is not diagonalisable over the field (dimension {total})")
    return EigenDecomposition(tuple(values), spaces)


def vertex_of(M: Matrix) -> ProjPoint:
    """Projective point of the one-dimensional eigenspace of a {1, 3} matrix."""
    dec = eigen_decompose(M)
    if dec.pattern != (3, 1):
        raise EigenShapeError(f"expected multiplicities (3, 1), got {dec.pattern}")
    (v,) = dec.simple_vectors()
    return ProjPoint(v)


def dual_scalar_check(M: Matrix, line: ProjLine) -> bool:
    """Does the repeated eigenspace of M^T consist of forms vanishing on line?"""
    dec = eigen_decompose(M.T)
    repeated = [lam for lam, m in dec.eigenvalues if m == 2]
    if len(repeated) != 1:
        return False
    forms = dec.eigenspaces[repeated[0]]
    return all((sum((f * p for f, p in zip(form, row)), start=FieldElement()).is_zero())
               for form in forms for row in line.rows)


def galois_line_of(M: Matrix) -> ProjLine:
    """Line through the two simple eigenvectors of a {2, 1, 1} matrix."""
    dec = eigen_decompose(M)
    if dec.pattern != (2, 1, 1):
        raise EigenShapeError(f"expected multiplicities (2, 1, 1), got {dec.pattern}")
    p, q = (ProjPoint(v) for v in dec.simple_vectors())
    line = line_through(p, q)
    if not dual_scalar_check(M, line):
        raise ArithmeticError("transposed action is not scalar on the forms cutting the line")
    return line
