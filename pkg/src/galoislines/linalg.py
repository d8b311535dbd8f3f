"""Dense exact matrices over Q(zeta_8) and Gaussian elimination."""

from __future__ import annotations

from typing import Iterable, Sequence

from .exactfield import ONE, ZERO, FieldElement

__all__ = ["Matrix", "rref", "nullspace", "rank", "det", "solve", "canonical_scale",
           "first_nonzero", "SingularMatrixError"]


class SingularMatrixError(ArithmeticError):
    pass


def _fe(v) -> FieldElement:
    return v if isinstance(v, FieldElement) else FieldElement.coerce(v)


class Matrix:
    """Immutable rectangular matrix of field elements (row-major)."""

    __slots__ = ("rows", "_hash")

    def __init__(self, rows: Iterable[Iterable]):
        data = tuple(tuple(_fe(v) for v in row) for row in rows)
        if not data or any(len(r) != len(data[0]) for r in data):
            raise ValueError("matrix rows must be non-empty and of equal length")
        object.__setattr__(self, "rows", data)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def diag(cls, entries: Sequence) -> Matrix:
        n = len(entries)
        return cls([[entries[i] if i == j else ZERO for j in range(n)] for i in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def column(self, j: int) -> tuple[FieldElement, ...]:
        return tuple(r[j] for r in self.rows)

    @property
    def T(self) -> Matrix:
        return Matrix(zip(*self.rows))

    def entries(self):
        for r in self.rows:
            yield from r

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            n, k = self.shape
            k2, m = other.shape
            if k != k2:
                raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
            cols = [other.column(j) for j in range(m)]
            out = []
            for row in self.rows:
                out_row = []
                for col in cols:
                    acc = ZERO
                    for a, b in zip(row, col):
                        if a.is_zero() or b.is_zero():
                            continue
                        acc = acc + a * b
                    out_row.append(acc)
                out.append(out_row)
            return Matrix(out)
        # matrix @ vector
        vec = tuple(_fe(v) for v in other)
        if len(vec) != self.shape[1]:
            raise ValueError("vector length mismatch")
        out = []
        for row in self.rows:
            acc = ZERO
            for a, b in zip(row, vec):
                if not (a.is_zero() or b.is_zero()):
                    acc = acc + a * b
            out.append(acc)
        return tuple(out)

    def scale(self, s) -> Matrix:
        s = _fe(s)
        return Matrix([[v * s for v in r] for r in self.rows])

    def __add__(self, other: Matrix) -> Matrix:
        return Matrix([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other: Matrix) -> Matrix:
        return Matrix([[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def __neg__(self) -> Matrix:
        return self.scale(-1)

    def __pow__(self, n: int) -> Matrix:
        if n < 0:
            return self.inverse() ** (-n)
        result, base = Matrix.identity(self.shape[0]), self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def det(self) -> FieldElement:
        return det(self)

    def inverse(self) -> Matrix:
        n, m = self.shape
        if n != m:
            raise ValueError("inverse of non-square matrix")
        aug = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(self.rows)]
        red, pivots = rref(aug)
        if pivots[:n] != list(range(n)):
            raise SingularMatrixError("matrix is singular")
        return Matrix([row[n:] for row in red[:n]])

    def is_scalar(self) -> FieldElement | None:
        """The scalar c when self == c*I, else None."""
        n, m = self.shape
        if n != m:
            return None
        c = self.rows[0][0]
        for i in range(n):
            for j in range(m):
                v = self.rows[i][j]
                if i == j:
                    if v != c:
                        return None
                elif not v.is_zero():
                    return None
        return c

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(self.rows)
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return f"Matrix({[[str(v) for v in r] for r in self.rows]})"

    def to_strings(self) -> list[list[str]]:
        return [[str(v) for v in r] for r in self.rows]

    def render(self) -> str:
        cells = self.to_strings()
        width = max(len(c) for r in cells for c in r)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in r) + " ]" for r in cells)


def first_nonzero(values: Iterable[FieldElement]) -> FieldElement | None:
    for v in values:
        if not v.is_zero():
            return v
    return None


def canonical_scale(values: Sequence[FieldElement]) -> tuple[FieldElement, ...]:
    """Rescale so the first nonzero entry equals 1."""
    lead = first_nonzero(values)
    if lead is None:
        raise ValueError("cannot normalise the zero vector")
    if lead == ONE:
        return tuple(values)
    inv = lead.inverse()
    return tuple(v * inv for v in values)


def rref(rows) -> tuple[list[list[FieldElement]], list[int]]:
    """Reduced row echelon form; returns (rows, pivot columns)."""
    a = [[_fe(v) for v in r] for r in rows]
    if not a:
        return a, []
    nrows, ncols = len(a), len(a[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        p = next((i for i in range(r, nrows) if not a[i][c].is_zero()), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = a[r][c].inverse()
        a[r] = [v * inv for v in a[r]]
        for i in range(nrows):
            if i != r and not a[i][c].is_zero():
                f = a[i][c]
                a[i] = [vi - f * vr if not vr.is_zero() else vi for vi, vr in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(rows) -> int:
    return len(rref(rows)[1])


def nullspace(rows, ncols: int | None = None) -> list[tuple[FieldElement, ...]]:
    """Basis of {v : A v = 0}, one vector per free column, free entry = 1."""
    rows = [list(r) for r in rows]
    if ncols is None:
        ncols = len(rows[0])
    if not rows:
        return [tuple(ONE if j == k else ZERO for j in range(ncols)) for k in range(ncols)]
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [ZERO] * ncols
        v[fcol] = ONE
        for row, pc in zip(red, pivots):
            v[pc] = -row[fcol]
        basis.append(tuple(v))
    return basis


def det(m: Matrix | Sequence[Sequence]) -> FieldElement:
    rows = [list(r) for r in (m.rows if isinstance(m, Matrix) else m)]
    n = len(rows)
    a = [[_fe(v) for v in r] for r in rows]
    result = ONE
    for c in range(n):
        p = next((i for i in range(c, n) if not a[i][c].is_zero()), None)
        if p is None:
            return ZERO
        if p != c:
            a[c], a[p] = a[p], a[c]
            result = -result
        pivot = a[c][c]
        result = result * pivot
        inv = pivot.inverse()
        for i in range(c + 1, n):
            if a[i][c].is_zero():
                continue
            f = a[i][c] * inv
            a[i] = [vi - f * vc for vi, vc in zip(a[i], a[c])]
    return result


def solve(m: Matrix, b: Sequence) -> tuple[FieldElement, ...]:
    """Unique solution of m x = b."""
    n = m.shape[0]
    aug = [list(r) + [_fe(v)] for r, v in zip(m.rows, b)]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        raise SingularMatrixError("system is singular or inconsistent")
    return tuple(red[i][n] for i in range(n))
