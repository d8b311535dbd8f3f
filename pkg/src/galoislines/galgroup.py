"""Finite subgroups of PGL_4 generated by the automorphism matrices."""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Sequence

from .ellcurve import NAMED, Automorphism, QuarterLatticePoint, matrix_of
from .exactfield import ONE
from .linalg import Matrix, canonical_scale

__all__ = [
    "PGLElement",
    "FiniteGroup",
    "BoundExceededError",
    "SubsetError",
    "DEFAULT_BOUND",
    "closure",
    "element_order",
    "order_histogram",
    "is_abelian",
    "is_normal",
    "intersect",
    "semidirect_certificate",
    "translation_consistency",
    "named_element",
]

DEFAULT_BOUND = 4096


class BoundExceededError(RuntimeError):
    pass


class SubsetError(ValueError):
    pass


class PGLElement:
    """A matrix modulo scalars, stored with first nonzero entry (row-major) 1."""

    __slots__ = ("matrix", "label", "_hash")

    def __init__(self, matrix: Matrix, label: str | None = None):
        n = matrix.shape[0]
        flat = canonical_scale(tuple(matrix.entries()))
        self.matrix = Matrix([flat[i * n:(i + 1) * n] for i in range(n)])
        self.label = label
        self._hash = hash(self.matrix)

    @classmethod
    def identity(cls, n: int = 4) -> PGLElement:
        return cls(Matrix.identity(n), "1")

    def __mul__(self, other: PGLElement) -> PGLElement:
        return PGLElement(self.matrix @ other.matrix)

    def inverse(self) -> PGLElement:
        return PGLElement(self.matrix.inverse())

    def is_identity(self) -> bool:
        return self.matrix.is_scalar() is not None

    def __pow__(self, k: int) -> PGLElement:
        if k < 0:
            return self.inverse() ** (-k)
        out = PGLElement.identity(self.matrix.shape[0])
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, PGLElement):
            return self.matrix == other.matrix
        return NotImplemented

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"PGLElement({self.label or self.matrix!r})"


@dataclass(frozen=True)
class FiniteGroup:
    elements: tuple[PGLElement, ...]
    generators: tuple[PGLElement, ...] = ()
    _set: frozenset = field(default=frozenset(), repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_set", frozenset(self.elements))

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g: PGLElement) -> bool:
        return g in self._set

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def issubset(self, other: FiniteGroup) -> bool:
        return self._set <= other._set

    def same_elements(self, other: FiniteGroup) -> bool:
        return self._set == other._set


def closure(generators: Sequence[PGLElement], bound: int = DEFAULT_BOUND) -> FiniteGroup:
    """Breadth-first closure of the generators under right multiplication."""
    if bound < 1:
        raise ValueError("bound must be at least 1")
    gens = tuple(generators)
    n = gens[0].matrix.shape[0] if gens else 4
    one = PGLElement.identity(n)
    seen = {one}
    order = [one]
    queue = deque([one])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = g * s
            if h not in seen:
                seen.add(h)
                order.append(h)
                if len(order) > bound:
                    raise BoundExceededError(f"closure exceeded {bound} elements")
                queue.append(h)
    return FiniteGroup(tuple(order), gens)


def element_order(g: PGLElement, bound: int = DEFAULT_BOUND) -> int:
    h, k = g, 1
    while not h.is_identity():
        h, k = h * g, k + 1
        if k > bound:
            raise BoundExceededError("element order exceeds the bound")
    return k


def order_histogram(G: FiniteGroup) -> dict[int, int]:
    return dict(sorted(Counter(element_order(g) for g in G).items()))


def is_abelian(G: FiniteGroup) -> bool:
    gens = G.generators or G.elements
    return all(a * b == b * a for a in gens for b in gens)


def _check_subset(H: FiniteGroup, G: FiniteGroup):
    if not H.issubset(G):
        raise SubsetError("subgroup is not contained in the group")


def is_normal(H: FiniteGroup, G: FiniteGroup) -> bool:
    _check_subset(H, G)
    for g in G:
        gi = g.inverse()
        for h in H:
            if g * h * gi not in H:
                return False
    return True


def intersect(H1: FiniteGroup, H2: FiniteGroup) -> FiniteGroup:
    return FiniteGroup(tuple(g for g in H1 if g in H2))


@dataclass(frozen=True)
class SemidirectCertificate:
    normal: bool
    trivial_intersection: bool
    orders: tuple[int, int, int]

    def __bool__(self) -> bool:
        n, h, g = self.orders
        return self.normal and self.trivial_intersection and n * h == g

    def as_dict(self) -> dict:
        return {"normal": self.normal, "trivial_intersection": self.trivial_intersection,
                "orders": list(self.orders), "holds": bool(self)}


def semidirect_certificate(N: FiniteGroup, H: FiniteGroup, G: FiniteGroup) -> SemidirectCertificate:
    _check_subset(N, G)
    _check_subset(H, G)
    return SemidirectCertificate(is_normal(N, G), intersect(N, H).order == 1,
                                 (N.order, H.order, G.order))


def named_element(label: str) -> PGLElement:
    return PGLElement(matrix_of(NAMED[label]), label)


def translation_consistency() -> dict[str, bool]:
    """Products of matrices against the matrices of the translations themselves."""
    e = {k: named_element(k) for k in ("rho0", "rho1", "sigma0", "sigma2")}
    alpha = PGLElement(matrix_of(Automorphism(ONE, QuarterLatticePoint(2, 0))))
    beta = PGLElement(matrix_of(Automorphism(ONE, QuarterLatticePoint(3, 1))))
    inverses = all((named_element(k) * PGLElement(matrix_of(NAMED[k].inverse()))).is_identity()
                   for k in NAMED if k not in ("alpha", "beta"))
    return {
        "alpha": e["rho1"] * e["rho0"] == alpha,
        "beta": e["sigma2"] * e["sigma0"] ** 3 == beta,
        "inverses": inverses,
    }
