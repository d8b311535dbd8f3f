"""The tetrahedron of V4-lines and the eight Z4-lines of the j = 1728 quartic."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from ..ellcurve import NAMED, RHO_LABELS, SIGMA_LABELS, matrix_of
from .primitives import ProjLine, ProjPoint, coplanar, line_through, lines_meet

__all__ = ["Arrangement", "ArrangementError", "build_arrangement", "R_EDGE_RULE"]

# R points over Q0, Q3 sit on l12; those over Q1, Q2 on l03
R_EDGE_RULE = {0: (1, 2), 3: (1, 2), 1: (0, 3), 2: (0, 3)}


class ArrangementError(AssertionError):
    def __init__(self, claim: str, detail: str = ""):
        super().__init__(f"incidence claim failed: {claim} {detail}".strip())
        self.claim = claim


@dataclass(frozen=True)
class RPoint:
    label: str
    point: ProjPoint
    vertex: int
    generator: str
    edge: tuple[int, int]


@dataclass(frozen=True)
class Arrangement:
    vertices: tuple[ProjPoint, ...]
    v4_lines: dict
    z4_lines: dict
    z4_vertex: dict
    r_points: tuple[RPoint, ...]
    checks: dict = field(default_factory=dict)

    def r_point(self, label: str) -> RPoint:
        for r in self.r_points:
            if r.label == label:
                return r
        raise KeyError(label)

    def z4_lines_through(self, i: int) -> list[str]:
        return [k for k, v in self.z4_vertex.items() if v == i]

    def lines_through(self, p: ProjPoint) -> tuple[list[str], list[tuple[int, int]]]:
        z4 = [k for k, ln in self.z4_lines.items() if ln.contains(p)]
        v4 = [k for k, ln in self.v4_lines.items() if ln.contains(p)]
        return z4, v4

    def as_dict(self) -> dict:
        def pt(p):
            return [str(c) for c in p.coords]

        def ln(line):
            return {"span": [[str(c) for c in r] for r in line.rows],
                    "plucker": [str(c) for c in line.plucker]}

        return {
            "vertices": {f"Q{i}": pt(p) for i, p in enumerate(self.vertices)},
            "v4_lines": {f"l{i}{j}": ln(line) for (i, j), line in self.v4_lines.items()},
            "z4_lines": {k: {**ln(line), "vertex": f"Q{self.z4_vertex[k]}"}
                         for k, line in self.z4_lines.items()},
            "r_points": {r.label: {"coords": pt(r.point), "generator": r.generator,
                                   "edge": f"l{r.edge[0]}{r.edge[1]}"} for r in self.r_points},
            "checks": dict(self.checks),
        }


def _require(checks: dict, claim: str, ok: bool, strict: bool, detail: str = ""):
    checks[claim] = bool(ok)
    if strict and not ok:
        raise ArrangementError(claim, detail)


def _label_r_points(found, published):
    """found: vertex -> [(generator, point)], in generator order."""
    out = []
    for i in sorted(found):
        entries = found[i]
        names = [f"R{i}{j}" for j in (1, 2)]
        taken: dict[str, tuple[str, ProjPoint]] = {}
        for gen, p in entries:
            match = next((n for n in names if published.get(n) is not None
                          and ProjPoint(published[n]) == p and n not in taken), None)
            if match is not None:
                taken[match] = (gen, p)
        if len(taken) != len(entries):
            taken = dict(zip(names, entries))
        for name in names:
            if name in taken:
                out.append((name, i, *taken[name]))
    return out


@lru_cache(maxsize=2)
def build_arrangement(strict: bool = True) -> Arrangement:
    # lineig imports the primitives of this package, so import it late
    from ..lineig import galois_line_of, vertex_of
    from ..reference import R_POINTS

    checks: dict[str, bool] = {}
    Q = tuple(vertex_of(matrix_of(NAMED[lab])) for lab in RHO_LABELS)
    _require(checks, "tetrahedron.distinct", len(set(Q)) == 4, strict)
    _require(checks, "tetrahedron.non_coplanar", not coplanar(*Q), strict)

    v4 = {(i, j): line_through(Q[i], Q[j]) for i, j in combinations(range(4), 2)}
    meets_ok = True
    for (a, la), (b, lb) in combinations(v4.items(), 2):
        shared = set(a) & set(b)
        hit = lines_meet(la, lb)
        if shared:
            meets_ok &= hit == Q[shared.pop()]
        else:
            meets_ok &= hit is None
    _require(checks, "v4.meet_iff_shared_vertex", meets_ok, strict)

    z4: dict[str, ProjLine] = {}
    z4_vertex: dict[str, int] = {}
    one_vertex = True
    invariant = True
    for lab in SIGMA_LABELS:
        M = matrix_of(NAMED[lab])
        line = galois_line_of(M)
        z4[lab] = line
        on = [i for i in range(4) if line.contains(Q[i])]
        one_vertex &= len(on) == 1
        z4_vertex[lab] = on[0] if on else -1
        invariant &= all(line.contains(ProjPoint(M @ r)) for r in line.rows)
    _require(checks, "z4.one_vertex_each", one_vertex, strict)
    _require(checks, "z4.invariant_under_generator", invariant, strict)
    per_vertex = [sum(1 for v in z4_vertex.values() if v == i) for i in range(4)]
    _require(checks, "z4.two_per_vertex", per_vertex == [2, 2, 2, 2], strict, str(per_vertex))

    disjoint = True
    for a, b in combinations(SIGMA_LABELS, 2):
        hit = lines_meet(z4[a], z4[b])
        if z4_vertex[a] == z4_vertex[b]:
            disjoint &= hit == Q[z4_vertex[a]]
        else:
            disjoint &= hit is None
    _require(checks, "z4.disjoint_unless_shared_vertex", disjoint, strict)

    found: dict[int, list] = {}
    two_points = True
    edges: dict[str, tuple[int, int]] = {}
    for lab in SIGMA_LABELS:
        i = z4_vertex[lab]
        hits = {}
        for key, ln in v4.items():
            p = lines_meet(z4[lab], ln)
            if p is not None:
                hits.setdefault(p, []).append(key)
        others = [p for p in hits if p != Q[i]]
        two_points &= Q[i] in hits and len(others) == 1 and len(hits[others[0]]) == 1
        if others:
            found.setdefault(i, []).append((lab, others[0]))
            edges[lab] = hits[others[0]][0]
    _require(checks, "z4.meets_v4_union_in_two_points", two_points, strict)

    labelled = _label_r_points(found, R_POINTS)
    r_points = tuple(RPoint(name, p, i, gen, edges[gen]) for name, i, gen, p in labelled)
    _require(checks, "r.edge_rule",
             all(r.edge == R_EDGE_RULE[r.vertex] for r in r_points), strict)
    _require(checks, "r.coordinates_match",
             len(r_points) == 8 and all(name in R_POINTS and ProjPoint(R_POINTS[r.label]) == r.point
                                        for r in r_points for name in [r.label]), strict)
    return Arrangement(Q, v4, z4, z4_vertex, r_points, checks)
