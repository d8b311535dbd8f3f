"""Acceptance criteria 1-9, each printing one pass/fail line.

Tolerances are pinned here, not read from defaults:
  exact criteria (1-7): zero tolerance, equality in Q(zeta_8)
  matrix / Weierstrass residuals: 1e-8
  exact-vs-numeric torsion: 1e-7
"""

from __future__ import annotations

import subprocess
import sys
from fractions import Fraction

from galoislines import comparison, galgroup
from galoislines.analytic import (LatticeSpec, cm_residual, ode_residual, periodicity_residual,
                                  random_points, torsion_agreement, verify_matrix_numeric)
from galoislines.ellcurve import (MATRIX_LABELS, NAMED, RHO_LABELS, SIGMA_LABELS,
                                  QuarterLatticePoint, matrix_of, torsion_point)
from galoislines.exactfield import I, S
from galoislines.linalg import Matrix
from galoislines.lineig import eigen_decompose, vertex_of
from galoislines.planeproj import (PlaneQuartic, change_coords, curve_image, image_of_line,
                                   project_curve, two_galois_point_catalog, canonical_forms)
from galoislines.projgeom import (ProjPoint, build_arrangement, coplanar, quadrics_through_curve,
                                  singular_members)

EXACT = 0
NUMERIC_TOL = 1e-8
TORSION_TOL = 1e-7
SAMPLES = 100


def P(*xs):
    return ProjPoint(xs)


def test_criterion_1_matrices(record):
    bindings = comparison.bind_displays()
    # every computed matrix is reached by some display up to a nonzero scalar
    bound = {b.bound_to for b in bindings.values() if b.matrix.scalar is not None}
    detected = {d.id: d.entries for d in comparison.detected_discrepancies()}
    documented = {"matrix.rho0#2.label", "pullback.sigma5.entries"}
    ok = (bound == set(MATRIX_LABELS) and detected == comparison.ERRATA
          and documented <= set(detected))
    record(1, ok, f"12/12 matrices bound projectively; {len(detected)} discrepancies reported, "
                  f"registry {len(comparison.ERRATA)}; tolerance {EXACT}")
    assert bound == set(MATRIX_LABELS)
    assert documented <= set(detected)
    assert detected == comparison.ERRATA


def test_criterion_2_eigen_tables(record):
    patterns = {k: eigen_decompose(matrix_of(NAMED[k])).pattern for k in MATRIX_LABELS}
    shapes_ok = (all(patterns[k] == (3, 1) for k in RHO_LABELS)
                 and all(patterns[k] == (2, 1, 1) for k in SIGMA_LABELS))
    flagged = {d.id: d for d in comparison.eigen_discrepancies()}
    flagged_vectors = {tuple(v) for d in flagged.values() if d.kind == "eigenvector" for v in d.entries}
    rows = [r for rs in comparison.eigen_table_report().values() for r in rs]
    unmatched = [r for r in rows if not r.is_eigenvector]
    unflagged = [r for r in unmatched if tuple(str(x) for x in r.vector) not in flagged_vectors]
    expected = {k for k in comparison.ERRATA if k.startswith("eigen.")}
    ok = shapes_ok and set(flagged) == expected and not unflagged
    record(2, ok, f"multiplicities rho (3,1), sigma (2,1,1): {shapes_ok}; "
                  f"{len(rows) - len(unmatched)}/{len(rows)} listed vectors match, "
                  f"{len(flagged)} flagged; tolerance {EXACT}")
    assert shapes_ok
    assert set(flagged) == expected
    assert not unflagged


def test_criterion_3_vertices(record):
    expected = {P(0, 0, 0, 1), P(4, -1, 2, 0), P(4, -1, -2, 0), P(4, 1, 0, 0)}
    eig = {vertex_of(matrix_of(NAMED[k])) for k in RHO_LABELS}
    cones = {v for _, v in singular_members(quadrics_through_curve(), 64)}
    ok = eig == expected and cones == expected
    record(3, ok, f"eigen vertices == published: {eig == expected}; "
                  f"pencil cone vertices == published: {cones == expected}")
    assert eig == expected
    assert cones == expected


def test_criterion_4_arrangement(record):
    arr = build_arrangement()
    published = {
        "R01": P(0, 0, 1, 0), "R02": P(4, -1, 0, 0),
        "R11": P(4, 1, 0, 2 * S), "R12": P(4, 1, 0, -2 * S),
        "R21": P(4, 1, 0, -2 * I * S), "R22": P(4, 1, 0, 2 * I * S),
        "R31": P(4, -1, 2 * I, 0), "R32": P(4, -1, -2 * I, 0),
    }
    computed = {r.label: r.point for r in arr.r_points}
    structure = (not coplanar(*arr.vertices) and len(arr.v4_lines) == 6
                 and len(arr.z4_lines) == 8
                 and sorted(list(arr.z4_vertex.values()).count(i) for i in range(4)) == [2] * 4)
    ok = all(arr.checks.values()) and structure and computed == published
    record(4, ok, f"{sum(arr.checks.values())}/{len(arr.checks)} incidence checks; "
                  f"R points match: {computed == published}")
    assert structure
    assert all(arr.checks.values()), {k: v for k, v in arr.checks.items() if not v}
    assert computed == published


def test_criterion_5_projection(record):
    arr = build_arrangement()
    center = P(0, 0, 1, 0)
    F = project_curve(center)
    # W^4 - X Y (X - 4Y)^2 in the exponent order (X, Y, W)
    expected = PlaneQuartic({(0, 0, 4): 1, (3, 1, 0): -1, (2, 2, 0): 8, (1, 3, 0): -16})
    z4 = image_of_line(center, arr.z4_lines["sigma0"])
    v4 = image_of_line(center, arr.v4_lines[(1, 2)])
    points_ok = z4 == ProjPoint((0, 0, 1)) and v4 == ProjPoint((-4, 1, 0))
    # (X, Y, W) = (X' - i Y', -(X' + i Y')/4, W')
    T = Matrix([[1, -I, 0], [Fraction(-1, 4), -I / 4, 0], [0, 0, 1]])
    G = change_coords(F, T)
    takahashi = PlaneQuartic({(4, 0, 0): 1, (2, 2, 0): 1, (0, 0, 4): 1})
    ok = F == expected and points_ok and G == takahashi
    record(5, ok, f"quartic {F}; Galois points {z4}, {v4}; substituted {G}")
    assert F == expected
    assert points_ok
    assert G == takahashi


def test_criterion_6_catalog(record):
    entries = two_galois_point_catalog()
    tors = [torsion_point(QuarterLatticePoint(m, n)) for m in range(4) for n in range(4)]
    vanish = True
    for e in entries:
        forms, _ = canonical_forms(e.center)
        vanish &= all(e.quartic(curve_image(forms, t)).is_zero() for t in tors)
    ok = (sorted(e.label for e in entries) == sorted(f"R{i}{j}" for i in range(4) for j in (1, 2))
          and all(e.z4_point != e.v4_point for e in entries) and vanish)
    record(6, ok, f"{len(entries)} quartics, each with one Z4-point and one V4-point; "
                  f"vanish on 16 torsion images: {vanish}")
    assert len(entries) == 8
    assert ok


def test_criterion_7_groups(record):
    n = galgroup.named_element
    G0 = galgroup.closure([n("rho0"), n("rho1"), n("rho2")])
    G = galgroup.closure([n("sigma0"), n("sigma2"), n("sigma6")])
    T = galgroup.closure([n("alpha"), n("beta")])
    H = galgroup.closure([n("sigma0")])
    cert = galgroup.semidirect_certificate(T, H, G)
    trans = galgroup.translation_consistency()
    facts = {
        "G0": (G0.order, galgroup.order_histogram(G0)) == (8, {1: 1, 2: 7}),
        "G": G.order == 32,
        "T": (T.order, galgroup.order_histogram(T), galgroup.is_abelian(T)) == (8, {1: 1, 2: 3, 4: 4}, True),
        "semidirect": bool(cert),
        "G0 normal, index 4": galgroup.is_normal(G0, G) and G.order == 4 * G0.order,
        "translations": all(trans.values()),
    }
    ok = all(facts.values())
    record(7, ok, "; ".join(f"{k}: {v}" for k, v in facts.items()))
    assert ok, facts


def test_criterion_8_numeric(record):
    spec = LatticeSpec(radius=60, accuracy=1e-9)
    res = {k: verify_matrix_numeric(NAMED[k], matrix_of(NAMED[k]), SAMPLES, seed, spec)
           for seed, k in enumerate(MATRIX_LABELS)}
    z = random_points(SAMPLES, 0)
    w = {"ode": ode_residual(z, spec), "periodicity": periodicity_residual(z, spec),
         "cm": cm_residual(z, spec)}
    pts = {QuarterLatticePoint(m, k).complex(): torsion_point(QuarterLatticePoint(m, k))
           for m in range(4) for k in range(4) if (m, k) != (0, 0)}
    tors = torsion_agreement(pts, spec)
    worst = max(res.values())
    ok = worst < NUMERIC_TOL and max(w.values()) < NUMERIC_TOL and tors < TORSION_TOL
    record(8, ok, f"matrix residual {worst:.1e} (< {NUMERIC_TOL:g}); "
                  + ", ".join(f"{k} {v:.1e}" for k, v in w.items())
                  + f" (< {NUMERIC_TOL:g}); torsion {tors:.1e} (< {TORSION_TOL:g})")
    assert worst < NUMERIC_TOL, res
    assert max(w.values()) < NUMERIC_TOL, w
    assert tors < TORSION_TOL


def test_criterion_9_determinism(record, tmp_path):
    cmd = [sys.executable, "-m", "galoislines", "verify", "--seed", "7", "--format", "json"]
    runs = [subprocess.run(cmd, capture_output=True, check=False) for _ in range(2)]
    same = runs[0].stdout == runs[1].stdout
    ok = same and all(r.returncode == 0 for r in runs) and len(runs[0].stdout) > 0
    record(9, ok, f"two runs of verify --seed 7: {len(runs[0].stdout)} bytes, "
                  f"byte-identical: {same}, exit codes {[r.returncode for r in runs]}")
    assert all(r.returncode == 0 for r in runs), runs[0].stderr.decode()
    assert same
