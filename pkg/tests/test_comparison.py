from __future__ import annotations

from galoislines import reference
from galoislines.comparison import (ERRATA, bind_displays, conjugate_partner,
                                    detected_discrepancies, eigen_table_report, projective_match)
from galoislines.ellcurve import NAMED, RHO_LABELS, SIGMA_LABELS, matrix_of
from galoislines.exactfield import I
from galoislines.linalg import Matrix


def test_projective_match_scalar_and_mismatch():
    A = matrix_of(NAMED["sigma2"])
    m = projective_match(A.scale(2 * I), A)
    assert m.exact and m.scalar == 2 * I
    rows = [list(r) for r in A.scale(3).rows]
    rows[0][3] = rows[0][3] + 1
    m = projective_match(Matrix(rows), A)
    assert m.scalar == 3 and m.mismatches == ((0, 3),)


def test_projective_match_all_zero():
    z = Matrix([[0] * 4] * 4)
    assert projective_match(z, matrix_of(NAMED["rho0"])).scalar is None


def test_conjugate_partner():
    assert [conjugate_partner(k) for k in ("sigma2", "sigma3", "sigma4", "sigma5")] == \
        ["sigma5", "sigma4", "sigma3", "sigma2"]
    for k in RHO_LABELS + ("sigma0", "sigma1", "sigma6", "sigma7"):
        assert conjugate_partner(conjugate_partner(k)) == k
    assert all(conjugate_partner(k) == k for k in RHO_LABELS)


def test_every_display_binds_within_family():
    binds = bind_displays()
    assert set(reference.MATRICES) <= set(binds)
    for b in binds.values():
        family = RHO_LABELS if b.printed_label.startswith("rho") else SIGMA_LABELS
        assert b.bound_to in family


def test_registry_matches_detection():
    detected = {d.id for d in detected_discrepancies()}
    assert detected == set(ERRATA)


def test_registry_payloads():
    found = {d.id: d for d in detected_discrepancies()}
    for key, payload in ERRATA.items():
        d = found[key]
        if key.startswith("convention.") or key.endswith(".label"):
            assert d.entries == payload, key


def test_eigen_table_report_covers_all_tables():
    rows = eigen_table_report()
    assert set(rows) == set(reference.EIGEN_TABLES)
