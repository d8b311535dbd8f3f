from __future__ import annotations

import json

import pytest

from galoislines.report import (ACCEPTANCE_CLAIMS, SCHEMA, STATUSES, ClaimRecord, Settings,
                                VerificationReport, run_verification)


@pytest.fixture(scope="module")
def report():
    return run_verification(Settings(seed=3, samples=20))


def test_every_acceptance_claim_once(report):
    ids = [c.id for c in report.claims]
    assert len(ids) == len(set(ids))
    for cid in ACCEPTANCE_CLAIMS:
        assert ids.count(cid) == 1, cid
    assert set(ACCEPTANCE_CLAIMS.values()) == set(range(1, 9))


def test_no_failures_and_errata_visible(report):
    assert report.exit_status == 0 and report.count("fail") == 0
    assert report.count("typo-detected") >= 3
    assert report.count("out-of-scope") >= 1
    assert all(report.claim(c).status == "pass" for c in ACCEPTANCE_CLAIMS)


def test_document_shape(report):
    doc = json.loads(report.to_json())
    assert doc["schema"] == SCHEMA
    assert set(doc["summary"]) == set(STATUSES)
    assert sum(doc["summary"].values()) == len(doc["claims"])
    for key in ("matrices", "eigen", "pencil", "arrangement", "quartics", "groups", "samples"):
        assert key in doc, key
    assert doc["samples"]["seed"] == 3
    assert doc["environment"]["tolerance"] == "1.000e-09"


def test_text_summary(report):
    text = report.to_text()
    assert text.startswith("galoislines verification")
    assert text.rstrip().splitlines()[-1].startswith("summary: pass ")


def test_skip_numeric():
    rep = run_verification(Settings(skip_numeric=True))
    assert all(rep.claim(k).status == "skipped" for k, n in ACCEPTANCE_CLAIMS.items() if n == 8)
    assert "samples" not in rep.to_document()


def test_duplicate_and_bad_status():
    rep = VerificationReport(Settings())
    rep.add("x", "anchor", True)
    with pytest.raises(ValueError):
        rep.add("x", "anchor", False)
    with pytest.raises(ValueError):
        ClaimRecord("y", "anchor", "maybe")
    assert rep.claim("x").status == "pass"
