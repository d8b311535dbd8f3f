from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from galoislines.ellcurve import MATRIX_LABELS
from galoislines.galgroup import (BoundExceededError, FiniteGroup, PGLElement, SubsetError,
                                  closure, element_order, intersect, is_abelian, is_normal,
                                  named_element, order_histogram, semidirect_certificate,
                                  translation_consistency)
from galoislines.linalg import Matrix

n = named_element


@pytest.fixture(scope="module")
def groups():
    G0 = closure([n("rho0"), n("rho1"), n("rho2")])
    G = closure([n("sigma0"), n("sigma2"), n("sigma6")])
    T = closure([n("rho1") * n("rho0"), n("sigma2") * n("sigma0") ** 3])
    H = closure([n("sigma0")])
    return G0, G, T, H


def test_pgl_canonical_scale():
    a = PGLElement(Matrix.diag([2, 2, 2, -2]))
    assert a == n("rho0")
    assert PGLElement(Matrix.diag([5, 5, 5, 5])).is_identity()


def test_orders(groups):
    G0, G, T, H = groups
    assert (G0.order, G.order, T.order, H.order) == (8, 32, 8, 4)
    assert closure([PGLElement.identity()]).order == 1
    assert closure([]).order == 1


def test_histograms(groups):
    G0, G, T, _ = groups
    assert order_histogram(G0) == {1: 1, 2: 7} and is_abelian(G0)
    assert order_histogram(T) == {1: 1, 2: 3, 4: 4} and is_abelian(T)
    assert order_histogram(G) == {1: 1, 2: 11, 4: 20} and not is_abelian(G)
    assert all(8 % k == 0 for k in order_histogram(G))


def test_alpha_beta_match_named_translations(groups):
    _, _, T, _ = groups
    assert T.same_elements(closure([n("alpha"), n("beta")]))


def test_normality(groups):
    G0, G, T, H = groups
    assert is_normal(G0, G)
    assert G.order == 4 * G0.order
    assert is_normal(T, G)
    assert not is_normal(H, G)


def test_semidirect(groups):
    G0, G, T, H = groups
    assert semidirect_certificate(T, H, G)
    cert = semidirect_certificate(G0, H, G)
    assert not cert and not cert.trivial_intersection
    assert n("rho0") in intersect(G0, H)
    trivial = closure([PGLElement.identity()])
    assert semidirect_certificate(trivial, G, G)


def test_subset_violation(groups):
    G0, _, T, H = groups
    with pytest.raises(SubsetError):
        is_normal(closure([n("sigma0")]), G0)
    with pytest.raises(SubsetError):
        semidirect_certificate(T, H, G0)


def test_rho3_is_dependent(groups):
    G0 = groups[0]
    assert closure([n(k) for k in ("rho0", "rho1", "rho2", "rho3")]).same_elements(G0)


def test_translation_consistency():
    assert translation_consistency() == {"alpha": True, "beta": True, "inverses": True}


def test_bound():
    with pytest.raises(BoundExceededError):
        closure([n("sigma0"), n("sigma2"), n("sigma6")], bound=16)
    with pytest.raises(BoundExceededError):
        element_order(PGLElement(Matrix.diag([1, 1, 1, 2])), bound=50)
    with pytest.raises(ValueError):
        closure([n("rho0")], bound=0)


@settings(max_examples=10, deadline=None)
@given(st.lists(st.sampled_from(MATRIX_LABELS), min_size=1, max_size=3))
def test_closure_idempotent(labels):
    G = closure([n(k) for k in labels])
    again = closure(list(G.elements))
    assert again.same_elements(G)
    assert isinstance(again, FiniteGroup)
    for g in G:
        assert g.inverse() in G
