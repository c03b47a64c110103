import pytest

from monoidlab.catalog import (Identity, ParameterError, catalog_lookup, named_identity,
                               parse_identity, resolve_variety, variety_basis, word_family)
from monoidlab.words import W, reverse


def test_named_identities():
    assert str(named_identity("sigma2")) == "xsytxy = xsytyx"
    assert str(named_identity("delta", 2)) == "xt1xt2x = xxt1t2"
    assert str(named_identity("gamma", 1, 1)) == "xt1xyt2y = xt1yxt2y"


def test_word_families():
    assert word_family("c", 0, 0) == W("xytxy")
    assert word_family("w", 1) == W("z1 t1 x z1 z2 x t2 z2")
    assert word_family("d", 0, 0) == reverse(word_family("c", 0, 0))


def test_bases():
    d2 = [str(i) for i in variety_basis("D:2")]
    assert d2 == ["xx = xxx", "xxy = yxx", "xysxty = yxsxty", "xsytxy = xsytyx",
                  "xsxyty = xsyxty", "xt1xt2x = xxt1t2"]
    n = [str(i) for i in variety_basis("N")]
    assert "xyxzx = xxyz" in n and len(n) == 5


def test_capped_basis_respects_cap():
    r = variety_basis("R", 20)
    assert r.capped and all(max(len(i.lhs), len(i.rhs)) <= 20 for i in r)


def test_catalog_addresses():
    assert catalog_lookup("sigma1") == parse_identity("xysxty = yxsxty")
    assert catalog_lookup("delta:3") == named_identity("delta", 3)
    assert isinstance(catalog_lookup("basis:Q:1,2:cap=18"), type(variety_basis("D:1")))
    assert catalog_lookup("c:0,0") == W("xytxy")


@pytest.mark.parametrize("name, kind", [("SL", "exact"), ("A:3", "exact"), ("C:2", "exact"),
                                        ("A2vSL", "exact"), ("D:2", "monoid"), ("L", "monoid"),
                                        ("Z3", "monoid"), ("E", "basis"), ("Dual(E)", "basis"),
                                        ("M^d", "monoid")])
def test_resolve_variety(name, kind):
    assert resolve_variety(name).kind == kind


def test_bad_parameters():
    with pytest.raises(ParameterError):
        named_identity("delta", 0)
    with pytest.raises(ParameterError):
        resolve_variety("nonsense")


def test_identity_dual():
    i = named_identity("sigma1")
    assert i.dual().dual() == i
    assert Identity(W("xy"), W("yx")).swapped() == Identity(W("yx"), W("xy"))
