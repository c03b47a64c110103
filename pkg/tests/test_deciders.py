import pytest
from hypothesis import given, settings

from monoidlab.catalog import Identity, ParameterError, parse_identity
from monoidlab.deciders import audit, decide, parse_theory, theta_class
from monoidlab.monoid import (cyclic_group, cyclic_monoid, left_regular_band, satisfies,
                              semilattice2)
from monoidlab.words import W, all_words, ini, Letter

from conftest import words


def test_decide_examples():
    assert decide(parse_theory("SL"), parse_identity("xy = yxx"))
    assert decide(parse_theory("C:3"), parse_identity("xyx = xxy"))
    assert not decide(parse_theory("C:3"), parse_identity("xyx = xxxy"))
    assert decide(parse_theory("A:2"), parse_identity("x = xxx"))


def test_theta_class_examples():
    assert set(theta_class(parse_theory("SL"), W("x"), 3)) == {W("x"), W("xx"), W("xxx")}
    assert set(theta_class(parse_theory("A:2"), W("x"), 3)) == {W("x"), W("xxx")}


def test_lrb_class_matches_ini_oracle():
    expect = {w for w in all_words([Letter("x"), Letter("y")], 3) if ini(w) == W("xy")}
    assert set(theta_class(parse_theory("LRB"), W("xy"), 3)) == expect
    assert W("xxy") in expect


@pytest.mark.parametrize("name, oracle", [("SL", semilattice2()), ("C:2", cyclic_monoid(2)),
                                          ("A:3", cyclic_group(3)), ("LRB", left_regular_band())])
def test_audits_clean(name, oracle):
    rep = audit(parse_theory(name), oracle, 5)
    assert rep.ok and rep.checked > 0


@settings(max_examples=150)
@given(words("xy", max_size=6), words("xy", max_size=6))
def test_com_matches_cyclic_monoid(u, v):
    # COM(k, l): x^k = x^l in one generator, commutative
    from monoidlab.monoid import from_table
    k, l = 2, 5
    n = l
    table = [[_pow(a + b, k, l) for b in range(n)] for a in range(n)]
    m = from_table(table, 0, None, None, "cyclic(2,5)")
    ident = Identity(u, v)
    assert decide(parse_theory("COM:2,5"), ident) == satisfies(m, ident).holds


def _pow(e, k, l):
    return e if e < l else k + (e - k) % (l - k)


@pytest.mark.parametrize("bad", ["A:1", "C:0", "COM:3,2", "XYZ"])
def test_bad_theories(bad):
    with pytest.raises(ParameterError):
        parse_theory(bad)
