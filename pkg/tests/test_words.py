import pytest
from hypothesis import given

from monoidlab.words import (EMPTY, Letter, ParseError, W, Word, all_words, content, decompose,
                             delete, format_word, ini, is_factor, occ, parse_word, restrict,
                             reverse, substitute)

from conftest import words

x, y, s, t = (Letter(c) for c in "xyst")


def test_content_examples():
    assert content(W("xysxty")) == {x, y, s, t}
    assert content(EMPTY) == frozenset()
    assert content(W("xxy")) == {x, y}


def test_occ_examples():
    assert occ(W("xyx"), x) == 2
    assert occ(W("xyx"), t) == 0
    assert occ(W("xt1xt2x"), x) == 3


def test_decompose_examples():
    d = decompose(W("xysxty"))
    assert d.blocks == (W("xy"), W("x"), W("y")) and d.separators == (s, t)
    assert decompose(W("xx")).blocks == (W("xx"),)
    d = decompose(W("st"))
    assert d.blocks == (EMPTY,) * 3 and d.separators == (s, t)


def test_restrict_delete_ini():
    assert restrict(W("xysxty"), {x, y}) == W("xyxy")
    assert delete(W("xyx"), {y}) == W("xx")
    assert ini(W("xyxzx")) == W("xyz")
    assert ini(W("xxyyx")) == W("xy")


def test_reverse_substitute_factor():
    assert reverse(W("xytxy")) == W("yxtyx")
    assert substitute(W("xyx"), {x: W("xx"), y: W("y")}) == W("xxyxx")
    assert not is_factor(W("yx"), W("xy"))
    assert is_factor(W("x"), W("xy"))


def test_indexed_and_spaced_forms_agree():
    assert parse_word("z1 t1 x") == parse_word("z1t1x") == Word([Letter("z", 1), Letter("t", 1), x])
    assert parse_word("@") == EMPTY


@pytest.mark.parametrize("bad, pos", [("x#y", 1), ("", 0), ("x @", 2)])
def test_parse_errors_carry_position(bad, pos):
    with pytest.raises(ParseError) as info:
        parse_word(bad)
    assert info.value.position == pos


@given(words("xyzt", max_size=8))
def test_format_round_trip(w):
    assert parse_word(format_word(w)) == w


@given(words("xyz"))
def test_decompose_reassembles(w):
    assert decompose(w).join() == w


@given(words("xyz"))
def test_reverse_is_involution(w):
    assert reverse(reverse(w)) == w


@given(words("xyz"))
def test_ini_is_linear_and_keeps_content(w):
    i = ini(w)
    assert len(set(i)) == len(i) and set(i) == set(w)


def test_all_words_counts():
    assert sum(1 for _ in all_words([x, y], 3)) == 1 + 2 + 4 + 8
