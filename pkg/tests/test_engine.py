import random

from hypothesis import given, settings
from hypothesis import strategies as st

from monoidlab.catalog import Identity, named_identity, parse_identity, variety_basis, w_prime, w_word
from monoidlab.checks import block_oracle, random_identity, random_linear_balanced
from monoidlab.engine import (NotInvertible, Proved, RefutedByModel, Unknown, derive,
                              invertibility_bfs, invertibility_degree, is_efficient,
                              is_linear_balanced)
from monoidlab.monoid import build_sw, satisfies
from conftest import words


def test_power_chain():
    r = derive([parse_identity("xx = xxx")], parse_identity("xx = xxxxx"), 5, 10**4)
    assert isinstance(r, Proved)
    assert [str(s.after) for s in r.chain] == ["xxx", "xxxx", "xxxxx"]
    assert r.replay(parse_identity("xx = xxxxx"))


def test_w1_from_sigma3_and_xxy():
    goal = Identity(w_word(1), w_prime(1))
    r = derive([named_identity("sigma3"), named_identity("xxy=yxx")], goal, 12, 10**6)
    assert isinstance(r, Proved) and r.replay(goal)


def test_refuted_by_isoterm_model():
    r = derive(variety_basis("D:2"), parse_identity("xyx = xxy"), 8, 10**5,
               models=[build_sw(["xtx"])])
    assert isinstance(r, RefutedByModel)
    m = r.monoid
    assert all(satisfies(m, i).holds for i in variety_basis("D:2"))


def test_unknown_is_bounded():
    r = derive([parse_identity("xy = yx")], parse_identity("x = xx"), 3, 100)
    assert isinstance(r, Unknown)


def test_monotone_in_bounds():
    system = [named_identity("sigma3"), named_identity("xxy=yxx")]
    goal = Identity(w_word(1), w_prime(1))
    small = derive(system, goal, 14, 10**6)
    big = derive(system, goal, 15, 10**6)
    assert isinstance(small, Proved) and isinstance(big, Proved)


def test_linear_balanced_examples():
    assert is_linear_balanced(named_identity("sigma1"))
    assert not is_linear_balanced(named_identity("delta", 2))
    assert is_linear_balanced(parse_identity("xsy = xsy"))


def test_invertibility_examples():
    assert invertibility_degree(parse_identity("xytxy = xytxy")) == 0
    assert invertibility_degree(parse_identity("xytxy = yxtxy")) == 1
    assert invertibility_degree(named_identity("sigma1")) == 1
    assert isinstance(invertibility_degree(parse_identity("xy = yxx")), NotInvertible)


def test_efficient_examples():
    # the block after t1 is empty on both sides
    assert not is_efficient(parse_identity("xxt1 = xxxt1"))
    # here the left side keeps an x after t1, so the blocks are (x, x) and (xx, @)
    assert is_efficient(parse_identity("xt1x = xxt1"))
    assert is_efficient(named_identity("sigma1"))
    assert is_efficient(parse_identity("xxy = yxx"))
    # x and y are simple, so the separator sequences differ
    assert not is_efficient(parse_identity("xy = yx"))


@settings(max_examples=200)
@given(words("xyzst", max_size=6), words("xyzst", max_size=6))
def test_linear_balanced_matches_block_oracle(u, v):
    ident = Identity(u, v)
    assert is_linear_balanced(ident) == block_oracle(ident)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**6))
def test_invertibility_matches_swap_bfs(seed):
    ident = random_linear_balanced(random.Random(seed))
    assert invertibility_degree(ident) == invertibility_bfs(ident, cap=20)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_linear_balanced_hold_in_small_dk(seed):
    ident = random_linear_balanced(random.Random(seed))
    for w in ["x", "xt1x", "xt1xt2x", "xt1xt2xt3x"]:
        assert satisfies(build_sw([w]), ident).holds


def test_proved_never_contradicts_a_model():
    rng = random.Random(3)
    system = [parse_identity("xx = xxx"), parse_identity("xxy = yxx")]
    model = build_sw(["xy"])
    assert all(satisfies(model, i).holds for i in system)
    for _ in range(40):
        goal = random_identity(rng, 8, "xy")
        r = derive(system, goal, 8, 2000)
        if isinstance(r, Proved):
            assert r.replay(goal)
            assert satisfies(model, goal).holds
