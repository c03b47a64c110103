from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monoidlab.lattice import (FinitePoset, NotALattice, check_distributive, d4_join_n, ap_join_c2,
                               forbidden_sublattice, m3, n5, poset_from_dict)


def union_closed_lattice(sets):
    """Subsets closed under union plus the empty and full sets form a lattice."""
    family = {frozenset(), frozenset(range(4))} | {frozenset(s) for s in sets}
    changed = True
    while changed:
        changed = False
        for a, b in combinations(list(family), 2):
            if a | b not in family:
                family.add(a | b)
                changed = True
    nodes = sorted(family, key=lambda s: (len(s), sorted(s)))
    name = {s: "".join(map(str, sorted(s))) or "e" for s in nodes}
    covers = [(name[a], name[b]) for a in nodes for b in nodes
              if a < b and not any(a < c < b for c in nodes)]
    return FinitePoset(tuple(name[s] for s in nodes), tuple(covers)), family, name


def triple_oracle(family, name):
    """Distributivity computed with set union as join and the largest member
    below both as meet."""
    def meet(a, b):
        below = [c for c in family if c <= a and c <= b]
        return max(below, key=len)
    for a in family:
        for b in family:
            for c in family:
                if meet(a, b | c) != meet(a, b) | meet(a, c):
                    return False
    return True


subsets = st.lists(st.frozensets(st.integers(0, 3), max_size=4), max_size=5)


@settings(max_examples=150, deadline=None)
@given(subsets)
def test_distributivity_characterisations_agree(sets):
    p, family, name = union_closed_lattice(sets)
    if len(p.nodes) > 8:
        return
    ok, _ = check_distributive(p)
    assert ok == (forbidden_sublattice(p) is None)
    assert ok == triple_oracle(family, name)


def test_figures():
    assert check_distributive(d4_join_n()) == (True, None)
    assert check_distributive(ap_join_c2()) == (True, None)
    assert len(d4_join_n().nodes) == 13 and len(ap_join_c2().nodes) == 6
    assert forbidden_sublattice(d4_join_n()) is None


def test_negative_controls():
    ok, triple = check_distributive(m3())
    assert not ok and triple is not None
    assert forbidden_sublattice(m3())[0] == "M3"
    assert not check_distributive(n5())[0]
    assert forbidden_sublattice(n5())[0] == "N5"


def test_not_a_lattice():
    # two minimal elements and no bottom
    p = FinitePoset(("a", "b", "1"), (("a", "1"), ("b", "1")))
    assert not p.is_lattice()
    with pytest.raises(NotALattice):
        check_distributive(p)


def test_cycles_and_bad_nodes_rejected():
    with pytest.raises(ValueError):
        FinitePoset(("a", "b"), (("a", "b"), ("b", "a")))
    with pytest.raises(ValueError):
        FinitePoset(("a",), (("a", "z"),))


def test_from_dict():
    p = poset_from_dict({"nodes": ["0", "1"], "covers": [["0", "1"]], "name": "two"})
    assert p.leq("0", "1") and p.join("0", "1") == "1" and p.meet("0", "1") == "0"
