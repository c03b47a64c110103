"""Finite posets given by cover relations, lattice operations and the
distributivity test."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterable, Sequence


class NotALattice(ValueError):
    pass


@dataclass(frozen=True)
class FinitePoset:
    nodes: tuple[str, ...]
    covers: tuple[tuple[str, str], ...]  # (lower, upper)
    name: str = ""
    _leq: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        index = set(self.nodes)
        if len(index) != len(self.nodes):
            raise ValueError("duplicate node labels")
        for a, b in self.covers:
            if a not in index or b not in index:
                raise ValueError(f"cover {a} < {b} uses an unknown node")
        up = {a: set() for a in self.nodes}
        for a, b in self.covers:
            up[a].add(b)
        leq = set()
        for a in self.nodes:
            seen = {a}
            stack = [a]
            while stack:
                c = stack.pop()
                for d in up[c]:
                    if d == a:
                        raise ValueError(f"cover relation has a cycle through {a}")
                    if d not in seen:
                        seen.add(d)
                        stack.append(d)
            leq |= {(a, c) for c in seen}
        object.__setattr__(self, "_leq", frozenset(leq))

    def leq(self, a: str, b: str) -> bool:
        return (a, b) in self._leq

    def _bound(self, a: str, b: str, upper: bool) -> str | None:
        if upper:
            cands = [c for c in self.nodes if self.leq(a, c) and self.leq(b, c)]
            best = [c for c in cands if all(self.leq(c, d) for d in cands)]
        else:
            cands = [c for c in self.nodes if self.leq(c, a) and self.leq(c, b)]
            best = [c for c in cands if all(self.leq(d, c) for d in cands)]
        return best[0] if best else None

    def join(self, a: str, b: str) -> str:
        j = self._bound(a, b, True)
        if j is None:
            raise NotALattice(f"{a} and {b} have no join")
        return j

    def meet(self, a: str, b: str) -> str:
        m = self._bound(a, b, False)
        if m is None:
            raise NotALattice(f"{a} and {b} have no meet")
        return m

    def is_lattice(self) -> bool:
        try:
            for a, b in combinations(self.nodes, 2):
                self.join(a, b)
                self.meet(a, b)
        except NotALattice:
            return False
        return bool(self.nodes)


def check_distributive(p: FinitePoset) -> tuple[bool, tuple[str, str, str] | None]:
    """Whether ``a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c)`` for all triples; returns the
    first failing triple otherwise."""
    if not p.is_lattice():
        raise NotALattice(p.name or "poset is not a lattice")
    for a in p.nodes:
        for b in p.nodes:
            for c in p.nodes:
                if p.meet(a, p.join(b, c)) != p.join(p.meet(a, b), p.meet(a, c)):
                    return False, (a, b, c)
    return True, None


def _is_sublattice(p: FinitePoset, elems: Sequence[str]) -> bool:
    s = set(elems)
    return all(p.join(a, b) in s and p.meet(a, b) in s for a, b in combinations(elems, 2))


def _shape(p: FinitePoset, elems: Sequence[str]) -> str | None:
    """``"M3"`` or ``"N5"`` when the five elements form that sublattice."""
    for bottom, top, *mid in permutations(elems):
        if not all(p.leq(bottom, x) and p.leq(x, top) for x in elems):
            continue
        if bottom == top:
            continue
        a, b, c = mid
        rel = [(x, y) for x, y in permutations(mid, 2) if p.leq(x, y)]
        if not rel:
            return "M3"
        if len(rel) == 1:
            return "N5"
        return None
    return None


def forbidden_sublattice(p: FinitePoset) -> tuple[str, tuple[str, ...]] | None:
    """A five-element sublattice isomorphic to M3 or N5, if any."""
    if not p.is_lattice():
        raise NotALattice(p.name or "poset is not a lattice")
    for elems in combinations(p.nodes, 5):
        if _is_sublattice(p, elems):
            shape = _shape(p, elems)
            if shape:
                return shape, elems
    return None


def chain_covers(chain: Iterable[str]) -> list[tuple[str, str]]:
    chain = list(chain)
    return list(zip(chain, chain[1:]))


def d4_join_n() -> FinitePoset:
    """Subvarieties of D∞ ∨ N truncated at the D4 row."""
    covers = chain_covers(["T", "SL", "C2", "D1", "D2", "D3", "D4"])
    covers += chain_covers(["D2", "M", "N"])
    covers += chain_covers(["D3", "D3vM", "D3vN"])
    covers += chain_covers(["D4", "D4vM", "D4vN"])
    covers += chain_covers(["M", "D3vM", "D4vM"])
    covers += chain_covers(["N", "D3vN", "D4vN"])
    nodes = ("T", "SL", "C2", "D1", "D2", "D3", "D4", "M", "N",
             "D3vM", "D3vN", "D4vM", "D4vN")
    return FinitePoset(nodes, tuple(covers), "L(D4 v N)")


def ap_join_c2() -> FinitePoset:
    """Subvarieties of A_p ∨ C2."""
    covers = [("T", "A_p"), ("T", "SL"), ("A_p", "A_pvSL"), ("SL", "A_pvSL"),
              ("SL", "C2"), ("A_pvSL", "A_pvC2"), ("C2", "A_pvC2")]
    return FinitePoset(("T", "SL", "A_p", "C2", "A_pvSL", "A_pvC2"), tuple(covers), "L(A_p v C2)")


def m3() -> FinitePoset:
    return FinitePoset(("0", "a", "b", "c", "1"),
                       (("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")), "M3")


def n5() -> FinitePoset:
    return FinitePoset(("0", "a", "b", "c", "1"),
                       (("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")), "N5")


FIGURES = {"D4vN": d4_join_n, "ApvC2": ap_join_c2, "M3": m3, "N5": n5}


def poset_from_dict(data: dict) -> FinitePoset:
    return FinitePoset(tuple(data["nodes"]), tuple(tuple(c) for c in data["covers"]),
                       data.get("name", ""))
