"""Bounded derivation of identities and structural predicates on identities."""

from __future__ import annotations

import os
import resource
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .catalog import Identity, IdentitySystem
from .monoid import FiniteMonoid, satisfies, satisfies_all
from .words import Letter, Word, decompose, occurrences, substitute


@dataclass(frozen=True)
class RewriteStep:
    rule: Identity
    direction: str  # "forward" rewrites lhs-instances into rhs-instances
    position: int
    substitution: tuple[tuple[Letter, Word], ...]
    before: Word
    after: Word

    def sides(self) -> tuple[Word, Word]:
        if self.direction == "forward":
            return self.rule.lhs, self.rule.rhs
        return self.rule.rhs, self.rule.lhs

    def verify(self) -> bool:
        src, dst = self.sides()
        sub = dict(self.substitution)
        a, b = substitute(src, sub), substitute(dst, sub)
        p = self.position
        return (tuple(self.before[p:p + len(a)]) == tuple(a)
                and self.after == self.before[:p] + b + self.before[p + len(a):])

    def inverse(self) -> RewriteStep:
        flip = "backward" if self.direction == "forward" else "forward"
        return RewriteStep(self.rule, flip, self.position, self.substitution, self.after, self.before)


@dataclass(frozen=True)
class Proved:
    chain: tuple[RewriteStep, ...]

    def replay(self, goal: Identity) -> bool:
        cur = goal.lhs
        for s in self.chain:
            if s.before != cur or not s.verify():
                return False
            cur = s.after
        return cur == goal.rhs


@dataclass(frozen=True)
class RefutedByModel:
    monoid: FiniteMonoid
    assignment: dict


@dataclass(frozen=True)
class Unknown:
    max_len: int
    max_steps: int
    visited: int
    exhausted: bool = False
    reason: str = ""


DerivationResult = Proved | RefutedByModel | Unknown


# ------------------------------------------------------------- matching

def match_all(pattern: Sequence[Letter], word: Sequence[Letter]):
    """Yield ``(position, substitution)`` with ``substitution(pattern)`` equal
    to the factor of ``word`` at ``position``; images may be empty but the
    whole image is nonempty."""
    plen = len(pattern)
    wlen = len(word)
    word = tuple(word)

    def rec(i: int, p: int, sub: dict, start: int):
        if i == plen:
            if p > start:
                yield start, dict(sub)
            return
        a = pattern[i]
        img = sub.get(a)
        if img is not None:
            k = len(img)
            if word[p:p + k] == img:
                yield from rec(i + 1, p + k, sub, start)
            return
        for end in range(p, wlen + 1):
            sub[a] = word[p:end]
            yield from rec(i + 1, end, sub, start)
        del sub[a]

    for start in range(wlen):
        yield from rec(0, start, {}, start)


def _fresh_letter(used: Iterable[Letter]) -> Letter:
    used = set(used)
    i = 0
    while Letter("f", i) in used:
        i += 1
    return Letter("f", i)


def _memory_exceeded() -> bool:
    cap = os.environ.get("MONOIDLAB_MAX_MEM_MB")
    if not cap:
        return False
    rss_kb = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss
    return rss_kb / 1024 > float(cap)


def neighbours(word: Word, rules: Sequence[Identity], max_len: int, alphabet: Sequence[Letter]):
    """All single rewrite steps from ``word`` within the length cap, in a
    deterministic order."""
    out: list[RewriteStep] = []
    for rule in rules:
        for direction, src, dst in (("forward", rule.lhs, rule.rhs), ("backward", rule.rhs, rule.lhs)):
            if not src:
                continue
            src_vars = set(src)
            free = sorted({a for a in dst if a not in src_vars})
            for pos, sub in match_all(src, word):
                img_len = sum(len(sub[a]) for a in src)
                base_len = len(word) - img_len
                fixed_len = sum(len(sub[a]) for a in dst if a in sub)
                room = max_len - base_len - fixed_len
                if room < 0:
                    continue
                for extra in _free_images(free, dst, room, alphabet):
                    full = dict(sub)
                    full.update(extra)
                    rep = substitute(dst, full)
                    after = word[:pos] + rep + word[pos + img_len:]
                    if after == word:
                        continue
                    key = tuple(sorted((a, Word(v)) for a, v in full.items()))
                    out.append(RewriteStep(rule, direction, pos, key, word, after))
    return out


def _free_images(free, dst, room, alphabet):
    if not free:
        yield {}
        return
    counts = {a: sum(1 for b in dst if b == a) for a in free}
    words_by_len = [[()]]
    for n in range(1, room + 1):
        words_by_len.append(list(product(alphabet, repeat=n)))

    def rec(i, left, acc):
        if i == len(free):
            yield dict(acc)
            return
        a = free[i]
        for n in range(0, left // counts[a] + 1):
            for w in words_by_len[n]:
                acc[a] = Word(w)
                yield from rec(i + 1, left - n * counts[a], acc)
        acc.pop(a, None)

    yield from rec(0, room, {})


# -------------------------------------------------------------- derive

def check_models(system: Iterable[Identity], goal: Identity, models: Iterable[FiniteMonoid]):
    """First supplied model that satisfies the system but not the goal."""
    system = list(system)
    for m in models:
        ok, _ = satisfies_all(m, system)
        if not ok:
            continue
        r = satisfies(m, goal)
        if not r.holds:
            return RefutedByModel(m, r.witness)
    return None


def derive(system: IdentitySystem | Sequence[Identity], goal: Identity, max_len: int,
           max_steps: int, models: Iterable[FiniteMonoid] = ()) -> DerivationResult:
    """Search for a rewrite chain from ``goal.lhs`` to ``goal.rhs``.

    Models are tried first.  The search is a level-synchronised bidirectional
    breadth-first search; ``max_steps`` bounds the number of distinct words
    visited.  Substitution images of variables that occur only on the output
    side of a rule are drawn from the goal letters plus one fresh letter.
    """
    rules = list(system)
    if max_len < max(len(goal.lhs), len(goal.rhs)):
        raise ValueError("max_len must cover both sides of the goal")
    refuted = check_models(rules, goal, models)
    if refuted is not None:
        return refuted
    if goal.lhs == goal.rhs:
        return Proved(())
    letters = sorted(goal.letters())
    alphabet = letters + [_fresh_letter(list(goal.letters()) + [a for r in rules for a in r.letters()])]

    parents = [{goal.lhs: None}, {goal.rhs: None}]
    frontiers = [[goal.lhs], [goal.rhs]]
    visited = 2
    while frontiers[0] and frontiers[1]:
        side = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
        mine, other = parents[side], parents[1 - side]
        nxt: list[Word] = []
        meet: list[Word] = []
        for w in sorted(frontiers[side]):
            for step in neighbours(w, rules, max_len, alphabet):
                a = step.after
                if a in mine:
                    continue
                mine[a] = step
                nxt.append(a)
                visited += 1
                if a in other:
                    meet.append(a)
            if visited > max_steps or _memory_exceeded():
                if meet:
                    break
                return Unknown(max_len, max_steps, visited, False,
                               "memory cap" if _memory_exceeded() else "step cap")
        if meet:
            return Proved(_chain(parents, min(meet)))
        frontiers[side] = nxt
    return Unknown(max_len, max_steps, visited, True, "search space exhausted")


def _chain(parents, meet: Word) -> tuple[RewriteStep, ...]:
    fwd = []
    w = meet
    while parents[0][w] is not None:
        s = parents[0][w]
        fwd.append(s)
        w = s.before
    fwd.reverse()
    bwd = []
    w = meet
    while parents[1][w] is not None:
        s = parents[1][w]
        bwd.append(s.inverse())
        w = s.before
    return tuple(fwd + bwd)


# ---------------------------------------------------- structural predicates

def is_linear_balanced(ident: Identity) -> bool:
    u, v = ident.lhs, ident.rhs
    if set(u) != set(v):
        return False
    du, dv = decompose(u), decompose(v)
    if du.separators != dv.separators:
        return False
    for bu, bv in zip(du.blocks, dv.blocks):
        ou, ov = occurrences(bu), occurrences(bv)
        if ou != ov or any(c > 1 for c in ou.values()):
            return False
    return True


def is_efficient(ident: Identity) -> bool:
    du, dv = decompose(ident.lhs), decompose(ident.rhs)
    if du.separators != dv.separators:
        return False
    return all(len(a) + len(b) > 0 for a, b in zip(du.blocks, dv.blocks))


@dataclass(frozen=True)
class NotInvertible:
    reason: str = ""


@dataclass(frozen=True)
class UnknownWithinCap:
    cap: int


def _swap_distance(a: Sequence[Letter], b: Sequence[Letter]) -> int:
    # minimal adjacent transpositions: inversions under order-preserving matching
    positions: dict[Letter, list[int]] = {}
    for i, c in enumerate(b):
        positions.setdefault(c, []).append(i)
    used: dict[Letter, int] = {}
    target = []
    for c in a:
        k = used.get(c, 0)
        target.append(positions[c][k])
        used[c] = k + 1
    inv = 0
    for i in range(len(target)):
        for j in range(i + 1, len(target)):
            if target[i] > target[j]:
                inv += 1
    return inv


def invertibility_degree(ident: Identity, cap: int = 64):
    """Least number of swaps of adjacent occurrences of two distinct multiple
    letters turning ``lhs`` into ``rhs``.

    Simple letters never move, so the sides must share their simple-letter
    skeleton and the blocks must be rearrangements of each other; the answer
    is then the sum of the per-block inversion counts.
    """
    u, v = ident.lhs, ident.rhs
    if u == v:
        return 0
    if occurrences(u) != occurrences(v):
        return NotInvertible("different occurrence counts")
    du, dv = decompose(u), decompose(v)
    if du.separators != dv.separators or [len(b) for b in du.blocks] != [len(b) for b in dv.blocks]:
        return NotInvertible("simple letters in different places")
    total = 0
    for bu, bv in zip(du.blocks, dv.blocks):
        if occurrences(bu) != occurrences(bv):
            return NotInvertible("blocks are not rearrangements")
        total += _swap_distance(bu, bv)
    if total > cap:
        return UnknownWithinCap(cap)
    return total


def invertibility_bfs(ident: Identity, cap: int = 12):
    """Breadth-first search over single swaps, used as an oracle."""
    u, v = tuple(ident.lhs), tuple(ident.rhs)
    if u == v:
        return 0
    occ = occurrences(u)
    seen = {u}
    frontier = [u]
    for depth in range(1, cap + 1):
        nxt = []
        for w in frontier:
            for i in range(len(w) - 1):
                a, b = w[i], w[i + 1]
                if a == b or occ[a] < 2 or occ[b] < 2:
                    continue
                s = w[:i] + (b, a) + w[i + 2:]
                if s == v:
                    return depth
                if s not in seen:
                    seen.add(s)
                    nxt.append(s)
        if not nxt:
            return NotInvertible("orbit exhausted")
        frontier = nxt
    return UnknownWithinCap(cap)
