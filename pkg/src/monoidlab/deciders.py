"""Exact decision procedures for the fully invariant congruences of a few
tractable varieties."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .catalog import Identity, ParameterError
from .monoid import FiniteMonoid, satisfies
from .words import Letter, Word, all_words, ini, occurrences, reverse

KINDS = ("SL", "A", "AvSL", "C", "COM", "LRB", "TRIVIAL", "FULL")


@dataclass(frozen=True)
class ExactTheory:
    """``kind`` with parameters; ``dual`` mirrors words before deciding.

    Normal forms: SL keeps the content; A(n) keeps occurrence counts mod n;
    A(n)vSL keeps both; C(n) caps occurrence counts at n; COM(k,l) keeps counts
    below k exactly and counts at least k modulo l-k; LRB keeps ``ini``;
    TRIVIAL identifies everything; FULL is equality of words.
    """

    kind: str
    n: int | None = None
    k: int | None = None
    l: int | None = None
    dual: bool = False

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ParameterError(f"unknown theory kind {self.kind!r}")
        if self.kind in ("A", "AvSL") and (self.n is None or self.n < 2):
            raise ParameterError("A(n) needs n >= 2")
        if self.kind == "C" and (self.n is None or self.n < 1):
            raise ParameterError("C(n) needs n >= 1")
        if self.kind == "COM" and (self.k is None or self.l is None or not 0 <= self.k < self.l):
            raise ParameterError("COM(k,l) needs 0 <= k < l")

    def __str__(self) -> str:
        base = {"A": f"A:{self.n}", "AvSL": f"A{self.n}vSL", "C": f"C:{self.n}",
                "COM": f"COM:{self.k},{self.l}"}.get(self.kind, self.kind)
        return f"Dual({base})" if self.dual else base

    def normal_form(self, w: Word):
        """A hashable invariant; two words are related iff invariants agree."""
        if self.dual:
            w = reverse(w)
        occ = occurrences(w)
        kind = self.kind
        if kind == "SL":
            return frozenset(occ)
        if kind == "A":
            return frozenset((a, c % self.n) for a, c in occ.items() if c % self.n)
        if kind == "AvSL":
            return frozenset((a, c % self.n) for a, c in occ.items())
        if kind == "C":
            return frozenset((a, min(c, self.n)) for a, c in occ.items())
        if kind == "COM":
            k, l = self.k, self.l
            if k == 0:
                return frozenset((a, c % l) for a, c in occ.items() if c % l)
            return frozenset((a, c if c < k else ("big", (c - k) % (l - k))) for a, c in occ.items())
        if kind == "LRB":
            return tuple(ini(w))
        if kind == "TRIVIAL":
            return ()
        return tuple(w)


def parse_theory(text: str) -> ExactTheory:
    """``SL``, ``A:3``, ``A3vSL``, ``C:2``, ``COM:2,5``, ``LRB``, ``T``/``TRIVIAL``,
    ``FULL``, optionally wrapped in ``Dual(...)``."""
    text = text.strip()
    m = re.fullmatch(r"Dual\((.*)\)", text)
    if m:
        th = parse_theory(m.group(1))
        return ExactTheory(th.kind, th.n, th.k, th.l, not th.dual)
    if text in ("SL", "LRB", "TRIVIAL", "FULL"):
        return ExactTheory(text)
    if text == "T":
        return ExactTheory("TRIVIAL")
    m = re.fullmatch(r"A:?(\d+)vSL", text)
    if m:
        return ExactTheory("AvSL", int(m.group(1)))
    m = re.fullmatch(r"(A|C):?(\d+)", text)
    if m:
        return ExactTheory(m.group(1), int(m.group(2)))
    m = re.fullmatch(r"COM:(\d+),(\d+)", text)
    if m:
        return ExactTheory("COM", k=int(m.group(1)), l=int(m.group(2)))
    raise ParameterError(f"unknown theory {text!r}")


def decide(th: ExactTheory, ident: Identity) -> bool:
    return th.normal_form(ident.lhs) == th.normal_form(ident.rhs)


def theta_class(th: ExactTheory, w: Word, max_len: int, extra: Iterable[Letter] = ()) -> list[Word]:
    """All words of length at most ``max_len`` over ``con(w)`` plus the declared
    extra letters that are related to ``w``; sorted by length then word order."""
    if max_len < len(w):
        raise ValueError("max_len must be at least |w|")
    alphabet = sorted(set(w) | set(extra))
    target = th.normal_form(w)
    if th.kind == "FULL":
        return [w]
    if th.kind in ("SL", "A", "AvSL", "C", "COM") and not th.dual:
        return _class_by_counts(th, target, alphabet, max_len)
    if th.kind == "LRB":
        return sorted(_class_lrb(th, w, alphabet, max_len), key=lambda v: (len(v), v))
    return [v for v in all_words(alphabet, max_len) if th.normal_form(v) == target]


def _class_by_counts(th, target, alphabet, max_len):
    out = []
    k = len(alphabet)
    for counts in _count_vectors(k, max_len):
        occ_word = Word(a for a, c in zip(alphabet, counts) for _ in range(c))
        if th.normal_form(occ_word) != target:
            continue
        out.extend(_arrangements(alphabet, counts))
    out.sort(key=lambda v: (len(v), v))
    return out


def _count_vectors(k, total):
    if k == 0:
        yield ()
        return
    for c in range(total + 1):
        for rest in _count_vectors(k - 1, total - c):
            yield (c,) + rest


def _arrangements(alphabet, counts):
    n = sum(counts)
    out = []
    buf: list[Letter] = []
    left = list(counts)

    def rec():
        if len(buf) == n:
            out.append(Word(buf))
            return
        for i, a in enumerate(alphabet):
            if left[i]:
                left[i] -= 1
                buf.append(a)
                rec()
                buf.pop()
                left[i] += 1

    rec()
    return out


def _class_lrb(th, w, alphabet, max_len):
    target = list(th.normal_form(w))
    if th.dual:
        # mirrored: build reversed words then flip
        return [reverse(v) for v in _class_lrb(ExactTheory("LRB"), reverse(w), alphabet, max_len)]
    out = []
    buf: list[Letter] = []

    def rec(seen: int):
        # seen = number of ini letters already placed
        if seen == len(target):
            out.append(Word(buf))
        if len(buf) == max_len:
            return
        allowed = list(target[:seen])
        if seen < len(target):
            allowed.append(target[seen])
        for a in sorted(set(allowed)):
            buf.append(a)
            rec(seen + (1 if seen < len(target) and a == target[seen] else 0))
            buf.pop()

    rec(0)
    return out


@dataclass(frozen=True)
class AuditReport:
    theory: str
    oracle: str
    checked: int
    disagreements: tuple[tuple[Identity, bool, bool], ...]

    @property
    def ok(self) -> bool:
        return not self.disagreements


def audit(th: ExactTheory, oracle: FiniteMonoid, max_id_len: int) -> AuditReport:
    """Compare ``decide`` with satisfaction in ``oracle`` on every identity over
    ``{x, y}`` with both sides of length at most ``max_id_len``."""
    x, y = Letter("x"), Letter("y")
    words = list(all_words([x, y], max_id_len))
    bad = []
    checked = 0
    for i, u in enumerate(words):
        for v in words[i:]:
            ident = Identity(u, v)
            a = decide(th, ident)
            b = satisfies(oracle, ident).holds
            checked += 1
            if a != b:
                bad.append((ident, a, b))
    return AuditReport(str(th), oracle.name, checked, tuple(bad))
