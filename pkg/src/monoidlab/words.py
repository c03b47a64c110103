"""Words over an indexed alphabet and the combinatorics used on them.

A letter is a ``(base, index)`` pair; ``z1`` has base ``"z"`` and index 1,
plain ``x`` has index -1 so that it sorts before every indexed ``x``.
Words are immutable tuples of letters and compare lexicographically.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple


class Letter(NamedTuple):
    base: str
    index: int = -1

    def __str__(self) -> str:
        return self.base if self.index < 0 else f"{self.base}{self.index}"

    def __repr__(self) -> str:
        return f"Letter({str(self)!r})"


def letter(text: str) -> Letter:
    m = _TOKEN.fullmatch(text)
    if m is None:
        raise ParseError(f"bad letter {text!r}", 0, text)
    return Letter(m.group(1), int(m.group(2)) if m.group(2) else -1)


class Word(tuple):
    """An immutable word. ``Word()`` is the empty word."""

    __slots__ = ()

    def __new__(cls, letters: Iterable[Letter] = ()):
        return super().__new__(cls, letters)

    def __getitem__(self, key):
        item = super().__getitem__(key)
        return Word(item) if isinstance(key, slice) else item

    def __add__(self, other) -> Word:
        return Word(tuple(self) + tuple(other))

    def __radd__(self, other) -> Word:
        return Word(tuple(other) + tuple(self))

    def __mul__(self, n: int) -> Word:
        return Word(tuple(self) * n)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r})"

    # thin method aliases for the module functions
    def content(self) -> frozenset[Letter]:
        return content(self)

    def occ(self, x: Letter) -> int:
        return occ(self, x)


EMPTY = Word()


@dataclass(frozen=True)
class Decomposition:
    blocks: tuple[Word, ...]
    separators: tuple[Letter, ...]

    def join(self) -> Word:
        out: list[Letter] = list(self.blocks[0])
        for t, b in zip(self.separators, self.blocks[1:]):
            out.append(t)
            out.extend(b)
        return Word(out)


class ParseError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        super().__init__(f"{message} at position {position}")
        self.position = position
        self.text = text


# ---------------------------------------------------------------- primitives

def content(w: Iterable[Letter]) -> frozenset[Letter]:
    return frozenset(w)


def occ(w: Iterable[Letter], x: Letter) -> int:
    return sum(1 for a in w if a == x)


def occurrences(w: Iterable[Letter]) -> dict[Letter, int]:
    counts: dict[Letter, int] = {}
    for a in w:
        counts[a] = counts.get(a, 0) + 1
    return counts


def simple(w: Word) -> list[Letter]:
    """Simple letters of ``w`` in order of occurrence."""
    counts = occurrences(w)
    return [a for a in w if counts[a] == 1]


def multiple(w: Word) -> frozenset[Letter]:
    counts = occurrences(w)
    return frozenset(a for a, c in counts.items() if c > 1)


def is_linear(w: Word) -> bool:
    return len(set(w)) == len(w)


def decompose(w: Word) -> Decomposition:
    counts = occurrences(w)
    blocks: list[Word] = []
    seps: list[Letter] = []
    current: list[Letter] = []
    for a in w:
        if counts[a] == 1:
            blocks.append(Word(current))
            seps.append(a)
            current = []
        else:
            current.append(a)
    blocks.append(Word(current))
    return Decomposition(tuple(blocks), tuple(seps))


def restrict(w: Word, letters: Iterable[Letter]) -> Word:
    keep = set(letters)
    return Word(a for a in w if a in keep)


def delete(w: Word, letters: Iterable[Letter]) -> Word:
    drop = set(letters)
    return Word(a for a in w if a not in drop)


def ini(w: Word) -> Word:
    seen: set[Letter] = set()
    out = []
    for a in w:
        if a not in seen:
            seen.add(a)
            out.append(a)
    return Word(out)


def reverse(w: Word) -> Word:
    return Word(reversed(w))


def substitute(w: Word, mapping: Mapping[Letter, Iterable[Letter]]) -> Word:
    out: list[Letter] = []
    for a in w:
        if a in mapping:
            out.extend(mapping[a])
        else:
            out.append(a)
    return Word(out)


def is_factor(u: Word, w: Word) -> bool:
    n, m = len(u), len(w)
    if n == 0:
        return True
    u = tuple(u)
    return any(tuple(w[i:i + n]) == u for i in range(m - n + 1))


def factors(w: Word) -> set[Word]:
    """All contiguous factors of ``w``, including the empty word."""
    out = {EMPTY}
    for i in range(len(w)):
        for j in range(i + 1, len(w) + 1):
            out.add(w[i:j])
    return out


def rename(w: Word, mapping: Mapping[Letter, Letter]) -> Word:
    return Word(mapping.get(a, a) for a in w)


def all_words(alphabet: Iterable[Letter], max_len: int, min_len: int = 0):
    """Every word over ``alphabet`` with length in ``[min_len, max_len]``,
    shortest first and lexicographic within a length."""
    from itertools import product

    alpha = sorted(set(alphabet))
    for n in range(min_len, max_len + 1):
        for t in product(alpha, repeat=n):
            yield Word(t)


# ------------------------------------------------------------------- parsing

_TOKEN = re.compile(r"([A-Za-z_][A-Za-z_']*?)(\d*)")
_COMPACT = re.compile(r"(?:[A-Za-z]\d*)+")
_COMPACT_PIECE = re.compile(r"([A-Za-z])(\d*)")


def parse_word(text: str) -> Word:
    """Parse the textual word format.

    Tokens are whitespace separated (``z1 t1 x``); ``@`` alone is the empty
    word; a run without spaces such as ``xt1xt2x`` is read as single-character
    letters, each optionally followed by an index.
    """
    stripped = text.strip()
    if stripped == "@":
        return EMPTY
    if stripped == "":
        raise ParseError("empty word text (use @ for the empty word)", 0, text)
    tokens = list(re.finditer(r"\S+", text))
    letters: list[Letter] = []
    if len(tokens) == 1 and _COMPACT.fullmatch(stripped):
        for m in _COMPACT_PIECE.finditer(stripped):
            idx = m.group(2)
            letters.append(Letter(m.group(1), int(idx) if idx else -1))
        return Word(letters)
    for m in tokens:
        tok = m.group()
        if tok == "@":
            raise ParseError("@ must stand alone", m.start(), text)
        lm = re.fullmatch(r"([A-Za-z_][A-Za-z_']*)(\d*)", tok)
        if lm is None or lm.group(1).endswith("_") and not lm.group(2):
            bad = next((i for i, ch in enumerate(tok) if not (ch.isalnum() or ch in "_'")), 0)
            raise ParseError(f"bad letter token {tok!r}", m.start() + bad, text)
        letters.append(Letter(lm.group(1), int(lm.group(2)) if lm.group(2) else -1))
    return Word(letters)


def format_word(w: Iterable[Letter]) -> str:
    w = tuple(w)
    if not w:
        return "@"
    if all(len(a.base) == 1 for a in w):
        return "".join(str(a) for a in w)
    return " ".join(str(a) for a in w)


def W(text: str) -> Word:
    """Shorthand used throughout tests and the catalog."""
    return parse_word(text)
