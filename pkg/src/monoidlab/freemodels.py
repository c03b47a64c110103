"""Finite refutation models for varieties handled by an identity basis.

Each model is a monoid of normal forms (optionally with every form outside a
chosen divisor set collapsed to zero).  The normal forms are working
hypotheses; a model is only handed out after its table passes the
associativity audit and satisfies every identity of the basis, so soundness
of a refutation never rests on the normal form being right.
"""

from __future__ import annotations

from functools import lru_cache

from .catalog import variety_basis
from .monoid import FiniteMonoid, MonoidError, dual_monoid, quotient_monoid, satisfies_all
from .words import Letter, Word, all_words, decompose, factors, occurrences, parse_word


def e_normal_form(w: Word) -> Word:
    """Letters in order of first occurrence with exponent 1 or 2; consecutive
    squared letters commute, so each maximal run of squares is sorted."""
    occ = occurrences(w)
    order = list(dict.fromkeys(w))
    out: list[Letter] = []
    run: list[Letter] = []
    for a in order:
        if occ[a] >= 2:
            run.append(a)
            continue
        for b in sorted(run):
            out += [b, b]
        run = []
        out.append(a)
    for b in sorted(run):
        out += [b, b]
    return Word(out)


def n_normal_form(w: Word) -> Word:
    """Letters occurring three or more times, or twice inside one block, become
    central squares in front.  Every remaining block is written as its first
    occurrences in order followed by its second occurrences sorted."""
    occ = occurrences(w)
    dec = decompose(w)
    heavy = {a for a, c in occ.items() if c > 2}
    for b in dec.blocks:
        bo = occurrences(b)
        heavy |= {a for a, c in bo.items() if c > 1}
    out: list[Letter] = []
    for a in sorted(heavy):
        out += [a, a]
    seen: set[Letter] = set()
    pieces = []
    for b in dec.blocks:
        firsts, seconds = [], []
        for a in b:
            if a in heavy:
                continue
            (seconds if a in seen else firsts).append(a)
            seen.add(a)
        pieces.append(firsts + sorted(seconds))
    out += pieces[0]
    for sep, piece in zip(dec.separators, pieces[1:]):
        out.append(sep)
        out += piece
    return Word(out)


def _verified(m: FiniteMonoid, basis_name: str) -> FiniteMonoid:
    problems = m.audit()
    if problems:
        raise MonoidError(f"model {m.name} is not a monoid: {problems}")
    ok, bad = satisfies_all(m, variety_basis(basis_name))
    if not ok:
        raise MonoidError(f"model {m.name} fails {bad}")
    return m


def divisor_closure(normal_form, seed: Word, slack: int = 1) -> set[Word]:
    """Normal forms of factors of every word (over the seed's letters, length
    at most ``|seed| + slack``) that shares the seed's normal form."""
    target = normal_form(seed)
    keep: set[Word] = set()
    for v in all_words(sorted(set(seed)), len(seed) + slack, min_len=len(seed) - 2 if len(seed) > 2 else 0):
        if normal_form(v) == target:
            for f in factors(v):
                keep.add(normal_form(f))
    return keep


def free_model(normal_form, letters: str, basis: str, name: str) -> FiniteMonoid:
    gens = [Word([Letter(c)]) for c in letters]
    m = quotient_monoid(normal_form, gens, name=name)
    return _verified(m, basis)


def rees_model(normal_form, seed: str, basis: str, name: str) -> FiniteMonoid:
    w = parse_word(seed)
    keep = divisor_closure(normal_form, w)
    gens = [Word([a]) for a in sorted(set(w))]
    m = quotient_monoid(normal_form, gens, keep=lambda p: p in keep, name=name)
    return _verified(m, basis)


@lru_cache(maxsize=None)
def e_models() -> tuple[FiniteMonoid, ...]:
    return (free_model(e_normal_form, "xy", "E", "F_E(x,y)"),)


@lru_cache(maxsize=None)
def n_models() -> tuple[FiniteMonoid, ...]:
    out = [rees_model(n_normal_form, s, "N", f"S_N({s})")
           for s in ("xytxy", "xytyx", "yxtxy", "xyx")]
    return tuple(out)


def models_for(basis_name: str, dual: bool = False) -> tuple[FiniteMonoid, ...]:
    base = basis_name.split(":")[0]
    if base == "E":
        ms = e_models()
    elif base == "N":
        ms = n_models()
    else:
        ms = ()
    return tuple(dual_monoid(m) for m in ms) if dual else ms
