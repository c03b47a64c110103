"""Relational products of fully invariant congruences restricted to bounded
word spaces, and the registry of witness cases."""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from itertools import combinations, islice, product
from typing import Callable, Iterable, Sequence

import numpy as np

from .catalog import (Identity, IdentitySystem, ParameterError, Permutation, _fit, c_word,
                      resolve_variety, variety_basis, w_word)
from .deciders import ExactTheory, decide, parse_theory, theta_class
from .engine import Proved, RefutedByModel, _memory_exceeded, derive
from .freemodels import models_for
from .monoid import (FiniteMonoid, IsIsoterm, build_sw, dual_monoid, isoterm_check,
                     nonzero_assignments, satisfies)
from .words import Letter, Word, format_word, is_factor, parse_word

SCHEMA_VERSION = 1


# ------------------------------------------------------------------ handles

@dataclass(frozen=True)
class BasisBackend:
    system: IdentitySystem
    models: tuple[FiniteMonoid, ...] = ()
    max_len: int = 12
    max_steps: int = 20_000


@dataclass(frozen=True)
class VarietyHandle:
    """A variety together with the procedure answering ``u θ v``."""

    name: str
    backend: ExactTheory | FiniteMonoid | BasisBackend

    @property
    def kind(self) -> str:
        if isinstance(self.backend, ExactTheory):
            return "exact"
        if isinstance(self.backend, FiniteMonoid):
            return "monoid"
        return "basis"

    def __str__(self) -> str:
        return self.name


def exact(theory: str) -> VarietyHandle:
    return VarietyHandle(theory, parse_theory(theory))


def generated_by(words: Sequence[Word | str], name: str | None = None) -> VarietyHandle:
    m = build_sw(words)
    return VarietyHandle(name or m.name, m)


@lru_cache(maxsize=None)
def handle(name: str) -> VarietyHandle:
    """Handle for a registry name.

    Accepts everything :func:`resolve_variety` knows plus ``sw:w1,w2`` for the
    variety generated by an explicit S(W).
    """
    name = name.strip()
    if name.startswith("sw:"):
        return generated_by([parse_word(p) for p in name[3:].split(",")], name)
    entry = resolve_variety(name)
    if entry.kind == "exact":
        th = parse_theory(entry.theory)
        if entry.dual:
            th = ExactTheory(th.kind, th.n, th.k, th.l, not th.dual)
        return VarietyHandle(name, th)
    if entry.kind == "monoid":
        m = build_sw(entry.words)
        return VarietyHandle(name, dual_monoid(m) if entry.dual else m)
    system = variety_basis(entry.basis)
    if entry.dual:
        system = system.dual()
    return VarietyHandle(name, BasisBackend(system, models_for(entry.basis, entry.dual)))


def relate(h: VarietyHandle, u: Word, v: Word, max_len: int | None = None) -> bool | None:
    """``True``/``False`` when decided, ``None`` when a bounded derivation
    neither proves nor refutes ``u ≈ v``."""
    b = h.backend
    if u == v:
        return True
    ident = Identity(u, v)
    if isinstance(b, ExactTheory):
        return decide(b, ident)
    if isinstance(b, FiniteMonoid):
        return satisfies(b, ident).holds
    bound = max(max_len or 0, b.max_len, len(u), len(v))
    r = derive(b.system, ident, bound, b.max_steps, b.models)
    if isinstance(r, Proved):
        return True
    if isinstance(r, RefutedByModel):
        return False
    return None


# ---------------------------------------------------------------- probes

class _ProbeBlock:
    """Assignments of one monoid evaluated in parallel.

    ``target`` holds the value of the source word under each assignment;
    ``reach[t, a]`` says that ``t`` lies in the right ideal ``aM``, so a prefix
    whose value cannot reach the target is dead.
    """

    def __init__(self, m: FiniteMonoid, values: np.ndarray, target: np.ndarray):
        self.table = m.table
        self.values = values          # (probes, letters)
        self.target = target
        n = m.size
        reach = np.zeros((n, n), dtype=bool)
        reach[m.table, np.arange(n)[:, None]] = True
        self.reach = reach
        self.start = np.full(len(target), m.identity, dtype=np.int32)

    def step(self, cur: np.ndarray, i: int) -> np.ndarray | None:
        nxt = self.table[cur, self.values[:, i]]
        if not self.reach[self.target, nxt].all():
            return None
        return nxt

    def done(self, cur: np.ndarray) -> bool:
        return bool(np.array_equal(cur, self.target))


def _probe_block(m: FiniteMonoid, alphabet: Sequence[Letter], w: Word,
                 support: int, full_limit: int = 20_000,
                 nonzero_limit: int = 50_000, wide_target: int = 5_000) -> _ProbeBlock:
    k = len(alphabet)
    n = m.size
    pos = {a: i for i, a in enumerate(alphabet)}
    seq = [pos[a] for a in w]
    if n ** k <= full_limit:
        vals = np.array(list(product(range(n), repeat=k)), dtype=np.int32).reshape(-1, k)
        chunks = [vals]
    else:
        others = [e for e in range(n) if e != m.identity]
        chunks = []
        for s in range(1, min(support, k) + 1):
            choice = np.array(list(product(others, repeat=s)), dtype=np.int32)
            for subset in combinations(range(k), s):
                block = np.full((len(choice), k), m.identity, dtype=np.int32)
                block[:, list(subset)] = choice
                chunks.append(block)
    if m.zero is not None and m.concatenative:
        chunks.append(_wide_probes(m, alphabet, w, wide_target))
    elif m.zero is not None:
        # assignments under which w is nonzero, dropped if there are too many
        rows = [[phi.get(a, m.identity) for a in alphabet]
                for phi, _ in islice(nonzero_assignments(m, w), nonzero_limit + 1)]
        if 0 < len(rows) <= nonzero_limit:
            chunks.append(np.array(rows, dtype=np.int32))
    kept_vals, kept_target = [], []
    for block in chunks:
        cur = np.full(len(block), m.identity, dtype=np.int32)
        for i in seq:
            cur = m.table[cur, block[:, i]]
        keep = cur != m.zero if m.zero is not None else np.ones(len(cur), dtype=bool)
        kept_vals.append(block[keep])
        kept_target.append(cur[keep])
    vals = np.concatenate(kept_vals) if kept_vals else np.zeros((0, k), dtype=np.int32)
    target = np.concatenate(kept_target) if kept_target else np.zeros(0, dtype=np.int32)
    return _ProbeBlock(m, vals, target)


def _wide_matches(w: Word, text: tuple, min_support: int):
    """Images (letter -> tuple, empty allowed) spelling a factor of ``text``
    with at least ``min_support`` letters sent to nonempty words."""
    w = tuple(w)
    n = len(w)
    firsts = {}
    for i, a in enumerate(w):
        firsts.setdefault(a, i)
    # letters whose first occurrence is at or after position i
    fresh = [sum(1 for f in firsts.values() if f >= i) for i in range(n + 1)]
    tl = len(text)
    img: dict = {}

    def rec(i: int, p: int, used: int):
        if i == n:
            yield dict(img)
            return
        a = w[i]
        known = img.get(a)
        if known is not None:
            k = len(known)
            if text[p:p + k] == known:
                yield from rec(i + 1, p + k, used)
            return
        if used + fresh[i] < min_support:
            return
        img[a] = ()
        yield from rec(i + 1, p, used)
        for q in range(p + 1, tl + 1):
            img[a] = text[p:q]
            yield from rec(i + 1, q, used + 1)
        del img[a]

    for start in range(len(text) + 1):
        yield from rec(0, start, 0)


def _wide_probes(m: FiniteMonoid, alphabet: Sequence[Letter], w: Word, target: int) -> np.ndarray:
    """Nonzero assignments of ``w`` moving as many letters as possible off the
    identity; the support threshold drops until about ``target`` are found."""
    index = {tuple(lab): i for i, lab in enumerate(m.labels) if lab is not None}
    texts = sorted({tuple(lab) for lab in m.labels if lab}, key=len, reverse=True)
    texts = [t for i, t in enumerate(texts)
             if not any(is_factor(Word(t), Word(big)) for big in texts[:i])]
    rows: set[tuple] = set()
    for k in range(min(len(set(w)), len(texts[0]) if texts else 0), 0, -1):
        rows = set()
        for text in texts:
            for img in _wide_matches(w, text, k):
                rows.add(tuple(index[img.get(a, ())] for a in alphabet))
        if len(rows) >= target:
            break
    return np.array(sorted(rows), dtype=np.int32).reshape(-1, len(alphabet))


class SearchAborted(RuntimeError):
    pass


def _probe_class(blocks: Sequence[_ProbeBlock], alphabet: Sequence[Letter], max_len: int,
                 accept: Callable[[Word], bool]) -> list[Word]:
    """Words of length at most ``max_len`` passing every probe, filtered by
    ``accept``; depth-first in alphabet order, sorted on return."""
    out: list[Word] = []
    buf: list[Letter] = []
    nodes = 0

    def rec(states):
        nonlocal nodes
        nodes += 1
        if nodes % 2048 == 0 and _memory_exceeded():
            raise SearchAborted("memory cap")
        if all(b.done(s) for b, s in zip(blocks, states)):
            w = Word(buf)
            if accept(w):
                out.append(w)
        if len(buf) == max_len:
            return
        for i, a in enumerate(alphabet):
            nxt = []
            for b, s in zip(blocks, states):
                t = b.step(s, i)
                if t is None:
                    break
                nxt.append(t)
            else:
                buf.append(a)
                rec(nxt)
                buf.pop()

    rec([b.start for b in blocks])
    out.sort(key=lambda v: (len(v), v))
    return out


def class_candidates(h: VarietyHandle, w: Word, max_len: int, alphabet: Sequence[Letter],
                     support: int = 2) -> tuple[list[Word], bool]:
    """Words of length at most ``max_len`` over ``alphabet`` possibly related
    to ``w``; the flag says whether every returned word is certainly related.

    Exact theories and generating monoids give exactly the class; a basis
    gives the words its refutation models cannot separate from ``w``.
    """
    alphabet = sorted(set(alphabet) | set(w))
    b = h.backend
    if isinstance(b, ExactTheory):
        cls = theta_class(b, w, max(max_len, len(w)), extra=alphabet)
        return [v for v in cls if len(v) <= max_len], True
    if isinstance(b, FiniteMonoid):
        block = _probe_block(b, alphabet, w, support)
        return _probe_class([block], alphabet, max_len,
                            lambda v: v == w or satisfies(b, Identity(w, v)).holds), True
    blocks = [_probe_block(m, alphabet, w, support) for m in b.models]
    if not blocks:
        from .words import all_words
        return list(all_words(alphabet, max_len)), False
    models = b.models
    return _probe_class(blocks, alphabet, max_len,
                        lambda v: all(satisfies(m, Identity(w, v)).holds for m in models)), False


# ------------------------------------------------------- relational products

@dataclass(frozen=True)
class Found:
    intermediates: tuple[Word, ...]


@dataclass(frozen=True)
class NotFoundWithinBounds:
    max_len: int
    alphabet: tuple[Letter, ...]
    explored: int = 0


@dataclass(frozen=True)
class UnknownLinks:
    max_len: int
    unresolved: int
    reason: str = ""


ProductResult = Found | NotFoundWithinBounds | UnknownLinks


def product_member(hs: Sequence[VarietyHandle], u: Word, v: Word, max_len: int,
                   alphabet: Iterable[Letter] | None = None, support: int = 2) -> ProductResult:
    """Search ``u = w0 θ1 w1 θ2 ... θk wk = v`` with ``|wi| <= max_len``.

    Intermediate words range over ``alphabet`` (default ``con(u) ∪ con(v)``).
    Links backed by a basis are first screened with refutation models and only
    proved when a whole chain survives; a chain blocked by an undecided link
    turns a negative answer into :class:`UnknownLinks`.
    """
    if not hs:
        raise ValueError("need at least one link")
    alpha = tuple(sorted(set(alphabet) if alphabet is not None else set(u) | set(v)))
    if len(hs) == 1:
        r = relate(hs[0], u, v, max_len)
        if r is True:
            return Found(())
        if r is False:
            return NotFoundWithinBounds(max_len, alpha)
        return UnknownLinks(max_len, 1, "undecided link")
    unresolved = 0
    explored = 0
    memo: list[dict[Word, list[Word] | None]] = [{} for _ in hs]

    def search(i: int, w: Word):
        # a chain from w at level i to v, or None
        nonlocal unresolved, explored
        if w in memo[i]:
            return memo[i][w]
        memo[i][w] = None
        if _memory_exceeded():
            raise SearchAborted("memory cap")
        h = hs[i]
        if i == len(hs) - 1:
            explored += 1
            r = relate(h, w, v, max_len)
            if r is None:
                unresolved += 1
            result = [] if r else None
        else:
            result = None
            cands, certain = class_candidates(h, w, max_len, alpha, support)
            for c in cands:
                rest = search(i + 1, c)
                if rest is None:
                    continue
                if not certain:
                    r = relate(h, w, c, max_len)
                    if r is None:
                        unresolved += 1
                    if not r:
                        continue
                result = [c] + rest
                break
        memo[i][w] = result
        return result

    try:
        got = search(0, u)
    except SearchAborted as exc:
        return UnknownLinks(max_len, unresolved + 1, str(exc))
    if got is not None:
        return Found(tuple(got))
    if unresolved:
        return UnknownLinks(max_len, unresolved, "undecided links")
    return NotFoundWithinBounds(max_len, alpha, explored)


# ------------------------------------------------------------ case registry

@dataclass(frozen=True)
class WitnessCase:
    """A displayed chain ``chain[0] θ_links[0] chain[1] ...`` together with the
    claim that the links taken in ``reverse_links`` order do not connect the
    endpoints within ``bound``."""

    id: str
    params: dict
    chain: tuple[Word, ...]
    links: tuple[str, ...]
    reverse_links: tuple[str, ...] = ()
    bound: int = 10
    isoterms: tuple[tuple[str, Word], ...] = ()
    note: str = ""

    @classmethod
    def from_dict(cls, data: dict) -> WitnessCase:
        chain = tuple(parse_word(w) for w in data["chain"])
        links = tuple(data["links"])
        if len(chain) != len(links) + 1:
            raise ParameterError("a chain of k links needs k + 1 words")
        rev = tuple(data.get("reverse_links", links[::-1]))
        default = max(10, len(chain[0]), len(chain[-1]))
        iso = tuple((h, parse_word(w)) for h, w in data.get("isoterms", ()))
        return cls(data["id"], dict(data.get("params", {})), chain, links, rev,
                   int(data.get("bound", default)), iso, data.get("note", ""))

    def to_dict(self) -> dict:
        return {"id": self.id, "params": self.params,
                "chain": [format_word(w) for w in self.chain], "links": list(self.links),
                "reverse_links": list(self.reverse_links), "bound": self.bound,
                "isoterms": [[h, format_word(w)] for h, w in self.isoterms], "note": self.note}


def _chain_case(id_, params, words, links, **extra) -> dict:
    data = {"id": id_, "params": params, "chain": list(words), "links": list(links)}
    data.update(extra)
    return data


def _case_i(n: int = 2) -> dict:
    return _chain_case("nonperm-i", {"n": n}, ["x", "x" + "y" * n, "xy"], [f"A:{n}", "SL"])


def _case_ii(n: int = 2) -> dict:
    return _chain_case("nonperm-ii", {"n": n}, ["x", "x" * (n + 1), "xx"], [f"A{n}vSL", "C:2"])


def _case_iii() -> dict:
    return _chain_case("nonperm-iii", {}, ["xyx", "xxy", "xxxy"], ["C:3", "D:2"],
                       isoterms=[["D:2", "xyx"]])


def _case_iv() -> dict:
    return _chain_case("nonperm-iv", {}, ["xyx", "xxy", "yxx"], ["E", "D:2"],
                       isoterms=[["D:2", "xyx"]])


def _case_v() -> dict:
    return _chain_case("nonperm-v", {}, ["xxy", "xyx", "yxx"], ["E", "Dual(E)"])


def _case_vi() -> dict:
    return _chain_case("nonperm-vi", {}, ["xsxyztyhz", "xsxzytyhz", "xszxytyhz"], ["L", "M"])


def _case_vii(i: int = 3) -> dict:
    if i != 3:
        raise ParameterError("only the displayed instance i=3 is registered")
    return _chain_case("nonperm-vii", {"i": i}, ["yxzsyztxhx", "xyzsyztxhx", "xzysyztxhx"],
                       ["N", f"Z{i}"])


def _case_viii(i: int = 1, j: int = 2) -> dict:
    if (i, j) != (1, 2):
        raise ParameterError("only the displayed instance i=1, j=2 is registered")
    p = "t1xt2yt3xt4z"
    return _chain_case("nonperm-viii", {"i": i, "j": j}, ["xyz" + p, "yxz" + p, "yzx" + p],
                       [f"Z{i}", f"Z{j}"])


def _primed(base: str, i: int) -> Letter:
    return Letter(base + "'", i)


def wn_pair_words(n: int, pi: Permutation, tau: Permutation,
                  xi: Permutation, eta: Permutation) -> tuple[Word, Word, Word]:
    """``(u, p1 q1 x x q2 p2, v)`` for the pair of varieties generated by
    ``S(w_n[π,τ])`` and ``S(w_n[ξ,η])``."""
    z, t = (lambda i: Letter("z", i)), (lambda i: Letter("t", i))
    zp, tp = (lambda i: _primed("z", i)), (lambda i: _primed("t", i))
    x = Letter("x")
    pn, tn = pi(n), tau(n)
    p1 = ([a for i in range(1, pn) for a in (z(i), t(i))]
          + [a for i in range(1, n + 1) for a in (zp(i), tp(i))]
          + [a for i in range(pn, n + 1) for a in (z(i), t(i))])
    q1 = [a for i in range(1, n + 1) for a in (z(pi(i)), z(n + tau(i)))]
    q2 = [a for i in range(1, n + 1) for a in (zp(xi(i)), zp(n + eta(i)))]
    p2 = ([a for i in range(n + 1, n + tn) for a in (t(i), z(i))]
          + [a for i in range(n + 1, 2 * n + 1) for a in (tp(i), zp(i))]
          + [a for i in range(n + tn, 2 * n + 1) for a in (t(i), z(i))])
    u = Word(p1 + [x] + q1 + [x] + q2 + p2)
    mid = Word(p1 + q1 + [x, x] + q2 + p2)
    v = Word(p1 + q1 + [x] + q2 + [x] + p2)
    return u, mid, v


def _parse_perm_param(p, n) -> Permutation:
    if p is None:
        return Permutation.identity(n)
    if isinstance(p, Permutation):
        return p
    if isinstance(p, str):
        p = [int(s) for s in p.strip("[]").split(",") if s]
    return _fit(Permutation(tuple(p)), n)


def _case_wn(n: int = 2, pi=None, tau=None, xi="2,1", eta=None) -> dict:
    pi, tau, xi, eta = (_parse_perm_param(p, n) for p in (pi, tau, xi, eta))
    if (pi, tau) == (xi, eta):
        raise ParameterError("the two generating words must differ")
    u, mid, v = wn_pair_words(n, pi, tau, xi, eta)
    x_name = "sw:" + format_word(w_word(n, pi, tau)).replace(" ", "")
    y_name = "sw:" + format_word(w_word(n, xi, eta)).replace(" ", "")
    params = {"n": n, "pi": str(pi), "tau": str(tau), "xi": str(xi), "eta": str(eta)}
    return _chain_case("wn-pair", params, [format_word(u), format_word(mid), format_word(v)],
                       [y_name, x_name])


def cnm_pair_words(n: int, m: int, pi: Permutation) -> tuple[Word, Word, Word, Word, Word]:
    """``(u, p xyz q, v, c_{n+1,m}[ρ], c_{n,m+1}[τ])``."""
    if n + m < 0 or min(n, m) < 0:
        raise ParameterError("n, m must be >= 0")
    k = n + m
    pi = _fit(pi, k)
    rho = Permutation(tuple(pi(i) for i in range(1, k + 1)) + (k + 1,))
    tau = Permutation((1,) + tuple(pi(i) + 1 for i in range(1, k + 1)))
    z, t = (lambda i: Letter("z", i)), (lambda i: Letter("t", i))
    zp, tp = (lambda i: _primed("z", i)), (lambda i: _primed("t", i))
    x, y, zz, tt = Letter("x"), Letter("y"), Letter("z"), Letter("t")
    p = ([a for i in range(1, n + 1) for a in (z(i), t(i))]
         + [a for i in range(1, n + 2) for a in (zp(i), tp(i))])
    q = ([tt] + [a for i in range(n + 1, k + 2) for a in (z(i), t(i))]
         + [a for i in range(n + 2, k + 2) for a in (zp(i), tp(i))]
         + [x] + [z(tau(i)) for i in range(1, k + 2)]
         + [y] + [zp(rho(i)) for i in range(1, k + 2)] + [zz])
    u = Word(p + [y, x, zz] + q)
    mid = Word(p + [x, y, zz] + q)
    v = Word(p + [x, zz, y] + q)
    return u, mid, v, c_word(n + 1, m, rho), c_word(n, m + 1, tau)


def _case_cnm(n: int = 1, m: int = 0, pi=None) -> dict:
    if n + m != 1:
        raise ParameterError("cnm-pair is registered for n + m = 1")
    pi = _parse_perm_param(pi, n + m)
    u, mid, v, cx, cy = cnm_pair_words(n, m, pi)
    params = {"n": n, "m": m, "pi": str(pi)}
    return _chain_case("cnm-pair", params, [format_word(u), format_word(mid), format_word(v)],
                       ["sw:" + format_word(cx).replace(" ", ""),
                        "sw:" + format_word(cy).replace(" ", "")])


# ------------------------------------------------- finite equivalences

def compose(r1: set, r2: set) -> set:
    """Relational product: ``(a, c)`` with ``a r1 b r2 c`` for some ``b``."""
    by_first: dict = {}
    for b, c in r2:
        by_first.setdefault(b, set()).add(c)
    return {(a, c) for a, b in r1 for c in by_first.get(b, ())}


def equivalence(elements: Iterable, key: Callable) -> set:
    elements = list(elements)
    return {(a, b) for a in elements for b in elements if key(a) == key(b)}


def permute(alpha: set, beta: set) -> bool:
    return compose(alpha, beta) == compose(beta, alpha)


def quotient(rel: set, classes: Callable) -> set:
    return {(classes(a), classes(b)) for a, b in rel}


def lifting_check(elements: Sequence, alpha_key: Callable, beta_key: Callable,
                  nu_key: Callable) -> dict:
    """Compare permutability of two equivalences on a finite set with
    permutability of their images on the quotient by a common refinement."""
    alpha = equivalence(elements, alpha_key)
    beta = equivalence(elements, beta_key)
    nu = equivalence(elements, nu_key)
    if not (nu <= alpha and nu <= beta):
        raise ParameterError("the quotienting equivalence must refine both")
    upstairs = permute(alpha, beta)
    downstairs = permute(quotient(alpha, nu_key), quotient(beta, nu_key))
    classes = len({nu_key(e) for e in elements})
    return {"permute": upstairs, "permute_on_quotient": downstairs,
            "quotient_size": classes, "agree": upstairs == downstairs}


# ------------------------------------------------------------- reports

@dataclass
class CaseReport:
    case: str
    params: dict
    links: list = field(default_factory=list)
    reverse_search: dict | None = None
    verdict: str = "unknown"
    details: dict = field(default_factory=dict)
    seconds: float = 0.0

    def to_dict(self) -> dict:
        out = {"schema_version": SCHEMA_VERSION}
        out.update(asdict(self))
        return out

    def summary(self) -> str:
        rev = ""
        if self.reverse_search:
            rs = self.reverse_search
            rev = f"; reverse product {rs['status']} (maxLen {rs['bound']})"
        return f"{self.case} {self.params}: {self.verdict}{rev}"


def _verdict_word(r: bool | None) -> str:
    return {True: "holds", False: "fails", None: "unknown"}[r]


def _combine(values: Iterable[str]) -> str:
    values = list(values)
    if "fail" in values:
        return "fail"
    if "unknown" in values:
        return "unknown"
    return "pass"


def run_witness(case: WitnessCase, max_len: int | None = None, reverse: bool = True) -> CaseReport:
    """Replay the chain link by link, then search the reversed product."""
    t0 = time.perf_counter()
    rep = CaseReport(case.id, dict(case.params))
    parts = []
    for a, b, name in zip(case.chain, case.chain[1:], case.links):
        r = relate(handle(name), a, b)
        rep.links.append({"from": format_word(a), "to": format_word(b), "theory": name,
                          "verdict": _verdict_word(r)})
        parts.append({True: "pass", False: "fail", None: "unknown"}[r])
    iso = []
    for name, w in case.isoterms:
        h = handle(name)
        if isinstance(h.backend, FiniteMonoid):
            res = isoterm_check(h.backend, w, 0)
            ok = isinstance(res, IsIsoterm)
            iso.append({"theory": name, "word": format_word(w), "isoterm": ok})
            parts.append("pass" if ok else "fail")
    if iso:
        rep.details["isoterms"] = iso
    if reverse and case.reverse_links:
        bound = case.bound if max_len is None else max_len
        u, v = case.chain[0], case.chain[-1]
        res = product_member([handle(n) for n in case.reverse_links], u, v, bound)
        rs = {"bound": bound, "theories": list(case.reverse_links),
              "alphabet": [str(a) for a in sorted(set(u) | set(v))]}
        if isinstance(res, Found):
            rs["status"] = "found"
            rs["intermediates"] = [format_word(w) for w in res.intermediates]
            parts.append("fail")
        elif isinstance(res, NotFoundWithinBounds):
            rs["status"] = "exhausted"
            parts.append("pass")
        else:
            rs["status"] = "unknown"
            rs["reason"] = res.reason
            parts.append("unknown")
        rep.reverse_search = rs
    rep.verdict = _combine(parts)
    rep.seconds = round(time.perf_counter() - t0, 3)
    return rep


def _pairs_same_content(letters: str, max_len: int):
    from .words import all_words
    alpha = [Letter(c) for c in letters]
    words = [w for w in all_words(alpha, max_len) if w]
    for u in words:
        for v in words:
            if u != v and set(u) == set(v):
                yield u, v


def _four_link_chain(u: Word, v: Word, p: int, hx: VarietyHandle, hy: VarietyHandle):
    w1 = u * (p + 1) + v * p
    w2 = u * p + v * (p + 1)
    return [(u, w1, hx, hx.name), (w1, w2, hy, hy.name), (w2, v, hx, hx.name)]


def run_four_link(p: int = 2, letters: str = "xyz", max_len: int = 3) -> CaseReport:
    """The 4-link chain ``u θ_X u^{p+1}v^p θ_Y u^p v^{p+1} θ_X v`` with
    ``X = A_p ∨ SL`` and ``Y = C2`` for every pair of equal content."""
    t0 = time.perf_counter()
    if p < 2:
        raise ParameterError("p >= 2")
    x_name, y_name = f"A{p}vSL", "C:2"
    hx, hy = handle(x_name), handle(y_name)
    rep = CaseReport("remark-4perm", {"p": p, "letters": letters, "max_len": max_len})
    checked = 0
    failures = []
    for u, v in _pairs_same_content(letters, max_len):
        checked += 1
        if not all(relate(h, a, b) for a, b, h, _ in _four_link_chain(u, v, p, hx, hy)):
            failures.append([format_word(u), format_word(v)])
    # the report lists the links for one representative pair
    for a, b, h, name in _four_link_chain(Word([Letter("x"), Letter("y")]),
                                       Word([Letter("y"), Letter("x")]), p, hx, hy):
        rep.links.append({"from": format_word(a), "to": format_word(b), "theory": name,
                          "verdict": _verdict_word(relate(h, a, b))})
    rep.details = {"pairs_checked": checked, "failures": failures[:20]}
    rep.verdict = "pass" if checked and not failures else "fail"
    rep.seconds = round(time.perf_counter() - t0, 3)
    return rep


def run_lifting(max_power: int = 6) -> CaseReport:
    """Powers of one letter with A2 (parity), C2 (one versus many) and their
    intersection, which has three classes."""
    t0 = time.perf_counter()
    elements = list(range(1, max_power + 1))
    parity = lambda k: k % 2
    many = lambda k: min(k, 2)
    both = lambda k: (parity(k), many(k))
    res = lifting_check(elements, parity, many, both)
    rep = CaseReport("lifting-sanity", {"max_power": max_power})
    rep.details = res
    rep.verdict = "pass" if res["agree"] else "fail"
    rep.seconds = round(time.perf_counter() - t0, 3)
    return rep


_WITNESS_BUILDERS: dict[str, Callable[..., dict]] = {
    "nonperm-i": _case_i,
    "nonperm-ii": _case_ii,
    "nonperm-iii": _case_iii,
    "nonperm-iv": _case_iv,
    "nonperm-v": _case_v,
    "nonperm-vi": _case_vi,
    "nonperm-vii": _case_vii,
    "nonperm-viii": _case_viii,
    "wn-pair": _case_wn,
    "cnm-pair": _case_cnm,
}

_EXTRA_CASES: dict[str, dict] = {}


def register_case(data: dict) -> WitnessCase:
    """Add a chain case given as plain data (words and variety names)."""
    case = WitnessCase.from_dict(data)
    _EXTRA_CASES[case.id] = data
    return case


def load_cases(path: str) -> list[WitnessCase]:
    with open(path) as fh:
        data = json.load(fh)
    return [register_case(d) for d in (data if isinstance(data, list) else [data])]


def case_ids() -> list[str]:
    return list(_WITNESS_BUILDERS) + ["remark-4perm", "lifting-sanity"] + list(_EXTRA_CASES)


def witness_case(case_id: str, **params) -> WitnessCase:
    if case_id in _WITNESS_BUILDERS:
        return WitnessCase.from_dict(_WITNESS_BUILDERS[case_id](**params))
    if case_id in _EXTRA_CASES:
        return WitnessCase.from_dict(_EXTRA_CASES[case_id])
    raise ParameterError(f"unknown case {case_id!r}")


def run_case(case_id: str, max_len: int | None = None, **params) -> CaseReport:
    """Run a registered case; unknown ids raise :class:`ParameterError`."""
    if case_id == "remark-4perm":
        return run_four_link(**params)
    if case_id == "lifting-sanity":
        return run_lifting(**params)
    try:
        case = witness_case(case_id, **params)
    except TypeError as exc:
        raise ParameterError(f"bad parameters for {case_id}: {exc}") from None
    return run_witness(case, max_len)
