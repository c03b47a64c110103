"""Verification checks run by the suite: each returns a :class:`CheckReport`."""

from __future__ import annotations

import random
import time
from dataclasses import asdict, dataclass, field
from itertools import permutations

from .catalog import (Identity, Permutation, _GENERATORS, c_word, d_generator, d_word,
                      named_identity, variety_basis, w_prime, w_word)
from .deciders import audit, parse_theory
from .engine import (NotInvertible, Proved, derive, invertibility_bfs, invertibility_degree,
                     is_linear_balanced)
from .lattice import FIGURES, NotALattice, check_distributive
from .monoid import (build_sw, cyclic_group, cyclic_monoid, semilattice2, satisfies)
from .words import Letter, Word, decompose, format_word, parse_word


@dataclass
class CheckReport:
    name: str
    verdict: str = "unknown"
    details: dict = field(default_factory=dict)
    seconds: float = 0.0

    def to_dict(self) -> dict:
        return asdict(self)

    def summary(self) -> str:
        return f"{self.name}: {self.verdict}"


def _timed(name: str):
    def wrap(fn):
        def run(*args, **kwargs) -> CheckReport:
            t0 = time.perf_counter()
            rep = CheckReport(name)
            ok = fn(rep, *args, **kwargs)
            rep.verdict = {True: "pass", False: "fail", None: "unknown"}[ok]
            rep.seconds = round(time.perf_counter() - t0, 3)
            return rep
        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        return run
    return wrap


def catalog_words(max_letters: int = 20) -> list[Word]:
    """Defining words of the S(W) monoids the catalog builds, up to a length."""
    words = [parse_word(w) for ws in _GENERATORS.values() for w in ws]
    words += [d_generator(k) for k in range(1, 11)]
    for n in range(0, 3):
        for ps in permutations(range(1, n + 1)):
            for ts in permutations(range(1, n + 1)):
                if n:
                    words.append(w_word(n, Permutation(ps), Permutation(ts)))
    for total in range(0, 3):
        for n in range(total + 1):
            m = total - n
            for rho in permutations(range(1, total + 1)):
                words.append(c_word(n, m, Permutation(rho) if total else None))
                words.append(d_word(n, m, Permutation(rho) if total else None))
    out, seen = [], set()
    for w in words:
        if len(w) <= max_letters and w not in seen:
            seen.add(w)
            out.append(w)
    return out


@_timed("sw-construction")
def sw_construction(rep: CheckReport, max_letters: int = 20) -> bool:
    sizes = {w: build_sw([w]).size for w in ("xy", "xtx")}
    problems = {}
    words = catalog_words(max_letters)
    for w in words:
        m = build_sw([w])
        bad = m.audit()
        if bad:
            problems[format_word(w)] = bad
    rep.details = {"sizes": sizes, "audited": len(words), "problems": problems}
    return sizes == {"xy": 5, "xtx": 7} and not problems


@_timed("dk-basis")
def dk_basis(rep: CheckReport) -> bool:
    results = {}
    for k, w in ((1, "xy"), (2, "xt1x"), (3, "xt1xt2x")):
        m = build_sw([w])
        failed = [str(i) for i in variety_basis(f"D:{k}") if not satisfies(m, i).holds]
        results[f"D:{k}"] = failed
    rep.details = {"failed_identities": results}
    return not any(results.values())


@_timed("wn-identities")
def wn_identities(rep: CheckReport, n: int = 2, xi: Permutation | None = None,
                  eta: Permutation | None = None) -> bool:
    """Which ``w_n[π,τ] ≈ w'_n[π,τ]`` hold in ``S(w_n[ξ,η])``, and whether each
    ``S(w_n[π,τ])`` refutes its own identity."""
    perms = [Permutation(p) for p in permutations(range(1, n + 1))]
    xi = xi or perms[-1]
    eta = eta or perms[0]
    m = build_sw([w_word(n, xi, eta)])
    holds, own = [], []
    for pi in perms:
        for tau in perms:
            ident = Identity(w_word(n, pi, tau), w_prime(n, pi, tau))
            if (pi, tau) != (xi, eta) and satisfies(m, ident).holds:
                holds.append([str(pi), str(tau)])
            if satisfies(build_sw([ident.lhs]), ident).holds:
                own.append([str(pi), str(tau)])
    rep.details = {"xi": str(xi), "eta": str(eta), "pairs_holding": holds,
                   "own_identity_holds": own}
    return len(holds) >= min(3, len(perms) ** 2 - 1) and not own


def _replayed(system, goal, max_len, max_steps) -> dict:
    r = derive(system, goal, max_len, max_steps)
    if isinstance(r, Proved):
        return {"goal": str(goal), "result": "proved", "steps": len(r.chain),
                "replays": r.replay(goal),
                "rules": [s.rule.name or str(s.rule) for s in r.chain]}
    return {"goal": str(goal), "result": type(r).__name__}


@_timed("derivations")
def derivations(rep: CheckReport, ns=(1, 2)) -> bool:
    s3, xxy = named_identity("sigma3"), named_identity("xxy=yxx")
    chains = []
    for n in ns:
        perms = [Permutation(p) for p in permutations(range(1, n + 1))]
        for pi in perms:
            for tau in perms:
                goal = Identity(w_word(n, pi, tau), w_prime(n, pi, tau))
                chains.append(_replayed([s3, xxy], goal, len(goal.lhs), 10**6))
    c00 = Identity(c_word(0, 0), c_word(0, 0, primed=True), "c00")
    goal = Identity(c_word(0, 0, None, 1), c_word(0, 0, None, 1, primed=True))
    chains.append(_replayed([s3, c00], goal, len(goal.lhs), 10**5))
    # soundness: no goal refuted by a model that satisfies the rules is proved
    violations = []
    probes = [(variety_basis("D:2"), Identity(parse_word("xyx"), parse_word("xxy")), "xtx")]
    for system, g, w in probes:
        m = build_sw([w])
        if all(satisfies(m, i).holds for i in system) and not satisfies(m, g).holds:
            if isinstance(derive(system, g, 8, 10**4), Proved):
                violations.append(str(g))
    rep.details = {"chains": chains, "soundness_violations": violations}
    return all(c["result"] == "proved" and c["replays"] for c in chains) and not violations


def audit_pairs() -> list[tuple[str, object]]:
    pairs = [("SL", semilattice2)]
    pairs += [(f"A:{n}", lambda n=n: cyclic_group(n)) for n in range(2, 5)]
    pairs += [(f"C:{n}", lambda n=n: cyclic_monoid(n)) for n in range(1, 4)]
    return pairs


@_timed("decider-audits")
def decider_audits(rep: CheckReport, max_id_len: int = 6) -> bool:
    out = {}
    for name, oracle in audit_pairs():
        a = audit(parse_theory(name), oracle(), max_id_len)
        out[name] = {"checked": a.checked, "disagreements": [str(d[0]) for d in a.disagreements]}
    rep.details = out
    return all(not v["disagreements"] for v in out.values())


def block_oracle(ident: Identity) -> bool:
    """Linear-balanced test written directly from block comparison."""
    u, v = ident.lhs, ident.rhs
    if set(u) != set(v):
        return False
    du, dv = decompose(u), decompose(v)
    if du.separators != dv.separators:
        return False
    for bu, bv in zip(du.blocks, dv.blocks):
        for a in set(bu) | set(bv):
            if bu.count(a) != bv.count(a) or bu.count(a) > 1:
                return False
    return True


def random_identity(rng: random.Random, max_letters: int = 12, alphabet: str = "xyzts") -> Identity:
    def word():
        return Word(Letter(rng.choice(alphabet)) for _ in range(rng.randint(1, max_letters // 2)))
    u = word()
    if rng.random() < 0.5:
        v = Word(rng.sample(list(u), len(u)))
    else:
        v = word()
    return Identity(u, v)


def random_linear_balanced(rng: random.Random, blocks: int = 3) -> Identity:
    """Shared separators with each block a shuffled set of multiple letters."""
    pool = ["x", "y", "z", "w"]
    seps = [Letter("t", i) for i in range(1, blocks)]
    u, v = [], []
    for i in range(blocks):
        chosen = rng.sample(pool, rng.randint(0, 3))
        bu = [Letter(c) for c in chosen]
        bv = bu[:]
        rng.shuffle(bv)
        u += bu
        v += bv
        if i < blocks - 1:
            u.append(seps[i])
            v.append(seps[i])
    ident = Identity(Word(u), Word(v))
    if not is_linear_balanced(ident):
        return random_linear_balanced(rng, blocks)
    return ident


@_timed("structural-predicates")
def structural(rep: CheckReport, seed: int = 7, n_lb: int = 1000, n_inv: int = 200) -> bool:
    rng = random.Random(seed)
    lb_bad = []
    for _ in range(n_lb):
        ident = random_identity(rng)
        if is_linear_balanced(ident) != block_oracle(ident):
            lb_bad.append(str(ident))
    inv_bad = []
    for _ in range(n_inv):
        ident = random_linear_balanced(rng)
        d = invertibility_degree(ident)
        if isinstance(d, NotInvertible) or d != invertibility_bfs(ident, cap=20):
            inv_bad.append(str(ident))
    rep.details = {"linear_balanced_checked": n_lb, "linear_balanced_mismatches": lb_bad[:10],
                   "invertibility_checked": n_inv, "invertibility_mismatches": inv_bad[:10]}
    return not lb_bad and not inv_bad


@_timed("lattice-figures")
def lattice_figures(rep: CheckReport) -> bool:
    out = {}
    for name, build in FIGURES.items():
        p = build()
        try:
            ok, triple = check_distributive(p)
            out[name] = {"lattice": True, "distributive": ok, "failing_triple": triple}
        except NotALattice:
            out[name] = {"lattice": False, "distributive": False}
    rep.details = out
    expected = {"D4vN": True, "ApvC2": True, "M3": False, "N5": False}
    return all(out[k]["distributive"] == v and out[k]["lattice"] for k, v in expected.items())


CHECKS = {
    "sw-construction": sw_construction,
    "dk-basis": dk_basis,
    "wn-identities": wn_identities,
    "derivations": derivations,
    "decider-audits": decider_audits,
    "structural-predicates": structural,
    "lattice-figures": lattice_figures,
}
