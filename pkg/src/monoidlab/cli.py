"""Command-line front end and suite runner."""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import checks, perm
from .catalog import Identity, IdentitySystem, ParameterError, catalog_lookup, parse_identity, variety_basis
from .deciders import decide, parse_theory
from .engine import Proved, RefutedByModel, derive
from .freemodels import models_for
from .lattice import FIGURES, NotALattice, check_distributive, forbidden_sublattice, poset_from_dict
from .monoid import (CounterIdentity, IsIsoterm, MonoidError, isoterm_check, parse_monoid,
                     satisfies, to_json)
from .words import ParseError, Word, decompose, format_word, multiple, parse_word, simple

EXIT = {"pass": 0, "fail": 1, "unknown": 2}
USAGE = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _emit(args, text: str, payload: dict | None = None):
    print(text)
    if payload is not None and getattr(args, "out", None):
        with open(args.out, "w") as fh:
            json.dump(payload, fh, indent=2)


def _word(text: str) -> Word:
    if ":" in text:
        w = catalog_lookup(text)
        if not isinstance(w, Word):
            raise UsageError(f"{text!r} does not name a word")
        return w
    return parse_word(text)


def _identity(text: str) -> Identity:
    if "=" in text or "≈" in text:
        return parse_identity(text)
    ident = catalog_lookup(text)
    if not isinstance(ident, Identity):
        raise UsageError(f"{text!r} does not name an identity")
    return ident


def _assignment(m, assignment: dict) -> str:
    return ", ".join(f"{a}->{m.label(i)}" for a, i in sorted(assignment.items(), key=lambda kv: str(kv[0])))


def _system(spec: str) -> IdentitySystem:
    """A basis file (one identity per line), a catalog basis name, or a
    ``;``-separated list of identities and identity names."""
    if os.path.exists(spec):
        with open(spec) as fh:
            lines = [ln.split("#", 1)[0].strip() for ln in fh]
        return IdentitySystem(tuple(parse_identity(ln) for ln in lines if ln), spec)
    if spec.startswith("basis:"):
        return catalog_lookup(spec)
    try:
        return variety_basis(spec)
    except ParameterError:
        return IdentitySystem(tuple(_identity(part.strip()) for part in spec.split(";")), spec)


# ------------------------------------------------------------ subcommands

def cmd_word(args) -> int:
    w = _word(args.text)
    d = decompose(w)
    print(f"word:      {format_word(w)}")
    print(f"length:    {len(w)}")
    print(f"content:   {' '.join(sorted(str(a) for a in set(w))) or '-'}")
    print(f"simple:    {' '.join(str(a) for a in simple(w)) or '-'}")
    print(f"multiple:  {' '.join(sorted(str(a) for a in multiple(w))) or '-'}")
    print("blocks:    " + " | ".join(format_word(b) for b in d.blocks))
    return 0


def cmd_sw(args) -> int:
    spec = args.words if args.words.startswith("sw:") else "sw:" + args.words
    m = parse_monoid(spec)
    problems = m.audit()
    print(f"{m.name}: {m.size} elements")
    if args.elements:
        print(" ".join(m.label(i) for i in range(m.size)))
    print("audit: " + ("ok" if not problems else "; ".join(problems)))
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(to_json(m), fh)
    return EXIT["fail"] if problems else 0


def cmd_check(args) -> int:
    m = parse_monoid(args.monoid)
    ident = _identity(args.identity)
    r = satisfies(m, ident, args.method)
    if r.holds:
        print(f"holds: {m.name} satisfies {ident}")
        return 0
    print(f"fails: {ident} in {m.name}; witness {_assignment(m, r.witness)}")
    return 1


def cmd_isoterm(args) -> int:
    m = parse_monoid(args.monoid)
    w = _word(args.word)
    r = isoterm_check(m, w, args.slack)
    if isinstance(r, IsIsoterm):
        print(f"isoterm: {format_word(w)} ({'rigorous' if r.rigorous else 'bounded'}; {r.reason})")
        return 0
    if isinstance(r, CounterIdentity):
        print(f"not an isoterm: {m.name} satisfies {format_word(w)} = {format_word(r.word)}")
        return 1
    print(f"unknown: no counter-identity within length {r.bound}")
    return 2


def cmd_derive(args) -> int:
    system = _system(args.basis)
    goal = _identity(args.goal)
    models = [parse_monoid(s) for s in args.model]
    if args.builtin_models:
        models += list(models_for(args.basis))
    max_len = args.max_len or max(len(goal.lhs), len(goal.rhs))
    r = derive(system, goal, max_len, args.max_steps, models)
    if isinstance(r, Proved):
        print(f"proved: {goal} ({len(r.chain)} steps)")
        for i, s in enumerate(r.chain, 1):
            print(f"  {i}. {format_word(s.before)} -> {format_word(s.after)}"
                  f"  [{s.rule.name or s.rule}, {s.direction}, at {s.position}]")
        return 0
    if isinstance(r, RefutedByModel):
        print(f"refuted: {r.monoid.name} satisfies the system but not {goal}"
              f" ({_assignment(r.monoid, r.assignment)})")
        return 1
    print(f"unknown: visited {r.visited} words within maxLen {r.max_len}"
          + (" (search space exhausted)" if r.exhausted else "") + (f"; {r.reason}" if r.reason else ""))
    return 2


def cmd_decide(args) -> int:
    th = parse_theory(args.theory)
    ident = _identity(args.identity)
    ok = decide(th, ident)
    print("true" if ok else "false")
    return 0 if ok else 1


def _param(text: str):
    if "=" not in text:
        raise UsageError(f"--param expects key=value, got {text!r}")
    k, v = text.split("=", 1)
    return k.strip(), int(v) if v.strip().lstrip("-").isdigit() else v.strip()


def _pair_report(names, u, v, max_len) -> dict:
    hs = [perm.handle(n) for n in names]
    res = perm.product_member(hs, u, v, max_len)
    out = {"theories": list(names), "from": format_word(u), "to": format_word(v), "bound": max_len}
    if isinstance(res, perm.Found):
        out.update(status="found", intermediates=[format_word(w) for w in res.intermediates])
    elif isinstance(res, perm.NotFoundWithinBounds):
        out.update(status="exhausted", explored=res.explored)
    else:
        out.update(status="unknown", reason=res.reason)
    return out


def cmd_perm(args) -> int:
    if args.cases_file:
        perm.load_cases(args.cases_file)
    if args.list:
        print("\n".join(perm.case_ids()))
        return 0
    if args.case:
        params = dict(_param(p) for p in args.param)
        rep = perm.run_case(args.case, args.max_len, **params)
        lines = [rep.summary()]
        lines += [f"  {l['from']} ~[{l['theory']}] {l['to']}: {l['verdict']}" for l in rep.links]
        _emit(args, "\n".join(lines), rep.to_dict())
        return EXIT[rep.verdict]
    if args.theories and args.pair:
        if "|" not in args.pair:
            raise UsageError('--pair expects "u | v"')
        left, right = args.pair.split("|", 1)
        u, v = _word(left.strip()), _word(right.strip())
        names = [n.strip() for n in re.split(r",(?!\d)", args.theories)]
        max_len = args.max_len or max(8, len(u), len(v))
        orders = {"forward": [names], "reverse": [names[::-1]], "both": [names, names[::-1]]}[args.order]
        reports = [_pair_report(ns, u, v, max_len) for ns in orders]
        for r in reports:
            extra = f" via {', '.join(r['intermediates'])}" if r["status"] == "found" else ""
            print(f"{' o '.join(r['theories'])}: {r['from']} -> {r['to']}: {r['status']}"
                  f" (maxLen {max_len}){extra}")
        if args.out:
            with open(args.out, "w") as fh:
                json.dump({"schema_version": perm.SCHEMA_VERSION, "products": reports}, fh, indent=2)
        statuses = {r["status"] for r in reports}
        if "unknown" in statuses:
            return 2
        return 0 if statuses == {"found"} else 1
    raise UsageError("perm needs --case, --list or --theories with --pair")


def cmd_lattice(args) -> int:
    if args.file:
        with open(args.file) as fh:
            p = poset_from_dict(json.load(fh))
    elif args.figure in FIGURES:
        p = FIGURES[args.figure]()
    else:
        raise UsageError(f"unknown figure {args.figure!r}; choose from {', '.join(FIGURES)}")
    try:
        ok, triple = check_distributive(p)
    except NotALattice as exc:
        print(f"{p.name}: not a lattice ({exc})")
        return 1
    if ok:
        print(f"{p.name}: distributive lattice with {len(p.nodes)} elements")
        return 0
    shape = forbidden_sublattice(p)
    print(f"{p.name}: not distributive; failing triple {triple}"
          + (f"; {shape[0]} on {', '.join(shape[1])}" if shape else ""))
    return 1


# ----------------------------------------------------------------- suite

QUICK_CASES = [("nonperm-i", {}), ("nonperm-ii", {}), ("nonperm-iii", {}), ("nonperm-iv", {}),
               ("nonperm-v", {}), ("remark-4perm", {"p": 2}), ("remark-4perm", {"p": 3}),
               ("lifting-sanity", {}), ("cnm-pair", {})]
FULL_CASES = [("nonperm-vi", {}), ("nonperm-vii", {}), ("nonperm-viii", {}), ("wn-pair", {"n": 2})]
QUICK_CHECKS = ["sw-construction", "dk-basis", "derivations", "decider-audits",
                "structural-predicates", "lattice-figures"]
FULL_CHECKS = ["wn-identities"]


@dataclass
class SuiteReport:
    profile: str
    cases: list = field(default_factory=list)
    checks: list = field(default_factory=list)
    verdict: str = "pass"
    seconds: float = 0.0

    def to_dict(self) -> dict:
        return {"schema_version": perm.SCHEMA_VERSION, "profile": self.profile,
                "cases": self.cases, "checks": self.checks, "verdict": self.verdict,
                "seconds": self.seconds}


def suite_tasks(profile: str) -> list[tuple]:
    if profile not in ("quick", "full"):
        raise UsageError("profile must be quick or full")
    cases = QUICK_CASES + (FULL_CASES if profile == "full" else [])
    names = QUICK_CHECKS + (FULL_CHECKS if profile == "full" else [])
    return [("check", n, {}) for n in names] + [("case", c, p) for c, p in cases]


def _run_task(task: tuple) -> dict:
    kind, name, params = task
    if kind == "check":
        return checks.CHECKS[name]().to_dict()
    return perm.run_case(name, **params).to_dict()


def run_suite(profile: str = "quick", threads: int = 1, tasks: list[tuple] | None = None,
              progress=None) -> SuiteReport:
    """Run every registered check and case of a profile; results keep registry order."""
    t0 = time.perf_counter()
    tasks = suite_tasks(profile) if tasks is None else tasks
    if threads > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_run_task, tasks))
    else:
        results = []
        for t in tasks:
            results.append(_run_task(t))
            if progress:
                progress(results[-1])
    rep = SuiteReport(profile)
    for task, res in zip(tasks, results):
        (rep.checks if task[0] == "check" else rep.cases).append(res)
    verdicts = [r["verdict"] for r in results]
    rep.verdict = perm._combine(verdicts)
    rep.seconds = round(time.perf_counter() - t0, 3)
    return rep


def _line(res: dict) -> str:
    label = res.get("case") or res.get("name")
    params = res.get("params")
    extra = f" {params}" if params else ""
    return f"{res['verdict'].upper():7} {label}{extra} ({res['seconds']:.1f}s)"


def cmd_suite(args) -> int:
    threads = args.threads or os.cpu_count() or 1
    rep = run_suite(args.profile, threads,
                    progress=(lambda r: print(_line(r), flush=True)) if threads == 1 else None)
    if threads > 1:
        for r in rep.checks + rep.cases:
            print(_line(r))
    _emit(args, f"suite {rep.profile}: {rep.verdict} in {rep.seconds:.1f}s", rep.to_dict())
    return EXIT[rep.verdict]


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="monoidlab", description="Monoid identities and fi-permutability checks")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    s = sub.add_parser("word", help="parse and describe a word")
    s.add_argument("text")
    s.set_defaults(func=cmd_word)

    s = sub.add_parser("sw", help="build S(W) for comma-separated words")
    s.add_argument("words")
    s.add_argument("--elements", action="store_true")
    s.add_argument("--out")
    s.set_defaults(func=cmd_sw)

    s = sub.add_parser("check", help="does a monoid satisfy an identity")
    s.add_argument("--monoid", required=True)
    s.add_argument("--identity", required=True)
    s.add_argument("--method", default="auto", choices=["auto", "naive", "dfs", "walk", "factor"])
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("isoterm", help="bounded isoterm check")
    s.add_argument("--monoid", required=True)
    s.add_argument("--word", required=True)
    s.add_argument("--slack", type=int, default=1)
    s.set_defaults(func=cmd_isoterm)

    s = sub.add_parser("derive", help="bounded derivation from an identity system")
    s.add_argument("--basis", required=True)
    s.add_argument("--goal", required=True)
    s.add_argument("--max-len", type=int)
    s.add_argument("--max-steps", type=int, default=100_000)
    s.add_argument("--model", action="append", default=[])
    s.add_argument("--builtin-models", action="store_true",
                   help="also try the verified models registered for the basis")
    s.set_defaults(func=cmd_derive)

    s = sub.add_parser("decide", help="exact decision for small theories")
    s.add_argument("--theory", required=True)
    s.add_argument("--identity", required=True)
    s.set_defaults(func=cmd_decide)

    s = sub.add_parser("perm", help="witness cases and relational products")
    s.add_argument("--case")
    s.add_argument("--param", action="append", default=[])
    s.add_argument("--max-len", type=int)
    s.add_argument("--theories")
    s.add_argument("--pair")
    s.add_argument("--order", choices=["forward", "reverse", "both"], default="forward")
    s.add_argument("--cases-file")
    s.add_argument("--list", action="store_true")
    s.add_argument("--out")
    s.set_defaults(func=cmd_perm)

    s = sub.add_parser("lattice", help="distributivity of a finite lattice")
    s.add_argument("--figure", default="D4vN")
    s.add_argument("--file")
    s.set_defaults(func=cmd_lattice)

    s = sub.add_parser("suite", help="run the verification suite")
    s.add_argument("--profile", default="quick", choices=["quick", "full"])
    s.add_argument("--threads", type=int)
    s.add_argument("--out")
    s.set_defaults(func=cmd_suite)
    return p


def _diagnose(exc: ParseError) -> str:
    msg = f"parse error: {exc}"
    if exc.text:
        msg += f"\n  {exc.text}\n  {' ' * exc.position}^"
    return msg


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "func", None):
            raise UsageError("missing subcommand")
        return args.func(args)
    except ParseError as exc:
        print(_diagnose(exc), file=sys.stderr)
    except (UsageError, ParameterError, MonoidError, FileNotFoundError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
    return USAGE


if __name__ == "__main__":
    sys.exit(main())
