"""Shared strategies and brute-force oracles."""

from itertools import product

from hypothesis import strategies as st

from monoidlab.words import Letter, Word


def letters(alphabet="xyzt"):
    return st.sampled_from([Letter(c) for c in alphabet])


def words(alphabet="xyzt", min_size=0, max_size=6):
    return st.lists(letters(alphabet), min_size=min_size, max_size=max_size).map(Word)


def naive_factors(w):
    """All factors of ``w`` by slicing, with the empty word."""
    w = tuple(w)
    return {w[i:j] for i in range(len(w) + 1) for j in range(i, len(w) + 1)}


def naive_sw_holds(defining, lhs, rhs):
    """Satisfaction in S(W) computed on labels: a value is its concatenated
    label if that is a factor of some defining word, else zero."""
    facs = set().union(*(naive_factors(w) for w in defining))
    elems = sorted(facs, key=lambda t: (len(t), t))
    lets = sorted(set(lhs) | set(rhs))

    def value(word, env):
        out = ()
        for a in word:
            out = out + env[a]
            if out not in facs:
                return None
        return out

    for choice in product(elems + [None], repeat=len(lets)):
        env = dict(zip(lets, choice))
        if any(v is None for v in choice):
            # zero absorbs: a side is zero iff it contains a zero letter
            lz = any(env[a] is None for a in lhs)
            rz = any(env[a] is None for a in rhs)
            if lz != rz:
                lv = None if lz else value(lhs, env)
                rv = None if rz else value(rhs, env)
                if lv != rv:
                    return False
            continue
        if value(lhs, env) != value(rhs, env):
            return False
    return True


ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}")
