"""Named identities, word families, variety bases and permutations."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .words import Letter, ParseError, Word, format_word, parse_word, reverse


class ParameterError(ValueError):
    pass


# -------------------------------------------------------------- permutations

@dataclass(frozen=True)
class Permutation:
    """A bijection on ``{1..n}`` stored as its image list (1-based)."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ParameterError(f"not a permutation: {self.images}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def compose(self, other: Permutation) -> Permutation:
        """``(self ∘ other)(i) = self(other(i))``."""
        if other.n != self.n:
            raise ParameterError("size mismatch")
        return Permutation(tuple(self(other(i)) for i in range(1, self.n + 1)))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, j in enumerate(self.images, 1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def all(cls, n: int) -> Iterator[Permutation]:
        for p in itertools.permutations(range(1, n + 1)):
            yield cls(p)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.images)) + "]"


def perm(*images: int) -> Permutation:
    return Permutation(tuple(images))


def _fit(p: Permutation | None, n: int) -> Permutation:
    # S_0 is identified with S_1, so the empty and 1-point identities coincide
    if p is None:
        return Permutation.identity(n)
    if p.n == n or (n == 0 and p.n <= 1) or (n == 1 and p.n == 0):
        return Permutation.identity(n) if p.n != n else p
    raise ParameterError(f"permutation of size {p.n} where size {n} is needed")


# ---------------------------------------------------------------- identities

@dataclass(frozen=True)
class Identity:
    lhs: Word
    rhs: Word
    name: str | None = field(default=None, compare=False)

    def is_trivial(self) -> bool:
        return self.lhs == self.rhs

    def dual(self) -> Identity:
        name = None if self.name is None else f"dual({self.name})"
        return Identity(reverse(self.lhs), reverse(self.rhs), name)

    def swapped(self) -> Identity:
        return Identity(self.rhs, self.lhs, self.name)

    def letters(self) -> frozenset[Letter]:
        return frozenset(self.lhs) | frozenset(self.rhs)

    def __str__(self) -> str:
        return f"{format_word(self.lhs)} = {format_word(self.rhs)}"


def parse_identity(text: str, name: str | None = None) -> Identity:
    """Parse ``LHS = RHS`` (``≈`` is accepted as well)."""
    for sep in ("≈", "="):
        if text.count(sep) == 1:
            pos = text.index(sep)
            left, right = text[:pos], text[pos + len(sep):]
            try:
                lhs = parse_word(left)
            except ParseError as e:
                raise ParseError(str(e).rsplit(" at position", 1)[0], e.position, text) from None
            try:
                rhs = parse_word(right)
            except ParseError as e:
                raise ParseError(str(e).rsplit(" at position", 1)[0],
                                 pos + len(sep) + e.position, text) from None
            return Identity(lhs, rhs, name)
    raise ParseError("identity needs exactly one '='", len(text), text)


@dataclass(frozen=True)
class IdentitySystem:
    items: tuple[Identity, ...]
    name: str = ""
    cap: int | None = None

    def __iter__(self):
        return iter(self.items)

    def __len__(self) -> int:
        return len(self.items)

    def dual(self) -> IdentitySystem:
        return IdentitySystem(tuple(i.dual() for i in self.items), _dual_name(self.name), self.cap)

    def __add__(self, other: IdentitySystem) -> IdentitySystem:
        return IdentitySystem(self.items + other.items, f"{self.name}+{other.name}", self.cap)

    @property
    def capped(self) -> bool:
        return self.cap is not None


def _dual_name(name: str) -> str:
    m = re.fullmatch(r"Dual\((.*)\)", name)
    return m.group(1) if m else f"Dual({name})"


def L(base: str, index: int = -1) -> Letter:
    return Letter(base, index)


x, y, t = L("x"), L("y"), L("t")


def z(i: int) -> Letter:
    return L("z", i)


def ti(i: int) -> Letter:
    return L("t", i)


_FIXED = {
    "sigma1": ("xysxty", "yxsxty"),
    "sigma2": ("xsytxy", "xsytyx"),
    "sigma3": ("xsxyty", "xsyxty"),
    "alpha1": ("xysxtxhy", "yxsxtxhy"),
    "alpha2": ("xysxtyhx", "yxsxtyhx"),
    "alpha3": ("xysytxhx", "yxsytxhx"),
    "xx=xxx": ("xx", "xxx"),
    "xxy=yxx": ("xxy", "yxx"),
    "xxyy=yyxx": ("xxyy", "yyxx"),
    "xxy=xxyx": ("xxy", "xxyx"),
    "xyx=xyxx": ("xyx", "xyxx"),
    "xxy=xyx": ("xxy", "xyx"),
    "xy=yx": ("xy", "yx"),
    "xy=xyx": ("xy", "xyx"),
    "xyxzx=xxyz": ("xyxzx", "xxyz"),
    "xytxy=yxtxy": ("xytxy", "yxtxy"),
    "xytxy=yxtyx": ("xytxy", "yxtyx"),
    "xytyx=yxtxy": ("xytyx", "yxtxy"),
}


def named_identity(name: str, *params: int) -> Identity:
    """Look up a named identity; ``delta`` takes ``k``, ``gamma`` takes ``k, l``,
    ``xn=xn1`` (x^n ≈ x^(n+1)) and ``xny=yxn`` take ``n``."""
    key = name.lower().replace("σ", "sigma").replace("α", "alpha").replace("β", "beta")
    key = key.replace("δ", "delta").replace("γ", "gamma")
    if key in _FIXED:
        if params:
            raise ParameterError(f"{name} takes no parameters")
        lhs, rhs = _FIXED[key]
        return Identity(parse_word(lhs), parse_word(rhs), key)
    m = re.fullmatch(r"beta([123])", key)
    if m:
        a = named_identity(f"alpha{m.group(1)}")
        return Identity(reverse(a.lhs), reverse(a.rhs), key)
    if key == "delta":
        (k,) = _params(name, params, 1)
        if k < 1:
            raise ParameterError("delta_k needs k >= 1")
        lhs = [x]
        for i in range(1, k + 1):
            lhs += [ti(i), x]
        rhs = [x, x] + [ti(i) for i in range(1, k + 1)]
        return Identity(Word(lhs), Word(rhs), f"delta{k}")
    if key == "gamma":
        k, l = _params(name, params, 2)
        if k < 1 or l < 1:
            raise ParameterError("gamma_{k,l} needs k, l >= 1")
        head: list[Letter] = []
        for i in range(1, k + 1):
            head += [x, ti(i)]
        tail: list[Letter] = []
        for i in range(k + 1, k + l + 1):
            tail += [ti(i), y]
        return Identity(Word(head + [x, y] + tail), Word(head + [y, x] + tail), f"gamma{k},{l}")
    if key == "xn=xn1":
        (n,) = _params(name, params, 1)
        if n < 1:
            raise ParameterError("n >= 1 required")
        return Identity(Word([x] * n), Word([x] * (n + 1)), f"x{n}=x{n + 1}")
    if key == "xny=yxn":
        (n,) = _params(name, params, 1)
        if n < 1:
            raise ParameterError("n >= 1 required")
        return Identity(Word([x] * n + [y]), Word([y] + [x] * n), f"x{n}y=yx{n}")
    raise ParameterError(f"unknown identity {name!r}")


def _params(name, params, k):
    if len(params) != k:
        raise ParameterError(f"{name} takes {k} parameter(s), got {len(params)}")
    return params


# -------------------------------------------------------------- word families

def _zt(lo: int, hi: int) -> list[Letter]:
    out = []
    for i in range(lo, hi + 1):
        out += [z(i), ti(i)]
    return out


def _tz(lo: int, hi: int) -> list[Letter]:
    out = []
    for i in range(lo, hi + 1):
        out += [ti(i), z(i)]
    return out


def _pairs(pi: Permutation, tau: Permutation, n: int, lo: int, hi: int) -> list[Letter]:
    out = []
    for i in range(lo, hi + 1):
        out += [z(pi(i)), z(n + tau(i))]
    return out


def w_word(n: int, pi: Permutation | None = None, tau: Permutation | None = None,
           k: int | None = None, l: int | None = None) -> Word:
    """``w_n[π,τ]``; with ``k, l`` given, the interpolating word ``w_n^{k,l}``."""
    if n < 1:
        raise ParameterError("w_n needs n >= 1")
    pi, tau = _fit(pi, n), _fit(tau, n)
    if k is None:
        k, l = 0, n
    if l is None or not 0 <= k <= l <= n:
        raise ParameterError("need 0 <= k <= l <= n")
    return Word(_zt(1, n) + _pairs(pi, tau, n, 1, k) + [x] + _pairs(pi, tau, n, k + 1, l) + [x]
                + _pairs(pi, tau, n, l + 1, n) + _tz(n + 1, 2 * n))


def w_prime(n: int, pi: Permutation | None = None, tau: Permutation | None = None) -> Word:
    pi, tau = _fit(pi, n), _fit(tau, n)
    return Word(_zt(1, n) + [x, x] + _pairs(pi, tau, n, 1, n) + _tz(n + 1, 2 * n))


def c_word(n: int, m: int, rho: Permutation | None = None, k: int = 0, primed: bool = False) -> Word:
    """``c_{n,m,k}[ρ]`` (``k = 0`` gives ``c_{n,m}``); ``primed`` swaps the leading ``xy``."""
    if min(n, m, k) < 0:
        raise ParameterError("n, m, k must be >= 0")
    rho = _fit(rho, n + m + k)
    lead = [y, x] if primed else [x, y]
    zs = [z(rho(i)) for i in range(1, n + m + k + 1)]
    return Word(_zt(1, n) + lead + [t] + _zt(n + 1, n + m) + [x] + zs + [y]
                + _tz(n + m + 1, n + m + k))


def d_word(n: int, m: int, rho: Permutation | None = None, k: int = 0, primed: bool = False) -> Word:
    return reverse(c_word(n, m, rho, k, primed))


def word_family(name: str, *params: int, perms: Sequence[Permutation] = ()) -> Word:
    """Generic front end: ``c``, ``c'``, ``d``, ``d'`` take ``n, m[, k]`` and ``ρ``;
    ``w`` and ``w'`` take ``n`` and ``π, τ``; ``wkl`` takes ``n, k, l`` and ``π, τ``;
    ``D`` takes ``k`` and gives the defining word of ``D_k``."""
    perms = list(perms)
    if name in ("c", "c'", "d", "d'"):
        if len(params) not in (2, 3) or len(perms) > 1:
            raise ParameterError(f"{name} takes n, m[, k] and one permutation")
        n, m = params[0], params[1]
        k = params[2] if len(params) == 3 else 0
        fn = c_word if name[0] == "c" else d_word
        return fn(n, m, perms[0] if perms else None, k, primed=name.endswith("'"))
    if name in ("w", "w'"):
        if len(params) != 1 or len(perms) not in (0, 2):
            raise ParameterError(f"{name} takes n and two permutations")
        pi, tau = (perms + [None, None])[:2]
        return w_word(params[0], pi, tau) if name == "w" else w_prime(params[0], pi, tau)
    if name == "wkl":
        if len(params) != 3 or len(perms) not in (0, 2):
            raise ParameterError("wkl takes n, k, l and two permutations")
        pi, tau = (perms + [None, None])[:2]
        return w_word(params[0], pi, tau, params[1], params[2])
    if name == "D":
        (k,) = _params(name, params, 1)
        return d_generator(k)
    raise ParameterError(f"unknown word family {name!r}")


def d_generator(k: int) -> Word:
    """Defining word of ``D_k``: ``xy`` for ``k = 1``, else ``x t1 x ... t_{k-1} x``."""
    if k < 1:
        raise ParameterError("k >= 1")
    if k == 1:
        return parse_word("xy")
    out = [x]
    for i in range(1, k):
        out += [ti(i), x]
    return Word(out)


# ------------------------------------------------------------- variety bases

def _w_family(cap: int) -> list[Identity]:
    out = []
    n = 1
    while 6 * n + 2 <= cap:
        for pi in Permutation.all(n):
            for tau in Permutation.all(n):
                out.append(Identity(w_word(n, pi, tau), w_prime(n, pi, tau), f"w{n}{pi}{tau}"))
        n += 1
    return out


def _cd_family(cap: int, with_k: bool) -> list[Identity]:
    out = []
    for total in itertools.count(0):
        # |c_{n,m,k}| = 5 + 3(n + m + k)
        if 5 + 3 * total > cap:
            break
        for n in range(total + 1):
            for m in range(total - n + 1):
                k = total - n - m
                if k and not with_k:
                    continue
                size = n + m + k
                for rho in Permutation.all(size):
                    tag = f"{n},{m},{k}" if with_k else f"{n},{m}"
                    out.append(Identity(c_word(n, m, rho, k), c_word(n, m, rho, k, True), f"c{tag}{rho}"))
                    out.append(Identity(d_word(n, m, rho, k), d_word(n, m, rho, k, True), f"d{tag}{rho}"))
    return out


def _ids(*names) -> list[Identity]:
    out = []
    for n in names:
        if isinstance(n, tuple):
            out.append(named_identity(*n))
        else:
            out.append(named_identity(n))
    return out


DEFAULT_CAP = 20

_INFINITE = {"Q", "R", "A*", "A'"}


def variety_basis(name: str, cap: int | None = None) -> IdentitySystem:
    """Finite identity basis (truncated by generated word length for infinite ones)."""
    base, params = _split_name(name)
    if base in _INFINITE:
        cap = DEFAULT_CAP if cap is None else cap
        if cap < 1:
            raise ParameterError("cap >= 1 required")
    else:
        cap = None
    items: list[Identity]
    if base == "K":
        items = _ids("xxy=xxyx", "xyx=xyxx", "xxyy=yyxx")
    elif base == "N":
        items = _ids("xx=xxx", "xxy=yxx", "xyxzx=xxyz", "sigma2", "sigma3")
    elif base == "P":
        (n,) = _need(base, params, 1)
        items = _ids(("xn=xn1", n), ("xny=yxn", n), "xxy=xyx")
    elif base == "Q":
        r, s = _need(base, params, 2)
        if not (1 <= r <= 3 and 1 <= s <= 3):
            raise ParameterError("Q_{r,s} needs 1 <= r, s <= 3")
        items = _ids("xx=xxx", "xxy=yxx", "sigma3")
        items += _ids(*[f"alpha{i}" for i in (1, 2, 3) if i != r])
        items += _ids(*[f"beta{j}" for j in (1, 2, 3) if j != s])
        items += _cd_family(cap, with_k=False)
    elif base == "R":
        items = _ids("xx=xxx", "xxy=yxx", "sigma1", "sigma2") + _w_family(cap)
    elif base == "D":
        (k,) = _need(base, params, 1, allow_inf=True)
        items = _ids("xx=xxx", "xxy=yxx", "sigma1", "sigma2", "sigma3")
        if k is not None:
            items.append(named_identity("delta", k))
    elif base == "E":
        items = _ids("xx=xxx", "xxyy=yyxx", ("delta", 1))
    elif base == "O":
        items = _ids("sigma2", "sigma3")
    elif base == "A":
        items = _ids("xx=xxx", "xxy=yxx")
    elif base == "A*":
        items = _ids("xx=xxx", "xxy=yxx") + _w_family(cap)
    elif base == "A'":
        items = _ids("xx=xxx", "xxy=yxx") + _w_family(cap)
        items += _cd_family(cap, with_k=True)
    elif base == "C":
        (n,) = _need(base, params, 1)
        items = _ids(("xn=xn1", n), "xy=yx")
    elif base == "LRB":
        items = _ids("xy=xyx")
    else:
        raise ParameterError(f"no identity basis for {name!r}")
    label = name if cap is None else f"{name}:cap={cap}"
    return IdentitySystem(tuple(items), label, cap)


def _need(base, params, k, allow_inf=False):
    if allow_inf and params == ("inf",):
        return (None,)
    if len(params) != k:
        raise ParameterError(f"{base} takes {k} parameter(s)")
    try:
        return tuple(int(p) for p in params)
    except ValueError:
        raise ParameterError(f"bad parameters for {base}: {params}") from None


def _split_name(name: str) -> tuple[str, tuple[str, ...]]:
    name = name.strip()
    if ":" in name:
        base, rest = name.split(":", 1)
        return base, tuple(p.strip() for p in rest.split(","))
    m = re.fullmatch(r"([A-Za-z]+?)(\d+|inf|∞)", name)
    if m and m.group(1) in ("D", "C", "P", "A", "Z"):
        return m.group(1), ("inf" if m.group(2) in ("inf", "∞") else m.group(2),)
    return name, ()


# --------------------------------------------------------- variety registry

@dataclass(frozen=True)
class VarietyEntry:
    """How a named variety is represented.

    ``kind`` is ``"exact"`` (decider theory string), ``"monoid"`` (generating
    words of an S(W)) or ``"basis"`` (identity system name).
    """

    name: str
    kind: str
    theory: str | None = None
    words: tuple[Word, ...] = ()
    basis: str | None = None
    dual: bool = False


_GENERATORS = {
    "L": ("xtxysy",),
    "M": ("xytxsy",),
    "Z1": ("xysxtxhy",),
    "Z2": ("xysxtyhx",),
    "Z3": ("xysytxhx",),
}


def resolve_variety(name: str) -> VarietyEntry:
    """Resolve a CLI-style variety name such as ``SL``, ``A:3``, ``C:2``,
    ``D:2``, ``L``, ``Z3``, ``E``, ``Dual(E)``, ``M^d``."""
    name = name.strip()
    m = re.fullmatch(r"Dual\((.*)\)", name) or re.fullmatch(r"(.*)\^d", name)
    if m:
        inner = resolve_variety(m.group(1))
        return VarietyEntry(name, inner.kind, inner.theory, inner.words, inner.basis, not inner.dual)
    if name in _GENERATORS:
        return VarietyEntry(name, "monoid", words=tuple(parse_word(w) for w in _GENERATORS[name]))
    base, params = _split_name(name)
    if base in ("T", "SL", "LRB", "TRIVIAL", "FULL"):
        return VarietyEntry(name, "exact", theory=name)
    if re.fullmatch(r"A\d+vSL", name) or base in ("A", "C", "COM") and params:
        return VarietyEntry(name, "exact", theory=name)
    if base == "D" and params and params[0] != "inf":
        return VarietyEntry(name, "monoid", words=(d_generator(int(params[0])),))
    if base in ("K", "N", "P", "Q", "R", "E", "O", "A", "A*", "A'", "D"):
        return VarietyEntry(name, "basis", basis=name)
    raise ParameterError(f"unknown variety {name!r}")


def parse_perm(text: str) -> Permutation:
    text = text.strip().strip("[]")
    if not text:
        return Permutation(())
    return Permutation(tuple(int(p) for p in text.split(",")))


def catalog_lookup(spec: str):
    """Resolve CLI catalog addresses: ``sigma1``, ``delta:3``, ``gamma:2,1``,
    ``c:1,1:rho=[2,1]``, ``w:2:pi=[2,1]:tau=[1,2]``, ``basis:Q:1,2:cap=18``.

    Returns an Identity, a Word or an IdentitySystem.
    """
    parts = spec.split(":")
    head = parts[0]
    if head == "basis":
        cap = None
        rest = []
        for p in parts[1:]:
            if p.startswith("cap="):
                cap = int(p[4:])
            else:
                rest.append(p)
        return variety_basis(":".join(rest), cap)
    kw = {}
    nums: list[int] = []
    for p in parts[1:]:
        if "=" in p:
            k, v = p.split("=", 1)
            kw[k] = parse_perm(v)
        elif p:
            nums += [int(v) for v in p.split(",")]
    if head in ("c", "c'", "d", "d'"):
        return word_family(head, *nums, perms=[kw["rho"]] if "rho" in kw else [])
    if head in ("w", "w'", "wkl"):
        perms = [kw["pi"], kw["tau"]] if "pi" in kw else []
        return word_family(head, *nums, perms=perms)
    return named_identity(head, *nums)
