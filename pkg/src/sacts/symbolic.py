"""Semi-decision procedures for element-level criteria on possibly infinite monoids.

Searches run inside an explicit :class:`Budget`.  A search can only ever
produce *witnesses*; statements about infinitely many elements come from a
backend's declared facts, each carrying a justification that is reported
in the verdict certificate.  Everything else is Unknown.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product

from .core import FiniteMonoid
from .errors import InputError
from .verdict import Verdict, fails, holds, unknown


@dataclass(frozen=True)
class Budget:
    max_norm: int = 3
    max_n: int = 3

    def __post_init__(self):
        if self.max_norm < 1 or self.max_n < 1:
            raise InputError("budget bounds must be positive")

    def to_dict(self):
        return {"max_norm": self.max_norm, "max_n": self.max_n}


@dataclass(frozen=True)
class Fact:
    value: bool
    name: str
    justification: str

    def to_dict(self):
        return {"fact": self.name, "justification": self.justification}


class SymbolicMonoid:
    name = "abstract"
    finite = False
    declared_facts: dict[str, str] = {}

    identity = None

    def multiply(self, x, y):
        raise NotImplementedError

    def norm(self, x) -> int:
        raise NotImplementedError

    def elements(self, k: int) -> list:
        """All elements of norm ≤ k in a fixed order (norm first)."""
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, x) -> str:
        return str(x)

    def power(self, x, n: int):
        r = self.identity
        for _ in range(n):
            r = self.multiply(r, x)
        return r

    # Fact hooks return a Fact or None when the declared facts are silent.
    def fact_right_invertible(self, x):
        return None

    def fact_left_cancellative(self, x):
        return None

    def fact_cohopfian_element(self, z, x):
        return None

    def has_fact(self, name):
        return name in self.declared_facts

    def _fact(self, name, value):
        return Fact(value, name, self.declared_facts[name])


class FiniteTableMonoid(SymbolicMonoid):
    """Wraps a FiniteMonoid; every quantifier is exhausted, so no facts are needed."""

    finite = True

    def __init__(self, monoid: FiniteMonoid, name="finite"):
        self.monoid = monoid
        self.name = name
        self.identity = monoid.identity
        self.declared_facts = {"finite": f"carrier has {monoid.size} elements; every search is exhaustive"}
        if monoid.is_commutative():
            self.declared_facts["commutative"] = "checked on the full table"

    @property
    def order(self):
        return self.monoid.size

    def multiply(self, x, y):
        return self.monoid.table[x][y]

    def norm(self, x):
        return 0

    def elements(self, k):
        return list(range(self.monoid.size))

    def parse(self, text):
        text = text.strip()
        if self.monoid.labels and text in self.monoid.labels:
            return self.monoid.labels.index(text)
        try:
            v = int(text)
        except ValueError:
            raise InputError(f"not an element of {self.name}: {text!r}") from None
        if not 0 <= v < self.monoid.size:
            raise InputError(f"element {v} out of range")
        return v

    def format(self, x):
        return self.monoid.name(x)


class NatAdd(SymbolicMonoid):
    """(ℕ, +); the norm of n is n."""

    name = "nat-add"
    identity = 0
    declared_facts = {
        "commutative": "m + n = n + m",
        "cancellative": "m + a = m + b implies a = b",
        "units": "m + n = 0 forces m = n = 0, so only 0 is invertible",
        "cohopfian-element": "n·x + z = (n+1)·x + t forces t = z - x, which lies in ℕ iff z >= x",
    }

    def multiply(self, x, y):
        return x + y

    def norm(self, x):
        return x

    def elements(self, k):
        return list(range(k + 1))

    def parse(self, text):
        try:
            v = int(text)
        except ValueError:
            raise InputError(f"not a natural number: {text!r}") from None
        if v < 0:
            raise InputError(f"not a natural number: {text!r}")
        return v

    def fact_right_invertible(self, x):
        return self._fact("units", x == 0)

    def fact_left_cancellative(self, x):
        return self._fact("cancellative", True)

    def fact_cohopfian_element(self, z, x):
        return self._fact("cohopfian-element", z >= x)


class FreeMonoid(SymbolicMonoid):
    """Words over the first k letters a, b, c, …; the norm is the length."""

    def __init__(self, k: int):
        if not 1 <= k <= 26:
            raise InputError("free monoid rank must be between 1 and 26")
        self.k = k
        self.name = f"free:{k}"
        self.identity = ()
        self.letters = "abcdefghijklmnopqrstuvwxyz"[:k]
        self.declared_facts = {
            "cancellative": "uw = uv implies w = v by comparing letters after the prefix u",
            "units": "lengths add, so uv = 1 forces u = v = 1",
            "cohopfian-element": "x^n z = x^(n+1) t iff z = x t (cancel x^n), i.e. x is a prefix of z",
        }
        if k == 1:
            self.declared_facts["commutative"] = "a^i a^j = a^(i+j) = a^j a^i"

    def multiply(self, x, y):
        return x + y

    def norm(self, x):
        return len(x)

    def elements(self, k):
        return [w for n in range(k + 1) for w in product(range(self.k), repeat=n)]

    def parse(self, text):
        text = text.strip()
        if text in ("1", "", "ε"):
            return ()
        try:
            return tuple(self.letters.index(ch) for ch in text)
        except ValueError:
            raise InputError(f"not a word over {self.letters}: {text!r}") from None

    def format(self, x):
        return "".join(self.letters[i] for i in x) or "1"

    def fact_right_invertible(self, x):
        return self._fact("units", len(x) == 0)

    def fact_left_cancellative(self, x):
        return self._fact("cancellative", True)

    def fact_cohopfian_element(self, z, x):
        return self._fact("cohopfian-element", z[:len(x)] == x)


_BICYCLIC_TOKEN = re.compile(r"\s*([bc1])(?:\^(\d+))?\s*")


class Bicyclic(SymbolicMonoid):
    """⟨b, c | bc = 1⟩ with normal forms c^i b^j stored as (i, j)."""

    name = "bicyclic"
    identity = (0, 0)
    declared_facts = {
        "right-invertible": "c^i b^j · y always keeps at least i leading c's, and b^j c^j = 1; "
                            "so c^i b^j is right invertible iff i = 0",
        "left-cancellative": "c^i · c^k b^l = c^(i+k) b^l is injective in (k, l), while for j > 0 "
                             "b^j · c^j b = b^(j-1) b = b^j · 1; so c^i b^j is left cancellative iff j = 0",
    }

    def multiply(self, x, y):
        i, j = x
        k, l = y
        if j >= k:
            return (i, j - k + l)
        return (i + k - j, l)

    def norm(self, x):
        return x[0] + x[1]

    def elements(self, k):
        return [(i, n - i) for n in range(k + 1) for i in range(n + 1)]

    def parse(self, text):
        text = text.strip()
        if not text:
            raise InputError("empty bicyclic word")
        pos, x = 0, self.identity
        while pos < len(text):
            m = _BICYCLIC_TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise InputError(f"bad bicyclic word {text!r} at column {pos + 1}")
            gen, exp = m.group(1), int(m.group(2) or 1)
            if gen != "1":
                g = (0, 1) if gen == "b" else (1, 0)
                for _ in range(exp):
                    x = self.multiply(x, g)
            pos = m.end()
        return x

    def format(self, x):
        i, j = x
        if i == j == 0:
            return "1"
        part = lambda g, e: "" if e == 0 else g if e == 1 else f"{g}^{e}"
        return part("c", i) + part("b", j)

    def fact_right_invertible(self, x):
        return self._fact("right-invertible", x[0] == 0)

    def fact_left_cancellative(self, x):
        return self._fact("left-cancellative", x[1] == 0)


def get_backend(spec: str, load_monoid=None) -> SymbolicMonoid:
    """``finite:<file>``, ``nat-add``, ``free:<k>`` or ``bicyclic``."""
    if spec == "nat-add":
        return NatAdd()
    if spec == "bicyclic":
        return Bicyclic()
    if spec.startswith("free:"):
        try:
            return FreeMonoid(int(spec[5:]))
        except ValueError:
            raise InputError(f"bad free monoid rank in {spec!r}") from None
    if spec.startswith("finite:"):
        if load_monoid is None:
            from .textio import load_monoid
        return FiniteTableMonoid(load_monoid(spec[7:]), spec)
    raise InputError(f"unknown backend {spec!r}; use finite:<file>, nat-add, free:<k> or bicyclic")


# -- element criteria -----------------------------------------------------------

def _cert(S, budget, **extra):
    c = {"backend": S.name, "budget": budget.to_dict()}
    c.update(extra)
    return c


def right_invertible(S: SymbolicMonoid, x, budget: Budget = Budget()) -> Verdict:
    prop = "right-invertible"
    pool = S.elements(budget.max_norm)
    for y in pool:
        if S.multiply(x, y) == S.identity:
            return holds(prop, _cert(S, budget, searched=len(pool)),
                         {"x": S.format(x), "inverse": S.format(y)})
    fact = S.fact_right_invertible(x)
    if fact is not None and not fact.value:
        return fails(prop, {"x": S.format(x)}, _cert(S, budget, **fact.to_dict()))
    if S.finite:
        return fails(prop, {"x": S.format(x)}, _cert(S, budget, exhaustive=len(pool)))
    if fact is not None and fact.value:
        return holds(prop, _cert(S, budget, **fact.to_dict()), {"x": S.format(x)})
    return unknown(prop, _cert(S, budget, searched=len(pool)), {"x": S.format(x)})


def left_cancellative(S: SymbolicMonoid, x, budget: Budget = Budget()) -> Verdict:
    prop = "left-cancellative"
    pool = S.elements(budget.max_norm)
    first = {}
    for a in pool:
        p = S.multiply(x, a)
        if p in first:
            return fails(prop, {"x": S.format(x), "pair": [S.format(a), S.format(first[p])]},
                         _cert(S, budget, searched=len(pool)))
        first[p] = a
    fact = S.fact_left_cancellative(x)
    if fact is not None and fact.value:
        return holds(prop, _cert(S, budget, **fact.to_dict()), {"x": S.format(x)})
    if S.finite:
        return holds(prop, _cert(S, budget, exhaustive=len(pool)), {"x": S.format(x)})
    extra = fact.to_dict() if fact is not None else {}
    return unknown(prop, _cert(S, budget, searched=len(pool), **extra), {"x": S.format(x)})


def monoid_right_hopfian(S: SymbolicMonoid, budget: Budget = Budget()) -> Verdict:
    """Right Hopfian iff every right invertible element is left cancellative."""
    prop = "right-hopfian"
    pool = S.elements(budget.max_norm)
    for x in pool:
        ri = right_invertible(S, x, budget)
        if not ri.holds:
            continue
        lc = left_cancellative(S, x, budget)
        if lc.fails:
            w = {"x": S.format(x), "inverse": ri.witness.get("inverse"), "pair": lc.witness["pair"]}
            return fails(prop, w, _cert(S, budget, scanned=len(pool)))
    if S.finite:
        return holds(prop, _cert(S, budget, exhaustive=len(pool)))
    if S.has_fact("commutative"):
        return holds(prop, _cert(S, budget, rule="commutative monoids are right Hopfian: "
                                 "xy = 1 = yx makes x a unit, hence cancellative",
                                 fact="commutative", justification=S.declared_facts["commutative"]))
    if S.has_fact("cancellative"):
        return holds(prop, _cert(S, budget, rule="every element is left cancellative",
                                 fact="cancellative", justification=S.declared_facts["cancellative"]))
    return unknown(prop, _cert(S, budget, scanned=len(pool)))


def monoid_right_cohopfian(S: SymbolicMonoid, budget: Budget = Budget()) -> Verdict:
    """Right co-Hopfian iff every left cancellative element is right invertible."""
    prop = "right-cohopfian"
    pool = S.elements(budget.max_norm)
    for x in pool:
        lc = left_cancellative(S, x, budget)
        if not lc.holds:
            continue
        ri = right_invertible(S, x, budget)
        if ri.fails:
            w = {"x": S.format(x), "left_cancellative": lc.certificate, "right_invertible": ri.certificate}
            return fails(prop, w, _cert(S, budget, scanned=len(pool)))
    if S.finite:
        return holds(prop, _cert(S, budget, exhaustive=len(pool)))
    return unknown(prop, _cert(S, budget, scanned=len(pool)))


def _n_range(S, budget):
    # on a finite monoid the chains of x^n S and ker λ_{x^n} settle within |S| steps
    top = max(budget.max_n, S.order) if S.finite else budget.max_n
    return range(1, top + 1)


def _hopfian_violation(S, x, n, pool):
    """(s, t) with x^{n+1}s = x^{n+1}t but x^n s ≠ x^n t, or None."""
    xn, xn1 = S.power(x, n), S.power(x, n + 1)
    groups: dict = {}
    for s in pool:
        key = S.multiply(xn1, s)
        val = S.multiply(xn, s)
        seen = groups.setdefault(key, {})
        for v, t in seen.items():
            if v != val:
                return s, t
        seen.setdefault(val, s)
    return None


def strongly_hopfian_element(S: SymbolicMonoid, x, budget: Budget = Budget()) -> Verdict:
    """Is there an n with x^{n+1}s = x^{n+1}t ⇒ x^n s = x^n t for all s, t?"""
    prop = "strongly-hopfian-element"
    if x == S.identity:
        return holds(prop, _cert(S, budget, rule="identity"), {"x": S.format(x), "n": 1})
    if not S.finite:
        fact = S.fact_left_cancellative(x)
        if fact is not None and fact.value:
            return holds(prop, _cert(S, budget, rule="x left cancellative, so x^(n+1) cancels",
                                     **fact.to_dict()), {"x": S.format(x), "n": 1})
    pool = S.elements(budget.max_norm)
    per_n = []
    for n in _n_range(S, budget):
        v = _hopfian_violation(S, x, n, pool)
        if v is None:
            if S.finite:
                return holds(prop, _cert(S, budget, exhaustive=len(pool)), {"x": S.format(x), "n": n})
            return unknown(prop, _cert(S, budget, searched=len(pool), open_n=n,
                                       violations=per_n), {"x": S.format(x)})
        per_n.append({"n": n, "s": S.format(v[0]), "t": S.format(v[1])})
    cert = _cert(S, budget, searched=len(pool))
    if S.finite:
        cert["exhaustive"] = True
    else:
        cert["bounded_n"] = budget.max_n
    return fails(prop, {"x": S.format(x), "violations": per_n}, cert)


def strongly_cohopfian_element(S: SymbolicMonoid, z, x, budget: Budget = Budget()) -> Verdict:
    """Is there n and t with x^n z = x^{n+1} t?"""
    prop = "strongly-cohopfian-element"
    pool = S.elements(budget.max_norm)
    wit = {"z": S.format(z), "x": S.format(x)}
    for n in _n_range(S, budget):
        lhs = S.multiply(S.power(x, n), z)
        xn1 = S.power(x, n + 1)
        for t in pool:
            if S.multiply(xn1, t) == lhs:
                return holds(prop, _cert(S, budget, searched=len(pool)), dict(wit, n=n, t=S.format(t)))
    fact = S.fact_cohopfian_element(z, x)
    if fact is not None and not fact.value:
        return fails(prop, wit, _cert(S, budget, **fact.to_dict()))
    if S.finite:
        return fails(prop, wit, _cert(S, budget, exhaustive=len(pool)))
    if fact is not None and fact.value:
        return holds(prop, _cert(S, budget, **fact.to_dict()), wit)
    return unknown(prop, _cert(S, budget, searched=len(pool)), wit)


def monoid_strongly_hopfian(S: SymbolicMonoid, budget: Budget = Budget()) -> Verdict:
    return _forall("strongly-hopfian", S, budget,
                   ((x,) for x in S.elements(budget.max_norm)),
                   lambda x: strongly_hopfian_element(S, x, budget))


def monoid_strongly_cohopfian(S: SymbolicMonoid, budget: Budget = Budget()) -> Verdict:
    pool = S.elements(budget.max_norm)
    return _forall("strongly-cohopfian", S, budget,
                   ((z, x) for x in pool for z in pool),
                   lambda z, x: strongly_cohopfian_element(S, z, x, budget))


def _forall(prop, S, budget, args, check):
    n = 0
    unresolved = 0
    for a in args:
        n += 1
        v = check(*a)
        if v.fails:
            return fails(prop, v.witness, _cert(S, budget, checked=n, cause=v.certificate))
        if not v.holds:
            unresolved += 1
    if S.finite and unresolved == 0:
        return holds(prop, _cert(S, budget, exhaustive=n))
    return unknown(prop, _cert(S, budget, checked=n, unresolved=unresolved))


CRITERIA = {
    "right-hopfian": ("monoid", monoid_right_hopfian),
    "right-cohopfian": ("monoid", monoid_right_cohopfian),
    "strongly-hopfian": ("monoid", monoid_strongly_hopfian),
    "strongly-cohopfian": ("monoid", monoid_strongly_cohopfian),
    "right-invertible": ("x", right_invertible),
    "left-cancellative": ("x", left_cancellative),
    "strongly-hopfian-element": ("x", strongly_hopfian_element),
    "strongly-cohopfian-element": ("zx", strongly_cohopfian_element),
}


def evaluate(S: SymbolicMonoid, criterion: str, budget: Budget = Budget(), x=None, z=None) -> Verdict:
    try:
        kind, fn = CRITERIA[criterion]
    except KeyError:
        raise InputError(f"unknown criterion {criterion!r}; choose from {', '.join(CRITERIA)}") from None
    if kind == "monoid":
        return fn(S, budget)
    if x is None:
        raise InputError(f"{criterion} needs --x")
    xe = S.parse(x)
    if kind == "x":
        return fn(S, xe, budget)
    if z is None:
        raise InputError(f"{criterion} needs --z")
    return fn(S, S.parse(z), xe, budget)


def recheck(S: SymbolicMonoid, verdict: Verdict) -> bool:
    """Re-verify a witness by direct multiplication in the backend.

    Returns True when the witness is closed evidence for the verdict's status,
    False when it does not check out.  Fact-based verdicts without a concrete
    witness have nothing to recompute and return True.
    """
    w = verdict.witness or {}
    p = S.parse
    mul = S.multiply
    prop = verdict.property
    if prop in ("right-invertible", "right-hopfian") and "inverse" in w and w["inverse"] is not None:
        if mul(p(w["x"]), p(w["inverse"])) != S.identity:
            return False
    if prop in ("left-cancellative", "right-hopfian") and "pair" in w:
        x, (a, b) = p(w["x"]), map(p, w["pair"])
        if a == b or mul(x, a) != mul(x, b):
            return False
    if prop == "strongly-hopfian-element" and "violations" in w:
        x = p(w["x"])
        for v in w["violations"]:
            n, s, t = v["n"], p(v["s"]), p(v["t"])
            xn, xn1 = S.power(x, n), S.power(x, n + 1)
            if mul(xn1, s) != mul(xn1, t) or mul(xn, s) == mul(xn, t):
                return False
    if prop == "strongly-cohopfian-element" and "t" in w:
        x, z, t, n = p(w["x"]), p(w["z"]), p(w["t"]), w["n"]
        if mul(S.power(x, n), z) != mul(S.power(x, n + 1), t):
            return False
    return True
