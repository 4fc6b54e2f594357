"""Small monoids and acts up to isomorphism, and the named example catalog."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .core import FiniteAct, FiniteMonoid, regular_act, trivial_act, trivial_monoid, validate_monoid
from .errors import CapExceeded, InputError

MONOID_ORDER_CAP = 4
ACT_SIZE_CAP = 5


def canonical_monoid_table(table, identity: int) -> tuple[int, ...]:
    """Lexicographically least flattened table over relabellings sending the identity to 0."""
    n = len(table)
    others = [x for x in range(n) if x != identity]
    best = None
    for rest in permutations(range(1, n)):
        p = [0] * n
        for x, y in zip(others, rest):
            p[x] = y
        p[identity] = 0
        new = [[0] * n for _ in range(n)]
        for x in range(n):
            row = table[x]
            for y in range(n):
                new[p[x]][p[y]] = p[row[y]]
        flat = tuple(v for r in new for v in r)
        if best is None or flat < best:
            best = flat
    return best


def canonical_act_table(action) -> tuple[int, ...]:
    """Lexicographically least flattened action table over carrier relabellings."""
    m = len(action)
    best = None
    for p in permutations(range(m)):
        new = [None] * m
        for a in range(m):
            new[p[a]] = tuple(p[b] for b in action[a])
        flat = tuple(v for r in new for v in r)
        if best is None or flat < best:
            best = flat
    return best


def _unflatten(flat, rows, cols):
    return tuple(tuple(flat[i * cols:(i + 1) * cols]) for i in range(rows))


def enumerate_monoids(order: int, cap: int = MONOID_ORDER_CAP) -> list[FiniteMonoid]:
    """All monoids of the given order up to isomorphism, identity at index 0,
    sorted by canonical table."""
    if order < 1:
        raise InputError("monoid order must be positive")
    if order > cap:
        raise CapExceeded("monoid enumeration", order, cap, "--monoid-order-cap")
    n = order
    t = [[-1] * n for _ in range(n)]
    for x in range(n):
        t[0][x] = x
        t[x][0] = x
    cells = [(x, y) for x in range(1, n) for y in range(1, n)]
    found = set()

    def assoc_ok():
        for a in range(n):
            for b in range(n):
                ab = t[a][b]
                if ab < 0:
                    continue
                for c in range(n):
                    bc = t[b][c]
                    if bc < 0:
                        continue
                    l, r = t[ab][c], t[a][bc]
                    if l >= 0 and r >= 0 and l != r:
                        return False
        return True

    def rec(i):
        if i == len(cells):
            found.add(canonical_monoid_table(t, 0))
            return
        x, y = cells[i]
        for v in range(n):
            t[x][y] = v
            if assoc_ok():
                rec(i + 1)
        t[x][y] = -1

    rec(0)
    return [FiniteMonoid(_unflatten(f, n, n), 0) for f in sorted(found)]


def _propagate(act, mt, m, n):
    """Close a partial action table under act[act[a][s]][t] = act[a][st].  False on conflict."""
    changed = True
    while changed:
        changed = False
        for a in range(m):
            row = act[a]
            for s in range(n):
                b = row[s]
                if b < 0:
                    continue
                brow, ms = act[b], mt[s]
                for u in range(n):
                    x, y = brow[u], row[ms[u]]
                    if x >= 0:
                        if y >= 0:
                            if x != y:
                                return False
                        else:
                            row[ms[u]] = x
                            changed = True
                    elif y >= 0:
                        brow[u] = y
                        changed = True
    return True


def enumerate_act_tables(monoid: FiniteMonoid, size: int):
    """Every unital compatible action table (labelled, not up to isomorphism)."""
    m, n, e = size, monoid.size, monoid.identity
    mt = monoid.table
    start = [[-1] * n for _ in range(m)]
    for a in range(m):
        start[a][e] = a

    def rec(act):
        for a in range(m):
            for s in range(n):
                if act[a][s] < 0:
                    for v in range(m):
                        nxt = [r[:] for r in act]
                        nxt[a][s] = v
                        if _propagate(nxt, mt, m, n):
                            yield from rec(nxt)
                    return
        yield tuple(tuple(r) for r in act)

    if _propagate(start, mt, m, n):
        yield from rec(start)


def enumerate_acts(monoid: FiniteMonoid, size: int, cap: int = ACT_SIZE_CAP) -> list[FiniteAct]:
    """All acts of the given size over ``monoid`` up to isomorphism, sorted by canonical table."""
    if size < 1:
        raise InputError("act size must be positive")
    if size > cap:
        raise CapExceeded("act enumeration", size, cap, "--act-size-cap")
    found = {canonical_act_table(t) for t in enumerate_act_tables(monoid, size)}
    return [FiniteAct(monoid, _unflatten(f, size, monoid.size)) for f in sorted(found)]


# -- named catalog -----------------------------------------------------------

def t2_monoid() -> FiniteMonoid:
    """{1, e} with e² = e."""
    return validate_monoid([[0, 1], [1, 1]], 0, ("1", "e"))


def e7_monoid() -> FiniteMonoid:
    """{1, a, b} with xy = y for x, y in {a, b}."""
    return validate_monoid([[0, 1, 2], [1, 1, 2], [2, 1, 2]], 0, ("1", "a", "b"))


def chain3_act() -> FiniteAct:
    """Three points under the trivial monoid; carries the endomorphism 2↦1↦0↦0."""
    return trivial_act(trivial_monoid(), 3)


def chain3_endo_map() -> tuple[int, ...]:
    return (0, 0, 1)


def catalog() -> list[tuple[str, FiniteAct]]:
    M1, T2, E7 = trivial_monoid(), t2_monoid(), e7_monoid()
    return [
        ("theta", trivial_act(M1, 1)),
        ("trivial-2", trivial_act(M1, 2)),
        ("chain3", chain3_act()),
        ("theta-over-T2", trivial_act(T2, 1)),
        ("T2-regular", regular_act(T2)),
        ("T2-trivial-2", trivial_act(T2, 2)),
        ("theta-over-E7", trivial_act(E7, 1)),
        ("E7-regular", regular_act(E7)),
    ]


@dataclass(frozen=True)
class CensusScope:
    max_monoid_order: int = 3
    max_act_size: int = 3
    catalog_only: bool = False
    monoid_order_cap: int = MONOID_ORDER_CAP
    act_size_cap: int = ACT_SIZE_CAP

    def __post_init__(self):
        if self.max_monoid_order < 1 or self.max_act_size < 1:
            raise InputError("census bounds must be positive")
        if not self.catalog_only:
            if self.max_monoid_order > self.monoid_order_cap:
                raise CapExceeded("census monoid order", self.max_monoid_order,
                                  self.monoid_order_cap, "--monoid-order-cap")
            if self.max_act_size > self.act_size_cap:
                raise CapExceeded("census act size", self.max_act_size,
                                  self.act_size_cap, "--act-size-cap")

    def to_dict(self) -> dict:
        return {"max_monoid_order": self.max_monoid_order, "max_act_size": self.max_act_size,
                "catalog_only": self.catalog_only}


def monoid_key(monoid: FiniteMonoid) -> str:
    return " ".join(map(str, canonical_monoid_table(monoid.table, monoid.identity)))


def census_monoids(scope: CensusScope) -> list[FiniteMonoid]:
    if scope.catalog_only:
        seen, out = set(), []
        for _, A in catalog():
            if A.monoid not in seen:
                seen.add(A.monoid)
                out.append(A.monoid)
        return out
    return [M for n in range(1, scope.max_monoid_order + 1)
            for M in enumerate_monoids(n, scope.monoid_order_cap)]


def census_acts(scope: CensusScope, monoid: FiniteMonoid) -> list[tuple[str, FiniteAct]]:
    """Named acts over one census monoid."""
    if scope.catalog_only:
        return [(name, A) for name, A in catalog() if A.monoid == monoid]
    key = monoid_key(monoid).replace(" ", "")
    return [(f"M[{key}]/{m}#{i}", A)
            for m in range(1, scope.max_act_size + 1)
            for i, A in enumerate(enumerate_acts(monoid, m, scope.act_size_cap))]


def census_counts(max_order: int, max_size: int) -> dict:
    """Same layout as the naive oracle's output."""
    monoids, acts = {}, {}
    for n in range(1, max_order + 1):
        ms = enumerate_monoids(n)
        monoids[str(n)] = len(ms)
        for M in ms:
            acts[monoid_key(M)] = {str(m): len(enumerate_acts(M, m)) for m in range(1, max_size + 1)}
    return {"monoids": monoids, "acts": acts, "max_order": max_order, "max_size": max_size}
