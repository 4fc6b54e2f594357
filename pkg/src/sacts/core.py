"""Finite monoids, finite right acts, and subacts.

Elements are dense 0-based indices.  A monoid carries an explicit identity
index; nothing assumes it is 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import ValidationError

DEFAULT_CAP = 8


def _as_table(rows: Iterable[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(v) for v in row) for row in rows)


def check_index(value: int, bound: int, what: str = "element") -> int:
    if not 0 <= value < bound:
        raise ValidationError(f"{what} index {value} out of range 0..{bound - 1}", value)
    return value


@dataclass(frozen=True)
class FiniteMonoid:
    table: tuple[tuple[int, ...], ...]
    identity: int
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    @property
    def size(self) -> int:
        return len(self.table)

    def __len__(self):
        return len(self.table)

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def power(self, x: int, n: int) -> int:
        r = self.identity
        for _ in range(n):
            r = self.table[r][x]
        return r

    def name(self, x: int) -> str:
        return self.labels[x] if self.labels else str(x)

    def is_commutative(self) -> bool:
        n = self.size
        return all(self.table[x][y] == self.table[y][x] for x in range(n) for y in range(x))

    def right_zeros(self) -> list[int]:
        # z with z*s = z for every s, i.e. the zeros of the regular right act
        return [z for z in range(self.size) if all(v == z for v in self.table[z])]


def validate_monoid(table, identity: int, labels=None) -> FiniteMonoid:
    """Check a multiplication table and return the monoid.

    Raises ValidationError naming the first violating pair (identity law) or
    triple (associativity).
    """
    t = _as_table(table)
    n = len(t)
    if n == 0:
        raise ValidationError("monoid table is empty")
    for x, row in enumerate(t):
        if len(row) != n:
            raise ValidationError(f"row {x} has {len(row)} entries, expected {n}", x)
        for y, v in enumerate(row):
            if not 0 <= v < n:
                raise ValidationError(f"entry ({x},{y}) = {v} out of range", (x, y))
    check_index(identity, n, "identity")
    e = identity
    for x in range(n):
        if t[e][x] != x:
            raise ValidationError(f"identity law fails: {e}*{x} = {t[e][x]} != {x}", (e, x))
        if t[x][e] != x:
            raise ValidationError(f"identity law fails: {x}*{e} = {t[x][e]} != {x}", (x, e))
    for x in range(n):
        for y in range(n):
            xy = t[x][y]
            for z in range(n):
                if t[xy][z] != t[x][t[y][z]]:
                    raise ValidationError(f"associativity fails at ({x},{y},{z})", (x, y, z))
    if labels is not None:
        labels = tuple(labels)
        if len(labels) != n:
            raise ValidationError("label count does not match monoid size")
    return FiniteMonoid(t, e, labels)


@dataclass(frozen=True)
class FiniteAct:
    """Right act: ``action[a][s]`` is ``a·s``."""

    monoid: FiniteMonoid
    action: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    @property
    def size(self) -> int:
        return len(self.action)

    def __len__(self):
        return len(self.action)

    def act(self, a: int, s: int) -> int:
        return self.action[a][s]

    @property
    def zeros(self) -> list[int]:
        return [a for a, row in enumerate(self.action) if all(v == a for v in row)]

    @property
    def designated_zero(self) -> int | None:
        z = self.zeros
        return z[0] if z else None

    def name(self, a: int) -> str:
        return self.labels[a] if self.labels else str(a)

    def orbit(self, a: int) -> frozenset[int]:
        return frozenset(self.action[a])


def validate_act(monoid: FiniteMonoid, action, labels=None) -> FiniteAct:
    t = _as_table(action)
    m, n = len(t), monoid.size
    if m == 0:
        raise ValidationError("act carrier is empty")
    for a, row in enumerate(t):
        if len(row) != n:
            raise ValidationError(f"row {a} has {len(row)} entries, expected {n}", a)
        for s, v in enumerate(row):
            if not 0 <= v < m:
                raise ValidationError(f"entry ({a},{s}) = {v} out of range", (a, s))
    e = monoid.identity
    for a in range(m):
        if t[a][e] != a:
            raise ValidationError(f"unitality fails: {a}·{e} = {t[a][e]}", (a,))
    mt = monoid.table
    for a in range(m):
        for s in range(n):
            b = t[a][s]
            for u in range(n):
                if t[b][u] != t[a][mt[s][u]]:
                    raise ValidationError(f"compatibility fails at ({a},{s},{u})", (a, s, u))
    if labels is not None:
        labels = tuple(labels)
        if len(labels) != m:
            raise ValidationError("label count does not match act size")
    return FiniteAct(monoid, t, labels)


def regular_act(monoid: FiniteMonoid) -> FiniteAct:
    """S_S: the monoid acting on itself by right multiplication."""
    if not isinstance(monoid, FiniteMonoid):
        raise TypeError(f"regular_act needs a FiniteMonoid, got {type(monoid).__name__}")
    return FiniteAct(monoid, monoid.table, monoid.labels)


def trivial_act(monoid: FiniteMonoid, size: int = 1) -> FiniteAct:
    """Every element a zero.  With size 1 this is Θ."""
    return FiniteAct(monoid, tuple((a,) * monoid.size for a in range(size)))


def trivial_monoid() -> FiniteMonoid:
    return FiniteMonoid(((0,),), 0, ("1",))


@dataclass(frozen=True)
class Subact:
    act: FiniteAct
    members: tuple[int, ...]
    member_set: frozenset[int] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(sorted(set(self.members))))
        object.__setattr__(self, "member_set", frozenset(self.members))

    def __contains__(self, a):
        return a in self.member_set

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def as_act(self) -> FiniteAct:
        """The subact as an act in its own right, members relabelled 0..k-1 in order."""
        pos = {a: i for i, a in enumerate(self.members)}
        rows = tuple(tuple(pos[v] for v in self.act.action[a]) for a in self.members)
        labels = tuple(self.act.name(a) for a in self.members) if self.act.labels else None
        return FiniteAct(self.act.monoid, rows, labels)


def make_subact(act: FiniteAct, members: Iterable[int]) -> Subact:
    ms = set(members)
    if not ms:
        raise ValidationError("subact must be nonempty")
    for a in ms:
        check_index(a, act.size)
        for v in act.action[a]:
            if v not in ms:
                raise ValidationError(f"not closed: {a}·s = {v} leaves the set", (a, v))
    return Subact(act, tuple(ms))


def is_closed(act: FiniteAct, members: Sequence[int]) -> bool:
    ms = set(members)
    return bool(ms) and all(v in ms for a in ms for v in act.action[a])
