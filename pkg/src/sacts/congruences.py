"""Congruences on finite acts.

A congruence is stored as a restricted growth string: ``labels[a]`` is the
block of ``a``, blocks numbered in order of their least member.  Two
congruences on the same act are equal iff their label tuples are equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .core import DEFAULT_CAP, FiniteAct, Subact, make_subact
from .errors import CapExceeded, InputError, ValidationError
from .morphisms import ActHom


def canonical_labels(keys: Sequence) -> tuple[int, ...]:
    seen: dict = {}
    return tuple(seen.setdefault(k, len(seen)) for k in keys)


@dataclass(frozen=True)
class Congruence:
    act: FiniteAct
    labels: tuple[int, ...]

    def __len__(self):
        return len(self.labels)

    @property
    def num_blocks(self) -> int:
        return max(self.labels) + 1

    def blocks(self) -> list[tuple[int, ...]]:
        out: list[list[int]] = [[] for _ in range(self.num_blocks)]
        for a, b in enumerate(self.labels):
            out[b].append(a)
        return [tuple(b) for b in out]

    def related(self, a: int, b: int) -> bool:
        return self.labels[a] == self.labels[b]

    def pairs(self):
        """Nondiagonal related pairs (a < b)."""
        for blk in self.blocks():
            yield from combinations(blk, 2)

    def is_diagonal(self) -> bool:
        return self.num_blocks == len(self.labels)

    def is_universal(self) -> bool:
        return self.num_blocks == 1

    def __le__(self, other: "Congruence") -> bool:
        _same_act(self, other)
        return all(other.labels[a] == other.labels[b] for a, b in self.pairs())

    def __repr__(self):
        return "Congruence(" + " | ".join(" ".join(map(str, b)) for b in self.blocks()) + ")"


def _same_act(r: Congruence, s: Congruence):
    if r.act != s.act:
        raise InputError("congruences live on different acts")


def compatibility_violation(act: FiniteAct, labels: Sequence[int]):
    """First (a, b, s) with a ~ b but a·s ≁ b·s, or None."""
    rep: dict[int, int] = {}
    for a, lab in enumerate(labels):
        r = rep.setdefault(lab, a)
        if r == a:
            continue
        ra, aa = act.action[r], act.action[a]
        for s in range(act.monoid.size):
            if labels[ra[s]] != labels[aa[s]]:
                return (r, a, s)
    return None


def make_congruence(act: FiniteAct, labels: Sequence[int]) -> Congruence:
    if len(labels) != act.size:
        raise ValidationError(f"partition has {len(labels)} entries, act has {act.size}")
    labels = canonical_labels(labels)
    bad = compatibility_violation(act, labels)
    if bad is not None:
        a, b, s = bad
        raise ValidationError(f"not a congruence: {a} ~ {b} but {a}·{s} and {b}·{s} are in different blocks", bad)
    return Congruence(act, labels)


def diagonal(act: FiniteAct) -> Congruence:
    return Congruence(act, tuple(range(act.size)))


def universal(act: FiniteAct) -> Congruence:
    return Congruence(act, (0,) * act.size)


def rees(act: FiniteAct, B) -> Congruence:
    """ρ_B = (B×B) ∪ Δ.  ``B`` may be a Subact or an iterable of members."""
    if isinstance(B, Subact):
        if B.act != act:
            raise InputError("subact belongs to a different act")
        members = B.member_set
    else:
        members = make_subact(act, B).member_set
    lo = min(members)
    return Congruence(act, canonical_labels([lo if a in members else a for a in range(act.size)]))


def kernel(f: ActHom) -> Congruence:
    return Congruence(f.source, canonical_labels(f.map))


class _UF:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        if y < x:
            x, y = y, x
        self.parent[y] = x
        return True


def _close(act: FiniteAct, uf: _UF) -> Congruence:
    # merge a·s with r·s for every a and its block representative r until stable
    m, n = act.size, act.monoid.size
    changed = True
    while changed:
        changed = False
        for a in range(m):
            r = uf.find(a)
            if r == a:
                continue
            ra, aa = act.action[r], act.action[a]
            for s in range(n):
                if uf.union(ra[s], aa[s]):
                    changed = True
    return Congruence(act, canonical_labels([uf.find(a) for a in range(m)]))


def generated_by(act: FiniteAct, pairs: Iterable[tuple[int, int]]) -> Congruence:
    """Least congruence containing ``pairs``."""
    uf = _UF(act.size)
    for a, b in pairs:
        if not (0 <= a < act.size and 0 <= b < act.size):
            raise ValidationError(f"pair ({a},{b}) outside the carrier", (a, b))
        uf.union(a, b)
    return _close(act, uf)


def join(r: Congruence, s: Congruence) -> Congruence:
    _same_act(r, s)
    uf = _UF(len(r.labels))
    for c in (r, s):
        first: dict[int, int] = {}
        for a, lab in enumerate(c.labels):
            uf.union(first.setdefault(lab, a), a)
    return _close(r.act, uf)


def meet(r: Congruence, s: Congruence) -> Congruence:
    _same_act(r, s)
    return Congruence(r.act, canonical_labels(list(zip(r.labels, s.labels))))


def enumerate_congruences(act: FiniteAct, cap: int = DEFAULT_CAP) -> list[Congruence]:
    """Con(A) by restricted-growth-string enumeration with compatibility pruning.

    A partial labelling of 0..k is rejected as soon as two related labelled
    elements have labelled translates in different blocks.
    """
    m, n = act.size, act.monoid.size
    if m > cap:
        raise CapExceeded("congruence enumeration", m, cap, "--carrier-cap")
    A = act.action
    labels = [-1] * m
    out: list[Congruence] = []

    def consistent(k):
        # element k was just labelled; check it against earlier members of its block
        lk = labels[k]
        for j in range(k):
            if labels[j] != lk:
                continue
            for s in range(n):
                u, v = A[j][s], A[k][s]
                if u <= k and v <= k and labels[u] != labels[v]:
                    return False
        # pairs whose translates only now became fully labelled
        for j in range(k):
            for i in range(j):
                if labels[i] != labels[j]:
                    continue
                for s in range(n):
                    u, v = A[i][s], A[j][s]
                    if (u == k or v == k) and u <= k and v <= k and labels[u] != labels[v]:
                        return False
        return True

    def rec(k, nblocks):
        if k == m:
            out.append(Congruence(act, tuple(labels)))
            return
        for lab in range(nblocks + 1):
            labels[k] = lab
            if consistent(k):
                rec(k + 1, max(nblocks, lab + 1))
        labels[k] = -1

    rec(0, 0)
    return out


def quotient_act(act: FiniteAct, rho) -> tuple[FiniteAct, ActHom]:
    """A/ρ with blocks numbered as in ``rho.labels``, and the natural surjection."""
    if not isinstance(rho, Congruence):
        rho = make_congruence(act, rho)
    elif rho.act != act:
        raise InputError("congruence belongs to a different act")
    else:
        bad = compatibility_violation(act, rho.labels)
        if bad is not None:
            raise ValidationError(f"not a congruence: violating pair {bad[:2]} under {bad[2]}", bad)
    lab = rho.labels
    reps = [blk[0] for blk in rho.blocks()]
    rows = tuple(tuple(lab[v] for v in act.action[r]) for r in reps)
    labels = None
    if act.labels:
        labels = tuple("{" + ",".join(act.name(a) for a in blk) + "}" for blk in rho.blocks())
    Q = FiniteAct(act.monoid, rows, labels)
    return Q, ActHom(act, Q, lab)
