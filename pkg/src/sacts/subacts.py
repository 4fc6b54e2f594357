"""Subact lattice, invariance and essentiality, coproducts, indecomposable components."""

from __future__ import annotations

from typing import Iterable

from .congruences import _UF, enumerate_congruences, quotient_act
from .core import DEFAULT_CAP, FiniteAct, Subact, check_index
from .errors import CapExceeded, InputError, PreconditionError
from .morphisms import enumerate_endomorphisms, is_injective


def generated_subact(act: FiniteAct, X: Iterable[int]) -> Subact:
    members = set()
    for x in X:
        check_index(x, act.size)
        members.update(act.action[x])
    if not members:
        raise InputError("cannot generate a subact from the empty set")
    return Subact(act, tuple(members))


def cyclic_subact(act: FiniteAct, a: int) -> Subact:
    return Subact(act, act.action[a])


def enumerate_subacts(act: FiniteAct, cap: int = DEFAULT_CAP) -> list[Subact]:
    """All nonempty closed subsets, ordered by size then members.

    Every subact is a union of cyclic subacts aS, so closing the cyclic ones
    under pairwise union finds them all.
    """
    if act.size > cap:
        raise CapExceeded("subact enumeration", act.size, cap, "--carrier-cap")
    cyclic = {frozenset(act.action[a]) for a in range(act.size)}
    found = set(cyclic)
    frontier = list(found)
    while frontier:
        nxt = []
        for x in frontier:
            for c in cyclic:
                u = x | c
                if u not in found:
                    found.add(u)
                    nxt.append(u)
        frontier = nxt
    return [Subact(act, tuple(s)) for s in sorted(found, key=lambda s: (len(s), sorted(s)))]


def is_fully_invariant(B: Subact, endos=None, cap: int = DEFAULT_CAP) -> bool:
    if endos is None:
        endos = enumerate_endomorphisms(B.act, cap)
    return all(f.map[b] in B for f in endos for b in B.members)


def nonessential_witness(B: Subact, congruences=None, cap: int = DEFAULT_CAP):
    """A congruence ρ ≠ Δ that separates the points of B, or None if B is essential.

    A hom g out of A is mono iff ker g = Δ and g|_B is mono iff ker g meets
    B×B diagonally; every congruence is the kernel of its natural map.
    """
    if congruences is None:
        congruences = enumerate_congruences(B.act, cap)
    for rho in congruences:
        if rho.is_diagonal():
            continue
        labs = [rho.labels[b] for b in B.members]
        if len(set(labs)) == len(labs):
            return rho
    return None


def is_essential(B: Subact, congruences=None, cap: int = DEFAULT_CAP) -> bool:
    return nonessential_witness(B, congruences, cap) is None


def is_essential_by_quotients(B: Subact, congruences=None, cap: int = DEFAULT_CAP) -> bool:
    """Definitional route: every natural map that is mono on B is mono."""
    A = B.act
    if congruences is None:
        congruences = enumerate_congruences(A, cap)
    for rho in congruences:
        _, g = quotient_act(A, rho)
        restricted = [g.map[b] for b in B.members]
        if len(set(restricted)) == len(restricted) and not is_injective(g):
            return False
    return True


def is_zero_subact(B: Subact) -> bool:
    return len(B) == 1 and B.act.action[B.members[0]] == (B.members[0],) * B.act.monoid.size


def is_nonzero_subact(B: Subact) -> bool:
    # "non-zero" means other than {θ} for the designated (least) zero
    z = B.act.designated_zero
    return not (z is not None and B.members == (z,))


def is_uniform(act: FiniteAct, cap: int = DEFAULT_CAP) -> bool:
    cons = enumerate_congruences(act, cap)
    return all(is_essential(B, cons) for B in enumerate_subacts(act, cap) if is_nonzero_subact(B))


def is_mono_uniform(act: FiniteAct, endos=None, cap: int = DEFAULT_CAP) -> bool:
    if endos is None:
        endos = enumerate_endomorphisms(act, cap)
    cons = enumerate_congruences(act, cap)
    return all(is_essential(Subact(act, tuple(set(f.map))), cons) for f in endos if is_injective(f))


def injectives_preserve_essential(act: FiniteAct, endos=None, cap: int = DEFAULT_CAP) -> bool:
    """Injective endomorphisms map essential subacts to essential subacts."""
    if endos is None:
        endos = enumerate_endomorphisms(act, cap)
    cons = enumerate_congruences(act, cap)
    essential = [B for B in enumerate_subacts(act, cap) if is_essential(B, cons)]
    for f in endos:
        if not is_injective(f):
            continue
        for B in essential:
            if not is_essential(Subact(act, tuple(f.map[b] for b in B.members)), cons):
                return False
    return True


def coproduct(A: FiniteAct, B: FiniteAct) -> FiniteAct:
    """Disjoint union: A's elements first, then B's shifted by |A|."""
    if A.monoid != B.monoid:
        raise InputError("coproduct of acts over different monoids")
    k = A.size
    rows = A.action + tuple(tuple(v + k for v in row) for row in B.action)
    return FiniteAct(A.monoid, rows)


def coproduct0(A: FiniteAct, B: FiniteAct) -> FiniteAct:
    """Disjoint union with the designated zeros identified (B's zero becomes A's)."""
    if A.monoid != B.monoid:
        raise InputError("coproduct of acts over different monoids")
    za, zb = A.designated_zero, B.designated_zero
    if za is None or zb is None:
        raise PreconditionError("0-coproduct needs a zero in both operands")
    pos = {}
    for b in range(B.size):
        if b != zb:
            pos[b] = A.size + len(pos)
    pos[zb] = za
    rows = A.action + tuple(tuple(pos[v] for v in B.action[b]) for b in range(B.size) if b != zb)
    return FiniteAct(A.monoid, rows)


def decompose_indecomposable(act: FiniteAct) -> list[Subact]:
    """Connected components of the graph with edges a ~ a·s, ordered by least member."""
    uf = _UF(act.size)
    for a in range(act.size):
        for v in act.action[a]:
            uf.union(a, v)
    comps: dict[int, list[int]] = {}
    for a in range(act.size):
        comps.setdefault(uf.find(a), []).append(a)
    return [Subact(act, tuple(c)) for _, c in sorted(comps.items())]


def is_indecomposable(act: FiniteAct) -> bool:
    return len(decompose_indecomposable(act)) == 1


def is_cyclic(act: FiniteAct) -> bool:
    return any(len(set(act.action[a])) == act.size for a in range(act.size))
