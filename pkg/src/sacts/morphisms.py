"""Act homomorphisms: construction, backtracking enumeration, iteration, images, trace."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .core import DEFAULT_CAP, FiniteAct, Subact, regular_act
from .errors import CapExceeded, InputError, ValidationError


@dataclass(frozen=True)
class ActHom:
    source: FiniteAct
    target: FiniteAct
    map: tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.map[a]

    def __len__(self):
        return len(self.map)

    def __repr__(self):
        return f"ActHom({' '.join(map(str, self.map))})"

    def is_endo(self) -> bool:
        return self.source == self.target


def is_equivariant(source: FiniteAct, target: FiniteAct, mapping: Sequence[int]) -> bool:
    n = source.monoid.size
    return all(mapping[source.action[a][s]] == target.action[mapping[a]][s]
               for a in range(source.size) for s in range(n))


def make_hom(source: FiniteAct, target: FiniteAct, mapping: Sequence[int]) -> ActHom:
    mapping = tuple(int(v) for v in mapping)
    if source.monoid != target.monoid:
        raise InputError("homomorphisms between acts over different monoids are not supported")
    if len(mapping) != source.size:
        raise ValidationError(f"map has {len(mapping)} entries, source has {source.size}")
    for a, v in enumerate(mapping):
        if not 0 <= v < target.size:
            raise ValidationError(f"image of {a} is {v}, out of range", (a, v))
    for a in range(source.size):
        for s in range(source.monoid.size):
            if mapping[source.action[a][s]] != target.action[mapping[a]][s]:
                raise ValidationError(f"not equivariant at ({a},{s})", (a, s))
    return ActHom(source, target, mapping)


def identity_hom(act: FiniteAct) -> ActHom:
    return ActHom(act, act, tuple(range(act.size)))


def translation(act: FiniteAct, a: int) -> ActHom:
    """λ_a : S_S → A, s ↦ a·s."""
    return ActHom(regular_act(act.monoid), act, act.action[a])


def _check_cap(act: FiniteAct, cap: int, what: str):
    if act.size > cap:
        raise CapExceeded(what, act.size, cap, "--carrier-cap")


def _search(source: FiniteAct, target: FiniteAct, injective: bool = False) -> Iterator[tuple[int, ...]]:
    # Decision points are the least unassigned source elements, tried against
    # target elements in index order; assigning x forces the whole orbit xS.
    # Solutions therefore come out in lexicographic order.
    m, n, k = source.size, source.monoid.size, target.size
    if injective and k < m:
        return
    src, tgt = source.action, target.action
    img = [-1] * m
    used = [False] * k

    def assign(x, y, trail):
        for s in range(n):
            u, v = src[x][s], tgt[y][s]
            w = img[u]
            if w == -1:
                if injective:
                    if used[v]:
                        return False
                    used[v] = True
                img[u] = v
                trail.append(u)
            elif w != v:
                return False
        return True

    def undo(trail):
        for u in trail:
            if injective:
                used[img[u]] = False
            img[u] = -1

    def rec(start):
        x = start
        while x < m and img[x] != -1:
            x += 1
        if x == m:
            yield tuple(img)
            return
        for y in range(k):
            trail = []
            if assign(x, y, trail):
                yield from rec(x + 1)
            undo(trail)

    yield from rec(0)


def enumerate_homs(source: FiniteAct, target: FiniteAct, cap: int = DEFAULT_CAP,
                   injective: bool = False) -> list[ActHom]:
    if source.monoid != target.monoid:
        raise InputError("homomorphisms between acts over different monoids are not supported")
    _check_cap(source, cap, "hom enumeration (source)")
    _check_cap(target, cap, "hom enumeration (target)")
    return [ActHom(source, target, m) for m in _search(source, target, injective)]


def enumerate_endomorphisms(act: FiniteAct, cap: int = DEFAULT_CAP) -> list[ActHom]:
    return enumerate_homs(act, act, cap)


def compose(f: ActHom, g: ActHom) -> ActHom:
    """f∘g: apply g, then f."""
    if g.target != f.source:
        raise InputError("cannot compose: target of the inner map is not the source of the outer")
    fm = f.map
    return ActHom(g.source, f.target, tuple(fm[v] for v in g.map))


def power(f: ActHom, n: int) -> ActHom:
    if n < 1:
        raise InputError(f"power needs n >= 1, got {n}")
    if not f.is_endo():
        raise InputError("power needs an endomorphism")
    r = f
    for _ in range(n - 1):
        r = compose(f, r)
    return r


def is_injective(f: ActHom) -> bool:
    return len(set(f.map)) == len(f.map)


def is_surjective(f: ActHom) -> bool:
    return len(set(f.map)) == f.target.size


def is_bijective(f: ActHom) -> bool:
    return is_injective(f) and is_surjective(f)


def image(f: ActHom) -> Subact:
    return Subact(f.target, tuple(set(f.map)))


def inverse(f: ActHom) -> ActHom:
    if not is_bijective(f):
        raise InputError("only bijections have inverses")
    inv = [0] * len(f.map)
    for a, b in enumerate(f.map):
        inv[b] = a
    return ActHom(f.target, f.source, tuple(inv))


def trace(B, A: FiniteAct, cap: int = DEFAULT_CAP) -> Subact:
    """tr(B, A): union of φ(B) over all φ: B → A.  ``B`` may be an act or a Subact."""
    if isinstance(B, Subact):
        B = B.as_act()
    members = set()
    for phi in enumerate_homs(B, A, cap):
        members.update(phi.map)
    if not members:
        # no homs at all; the empty union is not a subact
        return None
    return Subact(A, tuple(members))


def find_isomorphism(A: FiniteAct, B: FiniteAct, cap: int = DEFAULT_CAP) -> ActHom | None:
    """Lexicographically least equivariant bijection A → B, or None."""
    if A.monoid != B.monoid:
        raise InputError("isomorphism test between acts over different monoids")
    if A.size != B.size:
        return None
    _check_cap(A, cap, "isomorphism search")
    for m in _search(A, B, injective=True):
        return ActHom(A, B, m)
    return None


def is_isomorphic(A: FiniteAct, B: FiniteAct, cap: int = DEFAULT_CAP) -> bool:
    return find_isomorphism(A, B, cap) is not None
