"""Decision procedures for act properties on finite instances.

Every Holds verdict carries an exhaustion certificate (how many objects were
examined) so callers can tell a real search from an empty one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import congruences as cg
from .congruences import Congruence, enumerate_congruences, kernel, meet, quotient_act, rees
from .core import DEFAULT_CAP, FiniteAct
from .errors import ConsistencyError, PreconditionError
from .morphisms import (ActHom, compose, enumerate_endomorphisms, enumerate_homs,
                        find_isomorphism, identity_hom, image, is_injective,
                        is_surjective, power, trace)
from .subacts import coproduct0, enumerate_subacts, is_nonzero_subact, nonessential_witness
from .verdict import Verdict, fails, holds

JoinFn = Callable[[Congruence, Congruence], Congruence]


def _join(r, s):
    # late lookup so a patched cg.join is seen
    return cg.join(r, s)


def _endos(act, endos, cap):
    return enumerate_endomorphisms(act, cap) if endos is None else endos


# -- Hopfian / co-Hopfian ----------------------------------------------------

def is_hopfian(act: FiniteAct, endos=None, cap: int = DEFAULT_CAP) -> Verdict:
    endos = _endos(act, endos, cap)
    surj = [f for f in endos if is_surjective(f)]
    for f in surj:
        if not is_injective(f):
            return fails("hopfian", {"endo": list(f.map)})
    return holds("hopfian", {"endomorphisms": len(endos), "surjective": len(surj)})


def is_cohopfian(act: FiniteAct, endos=None, cap: int = DEFAULT_CAP) -> Verdict:
    endos = _endos(act, endos, cap)
    inj = [f for f in endos if is_injective(f)]
    for f in inj:
        if not is_surjective(f):
            return fails("cohopfian", {"endo": list(f.map)})
    return holds("cohopfian", {"endomorphisms": len(endos), "injective": len(inj)})


# -- chains of an endomorphism ----------------------------------------------

@dataclass(frozen=True)
class StabilizationReport:
    endo: ActHom
    ker_index: int | None
    im_index: int | None
    fitting_n: int | None
    chain_log: tuple[tuple[int, int, int], ...]  # (n, blocks of ker f^n, |Im f^n|)

    def to_dict(self) -> dict:
        return {"endo": list(self.endo.map), "ker_index": self.ker_index,
                "im_index": self.im_index, "fitting_n": self.fitting_n,
                "chain_log": [list(r) for r in self.chain_log]}


def _powers(f: ActHom, upto: int) -> list[ActHom]:
    """[None, f, f², ..., f^upto]"""
    out = [None, f]
    for _ in range(upto - 1):
        out.append(compose(f, out[-1]))
    return out


def stabilization(f: ActHom, join_fn: JoinFn = _join) -> StabilizationReport:
    A = f.source
    H = A.size
    pw = _powers(f, H + 1)
    kers = [None] + [kernel(p) for p in pw[1:]]
    ims = [None] + [image(p) for p in pw[1:]]
    ker_index = next((n for n in range(1, H + 1) if kers[n] == kers[n + 1]), None)
    im_index = next((n for n in range(1, H + 1) if ims[n] == ims[n + 1]), None)
    fitting_n = None
    for n in range(1, H + 1):
        r = rees(A, ims[n])
        if join_fn(kers[n], r).is_universal() and meet(kers[n], r).is_diagonal():
            fitting_n = n
            break
    log = tuple((n, kers[n].num_blocks, len(ims[n])) for n in range(1, H + 2))
    return StabilizationReport(f, ker_index, im_index, fitting_n, log)


def _eventual_cycle(f: ActHom) -> tuple[list[ActHom], int]:
    """Powers f, f², … up to the first repeat; returns (powers, index of the cycle start)."""
    seen: dict[tuple, int] = {}
    pw = [None]
    p = f
    n = 1
    while p.map not in seen:
        seen[p.map] = n
        pw.append(p)
        p = compose(f, p)
        n += 1
    return pw, seen[p.map]


def hopfian_routes(f: ActHom, join_fn: JoinFn = _join) -> dict:
    """The three equivalent forms of 'ker chain of f is stationary', evaluated separately.

    chain:      powers of f are eventually periodic; the chain is stationary iff
                the kernel is constant along the period.
    equality:   some n ≤ |A| has ker f^n = ker f^{n+1}.
    congruence: some n ≤ |A| has ker f^n ∩ ρ_{Im f^n} = Δ.
    """
    A = f.source
    pw, start = _eventual_cycle(f)
    period_kers = {kernel(p) for p in pw[start:]}
    chain_n = None
    if len(period_kers) == 1:
        k = next(iter(period_kers))
        chain_n = next(n for n in range(1, len(pw)) if kernel(pw[n]) == k)
    H = A.size
    ppw = _powers(f, H + 1)
    kers = [None] + [kernel(p) for p in ppw[1:]]
    eq_n = next((n for n in range(1, H + 1) if kers[n] == kers[n + 1]), None)
    con_n = next((n for n in range(1, H + 1)
                  if meet(kers[n], rees(A, image(ppw[n]))).is_diagonal()), None)
    return {"chain": chain_n, "equality": eq_n, "congruence": con_n}


def cohopfian_routes(f: ActHom, join_fn: JoinFn = _join) -> dict:
    """As hopfian_routes, for the image chain and ker f^n ∨ ρ_{Im f^n} = ∇."""
    A = f.source
    pw, start = _eventual_cycle(f)
    period_ims = {image(p) for p in pw[start:]}
    chain_n = None
    if len(period_ims) == 1:
        im = next(iter(period_ims))
        chain_n = next(n for n in range(1, len(pw)) if image(pw[n]) == im)
    H = A.size
    ppw = _powers(f, H + 1)
    ims = [None] + [image(p) for p in ppw[1:]]
    eq_n = next((n for n in range(1, H + 1) if ims[n] == ims[n + 1]), None)
    con_n = next((n for n in range(1, H + 1)
                  if join_fn(kernel(ppw[n]), rees(A, ims[n])).is_universal()), None)
    return {"chain": chain_n, "equality": eq_n, "congruence": con_n}


def routes_agree(routes: dict) -> bool:
    return len({v is not None for v in routes.values()}) == 1


def _strongly(prop, routes_fn, act, endos, cap, join_fn) -> Verdict:
    endos = _endos(act, endos, cap)
    failing = None
    for f in endos:
        r = routes_fn(f, join_fn)
        if not routes_agree(r):
            raise ConsistencyError(f"{prop}: equivalent conditions disagree",
                                   {"endo": list(f.map), "routes": r})
        if r["chain"] is None and failing is None:
            failing = f
    if failing is not None:
        return fails(prop, {"endo": list(failing.map)})
    return holds(prop, {"endomorphisms": len(endos), "routes": ["chain", "equality", "congruence"]})


def is_strongly_hopfian(act: FiniteAct, endos=None, cap: int = DEFAULT_CAP, join_fn: JoinFn = _join) -> Verdict:
    return _strongly("strongly-hopfian", hopfian_routes, act, endos, cap, join_fn)


def is_strongly_cohopfian(act: FiniteAct, endos=None, cap: int = DEFAULT_CAP, join_fn: JoinFn = _join) -> Verdict:
    return _strongly("strongly-cohopfian", cohopfian_routes, act, endos, cap, join_fn)


def is_fitting(act: FiniteAct, endos=None, cap: int = DEFAULT_CAP, join_fn: JoinFn = _join) -> Verdict:
    """Direct definition, cross-checked against strongly Hopfian ∧ strongly co-Hopfian."""
    endos = _endos(act, endos, cap)
    table = []
    failing = None
    for f in endos:
        rep = stabilization(f, join_fn)
        table.append({"endo": list(f.map), "ker_index": rep.ker_index,
                      "im_index": rep.im_index, "fitting_n": rep.fitting_n})
        if rep.fitting_n is None and failing is None:
            failing = f
    direct = failing is None
    both = (is_strongly_hopfian(act, endos, cap, join_fn).holds
            and is_strongly_cohopfian(act, endos, cap, join_fn).holds)
    if direct != both:
        raise ConsistencyError("fitting verdict disagrees with strongly Hopfian and strongly co-Hopfian",
                               {"direct": direct, "strongly_both": both})
    if failing is not None:
        return fails("fitting", {"endo": list(failing.map)}, {"per_endo": table})
    return holds("fitting", {"endomorphisms": len(endos), "per_endo": table})


# -- Dedekind-finite, torsion free ----------------------------------------------

def is_dedekind_finite(act: FiniteAct, explicit_bound: int = 0, cap: int = DEFAULT_CAP) -> Verdict:
    """In Act₀: A ⊔₀ B ≅ A only for B = Θ.

    The size argument |A ⊔₀ B| = |A|+|B|-1 > |A| for |B| ≥ 2 settles it; with
    ``explicit_bound`` ≥ 2 every act B with a zero of size 2..bound is also
    tried through the isomorphism search.
    """
    if act.designated_zero is None:
        raise PreconditionError("Dedekind-finiteness is defined for acts with a zero")
    cert = {"shortcut": "size", "reason": "|A ⊔₀ B| = |A| + |B| - 1 > |A| whenever |B| >= 2"}
    if explicit_bound >= 2:
        from .census import enumerate_acts
        tried = 0
        for m in range(2, explicit_bound + 1):
            for B in enumerate_acts(act.monoid, m):
                if B.designated_zero is None:
                    continue
                tried += 1
                C = coproduct0(act, B)
                if C.size <= cap and find_isomorphism(C, act, cap) is not None:
                    return fails("dedekind-finite", {"B": [list(r) for r in B.action]})
        cert["explicit_acts_tried"] = tried
        cert["explicit_bound"] = explicit_bound
    return holds("dedekind-finite", cert)


def right_cancellable_elements(monoid) -> list[int]:
    n = monoid.size
    t = monoid.table
    return [s for s in range(n) if len({t[x][s] for x in range(n)}) == n]


def is_torsion_free(act: FiniteAct, strict: bool = False) -> Verdict:
    """a·s = b·s ⇒ a = b, over every s (or only right-cancellable s when ``strict``)."""
    M = act.monoid
    scalars = right_cancellable_elements(M) if strict else range(M.size)
    checked = 0
    for a in range(act.size):
        for b in range(a + 1, act.size):
            for s in scalars:
                checked += 1
                if act.action[a][s] == act.action[b][s]:
                    return fails("torsion-free", {"a": a, "b": b, "s": s})
    return holds("torsion-free", {"triples": checked, "strict": strict})


# -- lifting and extension properties ----------------------------------------

def is_quasi_injective(act: FiniteAct, endos=None, cap: int = DEFAULT_CAP) -> Verdict:
    endos = _endos(act, endos, cap)
    homs_checked = 0
    subs = enumerate_subacts(act, cap)
    for B in subs:
        restrictions = {tuple(f.map[b] for b in B.members) for f in endos}
        for phi in enumerate_homs(B.as_act(), act, cap):
            homs_checked += 1
            if phi.map not in restrictions:
                return fails("quasi-injective", {"subact": list(B.members), "hom": list(phi.map)})
    return holds("quasi-injective", {"subacts": len(subs), "homs": homs_checked})


def is_quasi_projective(act: FiniteAct, endos=None, congruences=None, cap: int = DEFAULT_CAP) -> Verdict:
    """Lifting only against natural maps A → A/ρ: every epimorphism factors
    through the natural map of its kernel followed by an isomorphism."""
    endos = _endos(act, endos, cap)
    cons = enumerate_congruences(act, cap) if congruences is None else congruences
    homs_checked = 0
    for rho in cons:
        Q, pi = quotient_act(act, rho)
        lifts = {tuple(pi.map[v] for v in h.map) for h in endos}
        for f in enumerate_homs(act, Q, cap):
            homs_checked += 1
            if f.map not in lifts:
                return fails("quasi-projective", {"congruence": list(rho.labels), "hom": list(f.map)})
    return holds("quasi-projective", {"congruences": len(cons), "homs": homs_checked})


def is_quasi_retractable(act: FiniteAct, endos=None, cap: int = DEFAULT_CAP) -> Verdict:
    endos = _endos(act, endos, cap)
    ident = identity_hom(act).map
    surj = [f for f in endos if is_surjective(f)]
    for f in surj:
        if not any(compose(f, g).map == ident for g in endos):
            return fails("quasi-retractable", {"endo": list(f.map)})
    return holds("quasi-retractable", {"endomorphisms": len(endos), "surjective": len(surj)})


def is_quasi_coretractable(act: FiniteAct, endos=None, cap: int = DEFAULT_CAP) -> Verdict:
    endos = _endos(act, endos, cap)
    ident = identity_hom(act).map
    inj = [f for f in endos if is_injective(f)]
    for f in inj:
        if not any(compose(g, f).map == ident for g in endos):
            return fails("quasi-coretractable", {"endo": list(f.map)})
    return holds("quasi-coretractable", {"endomorphisms": len(endos), "injective": len(inj)})


def is_strongly_duo(act: FiniteAct, cap: int = DEFAULT_CAP) -> Verdict:
    subs = enumerate_subacts(act, cap)
    for B in subs:
        tr = trace(B, act, cap)
        if tr.members != B.members:
            return fails("strongly-duo", {"subact": list(B.members), "trace": list(tr.members)})
    return holds("strongly-duo", {"subacts": len(subs)})


def uniform_verdict(act: FiniteAct, cap: int = DEFAULT_CAP) -> Verdict:
    cons = enumerate_congruences(act, cap)
    subs = [B for B in enumerate_subacts(act, cap) if is_nonzero_subact(B)]
    for B in subs:
        rho = nonessential_witness(B, cons)
        if rho is not None:
            return fails("uniform", {"subact": list(B.members), "congruence": list(rho.labels)})
    return holds("uniform", {"nonzero_subacts": len(subs), "congruences": len(cons)})


def mono_uniform_verdict(act: FiniteAct, endos=None, cap: int = DEFAULT_CAP) -> Verdict:
    endos = _endos(act, endos, cap)
    cons = enumerate_congruences(act, cap)
    inj = [f for f in endos if is_injective(f)]
    for f in inj:
        rho = nonessential_witness(image(f), cons)
        if rho is not None:
            return fails("mono-uniform", {"endo": list(f.map), "congruence": list(rho.labels)})
    return holds("mono-uniform", {"injective": len(inj), "congruences": len(cons)})


# -- factorisations through powers --------------------------------------------

def power_factorization(f: ActHom, endos, side: str = "right"):
    """Least n ≤ |A| with an endomorphism γ such that f^n = f^{n+1}∘γ (side
    "right") or f^n = γ∘f^{n+1} (side "left").  Returns (n, γ) or None."""
    if side not in ("right", "left"):
        raise ValueError(side)
    for n in range(1, f.source.size + 1):
        fn = power(f, n).map
        fn1 = power(f, n + 1)
        for g in endos:
            h = compose(fn1, g) if side == "right" else compose(g, fn1)
            if h.map == fn:
                return n, g
    return None


def factor_acts(act: FiniteAct, cap: int = DEFAULT_CAP) -> list[FiniteAct]:
    return [quotient_act(act, rho)[0] for rho in enumerate_congruences(act, cap)]


PROPERTIES = {
    "hopfian": is_hopfian,
    "cohopfian": is_cohopfian,
    "strongly-hopfian": is_strongly_hopfian,
    "strongly-cohopfian": is_strongly_cohopfian,
    "fitting": is_fitting,
    "dedekind-finite": is_dedekind_finite,
    "torsion-free": is_torsion_free,
    "quasi-injective": is_quasi_injective,
    "quasi-projective": is_quasi_projective,
    "quasi-retractable": is_quasi_retractable,
    "quasi-coretractable": is_quasi_coretractable,
    "strongly-duo": is_strongly_duo,
    "uniform": uniform_verdict,
    "mono-uniform": mono_uniform_verdict,
}


def check(prop: str, act: FiniteAct, cap: int = DEFAULT_CAP) -> Verdict:
    try:
        fn = PROPERTIES[prop]
    except KeyError:
        raise PreconditionError(f"unknown property {prop!r}; choose from {', '.join(PROPERTIES)}") from None
    if prop == "torsion-free":
        return fn(act)
    return fn(act, cap=cap)
