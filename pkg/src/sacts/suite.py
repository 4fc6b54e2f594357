"""Theorem-verification suite over a census of small monoids and acts.

Each row is one checked statement.  An instance is *vacuous* when it holds
for a reason the instance does not exercise: either the row's conclusion is
forced by finiteness (``pigeonhole``) or the instance misses the hypothesis.
"""

from __future__ import annotations

import json
import re
import time
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from dataclasses import dataclass, field
from itertools import combinations, product

from . import congruences as cg
from . import symbolic as sym
from .census import (CensusScope, canonical_act_table, census_acts, census_monoids,
                     enumerate_acts, monoid_key)
from .congruences import (compatibility_violation, diagonal, enumerate_congruences,
                          generated_by, kernel, meet, quotient_act, rees, universal)
from .core import FiniteAct, Subact, is_closed, regular_act, validate_act
from .errors import CapExceeded, ConsistencyError
from .morphisms import (compose, enumerate_endomorphisms, find_isomorphism, identity_hom,
                        image, is_equivariant, is_injective, is_surjective, translation)
from .properties import (cohopfian_routes, hopfian_routes, is_cohopfian, is_dedekind_finite,
                         is_hopfian, is_quasi_coretractable, is_quasi_injective,
                         is_quasi_projective, is_quasi_retractable, is_strongly_duo,
                         is_torsion_free, power_factorization, routes_agree, stabilization)
from .subacts import (coproduct, decompose_indecomposable, enumerate_subacts,
                      injectives_preserve_essential, is_cyclic, is_essential,
                      is_essential_by_quotients, is_fully_invariant, is_indecomposable,
                      is_mono_uniform)

SCHEMA = 1
MAX_FAILURES_KEPT = 25

# id -> (statement, vacuity policy); policy "pigeonhole" marks every instance vacuous
ROWS = {
    "act-axioms": ("every census table is a unital compatible act", None),
    "regular-act-zeros": ("zeros of S_S are exactly the right zeros of S", None),
    "census-canonical-fixpoint": ("census outputs are canonical and duplicate free", None),
    "con-lattice-laws": ("∨ associative, commutative, idempotent; Δ neutral, ∇ absorbing; ∧ dual", None),
    "join-least-upper-bound": ("ρ ∨ σ = least τ in Con(A) with ρ, σ ⊆ τ", None),
    "congruence-generation": ("ρ = ⟨pairs of ρ⟩ for every ρ in Con(A)", None),
    "quotient-kernel-roundtrip": ("ker(A → A/ρ) = ρ", None),
    "kernel-compatible": ("ker f is a congruence for every f in End(A)", None),
    "endos-equivariant": ("enumerated endomorphisms satisfy f(a·s) = f(a)·s", None),
    "homomorphism-theorem": ("A/ker f ≅ Im f", None),
    "injective-iff-surjective": ("f in End(A) injective ⇔ surjective (finite A)", None),
    "regular-endos-are-translations": ("End(S_S) = {λ_a : a in S}, f = λ_{f(1)}", None),
    "subacts-closed": ("enumerated subacts are exactly the nonempty closed subsets", None),
    "essential-by-quotients": ("B ⊆' A by congruence scan ⇔ by natural maps", None),
    "indecomposable-components": ("components partition A and are each connected", None),
    "fully-invariant-extension": ("B fully invariant, B and A/ρ_B Hopfian (co-Hopfian) ⇒ A Hopfian (co-Hopfian)", "pigeonhole"),
    "coproduct-components": ("A ⊔ B Hopfian (co-Hopfian) ⇒ A and B Hopfian (co-Hopfian); |Sub(A ⊔ B)| = (|Sub A|+1)(|Sub B|+1) - 1", "pigeonhole"),
    "indecomposable-coproduct": ("A, B indecomposable: A, B Hopfian (co-Hopfian) ⇔ A ⊔ B Hopfian (co-Hopfian)", "pigeonhole"),
    "strongly-duo-cohopfian": ("strongly duo ⇒ co-Hopfian", "pigeonhole"),
    "commutative-right-hopfian": ("S commutative ⇒ S right Hopfian", "pigeonhole"),
    "quasi-implies-retractable": ("quasi-projective ⇒ quasi-retractable; quasi-injective ⇒ quasi-coretractable", None),
    "hopfian-implies-retractable": ("Hopfian ⇒ quasi-retractable; co-Hopfian ⇒ quasi-coretractable", "pigeonhole"),
    "retractable-cohopfian-hopfian": ("quasi-retractable ∧ co-Hopfian ⇒ Hopfian", "pigeonhole"),
    "coretractable-hopfian-cohopfian": ("quasi-coretractable ∧ Hopfian ⇒ co-Hopfian", "pigeonhole"),
    "one-sided-invertible-endos": ("A Hopfian (co-Hopfian) ⇒ one-sided invertible endomorphisms are invertible", "pigeonhole"),
    "mono-uniform-right-hopfian": ("S_S mono-uniform ⇒ S right Hopfian", "pigeonhole"),
    "quotient-iso-forces-zero": ("A with a zero, A ≅ A/ρ_B ⇒ B = {θ}", None),
    "hopfian-dedekind-finite": ("A with a zero: Hopfian or co-Hopfian ⇒ Dedekind-finite", "pigeonhole"),
    "torsion-free-coretractable": ("torsion free, quasi-coretractable, zero: DF ⇔ co-Hopfian ⇔ mono-uniform ⇔ injectives keep B ⊆' A", "pigeonhole"),
    "torsion-free-cohopfian": ("torsion free: co-Hopfian ⇔ mono-uniform ∧ quasi-coretractable", "pigeonhole"),
    "torsion-free-quasi-injective": ("torsion free, quasi-injective, zero: (i)-(iv) ⇔ essential fully invariant subacts co-Hopfian ⇔ DF", "pigeonhole"),
    "torsion-free-retractable": ("torsion free, quasi-retractable (or quasi-projective), zero: DF ⇔ Hopfian", "pigeonhole"),
    "strongly-hopfian-three-way": ("chain stationary ⇔ ∃n ker f^n = ker f^(n+1) ⇔ ∃n ker f^n ∩ ρ_(Im f^n) = Δ", None),
    "strongly-cohopfian-three-way": ("chain stationary ⇔ ∃n Im f^n = Im f^(n+1) ⇔ ∃n ker f^n ∨ ρ_(Im f^n) = ∇", None),
    "fitting-iff-strongly-both": ("∃n (∨ = ∇ and ∩ = Δ) ⇔ strongly Hopfian ∧ strongly co-Hopfian; fitting_n ≥ max(ker_index, im_index)", None),
    "chain-monotone": ("ker f^n ascending, Im f^n descending, both settle within |A| steps", None),
    "power-factorization": ("quasi-projective: f^n = f^(n+1)γ; quasi-injective: f^n = γ f^(n+1); n ≤ |A|", None),
    "commutative-cyclic-fitting": ("S commutative, A cyclic: quasi-injective ∧ strongly Hopfian (quasi-projective ∧ strongly co-Hopfian) ⇒ Fitting", "pigeonhole"),
    "factor-acts-strongly-cohopfian": ("all factor acts co-Hopfian ⇔ all factor acts strongly co-Hopfian", "pigeonhole"),
    "factor-acts-fitting": ("all factor acts Hopfian and co-Hopfian ⇔ all factor acts Fitting", "pigeonhole"),
    "cyclic-acts-cohopfian": ("cyclic acts (co-Hopfian, strongly co-Hopfian, via quasi-retractable, quasi-projective, projective) ⇔ S_S strongly co-Hopfian ⇔ ∀z,x ∃n,t x^n z = x^(n+1) t", "pigeonhole"),
    "cyclic-acts-fitting": ("all cyclic (resp. census) acts Hopfian ∧ co-Hopfian ⇔ Fitting ⇔ strongly Hopfian ∧ strongly co-Hopfian", "pigeonhole"),
    "element-criteria-finite": ("finite backend: right (co-)Hopfian by elements = (co-)Hopfian S_S", None),
    "element-chain-indices": ("finite backend: least n of x^(n+1)s = x^(n+1)t ⇒ x^n s = x^n t is ker_index(λ_x); max_z n(z,x) is im_index(λ_x)", None),
    "symbolic-witnesses": ("bicyclic right Hopfian fails with rechecked witness; (ℕ,+) right Hopfian holds, right co-Hopfian fails at 1", None),
    "bicyclic-normal-form": ("bicyclic product rule associative and agrees with reduction of bc → 1 on norm ≤ 4", None),
}


@dataclass
class Row:
    id: str
    statement: str
    policy: str | None
    instances: int = 0
    vacuous: int = 0
    skipped: int = 0
    failure_count: int = 0
    failures: list = field(default_factory=list)
    wall_time: float = 0.0

    def fail(self, witness):
        self.failure_count += 1
        if len(self.failures) < MAX_FAILURES_KEPT:
            self.failures.append(witness)

    def merge(self, other: "Row"):
        self.instances += other.instances
        self.vacuous += other.vacuous
        self.skipped += other.skipped
        self.failure_count += other.failure_count
        room = MAX_FAILURES_KEPT - len(self.failures)
        self.failures.extend(other.failures[:max(room, 0)])
        self.wall_time += other.wall_time

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def to_dict(self) -> dict:
        return {"id": self.id, "statement": self.statement, "instances": self.instances,
                "vacuous": self.vacuous, "vacuous_reason": self.policy or "hypothesis-false",
                "skipped": self.skipped, "failure_count": self.failure_count,
                "failures": self.failures, "passed": self.passed,
                "wall_time": round(self.wall_time, 6)}


class _Tally:
    def __init__(self):
        self.rows = {rid: Row(rid, st, pol) for rid, (st, pol) in ROWS.items()}

    @contextmanager
    def row(self, rid, context=None):
        r = self.rows[rid]
        t0 = time.perf_counter()
        try:
            yield r
        except CapExceeded:
            r.skipped += 1
        except ConsistencyError as exc:
            r.fail({"context": context, "error": str(exc), "report": exc.report})
        finally:
            r.wall_time += time.perf_counter() - t0

    def instance(self, r: Row, ok: bool, witness=None, hypothesis: bool = True):
        r.instances += 1
        if r.policy == "pigeonhole" or not hypothesis:
            r.vacuous += 1
        if not ok:
            r.fail(witness)


def _act_ref(name, A: FiniteAct) -> dict:
    return {"name": name, "action": [list(r) for r in A.action],
            "monoid": [list(r) for r in A.monoid.table], "identity": A.monoid.identity}


def _implies(p, q):
    return (not p) or q


# -- per-act checks --------------------------------------------------------------

def _check_act(T: _Tally, name: str, A: FiniteAct, join_fn, info: dict):
    ref = {"name": name}
    endos = enumerate_endomorphisms(A)
    cons = enumerate_congruences(A)
    subs = enumerate_subacts(A)
    ident = identity_hom(A).map

    with T.row("act-axioms", ref) as r:
        try:
            validate_act(A.monoid, A.action)
            T.instance(r, True)
        except ValueError as exc:
            T.instance(r, False, dict(ref, error=str(exc)))

    with T.row("con-lattice-laws", ref) as r:
        D, N = diagonal(A), universal(A)
        ok, bad = True, None
        for x in cons:
            if cg.join(x, D) != x or cg.join(x, N) != N or meet(x, N) != x or meet(x, D) != D or cg.join(x, x) != x:
                ok, bad = False, {"rho": list(x.labels)}
                break
        if ok:
            for x, y in product(cons, repeat=2):
                if cg.join(x, y) != cg.join(y, x) or meet(x, y) != meet(y, x):
                    ok, bad = False, {"rho": list(x.labels), "sigma": list(y.labels)}
                    break
        if ok:
            for x, y, z in product(cons, repeat=3):
                if cg.join(cg.join(x, y), z) != cg.join(x, cg.join(y, z)):
                    ok, bad = False, {"triple": [list(x.labels), list(y.labels), list(z.labels)]}
                    break
        T.instance(r, ok, dict(ref, **(bad or {})))

    with T.row("join-least-upper-bound", ref) as r:
        for x, y in product(cons, repeat=2):
            ub = [t for t in cons if x <= t and y <= t]
            least = [t for t in ub if all(t <= u for u in ub)]
            j = join_fn(x, y)
            T.instance(r, len(least) == 1 and least[0] == j,
                       dict(ref, rho=list(x.labels), sigma=list(y.labels), join=list(j.labels)))

    with T.row("congruence-generation", ref) as r:
        for x in cons:
            spanning = [(blk[0], b) for blk in x.blocks() for b in blk[1:]]
            T.instance(r, generated_by(A, spanning) == x, dict(ref, rho=list(x.labels)))

    with T.row("quotient-kernel-roundtrip", ref) as r:
        for x in cons:
            Q, pi = quotient_act(A, x)
            ok = kernel(pi) == x and Q.size == x.num_blocks and is_equivariant(A, Q, pi.map)
            T.instance(r, ok, dict(ref, rho=list(x.labels)))

    with T.row("endos-equivariant", ref) as r:
        naive = sum(1 for m in product(range(A.size), repeat=A.size) if is_equivariant(A, A, m)) \
            if A.size <= 5 else None
        ok = all(is_equivariant(A, A, f.map) for f in endos) and len(set(f.map for f in endos)) == len(endos)
        if naive is not None:
            ok = ok and naive == len(endos)
        T.instance(r, ok, dict(ref, endos=len(endos), brute_force=naive))

    with T.row("kernel-compatible", ref) as r:
        for f in endos:
            T.instance(r, compatibility_violation(A, kernel(f).labels) is None, dict(ref, endo=list(f.map)))

    with T.row("homomorphism-theorem", ref) as r:
        for f in endos:
            Q, _ = quotient_act(A, kernel(f))
            T.instance(r, find_isomorphism(Q, image(f).as_act()) is not None, dict(ref, endo=list(f.map)))

    with T.row("injective-iff-surjective", ref) as r:
        for f in endos:
            T.instance(r, is_injective(f) == is_surjective(f), dict(ref, endo=list(f.map)))

    with T.row("subacts-closed", ref) as r:
        brute = sorted(tuple(c) for k in range(1, A.size + 1)
                       for c in combinations(range(A.size), k) if is_closed(A, c))
        T.instance(r, sorted(B.members for B in subs) == brute, dict(ref, found=[list(B.members) for B in subs]))

    with T.row("essential-by-quotients", ref) as r:
        for B in subs:
            T.instance(r, is_essential(B, cons) == is_essential_by_quotients(B, cons),
                       dict(ref, subact=list(B.members)))

    with T.row("indecomposable-components", ref) as r:
        comps = decompose_indecomposable(A)
        cover = sorted(a for c in comps for a in c.members)
        ok = cover == list(range(A.size)) and all(is_indecomposable(c.as_act()) for c in comps) \
            and all(is_closed(A, c.members) for c in comps)
        T.instance(r, ok, dict(ref, components=[list(c.members) for c in comps]))

    hop = is_hopfian(A, endos).holds
    cohop = is_cohopfian(A, endos).holds
    qr = is_quasi_retractable(A, endos).holds
    qcr = is_quasi_coretractable(A, endos).holds
    qi = is_quasi_injective(A, endos).holds
    qp = is_quasi_projective(A, endos, cons).holds
    zero = A.designated_zero is not None

    with T.row("fully-invariant-extension", ref) as r:
        for B in subs:
            if not is_fully_invariant(B, endos):
                continue
            Bact = B.as_act()
            Q, _ = quotient_act(A, rees(A, B))
            hyp_h = is_hopfian(Bact).holds and is_hopfian(Q).holds
            hyp_c = is_cohopfian(Bact).holds and is_cohopfian(Q).holds
            T.instance(r, _implies(hyp_h, hop) and _implies(hyp_c, cohop), dict(ref, subact=list(B.members)))

    with T.row("strongly-duo-cohopfian", ref) as r:
        sd = is_strongly_duo(A).holds
        T.instance(r, _implies(sd, cohop), ref, hypothesis=sd)

    with T.row("quasi-implies-retractable", ref) as r:
        T.instance(r, _implies(qp, qr) and _implies(qi, qcr), ref, hypothesis=qp or qi)

    with T.row("hopfian-implies-retractable", ref) as r:
        T.instance(r, _implies(hop, qr) and _implies(cohop, qcr), ref)

    with T.row("retractable-cohopfian-hopfian", ref) as r:
        T.instance(r, _implies(qr and cohop, hop), ref)

    with T.row("coretractable-hopfian-cohopfian", ref) as r:
        T.instance(r, _implies(qcr and hop, cohop), ref)

    with T.row("one-sided-invertible-endos", ref) as r:
        for f in endos:
            one_sided = any(compose(f, g).map == ident or compose(g, f).map == ident for g in endos)
            ok = _implies(one_sided and (hop or cohop), is_injective(f) and is_surjective(f))
            T.instance(r, ok, dict(ref, endo=list(f.map)))

    with T.row("quotient-iso-forces-zero", ref) as r:
        if zero:
            zs = set(A.zeros)
            for B in subs:
                Q, _ = quotient_act(A, rees(A, B))
                iso = find_isomorphism(A, Q) is not None
                ok = _implies(iso, len(B) == 1 and B.members[0] in zs)
                T.instance(r, ok, dict(ref, subact=list(B.members)), hypothesis=iso)

    with T.row("hopfian-dedekind-finite", ref) as r:
        if zero:
            df = is_dedekind_finite(A, explicit_bound=2 if A.size <= 3 else 0).holds
            T.instance(r, _implies(hop or cohop, df), ref)

    tf = is_torsion_free(A).holds
    mu = is_mono_uniform(A, endos)
    ess_img = injectives_preserve_essential(A, endos)
    with T.row("torsion-free-coretractable", ref) as r:
        if tf and qcr and zero:
            df = is_dedekind_finite(A).holds
            T.instance(r, len({df, cohop, mu, ess_img}) == 1,
                       dict(ref, df=df, cohopfian=cohop, mono_uniform=mu, essential_images=ess_img))

    with T.row("torsion-free-cohopfian", ref) as r:
        if tf:
            T.instance(r, cohop == (mu and qcr), dict(ref, cohopfian=cohop, mono_uniform=mu, qcr=qcr))

    with T.row("torsion-free-quasi-injective", ref) as r:
        if tf and qi and zero:
            df = is_dedekind_finite(A).holds
            efi = [B for B in subs if is_essential(B, cons) and is_fully_invariant(B, endos)]
            v = all(is_cohopfian(B.as_act()).holds for B in efi)
            vi = all(is_dedekind_finite(B.as_act()).holds for B in efi if B.as_act().designated_zero is not None)
            T.instance(r, len({df, cohop, mu, ess_img, v, vi}) == 1, dict(ref, essential_fully_invariant=len(efi)))

    with T.row("torsion-free-retractable", ref) as r:
        if tf and (qr or qp) and zero:
            T.instance(r, is_dedekind_finite(A).holds == hop, ref)

    sh_all, sch_all, fit_all = True, True, True
    for f in endos:
        eref = dict(ref, endo=list(f.map))
        with T.row("strongly-hopfian-three-way", eref) as r:
            hr = hopfian_routes(f, join_fn)
            T.instance(r, routes_agree(hr), dict(eref, routes=hr))
        with T.row("strongly-cohopfian-three-way", eref) as r:
            cr = cohopfian_routes(f, join_fn)
            T.instance(r, routes_agree(cr), dict(eref, routes=cr))
        with T.row("fitting-iff-strongly-both", eref) as r:
            rep = stabilization(f, join_fn)
            both = hr["chain"] is not None and cr["chain"] is not None
            direct = rep.fitting_n is not None
            ok = direct == both
            if ok and direct:
                ok = rep.fitting_n >= max(rep.ker_index, rep.im_index)
            n = rep.fitting_n if direct else max(rep.ker_index or 0, rep.im_index or 0)
            T.instance(r, ok, dict(eref, n=n, fitting_n=rep.fitting_n, ker_index=rep.ker_index,
                                   im_index=rep.im_index, strongly_both=both))
            sh_all &= hr["chain"] is not None
            sch_all &= cr["chain"] is not None
            fit_all &= direct
        with T.row("chain-monotone", eref) as r:
            kers = [kernel(f)]
            ims = [image(f)]
            g = f
            for _ in range(A.size):
                g = compose(f, g)
                kers.append(kernel(g))
                ims.append(image(g))
            mono = all(a <= b for a, b in zip(kers, kers[1:])) and \
                all(set(b.members) <= set(a.members) for a, b in zip(ims, ims[1:]))
            ok = mono and rep.ker_index is not None and rep.ker_index <= A.size \
                and rep.im_index is not None and rep.im_index <= A.size
            T.instance(r, ok, eref)
        with T.row("power-factorization", eref) as r:
            if qp:
                found = power_factorization(f, endos, "right")
                T.instance(r, found is not None and found[0] <= A.size, dict(eref, side="right"))
            if qi:
                found = power_factorization(f, endos, "left")
                T.instance(r, found is not None and found[0] <= A.size, dict(eref, side="left"))

    with T.row("commutative-cyclic-fitting", ref) as r:
        if A.monoid.is_commutative() and is_cyclic(A):
            ok = _implies(qi and sh_all, sch_all and fit_all) and _implies(qp and sch_all, sh_all and fit_all)
            T.instance(r, ok, ref)

    with T.row("factor-acts-strongly-cohopfian", ref) as r:
        facts = []
        for x in cons:
            Q, _ = quotient_act(A, x)
            qe = enumerate_endomorphisms(Q)
            facts.append((is_hopfian(Q, qe).holds, is_cohopfian(Q, qe).holds,
                          all(cohopfian_routes(g, join_fn)["chain"] is not None for g in qe),
                          all(stabilization(g, join_fn).fitting_n is not None for g in qe)))
        all_c = all(c for _, c, _, _ in facts)
        all_sc = all(sc for _, _, sc, _ in facts)
        T.instance(r, all_c == all_sc, dict(ref, cohopfian=all_c, strongly=all_sc))
    with T.row("factor-acts-fitting", ref) as r:
        all_hc = all(h and c for h, c, _, _ in facts)
        all_f = all(fi for _, _, _, fi in facts)
        T.instance(r, all_hc == all_f, dict(ref, hopfian_cohopfian=all_hc, fitting=all_f))

    info.update(hop=hop, cohop=cohop, qr=qr, qp=qp, sh=sh_all, sch=sch_all, fit=fit_all,
                cyclic=is_cyclic(A), indecomposable=is_indecomposable(A))


# -- per-monoid checks -----------------------------------------------------------

def _check_monoid(T: _Tally, M, acts, join_fn, scope):
    key = monoid_key(M)
    ref = {"monoid": key}
    R = regular_act(M)
    endos = enumerate_endomorphisms(R)

    with T.row("regular-act-zeros", ref) as r:
        T.instance(r, R.zeros == M.right_zeros(), ref)

    with T.row("regular-endos-are-translations", ref) as r:
        ok = len(endos) == M.size and all(f.map == translation(R, f.map[M.identity]).map for f in endos)
        T.instance(r, ok, dict(ref, endos=len(endos)))

    with T.row("census-canonical-fixpoint", ref) as r:
        if not scope.catalog_only:
            tables = [A.action for _, A in acts]
            canon = [canonical_act_table(t) for t in tables]
            flat = [tuple(v for row in t for v in row) for t in tables]
            T.instance(r, canon == flat and len(set(flat)) == len(flat), ref)

    with T.row("commutative-right-hopfian", ref) as r:
        comm = M.is_commutative()
        if comm:
            T.instance(r, is_hopfian(R, endos).holds, ref)

    with T.row("mono-uniform-right-hopfian", ref) as r:
        mu = is_mono_uniform(R, endos)
        T.instance(r, _implies(mu, is_hopfian(R, endos).holds), ref, hypothesis=mu)

    F = sym.FiniteTableMonoid(M)
    budget = sym.Budget(max_norm=1, max_n=M.size)
    with T.row("element-criteria-finite", ref) as r:
        ok = (sym.monoid_right_hopfian(F, budget).holds == is_hopfian(R, endos).holds and
              sym.monoid_right_cohopfian(F, budget).holds == is_cohopfian(R, endos).holds)
        T.instance(r, ok, ref)

    with T.row("element-chain-indices", ref) as r:
        for x in range(M.size):
            lam = translation(R, x)
            rep = stabilization(lam, join_fn)
            sv = sym.strongly_hopfian_element(F, x, budget)
            n_h = sv.witness.get("n") if sv.holds else None
            ns = []
            for z in range(M.size):
                cv = sym.strongly_cohopfian_element(F, z, x, budget)
                ns.append(cv.witness["n"] if cv.holds else None)
            n_c = None if None in ns else max(ns)
            T.instance(r, n_h == rep.ker_index and n_c == rep.im_index,
                       dict(ref, x=x, element_n=[n_h, n_c], chain=[rep.ker_index, rep.im_index]))

    infos = [i for _, _, i in acts_info(acts)]
    with T.row("cyclic-acts-cohopfian", ref) as r:
        chain_v = all(cohopfian_routes(f, join_fn)["chain"] is not None for f in endos)
        elem_v = sym.monoid_strongly_cohopfian(F, budget).holds
        cyc = [i for i in infos if i["cyclic"]]
        projective = []
        for e in range(M.size):
            if M.table[e][e] == e:
                P = Subact(R, M.table[e]).as_act()
                pe = enumerate_endomorphisms(P)
                projective.append(all(cohopfian_routes(g, join_fn)["chain"] is not None for g in pe))
        conds = [all(i["cohop"] for i in cyc), all(i["sch"] for i in cyc),
                 all(i["sch"] for i in cyc if i["qr"]), all(i["sch"] for i in cyc if i["qp"]),
                 all(projective), chain_v, elem_v]
        T.instance(r, len(set(conds)) == 1, dict(ref, conditions=conds,
                                                  cyclic_exhaustive=scope.max_act_size >= M.size))

    with T.row("cyclic-acts-fitting", ref) as r:
        for group in ([i for i in infos if i["cyclic"]], infos):
            conds = [all(i["hop"] and i["cohop"] for i in group), all(i["fit"] for i in group),
                     all(i["sh"] and i["sch"] for i in group)]
            T.instance(r, len(set(conds)) == 1, dict(ref, conditions=conds))

    # coproducts of census acts
    small = [(n, A, i) for n, A, i in acts_info(acts) if A.size <= 3]
    with T.row("coproduct-components", ref) as r:
        for (na, A, ia), (nb, B, ib) in combinations(small, 2):
            C = coproduct(A, B)
            ce = enumerate_endomorphisms(C)
            ch, cc = is_hopfian(C, ce).holds, is_cohopfian(C, ce).holds
            ok = _implies(ch, ia["hop"] and ib["hop"]) and _implies(cc, ia["cohop"] and ib["cohop"])
            # a subact of A ⊔ B is a union of an optional subact of each side
            nsub = (len(enumerate_subacts(A)) + 1) * (len(enumerate_subacts(B)) + 1) - 1
            ok = ok and len(enumerate_subacts(C)) == nsub
            T.instance(r, ok, dict(ref, pair=[na, nb]))
            if ia["indecomposable"] and ib["indecomposable"]:
                with T.row("indecomposable-coproduct", ref) as r2:
                    ok2 = ch == (ia["hop"] and ib["hop"]) and cc == (ia["cohop"] and ib["cohop"])
                    T.instance(r2, ok2, dict(ref, pair=[na, nb]))


def acts_info(acts):
    return [(n, A, _INFO[id(A)]) for n, A in acts]


_INFO: dict = {}


def _monoid_job(args):
    M, scope, join_fn = args
    T = _Tally()
    acts = census_acts(scope, M)
    for name, A in acts:
        info = {}
        _check_act(T, name, A, join_fn, info)
        _INFO[id(A)] = info
    _check_monoid(T, M, acts, join_fn, scope)
    for _, A in acts:
        _INFO.pop(id(A), None)
    return T.rows


def _global_checks(T: _Tally):
    ref = {"global": True}
    with T.row("symbolic-witnesses", ref) as r:
        B = sym.Bicyclic()
        t0 = time.perf_counter()
        v = sym.monoid_right_hopfian(B, sym.Budget(max_norm=3, max_n=3))
        elapsed = time.perf_counter() - t0
        T.instance(r, v.fails and sym.recheck(B, v) and elapsed < 1.0,
                   dict(ref, check="bicyclic right-hopfian", verdict=v.to_dict()))
        N = sym.NatAdd()
        v = sym.monoid_right_cohopfian(N)
        T.instance(r, v.fails and v.witness["x"] == "1", dict(ref, check="nat-add right-cohopfian"))
        v = sym.monoid_right_hopfian(N)
        T.instance(r, v.holds and v.certificate.get("fact") == "commutative", dict(ref, check="nat-add right-hopfian"))
        v = sym.strongly_hopfian_element(B, (0, 1), sym.Budget(max_norm=5, max_n=3))
        T.instance(r, v.fails and sym.recheck(B, v), dict(ref, check="bicyclic strongly-hopfian-element b"))

    with T.row("bicyclic-normal-form", ref) as r:
        B = sym.Bicyclic()
        els = B.elements(4)
        ok = all(B.multiply(B.multiply(x, y), z) == B.multiply(x, B.multiply(y, z))
                 for x in els for y in els for z in els)
        T.instance(r, ok, dict(ref, check="associativity"))
        ok = all(_reduce_bc(B.format(x) + " " + B.format(y)) == B.multiply(x, y) for x in els for y in els)
        T.instance(r, ok, dict(ref, check="rewriting"))


def _reduce_bc(word):
    # expand c^i b^j notation into letters, then cancel bc with a stack
    letters = []
    for g, e in re.findall(r"([bc1])(?:\^(\d+))?", word):
        if g != "1":
            letters.extend(g * int(e or 1))
    stack = []
    for ch in letters:
        if ch == "c" and stack and stack[-1] == "b":
            stack.pop()
        else:
            stack.append(ch)
    return (stack.count("c"), stack.count("b"))


@dataclass
class SuiteReport:
    scope: CensusScope
    rows: list[Row]
    monoids: int
    acts: int
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    def to_dict(self) -> dict:
        return {"schema": SCHEMA, "scope": self.scope.to_dict(), "passed": self.passed,
                "monoids": self.monoids, "acts": self.acts,
                "rows": [r.to_dict() for r in self.rows], "wall_time": round(self.wall_time, 6)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False)


def strip_timing(obj):
    """Drop wall_time fields so two reports can be compared."""
    if isinstance(obj, dict):
        return {k: strip_timing(v) for k, v in obj.items() if k != "wall_time"}
    if isinstance(obj, list):
        return [strip_timing(v) for v in obj]
    return obj


def run_suite(scope: CensusScope, join_fn=None, jobs: int = 1) -> SuiteReport:
    """Run every row over the census.  ``join_fn`` replaces the congruence join
    in the rows that exercise it (a mutation hook for testing the suite)."""
    if join_fn is None:
        join_fn = cg.join
    t0 = time.perf_counter()
    monoids = census_monoids(scope)
    tasks = [(M, scope, join_fn) for M in monoids]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            parts = list(ex.map(_monoid_job, tasks))
    else:
        parts = [_monoid_job(t) for t in tasks]
    T = _Tally()
    _global_checks(T)
    for part in parts:
        for rid, row in part.items():
            T.rows[rid].merge(row)
    nacts = sum(len(census_acts(scope, M)) for M in monoids)
    rows = sorted(T.rows.values(), key=lambda r: r.id)
    return SuiteReport(scope, rows, len(monoids), nacts, time.perf_counter() - t0)


def format_report(rep: SuiteReport) -> str:
    lines = [f"census: {rep.monoids} monoids, {rep.acts} acts "
             f"(order <= {rep.scope.max_monoid_order}, size <= {rep.scope.max_act_size}"
             f"{', catalog' if rep.scope.catalog_only else ''})"]
    w = max(len(r.id) for r in rep.rows)
    for r in rep.rows:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"{status} {r.id:<{w}}  instances={r.instances:<6} vacuous={r.vacuous:<6} "
                     f"skipped={r.skipped:<3} failures={r.failure_count}")
        for f in r.failures[:3]:
            lines.append("      " + json.dumps(f, sort_keys=True, ensure_ascii=False))
    lines.append("suite " + ("passed" if rep.passed else "FAILED") + f" in {rep.wall_time:.2f}s")
    return "\n".join(lines)
