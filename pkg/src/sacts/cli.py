"""Command-line frontend.  Exit status: 0 ok, 1 failure, 2 bad input, 3 cap hit."""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter

from . import symbolic as sym
from .census import ACT_SIZE_CAP, MONOID_ORDER_CAP, CensusScope, census_acts, census_monoids, monoid_key
from .congruences import enumerate_congruences, quotient_act
from .core import DEFAULT_CAP, FiniteAct, FiniteMonoid
from .errors import CapExceeded, ConsistencyError, InputError, SactsError
from .morphisms import enumerate_endomorphisms
from .properties import PROPERTIES, check, stabilization
from .suite import format_report, run_suite
from .textio import (format_act, format_congruence, format_hom, load_act, load_any,
                     parse_congruence, parse_hom)

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False)


def _print_verdict(v, as_json):
    if as_json:
        print(v.to_json())
        return
    print(v.status.value)
    if v.witness is not None:
        print("witness: " + json.dumps(v.witness, sort_keys=True, ensure_ascii=False))
    cert = dict(v.certificate or {})
    table = cert.pop("per_endo", None)
    if cert:
        print("certificate: " + json.dumps(cert, sort_keys=True, ensure_ascii=False))
    if table:
        print(f"{'endo':<20} {'ker_index':>9} {'im_index':>8} {'fitting_n':>9}")
        for row in table:
            endo = " ".join(map(str, row["endo"]))
            print(f"{endo:<20} {_s(row['ker_index']):>9} {_s(row['im_index']):>8} {_s(row['fitting_n']):>9}")


def _s(v):
    return "-" if v is None else str(v)


def _verdict_exit(v):
    return EXIT_FAIL if v.fails else EXIT_OK


# -- subcommands ------------------------------------------------------------------

def cmd_validate(args):
    obj = load_any(args.file)
    if isinstance(obj, FiniteMonoid):
        info = {"kind": "monoid", "order": obj.size, "identity": obj.identity,
                "commutative": obj.is_commutative()}
        text = f"ok: monoid of order {obj.size}, identity {obj.identity}"
    else:
        info = {"kind": "act", "size": obj.size, "monoid_order": obj.monoid.size, "zeros": obj.zeros}
        text = f"ok: act of size {obj.size} over a monoid of order {obj.monoid.size}; zeros {obj.zeros}"
    print(_dump(info) if args.json else text)
    return EXIT_OK


def cmd_endos(args):
    A = load_act(args.act)
    endos = enumerate_endomorphisms(A, cap=args.carrier_cap)
    if args.json:
        print(_dump({"count": len(endos), "endos": [list(f.map) for f in endos]}))
    else:
        print(f"{len(endos)} endomorphisms")
        for f in endos:
            print(format_hom(f))
    return EXIT_OK


def cmd_con(args):
    A = load_act(args.act)
    cons = enumerate_congruences(A, cap=args.carrier_cap)
    if args.json:
        print(_dump({"count": len(cons), "congruences": [list(c.labels) for c in cons]}))
    else:
        print(f"{len(cons)} congruences")
        for c in cons:
            print(format_congruence(c))
    return EXIT_OK


def cmd_quotient(args):
    A = load_act(args.act)
    rho = parse_congruence(args.cong, A)
    Q, pi = quotient_act(A, rho)
    if args.json:
        print(_dump({"size": Q.size, "action": [list(r) for r in Q.action],
                     "labels": list(Q.labels) if Q.labels else None, "natural_map": list(pi.map)}))
    else:
        print(format_act(Q, args.monoid_file), end="")
        print("natural map: " + format_hom(pi))
    return EXIT_OK


def cmd_check(args):
    A = load_act(args.act)
    v = check(args.property, A, cap=args.carrier_cap)
    _print_verdict(v, args.json)
    return _verdict_exit(v)


def cmd_stab(args):
    A = load_act(args.act)
    f = parse_hom(args.endo, A)
    rep = stabilization(f)
    if args.json:
        print(_dump(rep.to_dict()))
    else:
        print(f"endo: {format_hom(f)}")
        print(f"ker_index {_s(rep.ker_index)}")
        print(f"im_index {_s(rep.im_index)}")
        print(f"fitting_n {_s(rep.fitting_n)}")
        print("n  ker-blocks  |Im|")
        for n, blocks, im in rep.chain_log:
            print(f"{n:<2} {blocks:>10} {im:>5}")
    return EXIT_OK


def _scope(args) -> CensusScope:
    return CensusScope(max_monoid_order=args.max_monoid_order, max_act_size=args.max_act_size,
                       catalog_only=args.catalog, monoid_order_cap=args.monoid_order_cap,
                       act_size_cap=args.act_size_cap)


def cmd_census(args):
    scope = _scope(args)
    out = []
    for M in census_monoids(scope):
        acts = census_acts(scope, M)
        sizes = Counter(A.size for _, A in acts)
        out.append({"monoid": monoid_key(M), "order": M.size,
                    "acts": {str(k): sizes[k] for k in sorted(sizes)},
                    "names": [n for n, _ in acts] if scope.catalog_only else None})
    if args.json:
        print(_dump({"schema": 1, "scope": scope.to_dict(), "monoids": out}))
    else:
        for m in out:
            counts = ", ".join(f"size {k}: {v}" for k, v in m["acts"].items())
            print(f"M[{m['monoid']}] order {m['order']}: {counts}")
        print(f"{len(out)} monoids, {sum(sum(m['acts'].values()) for m in out)} acts")
    return EXIT_OK


def cmd_suite(args):
    rep = run_suite(_scope(args), jobs=args.jobs)
    print(rep.to_json() if args.json else format_report(rep))
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_symbolic(args):
    S = sym.get_backend(args.backend)
    budget = sym.Budget(max_norm=args.max_norm, max_n=args.max_n)
    v = sym.evaluate(S, args.criterion, budget, x=args.x, z=args.z)
    _print_verdict(v, args.json)
    return _verdict_exit(v)


# -- parser -------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sacts", description="Finite S-acts: Hopfian-type properties.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(fn=fn)
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        return sp

    def carrier(sp):
        sp.add_argument("--carrier-cap", type=int, default=DEFAULT_CAP,
                        help=f"largest carrier searched exhaustively (default {DEFAULT_CAP})")

    sp = add("validate", cmd_validate, "check a monoid or act file")
    sp.add_argument("file")

    sp = add("endos", cmd_endos, "list endomorphisms of an act")
    sp.add_argument("act")
    carrier(sp)

    sp = add("con", cmd_con, "list the congruences of an act")
    sp.add_argument("act")
    carrier(sp)

    sp = add("quotient", cmd_quotient, "quotient of an act by a congruence")
    sp.add_argument("act")
    sp.add_argument("--cong", required=True, help='class labels, e.g. "0 0 1"')
    sp.add_argument("--monoid-file", default="monoid.txt", help="monoid path written into the output header")

    sp = add("check", cmd_check, "decide a property of an act")
    sp.add_argument("property", choices=sorted(PROPERTIES))
    sp.add_argument("act")
    carrier(sp)

    sp = add("stab", cmd_stab, "kernel/image chains of one endomorphism")
    sp.add_argument("act")
    sp.add_argument("--endo", required=True, help='e.g. "2:1 1:0 0:0" or "0 0 1"')

    for name, fn, help_ in (("census", cmd_census, "enumerate small monoids and acts"),
                            ("suite", cmd_suite, "run the theorem-verification suite")):
        sp = add(name, fn, help_)
        sp.add_argument("--max-monoid-order", type=int, default=3)
        sp.add_argument("--max-act-size", type=int, default=3)
        sp.add_argument("--catalog", action="store_true", help="named examples instead of the census")
        sp.add_argument("--monoid-order-cap", type=int, default=MONOID_ORDER_CAP)
        sp.add_argument("--act-size-cap", type=int, default=ACT_SIZE_CAP)
        if name == "suite":
            sp.add_argument("--jobs", type=int, default=1, help="worker processes")

    sp = add("symbolic", cmd_symbolic, "element criteria over a symbolic monoid")
    sp.add_argument("backend", help="finite:<file>, nat-add, free:<k> or bicyclic")
    sp.add_argument("criterion", choices=sorted(sym.CRITERIA))
    sp.add_argument("--max-norm", type=int, default=3)
    sp.add_argument("--max-n", type=int, default=3)
    sp.add_argument("--x")
    sp.add_argument("--z")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ConsistencyError as exc:
        print(f"inconsistency: {exc}", file=sys.stderr)
        if exc.report is not None:
            print(_dump(exc.report), file=sys.stderr)
        return EXIT_FAIL
    except SactsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
