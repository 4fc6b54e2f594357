#!/usr/bin/env python3
"""Naive census oracle: counts monoids and acts up to isomorphism by brute force.

Deliberately shares no code with the ``sacts`` package.  Every multiplication
table (and every action table with the identity column forced by unitality)
is generated, filtered by the axioms, and reduced to isomorphism classes by
taking the lexicographically least relabelling.

Usage:
    python scripts/census_oracle.py [--max-order 3] [--max-size 4] [--out FILE]
"""

import argparse
import itertools
import json
import sys


def monoid_tables(n):
    for flat in itertools.product(range(n), repeat=n * n):
        t = [flat[i * n:(i + 1) * n] for i in range(n)]
        ok = all(t[t[x][y]][z] == t[x][t[y][z]]
                 for x in range(n) for y in range(n) for z in range(n))
        if not ok:
            continue
        ids = [e for e in range(n)
               if all(t[e][x] == x and t[x][e] == x for x in range(n))]
        if ids:
            yield t, ids[0]


def monoid_key(t, e):
    # least relabelling sending the identity to 0
    n = len(t)
    best = None
    others = [x for x in range(n) if x != e]
    for rest in itertools.permutations(range(1, n)):
        p = {e: 0}
        p.update(zip(others, rest))
        new = [[None] * n for _ in range(n)]
        for x in range(n):
            for y in range(n):
                new[p[x]][p[y]] = p[t[x][y]]
        flat = tuple(v for row in new for v in row)
        if best is None or flat < best:
            best = flat
    return best


def act_tables(mt, m):
    n = len(mt)
    free = [(a, s) for a in range(m) for s in range(1, n)]
    for vals in itertools.product(range(m), repeat=len(free)):
        act = [[a] + [None] * (n - 1) for a in range(m)]
        for (a, s), v in zip(free, vals):
            act[a][s] = v
        if all(act[act[a][s]][t] == act[a][mt[s][t]]
               for a in range(m) for s in range(n) for t in range(n)):
            yield act


def act_key(act):
    m = len(act)
    best = None
    for p in itertools.permutations(range(m)):
        new = [None] * m
        for a in range(m):
            new[p[a]] = tuple(p[b] for b in act[a])
        flat = tuple(v for row in new for v in row)
        if best is None or flat < best:
            best = flat
    return best


def census(max_order, max_size):
    monoid_counts = {}
    acts = {}
    for n in range(1, max_order + 1):
        keys = set()
        for t, e in monoid_tables(n):
            keys.add(monoid_key(t, e))
        monoid_counts[str(n)] = len(keys)
        for key in sorted(keys):
            mt = [key[i * n:(i + 1) * n] for i in range(n)]
            per_size = {}
            for m in range(1, max_size + 1):
                per_size[str(m)] = len({act_key(a) for a in act_tables(mt, m)})
            acts[" ".join(map(str, key))] = per_size
    return {"monoids": monoid_counts, "acts": acts,
            "max_order": max_order, "max_size": max_size}


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-order", type=int, default=3)
    ap.add_argument("--max-size", type=int, default=4)
    ap.add_argument("--out")
    args = ap.parse_args(argv)
    data = census(args.max_order, args.max_size)
    text = json.dumps(data, indent=2, sort_keys=True)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
