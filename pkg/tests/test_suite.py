import json

import pytest

from sacts import congruences as cg
from sacts.census import CensusScope, census_acts, census_monoids
from sacts.morphisms import enumerate_endomorphisms
from sacts.suite import ROWS, run_suite, strip_timing


def rows(rep):
    return {r.id: r for r in rep.rows}


def test_catalog_passes():
    rep = run_suite(CensusScope(catalog_only=True))
    assert rep.passed
    assert all(r.failure_count == 0 for r in rep.rows)
    assert set(rows(rep)) == set(ROWS)


def test_small_scope_fitting_row():
    scope = CensusScope(max_monoid_order=2, max_act_size=3)
    rep = run_suite(scope)
    assert rep.passed
    pairs = sum(len(enumerate_endomorphisms(A)) for M in census_monoids(scope)
                for _, A in census_acts(scope, M))
    r = rows(rep)["fitting-iff-strongly-both"]
    assert r.instances == pairs and r.vacuous == 0


def test_pigeonhole_rows_marked_vacuous():
    rep = run_suite(CensusScope(max_monoid_order=2, max_act_size=2))
    r = rows(rep)["retractable-cohopfian-hopfian"]
    assert r.instances > 0 and r.vacuous == r.instances
    assert rows(rep)["strongly-hopfian-three-way"].vacuous == 0


def test_corrupted_join_detected():
    def bad_join(r, s):
        return r  # drops s entirely
    rep = run_suite(CensusScope(max_monoid_order=2, max_act_size=3), join_fn=bad_join)
    assert not rep.passed
    by = rows(rep)
    failing = [by[k] for k in ("fitting-iff-strongly-both", "strongly-cohopfian-three-way")
               if not by[k].passed]
    assert failing
    w = by["fitting-iff-strongly-both"].failures[0]
    assert {"name", "endo", "n"} <= set(w)
    assert isinstance(w["n"], int)


def test_real_join_not_mutated_by_hook():
    # the hook is per call, the module function stays intact
    run_suite(CensusScope(catalog_only=True), join_fn=lambda r, s: r)
    assert run_suite(CensusScope(catalog_only=True)).passed
    assert cg.join.__module__ == "sacts.congruences"


def test_deterministic_json():
    scope = CensusScope(max_monoid_order=2, max_act_size=3)
    a = json.loads(run_suite(scope).to_json())
    b = json.loads(run_suite(scope).to_json())
    assert strip_timing(a) == strip_timing(b)
    assert a["schema"] == 1


def test_jobs_do_not_change_report():
    scope = CensusScope(max_monoid_order=2, max_act_size=3)
    a = strip_timing(run_suite(scope).to_dict())
    b = strip_timing(run_suite(scope, jobs=2).to_dict())
    assert a == b


def test_rows_sorted_and_described():
    rep = run_suite(CensusScope(catalog_only=True))
    ids = [r.id for r in rep.rows]
    assert ids == sorted(ids)
    assert all(r.statement for r in rep.rows)
