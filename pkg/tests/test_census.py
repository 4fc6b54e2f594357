import json
import subprocess
import sys
from pathlib import Path

import pytest

from sacts.census import (ACT_SIZE_CAP, MONOID_ORDER_CAP, CensusScope, canonical_act_table,
                          canonical_monoid_table, catalog, census_counts, enumerate_acts,
                          enumerate_monoids, monoid_key)
from sacts.core import trivial_monoid, validate_act, validate_monoid
from sacts.errors import CapExceeded, InputError

ROOT = Path(__file__).resolve().parent.parent
GOLDEN = json.loads((ROOT / "tests" / "golden" / "census_counts.json").read_text())


def test_oracle_script_reproduces_golden():
    out = subprocess.run([sys.executable, str(ROOT / "scripts" / "census_oracle.py")],
                         capture_output=True, text=True, check=True)
    assert json.loads(out.stdout) == GOLDEN


def test_enumerator_matches_golden():
    got = census_counts(GOLDEN["max_order"], GOLDEN["max_size"])
    assert got == GOLDEN


def test_small_counts():
    assert len(enumerate_monoids(1)) == 1
    assert len(enumerate_monoids(2)) == GOLDEN["monoids"]["2"]
    assert len(enumerate_monoids(3)) == GOLDEN["monoids"]["3"]


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_trivial_monoid_one_act_per_size(m):
    assert len(enumerate_acts(trivial_monoid(), m)) == 1


@pytest.mark.parametrize("M", [M for n in (1, 2, 3) for M in enumerate_monoids(n)], ids=monoid_key)
def test_single_point_act_unique(M):
    assert len(enumerate_acts(M, 1)) == 1


@pytest.mark.parametrize("n", [1, 2, 3])
def test_monoid_outputs_canonical(n):
    ms = enumerate_monoids(n)
    for M in ms:
        validate_monoid(M.table, M.identity)
        flat = tuple(v for row in M.table for v in row)
        assert canonical_monoid_table(M.table, M.identity) == flat
    assert len({M.table for M in ms}) == len(ms)


@pytest.mark.parametrize("M", [M for n in (1, 2, 3) for M in enumerate_monoids(n)], ids=monoid_key)
def test_act_outputs_canonical(M):
    for m in (2, 3):
        acts = enumerate_acts(M, m)
        for A in acts:
            validate_act(M, A.action)
            assert canonical_act_table(A.action) == tuple(v for r in A.action for v in r)
        assert len({A.action for A in acts}) == len(acts)


def test_caps():
    with pytest.raises(CapExceeded) as err:
        enumerate_monoids(MONOID_ORDER_CAP + 1)
    assert "--monoid-order-cap" in str(err.value)
    with pytest.raises(CapExceeded) as err:
        enumerate_acts(trivial_monoid(), ACT_SIZE_CAP + 1)
    assert "--act-size-cap" in str(err.value)
    with pytest.raises(CapExceeded):
        CensusScope(max_monoid_order=5)
    with pytest.raises(InputError):
        CensusScope(max_act_size=0)


def test_catalog_contents():
    names = [n for n, _ in catalog()]
    assert names[0] == "theta"
    assert {"chain3", "E7-regular", "T2-regular", "trivial-2"} <= set(names)
