import time

import pytest
from hypothesis import given, settings, strategies as st

from sacts import symbolic as sym
from sacts.census import enumerate_monoids
from sacts.core import regular_act
from sacts.errors import InputError
from sacts.morphisms import enumerate_endomorphisms, translation
from sacts.properties import cohopfian_routes, is_cohopfian, is_hopfian, stabilization
from sacts.verdict import Status

B = sym.Bicyclic()
N = sym.NatAdd()
MONOIDS = [M for n in (1, 2, 3) for M in enumerate_monoids(n)]


def word(x):
    i, j = x
    return "c" * i + "b" * j


def reduce_word(w):
    # delete "bc" until none is left; the result is c...cb...b
    while "bc" in w:
        w = w.replace("bc", "", 1)
    return (w.count("c"), w.count("b"))


pairs = st.tuples(st.integers(0, 6), st.integers(0, 6))


@given(pairs, pairs)
def test_bicyclic_product_matches_rewriting(x, y):
    assert B.multiply(x, y) == reduce_word(word(x) + word(y))


def test_bicyclic_associative_norm_4():
    els = B.elements(4)
    for x in els:
        for y in els:
            xy = B.multiply(x, y)
            for z in els:
                assert B.multiply(xy, z) == B.multiply(x, B.multiply(y, z))


def test_bicyclic_parse_format_roundtrip():
    for x in B.elements(5):
        assert B.parse(B.format(x)) == x
    assert B.parse("cb") == (1, 1)
    assert B.multiply(B.parse("b"), B.parse("c")) == B.identity


def test_identity_criteria():
    for S in (B, N, sym.FreeMonoid(2)):
        assert sym.right_invertible(S, S.identity).holds
        assert sym.left_cancellative(S, S.identity).holds
        v = sym.strongly_hopfian_element(S, S.identity)
        assert v.holds and v.witness["n"] == 1
        z = S.elements(2)[-1]
        v = sym.strongly_cohopfian_element(S, z, S.identity)
        assert v.holds and v.witness["n"] == 1


def test_nat_add_verdicts():
    v = sym.monoid_right_hopfian(N)
    assert v.holds and v.certificate["fact"] == "commutative"
    v = sym.monoid_right_cohopfian(N)
    assert v.fails and v.witness["x"] == "1"
    v = sym.strongly_cohopfian_element(N, 0, 1)
    assert v.fails


def test_bicyclic_right_hopfian_fails_fast():
    t0 = time.perf_counter()
    v = sym.monoid_right_hopfian(B, sym.Budget(max_norm=3))
    assert time.perf_counter() - t0 < 1.0
    assert v.fails
    assert v.witness == {"x": "b", "inverse": "c", "pair": ["cb", "1"]}
    assert sym.recheck(B, v)


def test_bicyclic_strongly_hopfian_element_b():
    v = sym.strongly_hopfian_element(B, B.parse("b"), sym.Budget(max_norm=5, max_n=3))
    assert v.fails
    assert sym.recheck(B, v)
    viol = v.witness["violations"]
    assert [w["n"] for w in viol] == [1, 2, 3]
    for w in viol:
        n = w["n"]
        assert (w["s"], w["t"]) == (B.format((n + 1, 1)), B.format((n, 0)))


def test_bicyclic_strongly_cohopfian_unknown():
    v = sym.monoid_strongly_cohopfian(B)
    assert v.status is Status.UNKNOWN


def test_free_monoid():
    F = sym.FreeMonoid(2)
    assert sym.monoid_right_hopfian(F).holds
    v = sym.monoid_right_cohopfian(F)
    assert v.fails and v.witness["x"] == "a"
    assert sym.monoid_right_hopfian(sym.FreeMonoid(1)).holds


def test_witness_recheck_rejects_forgery():
    v = sym.monoid_right_hopfian(B)
    forged = type(v)(v.property, v.status, dict(v.witness, pair=["1", "1"]), v.certificate)
    assert not sym.recheck(B, forged)


@pytest.mark.parametrize("S", [B, N, sym.FreeMonoid(2)], ids=["bicyclic", "nat-add", "free2"])
@pytest.mark.parametrize("crit", ["right-hopfian", "right-cohopfian", "strongly-hopfian", "strongly-cohopfian"])
def test_budget_monotone(S, crit):
    seen = set()
    for norm in (1, 2, 3, 4):
        v = sym.evaluate(S, crit, sym.Budget(max_norm=norm, max_n=norm))
        if v.status is not Status.UNKNOWN:
            seen.add(v.status)
        if v.fails:
            assert sym.recheck(S, v)
    assert len(seen) <= 1


@pytest.mark.parametrize("M", MONOIDS, ids=lambda M: str(M.table))
def test_finite_backend_matches_regular_act(M):
    F = sym.FiniteTableMonoid(M)
    R = regular_act(M)
    endos = enumerate_endomorphisms(R)
    assert sym.monoid_right_hopfian(F).holds == is_hopfian(R, endos).holds
    assert sym.monoid_right_cohopfian(F).holds == is_cohopfian(R, endos).holds
    chain = all(cohopfian_routes(f)["chain"] is not None for f in endos)
    assert sym.monoid_strongly_cohopfian(F).holds == chain
    for x in range(M.size):
        rep = stabilization(translation(R, x))
        v = sym.strongly_hopfian_element(F, x)
        assert v.holds and v.witness["n"] == rep.ker_index
        ns = [sym.strongly_cohopfian_element(F, z, x).witness["n"] for z in range(M.size)]
        assert max(ns) == rep.im_index


def test_backend_lookup(tmp_path):
    assert isinstance(sym.get_backend("bicyclic"), sym.Bicyclic)
    assert sym.get_backend("free:3").k == 3
    with pytest.raises(InputError):
        sym.get_backend("free:x")
    with pytest.raises(InputError):
        sym.get_backend("knuth-bendix")
    p = tmp_path / "m.txt"
    p.write_text("monoid 2 0\n0 1\n1 1\n")
    assert sym.get_backend(f"finite:{p}").order == 2


def test_evaluate_needs_x():
    with pytest.raises(InputError):
        sym.evaluate(B, "right-invertible")
    assert sym.evaluate(B, "right-invertible", x="b").holds
    assert sym.evaluate(B, "left-cancellative", x="b").fails
