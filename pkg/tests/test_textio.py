import pytest
from hypothesis import given, settings, strategies as st

from sacts.core import regular_act
from sacts.errors import InputError, ParseError
from sacts.congruences import enumerate_congruences
from sacts.morphisms import enumerate_endomorphisms
from sacts.textio import (format_act, format_congruence, format_hom, format_monoid, load_act,
                          load_monoid, parse_act, parse_congruence, parse_hom, parse_monoid)

from conftest import SAMPLES, SMALL_ACTS


def test_load_samples():
    A = load_act(SAMPLES / "e7_act.txt")
    assert A.labels == ("1", "a", "b")
    assert A.action == ((0, 1, 2), (1, 1, 2), (2, 1, 2))
    C = load_act(SAMPLES / "chain3.txt")
    assert C.size == 3 and C.monoid.size == 1


def test_bad_associativity_reported_with_path():
    with pytest.raises(ParseError) as err:
        load_monoid(SAMPLES / "bad_assoc.txt")
    assert "bad_assoc.txt" in str(err.value) and "associativity" in str(err.value)


def test_position_annotated_errors():
    with pytest.raises(ParseError) as err:
        parse_monoid("monoid 2 0\n0 1\n1 x\n", path="m.txt")
    assert (err.value.line, err.value.column) == (3, 3)
    with pytest.raises(ParseError):
        parse_monoid("monoid 2 0\n0 1\n")
    with pytest.raises(ParseError):
        parse_monoid("group 2 0\n")


def test_missing_monoid_file(tmp_path):
    p = tmp_path / "a.txt"
    p.write_text("act 1 nowhere.txt\n0\n")
    with pytest.raises(InputError) as err:
        load_act(p)
    assert "nowhere.txt" in str(err.value)


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(SMALL_ACTS))
def test_monoid_and_act_roundtrip(A):
    M = A.monoid
    assert parse_monoid(format_monoid(M)).table == M.table
    B = parse_act(format_act(A, "m.txt"), monoid=M)
    assert B.action == A.action


def test_hom_forms(chain3):
    assert parse_hom("2:1 1:0 0:0", chain3).map == (0, 0, 1)
    assert parse_hom("0 0 1", chain3).map == (0, 0, 1)
    assert parse_hom("hom 3 : 0 0 1", chain3).map == (0, 0, 1)
    with pytest.raises(InputError):
        parse_hom("0 0", chain3)


def test_hom_and_congruence_roundtrip(e7_regular):
    for f in enumerate_endomorphisms(e7_regular):
        assert parse_hom(format_hom(f), e7_regular) == f
    for r in enumerate_congruences(e7_regular):
        assert parse_congruence(format_congruence(r), e7_regular) == r
