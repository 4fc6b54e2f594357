import pytest
from hypothesis import given, strategies as st

from sacts.core import (FiniteAct, Subact, make_subact, regular_act, trivial_act, trivial_monoid,
                        validate_act, validate_monoid)
from sacts.errors import ValidationError
from sacts.census import enumerate_monoids

from conftest import SMALL_ACTS

MONOIDS = [M for n in (1, 2, 3) for M in enumerate_monoids(n)]


def test_trivial_monoid_valid():
    M = validate_monoid([[0]], 0)
    assert M.size == 1 and M.mul(0, 0) == 0


def test_t2_valid():
    M = validate_monoid([[0, 1], [1, 1]], 0, labels=["1", "e"])
    assert M.mul(1, 1) == 1 and M.name(1) == "e"


def test_identity_violation_names_pair():
    # 0 is a left identity (0*x = x) but 1*0 = 0 != 1
    with pytest.raises(ValidationError) as err:
        validate_monoid([[0, 1], [0, 0]], 0)
    assert err.value.witness is not None
    assert len(err.value.witness) == 2


def test_associativity_violation_names_triple():
    with pytest.raises(ValidationError) as err:
        validate_monoid([[0, 1, 2], [1, 2, 0], [2, 2, 2]], 0)
    assert len(err.value.witness) == 3


def test_out_of_range_entry():
    with pytest.raises(ValidationError):
        validate_monoid([[0, 5], [1, 1]], 0)


def test_regular_act_trivial():
    A = regular_act(trivial_monoid())
    assert A.size == 1


def test_regular_act_t2(t2):
    A = regular_act(t2)
    assert A.action == ((0, 1), (1, 1))


def test_regular_act_rejects_symbolic():
    from sacts.symbolic import Bicyclic
    with pytest.raises(TypeError):
        regular_act(Bicyclic())


def test_act_unitality_checked(t2):
    with pytest.raises(ValidationError):
        validate_act(t2, [[1, 1], [1, 1]])


def test_act_compatibility_checked():
    # over T2, e must act idempotently: a.e.e = a.e
    M = validate_monoid([[0, 1], [1, 1]], 0)
    with pytest.raises(ValidationError):
        validate_act(M, [[0, 1], [1, 0]])


@pytest.mark.parametrize("M", MONOIDS, ids=lambda M: str(M.table))
def test_regular_act_is_act(M):
    A = regular_act(M)
    validate_act(M, A.action)


@pytest.mark.parametrize("M", MONOIDS, ids=lambda M: str(M.table))
def test_regular_act_zeros(M):
    A = regular_act(M)
    assert A.zeros == [z for z in range(M.size) if all(M.mul(z, s) == z for s in range(M.size))]
    assert A.zeros == M.right_zeros()


def test_zeros_and_designated(chain3, t2_regular):
    assert chain3.zeros == [0, 1, 2]
    assert chain3.designated_zero == 0
    assert t2_regular.zeros == [1]
    assert t2_regular.designated_zero == 1


def test_subact_closure(t2_regular):
    assert make_subact(t2_regular, [1]).members == (1,)
    with pytest.raises(ValidationError):
        make_subact(t2_regular, [0])


def test_subact_as_act(e7_regular):
    B = make_subact(e7_regular, [2, 1])
    assert B.members == (1, 2)
    Bact = B.as_act()
    assert Bact.size == 2
    assert 2 in B and 0 not in B


@given(st.sampled_from(SMALL_ACTS), st.data())
def test_orbit_is_closed(A, data):
    a = data.draw(st.integers(0, A.size - 1))
    orb = A.orbit(a)
    assert a in orb
    assert all(A.act(x, s) in orb for x in orb for s in range(A.monoid.size))
