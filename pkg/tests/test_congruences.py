from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from sacts.congruences import (canonical_labels, compatibility_violation, diagonal,
                               enumerate_congruences, generated_by, join, kernel, make_congruence,
                               meet, quotient_act, rees, universal)
from sacts.core import make_subact, regular_act, trivial_act, trivial_monoid
from sacts.errors import ValidationError
from sacts.morphisms import enumerate_endomorphisms

from conftest import SMALL_ACTS


def set_partitions(n):
    # naive: every labelling, canonicalised, deduplicated
    return sorted({canonical_labels(lab) for lab in product(range(n), repeat=n)})


def brute_congruences(A):
    """Independent of the pruned search: filter every partition."""
    out = []
    for lab in set_partitions(A.size):
        ok = all(lab[A.act(a, s)] == lab[A.act(b, s)]
                 for a in range(A.size) for b in range(A.size) if lab[a] == lab[b]
                 for s in range(A.monoid.size))
        if ok:
            out.append(lab)
    return out


def pairs_of(labels):
    n = len(labels)
    return {(a, b) for a in range(n) for b in range(n) if labels[a] == labels[b]}


def test_join_chain_example(chain3):
    rho = make_congruence(chain3, [0, 0, 1])
    sigma = make_congruence(chain3, [0, 1, 1])
    assert join(rho, sigma).is_universal()
    assert meet(rho, sigma).is_diagonal()


def test_rees_examples(e7_regular, chain3):
    assert rees(e7_regular, make_subact(e7_regular, [1, 2])).blocks() == [(0,), (1, 2)]
    assert rees(chain3, [0]).is_diagonal()
    assert rees(chain3, [0, 1, 2]).is_universal()


def test_generated_examples(t2_regular, chain3):
    assert generated_by(chain3, []).is_diagonal()
    assert generated_by(chain3, [(a, b) for a in range(3) for b in range(3)]).is_universal()
    assert generated_by(t2_regular, [(0, 1)]).is_universal()


def test_enumerate_small_counts(theta, trivial2, t2_regular):
    assert [c.labels for c in enumerate_congruences(theta)] == [(0,)]
    assert len(enumerate_congruences(trivial2)) == 2
    assert len(enumerate_congruences(t2_regular)) == 2


def test_incompatible_partition_rejected(t2):
    from sacts.core import validate_act
    # e sends 0 to 2 and fixes 1, so {0,1} | {2} is not compatible
    A = validate_act(t2, [[0, 2], [1, 1], [2, 2]])
    with pytest.raises(ValidationError) as err:
        make_congruence(A, [0, 0, 1])
    assert err.value.witness is not None
    assert compatibility_violation(A, [0, 1, 1]) is None


@pytest.mark.parametrize("A", SMALL_ACTS[:60])
def test_enumeration_matches_brute_force(A):
    assert [c.labels for c in enumerate_congruences(A)] == sorted(brute_congruences(A))


@pytest.mark.parametrize("A", SMALL_ACTS[:60])
def test_join_is_least_upper_bound(A):
    cons = brute_congruences(A)
    cs = enumerate_congruences(A)
    for r, s in product(cs, repeat=2):
        need = pairs_of(r.labels) | pairs_of(s.labels)
        ubs = [lab for lab in cons if need <= pairs_of(lab)]
        least = min(ubs, key=lambda lab: len(pairs_of(lab)))
        assert all(pairs_of(least) <= pairs_of(u) for u in ubs)
        assert join(r, s).labels == least
        assert pairs_of(meet(r, s).labels) == pairs_of(r.labels) & pairs_of(s.labels)


acts = st.sampled_from([A for A in SMALL_ACTS if A.size >= 2])


@settings(max_examples=60, deadline=None)
@given(acts, st.data())
def test_lattice_laws(A, data):
    cs = enumerate_congruences(A)
    r, s, t = (data.draw(st.sampled_from(cs)) for _ in range(3))
    D, N = diagonal(A), universal(A)
    assert join(r, s) == join(s, r)
    assert join(join(r, s), t) == join(r, join(s, t))
    assert join(r, r) == r
    assert join(r, D) == r and join(r, N) == N
    assert meet(r, s) == meet(s, r)
    assert meet(meet(r, s), t) == meet(r, meet(s, t))
    assert meet(r, join(r, s)) == r  # absorption
    assert join(r, meet(r, s)) == r


@settings(max_examples=60, deadline=None)
@given(acts, st.data())
def test_generated_by_spanning_pairs(A, data):
    r = data.draw(st.sampled_from(enumerate_congruences(A)))
    spanning = [(blk[0], b) for blk in r.blocks() for b in blk[1:]]
    assert generated_by(A, spanning) == r


@settings(max_examples=60, deadline=None)
@given(acts, st.data())
def test_quotient_kernel_roundtrip(A, data):
    r = data.draw(st.sampled_from(enumerate_congruences(A)))
    Q, pi = quotient_act(A, r)
    assert kernel(pi) == r
    assert Q.size == r.num_blocks


@settings(max_examples=60, deadline=None)
@given(acts, st.data())
def test_kernels_are_compatible(A, data):
    f = data.draw(st.sampled_from(enumerate_endomorphisms(A)))
    assert compatibility_violation(A, kernel(f).labels) is None


def test_quotient_labels(e7_regular):
    Q, pi = quotient_act(e7_regular, rees(e7_regular, [1, 2]))
    assert Q.labels == ("{1}", "{a,b}")
    assert pi.map == (0, 1, 1)


def test_cross_act_join_rejected(chain3, trivial2):
    with pytest.raises(ValueError):
        join(diagonal(chain3), diagonal(trivial2))
