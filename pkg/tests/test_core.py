import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from paritybias.core import (
    DQ, EMPTY, P, P_D, P_E, P_O, Q, Q_O, Bias, ClassSpec, Partition, avoiding,
    bias_class, enumerate_partitions, from_parts, satisfies, split, stats, union,
)

from conftest import PARTITION_NUMBERS, brute

parts_lists = st.lists(st.integers(min_value=1, max_value=12), max_size=10)


def test_from_parts_sorts():
    lam = from_parts([3, 1, 2])
    assert lam.parts == (3, 2, 1) and lam.n == 6
    assert from_parts([]) == EMPTY and EMPTY.n == 0
    assert from_parts([2, 2, 1]).parts == (2, 2, 1)


@pytest.mark.parametrize("raw", [[0], [3, -1], [2, 0, 1]])
def test_from_parts_rejects_nonpositive(raw):
    with pytest.raises(ValueError):
        from_parts(raw)


def test_partition_rejects_unsorted():
    with pytest.raises(ValueError):
        Partition((1, 2))


def test_stats_examples():
    s = stats(from_parts([1]))
    assert (s.len, s.len_even, s.len_odd, s.largest) == (1, 0, 1, 1)
    s = stats(from_parts([4, 2, 2, 1]))
    assert (s.len, s.len_even, s.len_odd, s.largest, s.len_odd_gt1) == (4, 3, 1, 4, 0)
    s = stats(from_parts([7, 2, 2, 1, 1]))
    assert (s.len, s.len_even, s.len_odd, s.len_odd_gt1) == (5, 2, 3, 1)
    assert stats(EMPTY).largest == 0


def test_union_and_split_examples():
    assert union(from_parts([3, 1]), from_parts([2])).parts == (3, 2, 1)
    assert union(from_parts([2, 2]), from_parts([2])).parts == (2, 2, 2)
    lam = from_parts([5, 3])
    assert union(lam, EMPTY) == lam
    ev, od = split(from_parts([4, 2, 2, 1]))
    assert ev.parts == (4, 2, 2) and od.parts == (1,)
    assert split(from_parts([3, 1, 1])) == (EMPTY, from_parts([3, 1, 1]))
    assert split(EMPTY) == (EMPTY, EMPTY)


def test_bias_examples():
    assert bias_class(from_parts([3, 1, 1])) is Bias.ODD_HEAVY
    assert bias_class(from_parts([2, 1])) is Bias.BALANCED
    assert bias_class(from_parts([4, 2, 1])) is Bias.EVEN_HEAVY
    assert bias_class(EMPTY) is Bias.BALANCED


def test_satisfies_examples():
    assert satisfies(from_parts([3, 3, 2]), Q_O)
    assert not satisfies(from_parts([2, 1]), Q)
    assert not satisfies(from_parts([4, 3]), P_D.with_bias(Bias.EVEN_HEAVY))


def test_enumerate_examples():
    assert [l.parts for l in enumerate_partitions(4, P_O)] == [(3, 1), (2, 1, 1), (1, 1, 1, 1)]
    assert [l.parts for l in enumerate_partitions(2, P_E)] == [(2,)]
    assert list(enumerate_partitions(0, P)) == [EMPTY]


def test_enumerate_order_is_lex_decreasing():
    seq = [l.parts for l in enumerate_partitions(12, P)]
    assert seq == sorted(seq, reverse=True)


@pytest.mark.parametrize("n", range(21))
def test_enumeration_matches_partition_numbers(n):
    assert sum(1 for _ in enumerate_partitions(n, P)) == PARTITION_NUMBERS[n]


SPECS = [P, P_D, Q, DQ, avoiding(2), avoiding(1, 2), avoiding(3), ClassSpec(distinct=True, forbidden=frozenset({4}))]


@pytest.mark.parametrize("spec", SPECS, ids=lambda s: s.key())
def test_enumeration_matches_brute_force(spec):
    for n in range(0, 19):
        got = {l.parts for l in enumerate_partitions(n, spec)}
        want = set(brute(n, spec.distinct, spec.min_part, spec.forbidden))
        assert got == want, n


@pytest.mark.parametrize("spec", SPECS, ids=lambda s: s.key())
def test_bias_classes_partition_the_class(spec):
    for n in range(0, 25):
        total = sum(1 for _ in enumerate_partitions(n, spec))
        parts = sum(sum(1 for _ in enumerate_partitions(n, spec.with_bias(b)))
                    for b in (Bias.ODD_HEAVY, Bias.EVEN_HEAVY, Bias.BALANCED))
        assert parts == total


def test_enumeration_no_duplicates_and_all_satisfy():
    for spec in SPECS:
        for n in range(0, 25):
            seen = list(enumerate_partitions(n, spec))
            assert len(seen) == len(set(seen))
            assert all(satisfies(l, spec) for l in seen)


def test_key_round_trip():
    for spec in SPECS:
        assert ClassSpec.from_key(spec.key()) == spec.base()
    assert avoiding(1, 2).with_bias(Bias.ODD_HEAVY).key() == avoiding(1, 2).key()


@given(parts_lists)
def test_stats_invariants(raw):
    lam = from_parts(raw)
    s = stats(lam)
    assert s.len == s.len_even + s.len_odd
    assert s.len_odd_gt1 == s.len_odd - lam.mult(1)
    assert sum(v * m for v, m in s.mults) == s.n == sum(raw)
    assert all(a[0] > b[0] for a, b in zip(s.mults, s.mults[1:]))


@given(parts_lists, parts_lists)
def test_union_is_multiset_sum(a, b):
    u = union(from_parts(a), from_parts(b))
    assert u.n == sum(a) + sum(b)
    assert u == from_parts(a + b)
    assert list(u.parts) == sorted(u.parts, reverse=True)


@given(parts_lists)
def test_split_round_trip(raw):
    lam = from_parts(raw)
    ev, od = split(lam)
    assert union(ev, od) == lam
    assert all(p % 2 == 0 for p in ev) and all(p % 2 for p in od)


@settings(max_examples=60)
@given(parts_lists)
def test_bias_class_matches_counts(raw):
    lam = from_parts(raw)
    o = sum(p % 2 for p in raw)
    e = len(raw) - o
    expected = Bias.ODD_HEAVY if o > e else Bias.EVEN_HEAVY if e > o else Bias.BALANCED
    assert bias_class(lam) is expected
