import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ncshuffle import combinatorics as comb
from ncshuffle.combinatorics import NoncrossingPartition as NC


def catalan(n):
    return math.comb(2 * n, n) // (n + 1)


@pytest.mark.parametrize("n", range(1, 11))
def test_nc_counts_are_catalan(n):
    assert len(comb.enumerate_partitions(n, "nc")) == catalan(n)
    assert len(comb.enumerate_partitions(n, "nc_irr")) == catalan(n - 1)
    assert len(comb.enumerate_partitions(n, "interval")) == 2 ** (n - 1)


@pytest.mark.parametrize("n", range(1, 9))
def test_generator_matches_brute_force(n):
    assert sorted(p.rgs for p in comb.enumerate_partitions(n, "nc")) == \
        sorted(p.rgs for p in comb.nc_by_filter(n))


@pytest.mark.parametrize("n", range(1, 9))
def test_monotone_count_sums_to_enumeration(n):
    total = sum(comb.monotone_count(p) for p in comb.enumerate_partitions(n, "nc"))
    assert total == len(comb.enumerate_partitions(n, "monotone"))


def test_small_monotone_counts():
    # n = 3 by hand: {123}, {12}{3} x2, {1}{23} x2, {13}{2} (nested, one labeling), {1}{2}{3} x6
    assert [len(comb.enumerate_partitions(n, "monotone")) for n in range(1, 4)] == [1, 3, 12]


def test_set_partition_count_is_bell():
    assert [sum(1 for _ in comb.set_partitions_rgs(n)) for n in range(1, 8)] == [1, 2, 5, 15, 52, 203, 877]


@given(st.integers(1, 7).flatmap(lambda n: st.lists(st.integers(0, n - 1), min_size=n, max_size=n)))
def test_fast_crossing_check_matches_brute_force(labels):
    groups = {}
    for pos, b in enumerate(labels, start=1):
        groups.setdefault(b, []).append(pos)
    blocks = tuple(tuple(v) for v in groups.values())
    assert comb._crosses(blocks) == comb.crosses_brute_force(blocks)


def test_crossing_partition_rejected():
    with pytest.raises(ValueError):
        NC(4, ((1, 3), (2, 4)))
    with pytest.raises(ValueError):
        NC(3, ((1, 2),))


def test_nesting_structure():
    p = NC(6, ((1, 6), (2, 3), (4,), (5,)))
    assert p.is_irreducible() and not p.is_interval()
    assert p.outer_blocks() == ((1, 6),)
    assert p.inner() == 3
    assert p.parents() == (None, 0, 0, 0)
    assert comb.partition_tree_factorial(p) == 4
    assert comb.monotone_count(p) == 6


def test_classify_splits_into_irreducible_components():
    p = NC(5, ((1, 3), (2,), (4,), (5,)))
    c = comb.classify(p)
    assert c.spans == ((1, 3), (4, 4), (5, 5))
    assert comb.concatenate(c.irreducible_components) == p


def test_tree_factorial_of_chain():
    chain = NC(6, ((1, 6), (2, 5), (3, 4)))
    assert comb.partition_tree_factorial(chain) == 6
    assert comb.monotone_count(chain) == 1


def test_omega_small_values():
    assert comb.omega(NC(2, ((1, 2),))) == 1
    assert comb.omega(NC(3, ((1, 3), (2,)))) == Fraction(-1, 2)
    assert comb.omega(NC(4, ((1, 4), (2,), (3,)))) == Fraction(1, 6)


def test_omega_rejects_reducible():
    with pytest.raises(comb.DomainError):
        comb.omega(NC(2, ((1,), (2,))))


def test_linear_extensions_of_vee():
    # root with two children: 2 increasing labelings
    assert list(comb.linear_extensions((None, 0, 0))) == [(1, 2, 3), (1, 3, 2)]


def test_monotone_partition_validation():
    p = NC(3, ((1, 3), (2,)))
    comb.MonotonePartition(p, (1, 2))
    with pytest.raises(ValueError):
        comb.MonotonePartition(p, (2, 1))


def test_limits():
    with pytest.raises(comb.LimitError):
        comb.enumerate_partitions(0, "nc")
    with pytest.raises(comb.LimitError):
        comb.enumerate_partitions(11, "monotone")
    with pytest.raises(ValueError):
        comb.enumerate_partitions(3, "crossing")


def test_restrict():
    assert comb.restrict("abcd", (1, 3)) == ("a", "c")
    with pytest.raises(IndexError):
        comb.restrict("ab", (3,))
