"""Exact solver: translate families, minimum hitting sets, and the naive oracle."""

import itertools
import random

import pytest

from shiftfree.bounds import bounds_report
from shiftfree.construct import verify_avoids
from shiftfree.errors import BudgetExceededError, EmptySetError
from shiftfree.exact import (
    DEFAULT_MAX_ORDER,
    NAIVE_MAX_ORDER,
    TranslateFamily,
    exact_N,
    min_hitting_set,
    naive_exact,
    translate_family,
)
from shiftfree.groups import Group, GroupSubset


def brute_min_hitting_size(family: TranslateFamily) -> int:
    sets = [set(s.indices()) for s in family.sets]
    for k in range(family.universe_size + 1):
        for combo in itertools.combinations(range(family.universe_size), k):
            chosen = set(combo)
            if all(chosen & s for s in sets):
                return k
    raise AssertionError("the full universe always hits")


# -- translate family ------------------------------------------------------------


def test_translate_family_anchors():
    z6 = Group([6])
    fam = translate_family(GroupSubset.from_indices(z6, [0, 1]))
    assert fam.universe_size == 6
    assert len(fam.sets) == 6
    assert [s.indices() for s in fam.sets[:3]] == [[0, 1], [1, 2], [2, 3]]

    z4 = Group([4])
    fam = translate_family(GroupSubset.from_indices(z4, [0, 2]))
    assert [s.indices() for s in fam.sets] == [[0, 2], [1, 3]]

    whole = translate_family(GroupSubset.full(z4))
    assert len(whole.sets) == 1
    assert whole.sets[0].size == 4


def test_translate_family_regularity():
    # Every element lies in exactly |S|/|H| of the family's sets.
    rng = random.Random(29)
    for orders in ([6], [8], [2, 4], [12], [2, 2, 3]):
        grp = Group(orders)
        for _ in range(20):
            pattern = GroupSubset(grp, rng.randrange(1, 1 << grp.size))
            fam = translate_family(pattern)
            for a in grp.elements():
                hits = sum(1 for s in fam.sets if a in s)
                assert hits == fam.sets_per_element


def test_translate_family_rejects_empty():
    with pytest.raises(EmptySetError):
        translate_family(GroupSubset.empty(Group([5])))


# -- minimum hitting set -----------------------------------------------------


def test_min_hitting_set_anchors():
    z6 = Group([6])
    size, witness = min_hitting_set(translate_family(GroupSubset.from_indices(z6, [0, 1])))
    assert size == 3
    assert witness.size == 3

    z4 = Group([4])
    size, witness = min_hitting_set(translate_family(GroupSubset.from_indices(z4, [0, 2])))
    assert size == 2  # the two translates are disjoint

    single = translate_family(GroupSubset.full(z6))
    assert min_hitting_set(single)[0] == 1


def test_min_hitting_set_witness_hits_every_set():
    rng = random.Random(41)
    for orders in ([7], [9], [2, 5], [3, 3]):
        grp = Group(orders)
        for _ in range(15):
            fam = translate_family(GroupSubset(grp, rng.randrange(1, 1 << grp.size)))
            size, witness = min_hitting_set(fam)
            assert witness.size == size
            for s in fam.sets:
                assert witness.bits & s.bits


def test_min_hitting_set_matches_brute_force():
    rng = random.Random(43)
    for orders in ([6], [8], [9], [2, 4], [10], [2, 5]):
        grp = Group(orders)
        for _ in range(12):
            fam = translate_family(GroupSubset(grp, rng.randrange(1, 1 << grp.size)))
            assert min_hitting_set(fam)[0] == brute_min_hitting_size(fam)


def test_min_hitting_set_is_deterministic():
    fam = translate_family(GroupSubset.from_indices(Group([12]), [0, 2, 3]))
    assert min_hitting_set(fam) == min_hitting_set(fam)


# -- exact threshold ------------------------------------------------------------


def test_exact_n_anchor_z6_pair():
    z6 = Group([6])
    result = exact_N(GroupSubset.from_indices(z6, [0, 1]))
    assert result.n_value == 4
    assert result.optimal
    assert result.nodes >= 1


def test_exact_n_anchor_z4_coset():
    result = exact_N(GroupSubset.from_indices(Group([4]), [0, 2]))
    assert result.n_value == 3


def test_exact_n_full_group_pattern():
    for g in (1, 5, 9):
        grp = Group([g])
        assert exact_N(GroupSubset.full(grp)).n_value == g


def test_exact_n_singleton_pattern():
    result = exact_N(GroupSubset.from_indices(Group([7]), [3]))
    assert result.n_value == 1
    assert naive_exact(GroupSubset.from_indices(Group([7]), [3])) == 1


def test_exact_n_certificates_are_dual():
    rng = random.Random(47)
    for orders in ([6], [10], [12], [2, 6], [3, 4]):
        grp = Group(orders)
        for _ in range(10):
            pattern = GroupSubset(grp, rng.randrange(1, 1 << grp.size))
            result = exact_N(pattern)
            avoider, hitting = result.max_avoider, result.min_hitting_set
            assert avoider.bits & hitting.bits == 0
            assert avoider.bits | hitting.bits == (1 << grp.size) - 1
            assert avoider.size == result.n_value - 1
            assert verify_avoids(avoider, pattern).verified
            report = bounds_report(pattern)
            assert report.thm2_lower <= result.n_value <= report.upper


def test_exact_n_translation_invariant():
    grp = Group([10])
    base = GroupSubset.from_indices(grp, [0, 1, 4])
    reference = exact_N(base).n_value
    for t in grp.elements():
        assert exact_N(base.translate(t)).n_value == reference


def test_exact_n_matches_naive_oracle_sampled():
    # The full sweep over every group of order <= 10 lives in the acceptance
    # suite; this samples the larger orders the naive oracle can still reach.
    rng = random.Random(53)
    for orders in ([11], [12], [2, 6], [2, 2, 3], [13], [14], [2, 7]):
        grp = Group(orders)
        for _ in range(12):
            pattern = GroupSubset(grp, rng.randrange(1, 1 << grp.size))
            assert exact_N(pattern).n_value == naive_exact(pattern)


def test_exact_n_adjacent_pair_closed_form():
    # For S = {0,1} in a cycle the maximum avoider is a maximum independent
    # set of the cycle graph, so N = floor(g/2) + 1.
    for g in (4, 6, 9, 13, 41):
        grp = Group([g])
        result = exact_N(GroupSubset.from_indices(grp, [0, 1]), max_order=41)
        assert result.n_value == g // 2 + 1


# -- budgets --------------------------------------------------------------------


def test_exact_n_order_cap():
    grp = Group([DEFAULT_MAX_ORDER + 1])
    with pytest.raises(BudgetExceededError):
        exact_N(GroupSubset.from_indices(grp, [0, 1]))


def test_exact_n_zero_budget_never_returns_partial():
    pattern = GroupSubset.from_indices(Group([12]), [0, 1, 5])
    with pytest.raises(BudgetExceededError):
        exact_N(pattern, budget_ms=0)


def test_exact_n_no_wall_clock_when_budget_none():
    pattern = GroupSubset.from_indices(Group([8]), [0, 1])
    assert exact_N(pattern, budget_ms=None).n_value == 5


def test_naive_oracle_order_cap():
    grp = Group([NAIVE_MAX_ORDER + 1])
    with pytest.raises(BudgetExceededError):
        naive_exact(GroupSubset.from_indices(grp, [0, 1]))


def test_empty_pattern_rejected_everywhere():
    grp = Group([6])
    with pytest.raises(EmptySetError):
        exact_N(GroupSubset.empty(grp))
    with pytest.raises(EmptySetError):
        naive_exact(GroupSubset.empty(grp))
