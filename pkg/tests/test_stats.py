import json
from collections import defaultdict

import pytest
from hypothesis import given, strategies as st

from stacksorting.perm import all_perms
from stacksorting.stacksort import sort_once
from stacksorting.stats import (STATISTICS, des, descent_set, in_order_has_right_child,
                                joint_distribution, lmax, peak, peak_set, rmax, skeleton_of_perm, stat_vector,
                                tail_length, zeil)


def test_basic_values():
    p = (3, 1, 4, 2, 5)
    assert descent_set(p) == {1, 3}
    assert des(p) == 2
    assert peak_set(p) == {3}
    assert peak(p) == 1
    assert lmax(p) == 3
    assert rmax(p) == 1


@pytest.mark.parametrize("p,expected", [((3, 5, 4, 1, 2, 6, 7, 8), 3), ((1, 3, 2, 4), 1),
                                        ((2, 1, 4, 5, 3), 0), ((1, 2, 3), 3)])
def test_tail_length(p, expected):
    assert tail_length(p) == expected


def test_zeil():
    assert zeil((3, 2, 1)) == 3
    assert zeil((1, 3, 2)) == 2
    assert zeil((1, 2, 3)) == 1
    with pytest.raises(ValueError):
        zeil(())


@given(st.integers(1, 7).flatmap(lambda n: st.permutations(list(range(1, n + 1)))),
       st.randoms(use_true_random=False))
def test_normalization_invariant(p, rnd):
    values = sorted(rnd.sample(range(1, 60), len(p)))
    q = [values[x - 1] for x in p]
    for name, f in STATISTICS.items():
        assert f(q) == f(p), name


def test_zeil_rmax_tail_identity():
    for n in range(1, 8):
        for s in all_perms(n):
            assert zeil(s) == min(rmax(s), tail_length(sort_once(s)))


def test_descents_are_right_children():
    for n in range(6):
        for p in all_perms(n):
            flags = in_order_has_right_child(p)
            assert {i for i in range(1, n + 1) if flags[i - 1]} == descent_set(p)


def test_skeleton_codes():
    assert skeleton_of_perm((1,)) == "(__)"
    assert skeleton_of_perm(()) == "_"
    assert skeleton_of_perm((1, 2)) != skeleton_of_perm((2, 1))


def test_skeletal_statistics_factor_through_skeleton():
    for n in range(1, 7):
        seen = {}
        for p in all_perms(n):
            key = skeleton_of_perm(p)
            vec = (descent_set(p), des(p), peak(p), lmax(p), rmax(p), tail_length(p))
            assert seen.setdefault(key, vec) == vec


def test_zeil_is_not_skeletal():
    by_skeleton = defaultdict(set)
    for n in range(1, 6):
        for p in all_perms(n):
            by_skeleton[skeleton_of_perm(p)].add(zeil(p))
    assert any(len(v) > 1 for v in by_skeleton.values())
    # a concrete pair: same shape, the largest entries read in different orders
    assert skeleton_of_perm((1, 3, 2)) == skeleton_of_perm((2, 3, 1))
    assert zeil((1, 3, 2)) != zeil((2, 3, 1))


class TestDistributionTable:
    def test_rmax_separates(self):
        left = joint_distribution([(3, 4, 1, 2), (3, 4, 2, 1)], ["rmax"])
        right = joint_distribution([(3, 1, 4, 2), (1, 3, 4, 2)], ["rmax"])
        assert left != right
        assert left.difference(right)

    def test_empty_and_trivial(self):
        assert joint_distribution([], ["des"]).total == 0
        t = joint_distribution([(1, 2, 3)], ["des", "peak"])
        assert dict(t.counts) == {(0, 0): 1}

    def test_unknown_statistic(self):
        with pytest.raises(ValueError):
            joint_distribution([(1,)], ["nope"])

    def test_lendes_statistic(self):
        def ascents(n, d):
            return n - 1 - len(d)
        t = joint_distribution(all_perms(3), [ascents])
        assert t.stats == ("ascents",)
        assert dict(t.counts) == {(0,): 1, (1,): 4, (2,): 1}

    def test_serialization_is_sorted(self):
        t = joint_distribution(all_perms(4), ["desset", "peak"])
        rows = t.to_csv().splitlines()
        assert rows[0] == "desset,peak,multiplicity"
        assert sum(int(r.rsplit(",", 1)[1]) for r in rows[1:]) == 24
        data = json.loads(t.to_json())
        assert [r["values"] for r in data["rows"]] == [[sorted(k[0]), k[1]] for k, _ in t.rows()]

    def test_stat_vector(self):
        assert "zeil" not in stat_vector(())
        assert stat_vector((2, 1))["zeil"] == 2
