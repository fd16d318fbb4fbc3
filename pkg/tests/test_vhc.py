import itertools

import pytest
from hypothesis import given, settings, strategies as st

from stacksorting.perm import all_perms
from stacksorting.stacksort import fertility_table, preimages
from stacksorting.stats import des, peak
from stacksorting.trees import catalan, count_postorder_preimages, motzkin
from stacksorting.vhc import (Hook, coloring, compatible, enumerate_vhcs,
                              fertility_polynomial, fertility_via_vhc, nothing_above_drawn, compatible_drawn,
                              is_composition_of, is_valid, join_by_hook, make_vhc,
                              nothing_above, split_by_hook, transport, type_of, valid_compositions, weighted_count)

FOUR_BLOCKS = make_vhc((6, 12, 3, 8, 9, 11, 13, 1, 4, 10, 2, 5, 7, 14, 15, 16), [(2, 7), (7, 15), (10, 14)])
NESTED_HOOKS = make_vhc((1, 14, 2, 3, 4, 12, 5, 6, 9, 7, 10, 8, 11, 13, 15, 16), [(2, 15), (6, 14), (9, 11), (11, 13)])


def test_hook_needs_order():
    with pytest.raises(ValueError):
        Hook(3, 3)


def test_types():
    assert type_of((1, 3, 4, 1)) == (4, 3, 1, 1)
    assert type_of((3, 4, 3, 3)) == (4, 3, 3, 3)
    assert type_of((5,)) == (5,)


def test_descent_free_has_one_configuration():
    for n in range(1, 7):
        vs = enumerate_vhcs(tuple(range(1, n + 1)))
        assert len(vs) == 1 and vs[0].composition == (n,)
        assert fertility_via_vhc(tuple(range(1, n + 1))) == catalan(n)
        assert weighted_count(tuple(range(1, n + 1)), "motzkin") == motzkin(n - 1)


def test_empty_and_dead_permutations():
    assert fertility_via_vhc(()) == 1
    assert enumerate_vhcs((2, 4, 1, 3)) == []
    assert fertility_via_vhc((2, 4, 1, 3)) == 0


def test_coloring_leaves_ne_endpoints_blank():
    h = make_vhc((2, 3, 1, 4), [(2, 4)])
    assert coloring(h) == [0, 0, 1, None]
    assert h.composition == (2, 1)


def test_conditions_match_geometry():
    for n in range(2, 7):
        for p in all_perms(n):
            hooks = [Hook(i, j) for i in range(1, n) for j in range(i + 1, n + 1) if p[i - 1] < p[j - 1]]
            for h in hooks:
                assert nothing_above(p, h) == nothing_above_drawn(p, h)
            good = [h for h in hooks if nothing_above(p, h)]
            for a, b in itertools.combinations(good, 2):
                if a.sw != b.sw:
                    assert compatible(a, b) == compatible_drawn(p, a, b), (p, a, b)


def test_compositions_are_injective_and_well_formed():
    for n in range(7):
        for p in all_perms(n):
            comps = valid_compositions(p)
            assert len(set(comps)) == len(comps)
            if n:
                assert all(is_composition_of(c, n, des(p)) for c in comps)


def test_enumeration_matches_brute_force_validity():
    for n in range(1, 6):
        for p in all_perms(n):
            ds = [i for i in range(1, n) if p[i - 1] > p[i]]
            choices = [[Hook(d, j) for j in range(d + 1, n + 1) if p[d - 1] < p[j - 1]] for d in ds]
            brute = {hs for hs in itertools.product(*choices) if is_valid(p, hs)}
            assert {h.hooks for h in enumerate_vhcs(p)} == brute


def test_fertility_formula_matches_brute_force():
    for n in range(7):
        table = fertility_table(n)
        for p in all_perms(n):
            assert fertility_via_vhc(p) == table.get(p, 0)


def test_fertility_polynomial_on_s5():
    for p in all_perms(5):
        poly = fertility_polynomial(p)
        expected = {}
        for s in preimages(p, "brute"):
            key = (des(s) + 1, peak(s) + 1)
            expected[key] = expected.get(key, 0) + 1
        assert poly.coeffs == expected


def test_motzkin_weights_count_motzkin_trees():
    for n in range(1, 6):
        for p in all_perms(n):
            assert weighted_count(p, "motzkin") == count_postorder_preimages(p, "motzkin")
    with pytest.raises(ValueError):
        weighted_count((1,), "fibonacci")


def test_worked_compositions():
    assert FOUR_BLOCKS.composition == (3, 4, 3, 3)
    assert FOUR_BLOCKS.type == (4, 3, 3, 3)
    assert NESTED_HOOKS.composition == (3, 4, 3, 1, 1)


def test_split_of_constructed_instance():
    u, s = split_by_hook(NESTED_HOOKS, Hook(6, 14))
    assert u.composition == (3, 4)
    assert s.composition == (3, 1, 1)
    assert join_by_hook(NESTED_HOOKS.base, Hook(6, 14), u, s) == NESTED_HOOKS


def test_single_hook_split():
    h = make_vhc((2, 3, 1, 4), [(2, 4)])
    u, s = split_by_hook(h, Hook(2, 4))
    assert (u.base, u.hooks, s.base, s.hooks) == ((2, 3), (), (1,), ())


def test_split_preconditions():
    with pytest.raises(ValueError):
        split_by_hook(NESTED_HOOKS, Hook(1, 2))
    with pytest.raises(ValueError):
        split_by_hook(NESTED_HOOKS, Hook(9, 11))


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 8), st.randoms(use_true_random=False))
def test_split_join_round_trip(n, rnd):
    p = tuple(rnd.sample(range(1, n + 1), n))
    for h in enumerate_vhcs(p):
        last = max(k.sw for k in h.hooks) if h.hooks else None
        for H in h.hooks:
            if H.ne > last:
                u, s = split_by_hook(h, H)
                assert join_by_hook(p, H, u, s) == h


def test_transport_and_serialization():
    h = make_vhc((2, 3, 1, 4), [(2, 4)])
    moved = transport(h, (20, 30, 10, 40))
    assert moved.composition == h.composition
    assert enumerate_vhcs((20, 30, 10, 40)) == [moved]
    assert h.to_dict() == {"base": [2, 3, 1, 4], "hooks": [[2, 4]]}
    with pytest.raises(ValueError):
        transport(h, (1, 2, 3, 4))
    with pytest.raises(ValueError):
        make_vhc((2, 3, 1, 4), [(2, 3)])
