"""Acceptance criteria, one test each; conftest prints a pass/fail line per criterion."""
import time

from stacksorting.perm import chi
from stacksorting.sliding import swu_hooks
from stacksorting.stacksort import sort_once
from stacksorting.stats import tail_length
from stacksorting.trees import in_order_inverse, postorder
from stacksorting.verify import (boolean_catalan_chain, binary_not_ternary, check_fertility_wilf,
                                 check_hook_split, check_zeil_rmax_tail, check_motzkin, check_sliding, check_theta,
                                 check_vhc_fertility, check_vhc_injective, containment_sequences, strong_separation,
                                 swl_family_joint, swl_family_types, swu_family_sweep)
from stacksorting.vhc import Hook, make_vhc, split_by_hook


def _ok(*reports):
    for r in reports:
        assert r.passed, r.to_json()


def test_criterion_01_worked_examples():
    start = time.perf_counter()
    assert sort_once((4, 3, 5, 1, 2)) == (3, 4, 1, 2, 5)
    trees = [in_order_inverse(p) for p in [(4, 2, 7, 6, 1, 5, 3), (2, 4, 7, 6, 1, 5, 3)]]
    assert [postorder(t) for t in trees] == [(2, 4, 1, 3, 5, 6, 7)] * 2
    assert [tail_length(p) for p in [(3, 5, 4, 1, 2, 6, 7, 8), (1, 3, 2, 4), (2, 1, 4, 5, 3)]] == [3, 1, 0]
    assert chi(5, (1, 3, 2)) == (8, 6, 4, 1, 3, 2, 5, 7)
    assert chi(6, (1, 3, 2)) == (8, 6, 4, 1, 3, 2, 5, 7, 9)
    h11 = make_vhc((6, 12, 3, 8, 9, 11, 13, 1, 4, 10, 2, 5, 7, 14, 15, 16), [(2, 7), (7, 15), (10, 14)])
    assert (h11.composition, h11.type) == ((3, 4, 3, 3), (4, 3, 3, 3))
    h13 = make_vhc((1, 2, 9, 3, 7, 4, 5, 6, 8, 13, 10, 11, 12, 14), [(3, 10), (5, 9), (10, 14)])
    assert h13.composition == swu_hooks(h13).composition == (3, 2, 3, 3)
    h14 = make_vhc((1, 14, 2, 3, 4, 12, 5, 6, 9, 7, 10, 8, 11, 13, 15, 16), [(2, 15), (6, 14), (9, 11), (11, 13)])
    u, s = split_by_hook(h14, Hook(6, 14))
    assert (u.composition, s.composition) == ((3, 4), (3, 1, 1))
    assert time.perf_counter() - start < 1


def test_criterion_02_fertility_formula_oracle():
    _ok(check_vhc_fertility(7, 6))


def test_criterion_03_composition_injectivity_and_hook_split():
    _ok(check_vhc_injective(6), check_hook_split(6))


def test_criterion_04_zeil_rmax_tail_identity():
    _ok(check_zeil_rmax_tail(7))


def test_criterion_05_sliding_bijections():
    _ok(check_sliding(8))


def test_criterion_06_theta_type_bijection():
    _ok(check_theta(7))


def test_criterion_07_swu_family_skeletons_and_statistics():
    _ok(swu_family_sweep(3, 2, 7))


def test_criterion_08_swl_family_types_and_joint_statistics():
    _ok(swl_family_types(3, 2, 7), swl_family_joint(3, 2, 7))


def test_criterion_09_containment_classes():
    _ok(containment_sequences(9), strong_separation(), binary_not_ternary())


def test_criterion_10_boolean_catalan_series():
    _ok(boolean_catalan_chain(9))


def test_criterion_11_motzkin_weights():
    _ok(check_motzkin(6))


def test_criterion_12_fertility_of_three_pattern_classes():
    _ok(check_fertility_wilf([(1, 3, 2), (3, 1, 2), (3, 2, 1)], [(1, 3, 2), (2, 3, 1), (3, 2, 1)], 9))
