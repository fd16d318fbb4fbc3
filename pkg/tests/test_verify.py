import json

import pytest

from stacksorting.perm import chi
from stacksorting.verify import (CLAIMS, SWU_SEEDS, VerificationReport, av, check_fertility_wilf, check_zeil_star_split,
                                 check_postorder_wilf, check_strong_fertility_wilf, contained_in, family_A,
                                 family_B, preimage_sequence, run_claim, search_postorder_not_strong,
                                 swu_family_sweep, swu_skew_counterexample, zeil_star_counts,
                                 zeil_star_literal_counterexample)


def test_report_invariants():
    with pytest.raises(ValueError):
        VerificationReport("x", "fail")
    with pytest.raises(ValueError):
        VerificationReport("x", "maybe")
    r = VerificationReport("x", "fail", {"n": 3}, 1.5)
    assert not r.passed
    back = VerificationReport.from_dict(json.loads(r.to_json()))
    assert back == VerificationReport("x", "fail", {"n": 3}, 1.5)
    assert set(VerificationReport("y", "pass").to_dict()) == {"claim", "status", "ms"}


def test_classes():
    assert av((1, 2)).members(4) == [(4, 3, 2, 1)]
    assert contained_in((2, 1, 3)).members(2) == [(1, 2), (2, 1)]
    assert av((1, 3, 2)).label == "Av(132)"
    with pytest.raises(ValueError):
        contained_in((1, 3))
    with pytest.raises(ValueError):
        av((2, 2))


def test_sequences():
    assert preimage_sequence(av((1, 3, 2), (2, 3, 1)), 6) == [1, 2, 6, 20, 72, 272]
    assert preimage_sequence(contained_in((2, 4, 1, 3, 5)), 6) == [1, 2, 6, 10, 4, 0]


def test_wilf_checks_find_differences():
    bad = check_fertility_wilf(av((1, 2, 3)), av((3, 2, 1)), 4)
    assert not bad.passed and bad.witness["n"] == 3
    assert check_fertility_wilf(av((2, 3, 1)), av((1, 3, 2)), 6).passed
    assert check_strong_fertility_wilf(av((2, 3, 1)), av((1, 3, 2)), 6).passed
    assert check_postorder_wilf(av((2, 3, 1)), av((1, 3, 2)), 6, ("binary", "ternary")).passed


def test_zeil_star_split():
    assert check_zeil_star_split(5).passed
    literal = check_zeil_star_split(3, literal=True)
    assert not literal.passed
    assert (literal.witness["p"], literal.witness["a"], literal.witness["b"], literal.witness["c"]) == ("123", 1, 0, 2)
    assert zeil_star_counts((1, 2, 3), 1, 0, 2) == (1, 2)
    assert zeil_star_literal_counterexample().passed


def test_families():
    assert set(SWU_SEEDS) <= set(family_A(0))
    assert chi(2, (1, 2)) in family_A(2)
    assert (4, 2, 1, 3) in family_B(0)
    assert (2, 4, 3, 1) not in family_B(3)


def test_wrapped_skew_seeds_break_the_swu_image():
    rep = swu_skew_counterexample()
    assert rep.passed
    assert rep.detail["image"] == "534612"
    assert swu_family_sweep(1, 1, 6, core_only=True).passed
    full = swu_family_sweep(1, 1, 6)
    assert not full.passed and "51423" in full.witness["failing_patterns"]


def test_registry():
    assert "containment-sequences" in CLAIMS
    with pytest.raises(ValueError):
        run_claim("no-such-claim")
    rep = run_claim("containment-sequences")
    assert rep.passed and rep.detail["sequence"] == [1, 2, 6, 10, 4, 0, 0, 0, 0]


def test_experiment_mode_runs():
    out = search_postorder_not_strong(3, 5)
    assert isinstance(out, list)
