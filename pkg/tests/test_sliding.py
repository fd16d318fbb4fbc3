import pytest
from hypothesis import given, strategies as st

from stacksorting.perm import enumerate_av, normalize, rot, rot_inv, unnormalize
from stacksorting.sliding import swl, swl_class_image, swl_inv, swu, swu_class_image, swu_hooks, swu_inv, theta, theta_map
from stacksorting.stats import des, lmax, peak, tail_length
from stacksorting.vhc import enumerate_vhcs, make_vhc

SLID_INSTANCE = make_vhc((1, 2, 9, 3, 7, 4, 5, 6, 8, 13, 10, 11, 12, 14), [(3, 10), (5, 9), (10, 14)])


def test_known_values():
    assert swu((1, 4, 2, 3)) == (3, 4, 1, 2)
    assert swu((2, 1, 4, 3)) == (3, 2, 4, 1)
    assert swl((3, 1, 2, 4)) == (1, 3, 2, 4)
    assert swu(()) == () and swl((1,)) == (1,)


def test_domain_errors():
    with pytest.raises(ValueError):
        swu((2, 3, 1))
    with pytest.raises(ValueError):
        swu_inv((1, 3, 2))
    with pytest.raises(ValueError):
        swl((1, 3, 2))
    with pytest.raises(ValueError):
        swl_inv((3, 1, 2))


def test_bijections_and_preserved_statistics():
    for n in range(8):
        src = enumerate_av(n, [(2, 3, 1)])
        image = [swu(p) for p in src]
        assert sorted(image) == enumerate_av(n, [(1, 3, 2)])
        for p, q in zip(src, image):
            assert swu_inv(q) == p
            if n:
                assert (des(p), peak(p), tail_length(p), lmax(p)) == (des(q), peak(q), tail_length(q), lmax(q))
        src = enumerate_av(n, [(1, 3, 2)])
        assert sorted(swl(p) for p in src) == enumerate_av(n, [(3, 1, 2)])
        for p in src:
            assert swl(p) == rot_inv(swu(rot(p)))
            assert swl_inv(swl(p)) == p


def test_class_images():
    assert swu_class_image([(2, 3, 1), (1, 4, 2, 3)], 7)
    assert not swu_class_image([(2, 3, 1), (5, 1, 4, 2, 3)], 6)
    assert swl_class_image([(1, 3, 2), (3, 4, 1, 2), (4, 2, 1, 3)], 7)


perm_231_free = st.integers(0, 9).flatmap(lambda n: st.sampled_from(enumerate_av(n, [(2, 3, 1)])))


@given(perm_231_free, st.lists(st.integers(-50, 200), min_size=9, max_size=9, unique=True))
def test_relabelling_commutes(p, labels):
    vals = sorted(labels[:len(p)])
    q = tuple(vals[i - 1] for i in p)
    assert swu(q) == unnormalize(swu(p), vals)
    assert normalize(swu(q)) == swu(p)
    assert swu_inv(swu(q)) == q


def test_hook_positions_survive_the_slide():
    moved = swu_hooks(SLID_INSTANCE)
    assert SLID_INSTANCE.composition == (3, 2, 3, 3)
    assert moved.base == (10, 11, 12, 7, 8, 4, 5, 6, 9, 13, 1, 2, 3, 14)
    assert moved.composition == (3, 2, 3, 3)
    assert moved.hooks == SLID_INSTANCE.hooks


def test_theta_is_type_preserving_bijection():
    for n in range(7):
        for p in enumerate_av(n, [(1, 3, 2), (3, 4, 1, 2)]):
            m = theta_map(p)
            image = set(m.values())
            assert image == set(enumerate_vhcs(swl(p)))
            assert len(image) == len(m)
            assert all(h.type == t.type for h, t in m.items())


def test_theta_rejects_bad_input():
    h = enumerate_vhcs((2, 3, 1, 4))[0]
    with pytest.raises(ValueError):
        theta((1, 2, 3, 4), h)
    g = make_vhc((1, 3, 2, 4), [(2, 4)])
    with pytest.raises(ValueError):
        theta((1, 3, 2, 4), g)
