import pytest

from torifan.constructions import (
    BundleSpec,
    blow_up_invariant,
    hirzebruch_fan,
    product_fan,
    projective_line_bundle,
    projective_space_fan,
    sato_base_fan,
    sato_bundle_fan,
    split_bundle_fan,
)
from torifan.errors import NotACone, NotSmooth
from torifan.fan import Fan, FanMap, check_fan_map, is_complete, is_smooth, validate
from torifan.lattice import identity


@pytest.mark.parametrize("n", [1, 2, 3])
def test_projective_space(n):
    fan = projective_space_fan(n)
    assert fan.n_rays == n + 1 and len(fan.max_cones) == n + 1
    assert validate(fan) == [] and is_smooth(fan) and is_complete(fan)


def test_projective_line_rays():
    assert projective_space_fan(1).rays == ((1,), (-1,))


def test_split_bundle_hirzebruch_3():
    b = split_bundle_fan(BundleSpec(1, (0, 3)))
    assert set(b.fan.rays) == {(1, 0), (0, 1), (-1, 3), (0, -1)}
    assert b.fan.cone_set() == hirzebruch_fan(3).cone_set()
    assert [b.fan.rays[i] for i in b.section_cone] == [(0, 1)]


def test_split_bundle_trivial_is_product():
    b = split_bundle_fan(BundleSpec(1, (0, 0)))
    P1xP1 = product_fan(projective_space_fan(1), projective_space_fan(1))
    assert b.fan.cone_set() == P1xP1.cone_set()


@pytest.mark.parametrize(
    "s, twists",
    [(1, (0, 1, 1, 1)), (1, (0, 1, 1)), (2, (0, 1, 1)), (2, (0, 2)), (1, (0, 5)), (3, (0, 1))],
)
def test_split_bundle_invariants(s, twists):
    b = split_bundle_fan(BundleSpec(s, twists))
    k = len(twists) - 1
    assert b.fan.dim == s + k
    assert b.fan.n_rays == (s + 1) + (k + 1)
    assert len(b.fan.max_cones) == (s + 1) * (k + 1)
    assert validate(b.fan) == [] and is_smooth(b.fan) and is_complete(b.fan)
    assert check_fan_map(b.projection)


def test_z21_counts():
    b = split_bundle_fan(BundleSpec(1, (0, 1, 1, 1)))
    # P^3-bundle over P^1: 2 base rays + 4 fibre rays
    assert b.fan.dim == 4 and b.fan.n_rays == 6
    X = blow_up_invariant(b.fan, b.section_cone)
    assert X.n_rays == 7
    assert is_smooth(X) and is_complete(X)
    assert check_fan_map(FanMap(identity(4), X, b.fan))


def test_bundle_spec_validation():
    with pytest.raises(ValueError):
        BundleSpec(1, (1, 2))
    with pytest.raises(ValueError):
        BundleSpec(0, (0, 1))
    with pytest.raises(ValueError):
        BundleSpec(1, (0,))


def test_blow_up_point_of_p2():
    X = blow_up_invariant(projective_space_fan(2), (0, 1))
    assert X.rays[-1] == (1, 1)
    assert X.n_rays == 4 and len(X.max_cones) == 4
    assert is_smooth(X) and is_complete(X)


def test_blow_up_errors():
    P2 = projective_space_fan(2)
    bigger = blow_up_invariant(P2, (0, 1))
    with pytest.raises(NotACone):
        blow_up_invariant(bigger, (0, 1))  # e1, e2 no longer span a cone
    sing = Fan(2, [(1, 0), (0, 1), (-1, -2)], [(0, 1), (1, 2), (0, 2)])
    with pytest.raises(NotSmooth):
        blow_up_invariant(sing, (0, 1))


def test_sato_round_trip(delta):
    sigma = projective_line_bundle(split_bundle_fan(BundleSpec(1, (0, 3))).fan, [1, 0, 0, 0])
    # split_bundle_fan orders rays e1, -e1+3f, f, -f; lift twist on e1 only
    assert set(sigma.rays) == set(sato_bundle_fan().rays)
    assert sigma.cone_set() == sato_bundle_fan().cone_set()
    x2, y1 = sigma.ray_index((0, 1, 0)), sigma.ray_index((0, 0, 1))
    once = blow_up_invariant(sigma, (x2, y1))
    z1 = once.ray_index((0, 1, 1))
    twice = blow_up_invariant(once, (x2, z1))
    assert set(twice.rays) == set(delta.rays)
    assert twice.cone_set() == delta.cone_set()


def test_sato_bundle_projects_to_base():
    assert check_fan_map(FanMap(((1, 0, 0), (0, 1, 0)), sato_bundle_fan(), sato_base_fan()))
