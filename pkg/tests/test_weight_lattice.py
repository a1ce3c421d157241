import pytest

from conftest import random_weight
from geometry.weight_lattice import (
    PositiveRoot, RootSystemA, Weight, dot_reflection, from_l_coordinates, is_dominant,
    pairing, rho, root_as_weight, simple_reflection, support, to_l_coordinates,
)


def test_root_system_counts():
    rs = RootSystemA(5)
    assert rs.rank == 4
    assert rs.num_positive_roots == 10
    assert len(rs.positive_roots()) == 10
    assert [str(a) for a in rs.simple_roots()] == ["L1-L2", "L2-L3", "L3-L4", "L4-L5"]


def test_root_system_rejects_small_n():
    with pytest.raises(ValueError):
        RootSystemA(1)


def test_simple_root_index_out_of_range(sl4):
    with pytest.raises(ValueError):
        sl4.simple_root(4)


def test_weight_padding_and_str(sl5):
    mu = sl5.weight(3, 1)
    assert mu.coeffs == (3, 1, 0, 0)
    assert str(mu) == "3w1 + w2"
    assert str(sl5.weight(2, -1)) == "2w1 - w2"
    assert str(sl5.zero()) == "0"


def test_rank_mismatch_raises(sl4, sl5):
    with pytest.raises(ValueError):
        sl4.zero() + sl5.zero()
    with pytest.raises(ValueError):
        pairing(sl4.weight(1), sl5.simple_root(1))


def test_pairing_sums_over_support(sl5):
    mu = sl5.weight(3, 1, 0, 0)
    assert pairing(mu, PositiveRoot(1, 3, 5)) == 4
    assert pairing(mu, PositiveRoot(2, 5, 5)) == 1
    assert support(PositiveRoot(2, 5, 5)) == {2, 3, 4}


@pytest.mark.parametrize("root, expected", [
    ((1, 2), (2, -1, 0)),
    ((2, 3), (-1, 2, -1)),
    ((3, 4), (0, -1, 2)),
    ((1, 4), (1, 0, 1)),
    ((1, 3), (1, 1, -1)),
])
def test_root_as_weight(root, expected):
    assert root_as_weight(PositiveRoot(*root, 4)).coeffs == expected


def test_simple_root_pairs_to_two(sl5):
    for alpha in sl5.simple_roots():
        assert pairing(root_as_weight(alpha), alpha) == 2


def test_rho_is_sum_of_fundamental_weights(sl4):
    assert rho(sl4).coeffs == (1, 1, 1)
    assert is_dominant(rho(sl4))
    assert not is_dominant(sl4.weight(-2, 1, 0))


def test_dot_reflection_of_minus_rho_is_fixed(sl4):
    minus_rho = -rho(sl4)
    for alpha in sl4.simple_roots():
        assert dot_reflection(minus_rho, alpha) == minus_rho


def test_reflection_needs_simple_root(sl4):
    with pytest.raises(ValueError):
        dot_reflection(sl4.weight(1), PositiveRoot(1, 3, 4))
    with pytest.raises(ValueError):
        simple_reflection(sl4.weight(1), PositiveRoot(1, 3, 4))


def test_dot_reflection_is_an_involution(rng):
    for _ in range(10000):
        rs = RootSystemA(rng.randint(2, 6))
        mu = random_weight(rng, rs, -20, 20)
        alpha = rs.simple_root(rng.randint(1, rs.rank))
        assert dot_reflection(dot_reflection(mu, alpha), alpha) == mu


def test_dot_reflection_is_conjugated_reflection(rng):
    for _ in range(500):
        rs = RootSystemA(rng.randint(2, 6))
        mu = random_weight(rng, rs, -10, 10)
        alpha = rs.simple_root(rng.randint(1, rs.rank))
        assert dot_reflection(mu, alpha) == simple_reflection(mu + rho(rs), alpha) - rho(rs)


def test_to_l_coordinates_normalises_last_entry(sl4):
    assert to_l_coordinates(sl4.weight(2, -1, 0)) == (1, -1, 0, 0)
    assert to_l_coordinates(rho(sl4)) == (3, 2, 1, 0)


def test_l_coordinates_round_trip(rng):
    for _ in range(200):
        rs = RootSystemA(rng.randint(2, 7))
        mu = random_weight(rng, rs, -9, 9)
        b = to_l_coordinates(mu)
        assert b[-1] == 0
        assert from_l_coordinates(b) == mu


def test_from_l_coordinates_ignores_shift():
    assert from_l_coordinates((5, 4, 3)) == Weight((1, 1))
    with pytest.raises(ValueError):
        from_l_coordinates((1,))
