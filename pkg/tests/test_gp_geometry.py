import random

import pytest
from sympy import primerange

from geometry.gp_geometry import (
    INF, GPLineBundle, ParabolicFunction, anticanonical, bundle_from_coefficients, divisibility,
    extend_f, fiber_degree, gp_dimension, is_ample, is_fano, parse_f_values, parse_weight,
    picard_basis, picard_number,
)
from geometry.weight_lattice import PositiveRoot, RootSystemA, Weight


def test_parse_f_values():
    assert parse_f_values("1,0,inf,inf") == [1, 0, INF, INF]
    assert parse_f_values(" 2 , oo ") == [2, INF]
    with pytest.raises(ValueError):
        parse_f_values("1,x")


def test_parabolic_function_validation():
    with pytest.raises(ValueError):
        ParabolicFunction((1, 0), 4)
    with pytest.raises(ValueError):
        ParabolicFunction((-1, 0), 3)
    with pytest.raises(ValueError):
        ParabolicFunction((), 3)


def test_twisted_flag():
    f = ParabolicFunction.twisted_flag(5, 3)
    assert f.values == (1, 0, INF, INF)
    assert f.n == 5
    assert f.describe() == "1,0,inf,inf"
    assert f.finite_indices() == [1, 2]
    with pytest.raises(ValueError):
        ParabolicFunction.twisted_flag(2, 3)


def test_extend_f_is_min_over_support():
    f = ParabolicFunction.twisted_flag(5, 3)
    assert extend_f(f, PositiveRoot(1, 2, 5)) == 1
    assert extend_f(f, PositiveRoot(1, 5, 5)) == 0
    assert extend_f(f, PositiveRoot(3, 5, 5)) == INF
    with pytest.raises(ValueError):
        extend_f(f, PositiveRoot(1, 2, 4))


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_twisted_flag_dimension(p):
    n = p + 2
    assert gp_dimension(ParabolicFunction.twisted_flag(n, p)) == 2 * n - 3


@pytest.mark.parametrize("n, r", [(3, 0), (4, 1), (5, 2)])
def test_constant_function_is_full_flag(n, r):
    p = 3
    f = ParabolicFunction.constant(n, p, r)
    assert gp_dimension(f) == n * (n - 1) // 2
    assert anticanonical(f).weight == Weight((2 * p ** r,) * (n - 1))


def test_picard_data():
    f = ParabolicFunction.twisted_flag(5, 3)
    basis = picard_basis(f)
    assert basis == {1: Weight((3, 0, 0, 0)), 2: Weight((0, 1, 0, 0))}
    assert picard_number(f) == 2


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11])
def test_anticanonical_formula(p):
    for n in range(3, p + 4):
        f = ParabolicFunction.twisted_flag(n, p)
        assert anticanonical(f).weight == f.root_system.weight(2 * p, n - p)


def test_anticanonical_example_n7_p5():
    f = ParabolicFunction(tuple(parse_f_values("1,0,inf,inf,inf,inf")), 5)
    minus_k = anticanonical(f)
    assert str(minus_k.weight) == "10w1 + 2w2"
    assert is_fano(f)
    assert divisibility(minus_k) == 2


@pytest.mark.parametrize("p", [3, 5, 7])
def test_fano_iff_p_below_n(p):
    assert is_fano(ParabolicFunction.twisted_flag(p + 2, p))
    assert is_fano(ParabolicFunction.twisted_flag(p + 1, p))
    assert not is_fano(ParabolicFunction.twisted_flag(p, p))


@pytest.mark.parametrize("p", [3, 5, 7])
def test_divisibility_of_minus_k(p):
    minus_k = anticanonical(ParabolicFunction.twisted_flag(p + 2, p))
    assert divisibility(minus_k) == 2
    assert minus_k.divide(2).weight == Weight((p, 1) + (0,) * (p - 1))
    assert divisibility(anticanonical(ParabolicFunction.twisted_flag(p + 1, p))) == 1


def test_non_lattice_bundles_are_rejected():
    f = ParabolicFunction.twisted_flag(5, 3)
    with pytest.raises(ValueError):
        bundle_from_coefficients(f, (1, 1))
    with pytest.raises(ValueError):
        bundle_from_coefficients(f, (3, 1, 1))


def test_bundle_arithmetic_stays_in_lattice():
    f = ParabolicFunction.twisted_flag(5, 3)
    A = bundle_from_coefficients(f, (3, 1))
    assert (2 * A).weight == Weight((6, 2, 0, 0))
    assert (A - A).weight.is_zero()
    assert (-A).weight == Weight((-3, -1, 0, 0))
    with pytest.raises(ValueError):
        A.divide(2)
    with pytest.raises(ValueError):
        divisibility(A - A)


def test_ampleness():
    f = ParabolicFunction.twisted_flag(5, 3)
    assert is_ample(bundle_from_coefficients(f, (3, 1)))
    assert not is_ample(bundle_from_coefficients(f, (3, 0)))
    assert not is_ample(bundle_from_coefficients(f, (-3, 4)))


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_fiber_degree_of_a(p):
    f = ParabolicFunction.twisted_flag(p + 2, p)
    A = bundle_from_coefficients(f, (p, 1))
    rs = f.root_system
    assert fiber_degree(A, rs.simple_root(1)) == 1
    with pytest.raises(ValueError):
        fiber_degree(A, rs.simple_root(2))
    with pytest.raises(ValueError):
        fiber_degree(A, PositiveRoot(1, 3, f.n))


def test_parse_weight():
    rs = RootSystemA(4)
    assert parse_weight("-2,1,0", rs) == Weight((-2, 1, 0))
    with pytest.raises(ValueError):
        parse_weight("1,2", rs)
    with pytest.raises(ValueError):
        parse_weight("1,a,2", rs)


def test_anticanonical_always_in_lattice():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(2, 6)
        p = rng.choice([2, 3, 5])
        values = tuple(rng.choice([0, 1, 2, INF]) for _ in range(n - 1))
        if all(v == INF for v in values):
            continue
        f = ParabolicFunction(values, p)
        assert isinstance(anticanonical(f), GPLineBundle)


def test_point_has_no_anticanonical():
    with pytest.raises(ValueError):
        anticanonical(ParabolicFunction((INF, INF), 3))


@pytest.mark.parametrize("p", [int(q) for q in primerange(2, 51)])
def test_fano_iff_p_below_n_for_every_n(p):
    for n in range(3, 56):
        assert is_fano(ParabolicFunction.twisted_flag(n, p)) == (p < n), n


@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("d", [1, 2, 3, 6])
def test_divisibility_of_multiples(p, d):
    f = ParabolicFunction.twisted_flag(p + 2, p)
    for coeffs in [(p, 1), (2 * p, 3), (0, 1), (p, 0)]:
        L = bundle_from_coefficients(f, coeffs)
        assert divisibility(d * L) % d == 0
        assert divisibility(d * L) == d * divisibility(L)
