import pytest

from geometry.charp_fixed_schemes import (
    INF, ChartAction, PolyFp, RamificationType, RatFp, artin_number, blowup_chart, cartier_test,
    classify_ramification, different_coefficient, divisor_valuation, fixed_scheme_generators,
    ideal_contains, is_sigma_stable, is_unit_product, monomial_locus_codim, parse_poly,
    projective_point, simplify, swan_classify, swan_upper_bound, torus_inversion_chart,
    translate_chart,
)

XY = ("x", "y")


def poly(text, gens=XY, p=3):
    return parse_poly(text, gens, p)


def test_coefficients_reduce_mod_p():
    x = PolyFp.variable("x", XY, 2)
    assert (x + 1) ** 2 == x ** 2 + 1
    assert str((x + 1) ** 2) == "x^2 + 1"
    assert (x * 2).is_zero()


def test_parse_and_print_order():
    f = parse_poly("y1*w2 + y1*w2^2", ("y1", "w2"), 2)
    assert str(f) == "y1*w2^2 + y1*w2"
    assert poly("x - 1") == poly("x + 2")
    assert str(poly("2*x^2*y + x + 1")) == "2*x^2*y + x + 1"


def test_mixing_rings_is_a_type_error():
    a = PolyFp.variable("x", XY, 3)
    b = PolyFp.variable("x", ("x", "z"), 3)
    with pytest.raises(TypeError):
        a + b
    with pytest.raises(TypeError):
        a * PolyFp.variable("x", XY, 5)


def test_orders_and_degrees():
    f = poly("x^2*y + x^3")
    assert f.degree() == 3
    assert f.ord("x") == 2
    assert f.ord("y") == 0
    assert f.leading_term() == ((3, 0), 1)
    assert f.monomial_content() == (2, 0)
    assert PolyFp(XY, 3).ord("x") == INF
    with pytest.raises(ValueError):
        f.ord("z")


def test_exact_division():
    assert poly("x^2 - y^2").divide_exact(poly("x - y")) == poly("x + y")
    assert poly("x^2 + 1").divide_exact(poly("x")) is None
    assert poly("x - y").divides(poly("x^2 - y^2"))
    with pytest.raises(ZeroDivisionError):
        poly("x").divide_exact(PolyFp(XY, 3))


def test_evaluate_and_compose():
    f = poly("x^2 + y")
    assert f.evaluate({"x": 2, "y": 1}) == 2
    g = f.compose({"x": poly("y"), "y": poly("x")})
    assert g == poly("y^2 + x")


def test_rational_equality_is_cross_multiplication():
    x = poly("x")
    assert RatFp(x ** 2, x) == x
    assert RatFp(poly("x + 1"), poly("y")) != RatFp(poly("x"), poly("y"))
    with pytest.raises(TypeError):
        hash(RatFp.of(x))
    with pytest.raises(ZeroDivisionError):
        RatFp(x, PolyFp(XY, 3))
    with pytest.raises(ZeroDivisionError):
        RatFp.of(x) / 0


def test_simplify_cancels_monomials_and_units():
    r = simplify(RatFp(poly("x^2*y"), poly("x*y^3")), [])
    assert (str(r.num), str(r.den)) == ("x", "y^2")
    u = poly("x + 1")
    r = simplify(RatFp(poly("x^2 + x"), poly("x*y + y")), [u])
    assert (str(r.num), str(r.den)) == ("x", "y")
    r = simplify(RatFp(poly("x"), PolyFp.constant(2, XY, 3)), [])
    assert (str(r.num), str(r.den)) == ("2*x", "1")


def test_unit_products():
    u = poly("x + 1")
    assert is_unit_product(u ** 3 * 2, [u])
    assert not is_unit_product(poly("x"), [u])
    assert not is_unit_product(PolyFp(XY, 3), [u])


def test_torus_chart_is_an_involution():
    torus = torus_inversion_chart(2)
    assert torus.has_order_dividing_p()
    assert torus.describe()["x1"] == "(1)/(x1)"
    with pytest.raises(ValueError):
        torus_inversion_chart(3)


def test_chart_rejects_non_unit_denominators():
    x = PolyFp.variable("x", ("x",), 2)
    with pytest.raises(ValueError):
        ChartAction(("x",), {"x": RatFp(x, x + 1)}, (), 2, verify_order=False)


def test_chart_rejects_wrong_coordinates():
    x = PolyFp.variable("x", ("x",), 2)
    with pytest.raises(ValueError):
        ChartAction(("x", "y"), {"x": RatFp.of(x)}, (), 2)


def test_identity_chart():
    c = ChartAction.identity(("a", "b"), 5)
    assert c.has_order_dividing_p()
    assert c.act(c.var("a") + c.var("b")) == c.var("a") + c.var("b")
    assert c.to_dict()["sigma"] == {"a": "a", "b": "b"}


@pytest.fixture
def y0():
    return translate_chart(torus_inversion_chart(2), (1, 1, 1), ("y1", "y2", "y3"), name="Y0")


@pytest.fixture
def u1(y0):
    return blowup_chart(y0, ("y1", "y2", "y3"), "y1", {"y2": "w2", "y3": "w3"}, name="U1")


def test_translation_moves_fixed_point_to_origin(y0):
    for y in y0.coords:
        assert y0.sigma[y] == RatFp(y0.var(y), y0.var(y) + 1)
    assert [str(g) for g in fixed_scheme_generators(y0)] == ["y1^2", "y2^2", "y3^2"]
    assert monomial_locus_codim(fixed_scheme_generators(y0)) == 3


def test_translate_checks_point_length(y0):
    with pytest.raises(ValueError):
        translate_chart(y0, (1, 1))


def test_blowup_chart_action(u1):
    assert u1.coords == ("y1", "w2", "w3")
    assert u1.has_order_dividing_p()
    w2, y1 = u1.var("w2"), u1.var("y1")
    assert u1.sigma["w2"] == RatFp(w2 * y1 + w2, y1 * w2 + 1)


def test_blowup_rejects_unfixed_center(y0):
    with pytest.raises(ValueError):
        blowup_chart(y0, ("y1", "y2"), "y3")
    t = translate_chart(y0, (1, 0, 0))
    with pytest.raises(ValueError):
        blowup_chart(t, ("y1", "y2", "y3"), "y1")


def test_first_blowup_is_not_cartier(u1):
    gens = fixed_scheme_generators(u1)
    assert [str(g) for g in gens] == ["y1^2", "y1*w2^2 + y1*w2", "y1*w3^2 + y1*w3"]
    assert is_sigma_stable(u1, gens)
    verdict = cartier_test(gens, u1.units, ["y1"])
    assert not verdict.is_principal
    assert verdict.orders == {"y1": 1}
    assert len(verdict.failure_points) == 4
    assert {(pt["w2"], pt["w3"]) for pt in verdict.failure_points} == {(0, 0), (0, 1), (1, 0), (1, 1)}


def test_second_blowup_is_cartier(u1):
    v1 = blowup_chart(u1, u1.coords, "y1", {"w2": "v2", "w3": "v3"})
    assert v1.has_order_dividing_p()
    verdict = cartier_test(fixed_scheme_generators(v1), v1.units)
    assert verdict.is_principal
    assert str(verdict.generator) == "y1^2"
    assert verdict.multiplicity("y1") == 2


def test_artin_and_swan_on_second_blowup(u1):
    v1 = blowup_chart(u1, u1.coords, "y1", {"w2": "v2", "w3": "v3"})
    v2 = blowup_chart(u1, u1.coords, "w2", {"y1": "v1", "w3": "v3"}, extra_units=["w2 + 1"])
    assert artin_number(v1, "y1") == 2
    assert swan_upper_bound(v1, "y1") == 1
    assert swan_classify(v1, "y1").kind == RamificationType.WILD
    assert artin_number(v2, "v1") == 1
    assert swan_classify(v2, "v1").kind == RamificationType.FIERCE
    with pytest.raises(ValueError):
        artin_number(v1, "z")


def test_classify_ramification():
    assert classify_ramification(1, None, 2).kind == RamificationType.FIERCE
    wild = classify_ramification(2, 1, 2)
    assert (wild.kind, wild.s, wild.e) == (RamificationType.WILD, 1, 2)
    assert classify_ramification(2, 2, 2).kind == RamificationType.AMBIGUOUS
    wild3 = classify_ramification(3, 2, 2)
    assert (wild3.kind, wild3.s, wild3.e) == (RamificationType.WILD, 2, 2)
    assert classify_ramification(3, 2, 5).s == 2
    assert classify_ramification(3, INF, 3).to_dict()["u"] == "inf"
    with pytest.raises(ValueError):
        classify_ramification(3, 1, 2)
    with pytest.raises(ValueError):
        classify_ramification(0, None, 2)
    with pytest.raises(ValueError):
        classify_ramification(2, None, 2)


def test_different_coefficient():
    assert different_coefficient(2, 1) == 1
    assert different_coefficient(2, 2) == 2
    assert different_coefficient(5, 3) == 12
    with pytest.raises(ValueError):
        different_coefficient(2, 0)


def test_divisor_valuation():
    gens = ("t", "s")
    t = PolyFp.variable("t", gens, 2)
    assert divisor_valuation(RatFp(t ** 2, t + 1), "t") == 2
    assert divisor_valuation(RatFp.of(PolyFp(gens, 2)), "t") == INF
    with pytest.raises(ValueError):
        divisor_valuation(RatFp(t + 1, t), "t")
    assert divisor_valuation(RatFp(t + 1, t), "t", allow_poles=True) == -1


def test_projective_point():
    assert projective_point((0, 2, 1), 3) == (0, 1, 2)
    assert projective_point((1, 1, 0), 2) == (1, 1, 0)
    with pytest.raises(ValueError):
        projective_point((0, 0, 0), 2)


def test_monomial_locus_codim_rejects_mixed_generators():
    with pytest.raises(ValueError):
        monomial_locus_codim([poly("x + y")])
    assert monomial_locus_codim([poly("x^2"), poly("y^3"), poly("x")]) == 2


def test_ideal_membership():
    assert ideal_contains([poly("x^2")], poly("x^3 + x^2*y"))
    assert not ideal_contains([poly("x^2")], poly("x"))
    assert ideal_contains([poly("x")], PolyFp(XY, 3))


@pytest.mark.parametrize("point", [(1, 1, 1), (1, 0, 1), (0, 1, 0)])
def test_translating_twice_over_f2_is_the_identity(point):
    torus = torus_inversion_chart(2)
    back = translate_chart(translate_chart(torus, point, ("y1", "y2", "y3")), point, torus.coords)
    assert back.coords == torus.coords
    for x in torus.coords:
        assert back.sigma[x] == torus.sigma[x]


def test_divisor_valuation_is_additive():
    gens = ("t", "s")
    t, s = PolyFp.variable("t", gens, 3), PolyFp.variable("s", gens, 3)
    samples = [RatFp(t ** 2 * s, s + 1), RatFp(t + t * s, t + 1), RatFp(s + 2, s ** 2 + 1), RatFp.of(t ** 3)]
    for f in samples:
        for g in samples:
            assert divisor_valuation(f * g, "t") == divisor_valuation(f, "t") + divisor_valuation(g, "t")
    poles = RatFp(s + 1, t ** 2)
    assert divisor_valuation(poles * samples[3], "t", allow_poles=True) == 1
