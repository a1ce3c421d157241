import random
from fractions import Fraction

import pytest
from sympy import primerange

from geometry.coh_certificates import (
    CohomologyProfile, Entry, cone_report, gb_profile, gp_profile, occurrence_h1_bound,
    socle_h1_bound, steinberg_datum, steinberg_dim, verify_thm_2_1, verify_thm_3_1,
)
from geometry.gp_geometry import ParabolicFunction, anticanonical, bundle_from_coefficients
from geometry.schur_calculus import euler_char
from geometry.weight_lattice import RootSystemA, Weight


def test_entry_kinds():
    assert Entry.zero().kind == "zero"
    assert Entry.exact(5).kind == "exact"
    assert Entry.unknown().kind == "unknown"
    assert Entry(3, None).kind == "lower_bound"
    assert Entry(0, 175).kind == "upper_bound"
    assert Entry(2, 175).kind == "lower_bound"
    assert str(Entry(3, None)) == "[3, inf]"
    assert str(Entry.exact(5)) == "5"
    assert Entry.unknown().to_dict() == {"kind": "unknown", "lower": 0, "upper": "inf"}


def test_entry_intersection():
    assert Entry(2, 10).intersect(Entry(5, None)) == Entry(5, 10)
    with pytest.raises(ValueError):
        Entry(0, 3).intersect(Entry(4, None))


def test_profile_is_zero_outside_range():
    profile = CohomologyProfile(2, {0: Entry.exact(1)})
    assert profile.entry(-1).is_zero
    assert profile.entry(3).is_zero
    assert profile.entry(1).kind == "unknown"


def test_gb_profile_dominant():
    rs = RootSystemA(3)
    profile = gb_profile(rs, 5, Weight((1, 1)))
    assert profile.is_resolved
    assert profile.entry(0) == Entry.exact(8)
    assert profile.concentrated_in() == 0
    assert profile.certificate[-1].rule == "R1"


def test_gb_profile_wall():
    rs = RootSystemA(3)
    profile = gb_profile(rs, 5, Weight((-1, 2)))
    assert profile.is_all_zero
    assert profile.euler == 0
    assert profile.certificate[-1].rule == "R2"


def test_gb_profile_andersen_shift_up():
    rs = RootSystemA(6)
    # lambda - p alpha for the adjoint family at p = 5
    profile = gb_profile(rs, 5, Weight((-5, 5, 0, 0, 0)))
    assert profile.concentrated_in() == 1
    assert profile.entry(1) == Entry.exact(504)
    assert profile.euler == euler_char(rs, Weight((-5, 5, 0, 0, 0))) == -504
    assert any(c.rule == "R3" for c in profile.certificate)


def test_gb_profile_andersen_shift_down():
    rs = RootSystemA(3)
    profile = gb_profile(rs, 3, Weight((2, -4)))
    assert profile.is_all_zero
    assert [c.rule for c in profile.certificate] == ["R2", "R3"]


def test_gb_profile_unknown_is_not_an_error():
    rs = RootSystemA(3)
    profile = gb_profile(rs, 2, Weight((-3, 0)))
    assert not profile.is_resolved
    assert profile.entry(0).kind == "unknown"
    assert profile.alternating_sum() is None
    assert profile.certificate[-1].rule == "none"


def test_resolved_profiles_agree_with_euler_char():
    rng = random.Random(11)
    resolved = 0
    for _ in range(600):
        rs = RootSystemA(rng.randint(2, 5))
        p = rng.choice([2, 3, 5])
        mu = Weight(tuple(rng.randint(-8, 8) for _ in range(rs.rank)))
        profile = gb_profile(rs, p, mu)
        if profile.is_resolved:
            resolved += 1
            assert profile.alternating_sum() == euler_char(rs, mu)
    assert resolved > 0


def test_shift_out_of_range_raises():
    profile = CohomologyProfile(1, {0: Entry.zero(), 1: Entry.exact(2)})
    with pytest.raises(ValueError):
        profile.shifted(1, None)


def test_refine_pins_single_open_degree():
    profile = CohomologyProfile(1, {0: Entry.exact(3)}, euler=1)
    assert profile.refine(1, lower=0).entry(1) == Entry.exact(2)


def test_refine_narrows_two_open_degrees():
    profile = CohomologyProfile(2, {2: Entry.zero()}, euler=5).refine(0, upper=7)
    assert profile.entry(0) == Entry(5, 7)
    assert profile.entry(1) == Entry(0, 2)


def test_refine_detects_inconsistent_euler():
    profile = CohomologyProfile(1, {0: Entry.exact(3), 1: Entry.exact(1)}, euler=5)
    with pytest.raises(ValueError):
        profile.refine(0, lower=0)


def _thm21_data(p):
    f = ParabolicFunction.twisted_flag(p + 2, p)
    A = bundle_from_coefficients(f, (p, 1))
    return f, A, f.root_system.simple_root(1)


def test_gp_profile_p3():
    f, A, alpha = _thm21_data(3)
    profile = gp_profile(f, A, alpha)
    assert profile.dimension == 7
    assert profile.euler == 49
    assert profile.entry(0) == Entry(49, 224)
    assert profile.entry(1) == Entry(0, 175)
    assert all(profile.entry(i).is_zero for i in range(2, 8))
    assert "four-term" in [c.rule for c in profile.certificate]


def test_gp_profile_p5_bound_from_chi():
    f, A, alpha = _thm21_data(5)
    profile = gp_profile(f, A, alpha)
    assert profile.euler == -1716
    assert profile.entry(1).lower == 1716


def test_gp_profile_needs_fiber_degree_one():
    f, A, alpha = _thm21_data(3)
    with pytest.raises(ValueError):
        gp_profile(f, A * 2, alpha)


def test_steinberg():
    rs = RootSystemA(5)
    datum = steinberg_datum(rs, 3, Weight((3, 1, 0, 0)))
    assert (datum.a, datum.b) == (1, 2)
    assert steinberg_dim(datum) == 50
    with pytest.raises(ValueError):
        steinberg_datum(rs, 3, Weight((3, 0, 0, 0)))
    with pytest.raises(ValueError):
        steinberg_datum(rs, 3, Weight((4, 0, 0, 0)))


@pytest.mark.parametrize("p, expected", [(3, 1), (5, 1863)])
def test_socle_bound(p, expected):
    f, A, alpha = _thm21_data(p)
    bound = socle_h1_bound(f.root_system, p, A.weight, alpha)
    assert bound.value == expected
    assert [c.rule for c in bound.certificate] == ["steinberg", "socle"]


def test_occurrence_bound_p3():
    rs = RootSystemA(4)
    assert occurrence_h1_bound(rs, Weight((3, 0, 0)), rs.simple_root(1)).value == 1


def test_cone_report_for_half_anticanonical():
    f, A, alpha = _thm21_data(3)
    profile = gp_profile(f, A, alpha).refine(1, lower=1)
    cone = cone_report(f, A, profile)
    assert cone.cone_dimension == 8
    assert cone.a == Fraction(1, 2)
    assert cone.is_terminal and cone.is_canonical and cone.is_klt
    assert cone.is_cm is False
    assert cone.nonvanishing_degrees == (1,)
    assert not cone.no_lift


def test_cone_report_anticanonical_boundary():
    f, A, alpha = _thm21_data(3)
    minus_k = anticanonical(f)
    cone = cone_report(f, minus_k, CohomologyProfile(7, {}))
    assert cone.a == 1
    assert not cone.is_terminal
    assert cone.is_canonical
    assert cone.is_cm is None
    assert cone.notes


def test_cone_report_rejects_non_ample():
    f, _, _ = _thm21_data(3)
    with pytest.raises(ValueError):
        cone_report(f, bundle_from_coefficients(f, (3, 0)), CohomologyProfile(7, {}))


def test_thm21_p3():
    report = verify_thm_2_1(3)
    assert report.passed, [f.name for f in report.failed_facts()]
    assert report["dim_X"] == 7
    assert report["h0_lambda"] == 224
    assert report["h0_lambda_minus_alpha"] == 175
    assert report["steinberg_dim"] == 50
    assert report["chi"] == 49
    assert report["h1_lower_bound"] == 1
    assert report["h1"] == "[1, 175]"
    assert report["h0"] == "[50, 224]"


def test_thm21_p5():
    report = verify_thm_2_1(5)
    assert report.passed
    assert report["chi"] == -1716
    assert report["h1_lower_bound_from_chi"] == 1716
    assert report["h1_lower_bound_from_socle"] == 1863
    assert report["h1_lower_bound"] == 1863
    assert report["no_lift"] is True


@pytest.mark.parametrize("p", [int(q) for q in primerange(3, 51)])
def test_thm21_passes(p):
    assert verify_thm_2_1(p).passed


@pytest.mark.parametrize("p", [2, 4, 9])
def test_thm21_rejects_bad_primes(p):
    with pytest.raises(ValueError):
        verify_thm_2_1(p)


def test_thm31_p5():
    report = verify_thm_3_1(5)
    assert report.passed
    assert report["chi"] == -252
    assert report["h1_lower_bound"] == 252


def test_thm31_p3_needs_occurrence_bound():
    report = verify_thm_3_1(3)
    assert report.passed
    assert report["h0_mu"] == report["h0_mu_minus_alpha"] == 20
    assert report["chi"] == 0
    assert report["h1_lower_bound_from_occurrence"] == 1
    assert report["h1_lower_bound"] == 1


def test_thm31_p2_is_exact():
    report = verify_thm_3_1(2)
    assert report.passed
    assert report["euler_mu"] == 0
    assert report["euler_mu_minus_p_alpha"] == -1
    assert report["chi"] == -1
    assert report["h1"] == Entry.exact(1)
    assert report["h0"] == Entry.zero()


@pytest.mark.parametrize("p", [int(q) for q in primerange(2, 51)])
def test_thm31_passes(p):
    assert verify_thm_3_1(p).passed


def test_reports_are_deterministic():
    assert verify_thm_2_1(5).to_json(seedless=True) == verify_thm_2_1(5).to_json(seedless=True)
    assert verify_thm_3_1(2).to_json(seedless=True) == verify_thm_3_1(2).to_json(seedless=True)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_cone_over_half_anticanonical_is_terminal_not_cm(p):
    report = verify_thm_2_1(p)
    assert report["cone_dimension"] == 2 * p + 2
    assert report["cone_a"] == Fraction(1, 2)
    assert report["cone_terminal"] is True
    assert report["cone_cohen_macaulay"] is False


@pytest.mark.parametrize("p", [3, 5, 7])
def test_anticanonical_cone_is_canonical_not_terminal(p):
    report = verify_thm_2_1(p)
    assert report["anticanonical_cone_a"] == 1
    assert report["anticanonical_cone_terminal"] is False
    assert report["anticanonical_cone_canonical"] is True
    assert any("canonical but not terminal" in note for note in report.notes)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_socle_bound_never_exceeds_h1(p):
    f, A, alpha = _thm21_data(p)
    bound = socle_h1_bound(f.root_system, p, A.weight, alpha)
    upper = gp_profile(f, A, alpha).entry(1).upper
    if p == 3:
        assert upper == 175
    if upper is not None:
        assert bound.value <= upper


@pytest.mark.parametrize("verify, p", [(verify_thm_2_1, 3), (verify_thm_2_1, 5), (verify_thm_3_1, 2),
                                       (verify_thm_3_1, 3)])
def test_every_fact_quotes_its_source(verify, p):
    report = verify(p)
    anchors = [f.anchor for f in report.facts] + [c.anchor for c in report.certificates if c.rule != "none"]
    assert all(a.count('"') >= 2 for a in anchors), [a for a in anchors if a.count('"') < 2]
