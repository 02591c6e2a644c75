"""Scheme construction, power-ratio design and coverage tests."""

import math

import pytest
from hypothesis import assume, given, settings, strategies as st

from mlsfr import (
    InterferenceProfile,
    Level,
    LinkParams,
    Scheme,
    build_layout,
    coverage_beta,
    design_gamma,
    distances,
    gamma_sweep,
    interference_profile,
    make_mlsfr,
    make_reuse1,
    make_sfr2,
    scheme_from_dict,
    scheme_to_dict,
    spectral_efficiency,
    validate_scheme,
)

PARAMS = LinkParams()
LAYOUT = build_layout(1.0)


def test_reuse1_structure():
    s = make_reuse1()
    validate_scheme(s)
    assert len(s.levels) == 1
    assert s.levels[0].gain_db == 0.0
    assert s.levels[0].bandwidth_cap == 1.0


def test_sfr2_structure():
    s = make_sfr2(-6.0)
    validate_scheme(s)
    assert [lv.gain_db for lv in s.levels] == [0.0, -6.0]
    assert [lv.bandwidth_cap for lv in s.levels] == pytest.approx([1 / 3, 2 / 3])
    assert [lv.partner_index for lv in s.levels] == [2, 1]
    assert [lv.role for lv in s.levels] == ["primary", "secondary"]


def test_sfr2_gamma_zero_degenerates_to_reuse1():
    s = make_sfr2(0.0)
    validate_scheme(s)
    d = distances(LAYOUT, 1.0)
    eta_lvl1 = spectral_efficiency(PARAMS, interference_profile(s, 1), d)
    eta_reuse1 = spectral_efficiency(PARAMS, interference_profile(make_reuse1(), 1), d)
    assert eta_lvl1 == pytest.approx(eta_reuse1, rel=1e-12)


def test_sfr2_rejects_positive_gamma():
    with pytest.raises(ValueError):
        make_sfr2(1.0)


def test_mlsfr_rejects_bad_arguments():
    with pytest.raises(ValueError):
        make_mlsfr(0, -17.0)
    with pytest.raises(ValueError):
        make_mlsfr(4, 2.0)


def test_sfr8_gain_grid():
    s = make_mlsfr(4, -17.0)
    validate_scheme(s)
    gains = [lv.gain_db for lv in s.levels]
    assert gains == pytest.approx([-17.0 * i / 7 for i in range(8)], rel=1e-12)
    assert gains == pytest.approx(
        [0, -2.4, -4.8, -7.3, -9.7, -12.1, -14.6, -17], abs=0.07)
    assert [lv.bandwidth_cap for lv in s.levels] == pytest.approx([1 / 12] * 4 + [1 / 6] * 4)
    assert [lv.partner_index for lv in s.levels] == [8, 7, 6, 5, 4, 3, 2, 1]


def test_sfr8_subband_ratios():
    s = make_mlsfr(4, -17.0)
    ratios = [low - high for high, low in s.subband_pairs()]
    assert ratios == pytest.approx([-17.0, -85 / 7, -51 / 7, -17 / 7], rel=1e-12)
    # the rounded design targets; the exact grid sits within 0.75 dB of them
    for got, rounded in zip(ratios, [-17.0, -12.5, -8.0, -3.0]):
        assert got == pytest.approx(rounded, abs=0.75)


def test_mlsfr_n1_matches_sfr2():
    a = make_mlsfr(1, -6.0)
    b = make_sfr2(-6.0)
    assert [(lv.gain_db, lv.role, lv.partner_index, lv.bandwidth_cap) for lv in a.levels] \
        == [(lv.gain_db, lv.role, lv.partner_index, lv.bandwidth_cap) for lv in b.levels]


@given(n=st.integers(1, 8), gamma_min=st.floats(-40.0, 0.0))
def test_mlsfr_invariants(n, gamma_min):
    s = make_mlsfr(n, gamma_min)
    validate_scheme(s)
    gains = [lv.gain_db for lv in s.levels]
    assert gains[0] == 0.0
    assert all(a >= b for a, b in zip(gains, gains[1:]))
    assert sum(lv.bandwidth_cap for lv in s.levels) == pytest.approx(1.0, abs=1e-12)
    for lv in s.levels:
        partner = s.level(lv.partner_index)
        assert partner.partner_index == lv.index
        assert {lv.role, partner.role} == {"primary", "secondary"}
    pairs = s.subband_pairs()
    chain = [low for _, low in pairs] + [high for high, _ in pairs[::-1]]
    assert all(a <= b + 1e-12 for a, b in zip(chain, chain[1:]))
    for high_lv, low_lv in zip(s.levels[:n], s.levels[::-1][:n]):
        assert high_lv.bandwidth_cap * 2 == pytest.approx(low_lv.bandwidth_cap)


def test_validate_rejects_broken_schemes():
    good = make_sfr2(-6.0)
    bad_caps = Scheme("x", (
        Level(1, 0.0, "primary", 2, 0.5),
        Level(2, -6.0, "secondary", 1, 0.6),
    ), 1)
    with pytest.raises(ValueError):
        validate_scheme(bad_caps)
    bad_partner = Scheme("x", (
        Level(1, 0.0, "primary", 1, 1 / 3),
        Level(2, -6.0, "secondary", 2, 2 / 3),
    ), 1)
    with pytest.raises(ValueError):
        validate_scheme(bad_partner)
    bad_order = Scheme("x", (
        Level(1, 0.0, "primary", 4, 1 / 6),
        Level(2, -6.0, "primary", 3, 1 / 6),
        Level(3, -3.0, "secondary", 2, 1 / 3),
        Level(4, -9.0, "secondary", 1, 1 / 3),
    ), 2)
    with pytest.raises(ValueError):
        validate_scheme(bad_order)
    validate_scheme(good)


def test_interference_profiles():
    assert interference_profile(make_reuse1(), 1) == InterferenceProfile(0, 0, 0)
    sfr2 = make_sfr2(-6.0)
    assert interference_profile(sfr2, 1) == InterferenceProfile(0, -6, 0)
    assert interference_profile(sfr2, 2) == InterferenceProfile(-6, 0, -6)
    sfr8 = make_mlsfr(4, -17.0)
    assert interference_profile(sfr8, 1) == InterferenceProfile(0, -17, 0)
    with pytest.raises(ValueError):
        interference_profile(sfr2, 3)


def test_coverage_closed_form():
    s = make_mlsfr(4, -17.0)
    assert coverage_beta(s, 1, 1.0) == 1.0
    assert coverage_beta(s, 8, 1.0) == pytest.approx(10 ** (-17 / 37.6))
    assert coverage_beta(s, 8, 1.0) == pytest.approx(0.353, abs=5e-4)
    with pytest.raises(ValueError):
        coverage_beta(s, 1, 0.0)


def test_coverage_banding_with_default_margin():
    # with the 1.45 margin, level 7 of the 8-level scheme reaches out to
    # the fourth of the eight evaluation circles and no further, matching
    # the circles it actually serves in the equal-rate split
    s = make_mlsfr(4, -17.0)
    cov = coverage_beta(s, 7, 1.45)
    assert cov == pytest.approx(0.594, abs=1e-3)
    covered = {i for i in range(1, 9) if i / 8 <= cov}
    assert covered == {1, 2, 3, 4}


@given(n=st.integers(1, 6), gamma_min=st.floats(-30.0, -0.1),
       margin=st.floats(0.2, 2.0))
def test_coverage_monotone_in_gain(n, gamma_min, margin):
    s = make_mlsfr(n, gamma_min)
    cov = [coverage_beta(s, lv.index, margin) for lv in s.levels]
    assert all(a >= b - 1e-12 for a, b in zip(cov, cov[1:]))


def test_coverage_slope_scaling():
    s = make_mlsfr(4, -17.0)
    shallow = coverage_beta(s, 8, 1.0, pathloss_slope=20.0)
    steep = coverage_beta(s, 8, 1.0, pathloss_slope=40.0)
    assert shallow == pytest.approx(10 ** (-17 / 20))
    assert steep == pytest.approx(10 ** (-17 / 40))
    assert steep > shallow


def test_design_gamma_reference_point():
    g = design_gamma(PARAMS, LAYOUT, 1.0, 0.90)
    assert -17.5 <= g <= -16.5
    assert g == pytest.approx(-17.1188, abs=1e-3)


def test_design_gamma_monotone_in_fraction():
    assert design_gamma(PARAMS, LAYOUT, 1.0, 0.99) < design_gamma(PARAMS, LAYOUT, 1.0, 0.90)


def test_design_gamma_round_trip():
    # pick the fraction that a -3 dB ratio realizes at beta0 = 0.5, then
    # recover the ratio from it
    eta_minus3 = gamma_sweep(PARAMS, LAYOUT, 0.5, [-3.0])[0][1]
    eta_top = gamma_sweep(PARAMS, LAYOUT, 0.5, [-400.0])[0][1]
    fraction = eta_minus3 / eta_top
    assert 0.0 < fraction < 1.0
    assert design_gamma(PARAMS, LAYOUT, 0.5, fraction) == pytest.approx(-3.0, abs=1e-6)


def test_design_gamma_rejects_bad_fractions():
    for bad in (0.0, 1.0, 1.2, -0.3):
        with pytest.raises(ValueError):
            design_gamma(PARAMS, LAYOUT, 1.0, bad)
    # below the full-interference floor no ratio <= 0 dB can reach the target
    with pytest.raises(ValueError):
        design_gamma(PARAMS, LAYOUT, 1.0, 0.05)


@settings(max_examples=25)
@given(beta0=st.floats(0.2, 1.0), fraction=st.floats(0.5, 0.98))
def test_design_gamma_hits_target(beta0, fraction):
    top = gamma_sweep(PARAMS, LAYOUT, beta0, [-400.0])[0][1]
    floor = gamma_sweep(PARAMS, LAYOUT, beta0, [0.0])[0][1]
    assume(fraction > floor / top + 0.005)
    g = design_gamma(PARAMS, LAYOUT, beta0, fraction)
    assert g <= 0.0
    eta = gamma_sweep(PARAMS, LAYOUT, beta0, [g])[0][1]
    assert eta == pytest.approx(fraction * top, abs=2e-6)


def test_scheme_serialization_round_trip():
    for scheme in (make_reuse1(), make_sfr2(-6.0), make_mlsfr(4, -17.0)):
        clone = scheme_from_dict(scheme_to_dict(scheme))
        assert clone == scheme
