from fractions import Fraction as F

import pytest

from epg.genus import GenusReport, HybridSpec, WeightSystem, cy_fermat_genus, lg_genus
from epg.pseries import PuiseuxSeries, series_equal
from epg.verify import (
    check_jacobi,
    check_numeric,
    check_origin_numeric,
    check_s_law,
    check_untwisted_spectrum,
    check_window_stability,
    euler_number,
    hodge_oracle,
    run_campaign,
    spectrum_oracle,
    verify_hybrid,
    verify_lg_cy,
)


def poly(denom, terms):
    return PuiseuxSeries(denom, {(F(0), F(e)): c for e, c in terms.items()}, qmax=0)


def corrupted(rep: GenusReport, eq, ey, delta=1) -> GenusReport:
    s = rep.series + PuiseuxSeries.monomial(rep.series.denom, eq, ey, delta)
    return GenusReport(s, rep.formula, rep.params, rep.dimension, rep.index, rep.cy_flag, rep.sectors)


def test_hodge_oracle():
    assert series_equal(hodge_oracle(4, 4), poly(2, {-1: 2, 0: 20, 1: 2})).equal
    assert hodge_oracle(3, 3).is_zero()
    assert series_equal(hodge_oracle(2, 2), poly(2, {0: 2})).equal
    assert euler_number(hodge_oracle(5, 5)) == -200
    assert euler_number(hodge_oracle(5, 3)) == -6  # cubic threefold
    assert euler_number(hodge_oracle(4, 3)) == 9  # cubic surface


def test_spectrum_oracle():
    assert series_equal(spectrum_oracle(WeightSystem((1,), 2)), poly(2, {F(1, 2): 1})).equal
    assert series_equal(spectrum_oracle(WeightSystem((1,), 3)), poly(3, {F(1, 3): 1, F(2, 3): 1})).equal
    with pytest.raises(ValueError):
        spectrum_oracle(WeightSystem((2,), 2))


def test_untwisted_spectrum():
    assert check_untwisted_spectrum(WeightSystem((1, 1, 1), 3)).passed


def test_jacobi_pass_fail_inconclusive():
    k3 = cy_fermat_genus(4, 3, 8)
    assert check_jacobi(k3).passed
    bad = check_jacobi(corrupted(k3, 1, 0))
    assert bad.status == "fail" and "z->z+tau" in bad.detail
    assert check_jacobi(corrupted(k3, F(1, 2), 0)).status == "fail"
    small = cy_fermat_genus(4, 3, 2)
    assert check_jacobi(small).status == "inconclusive"


def test_jacobi_rejects_fractional_index():
    r = lg_genus(WeightSystem((1, 1), 3), 2, 6)
    assert check_jacobi(r).status == "fail"


def test_correspondence_negative_control():
    rep = verify_lg_cy(4, 2, 8, cy_degree=5)
    assert rep.status == "fail"
    assert "q^0 y^-1" in rep.detail


def test_hybrid_small():
    assert verify_hybrid(HybridSpec(2, 2), 1, 8).passed


def test_window_stability():
    ok = check_window_stability({"formula": "cy_fermat", "params": {"n": 4}, "qmax": 2}, 4, 8)
    assert ok.passed
    raw = {
        "formula": "sector",
        "params": {"weights": [3, 1, 1, 1], "degree": 6, "family": "weighted_cy", "index": 2},
        "qmax": 1,
    }
    neg = check_window_stability(raw, 6, 10)
    assert neg.status == "fail" and neg.region["band_terms"] > 0
    # agreement on the common window alone is not enough to expose the tail
    assert check_window_stability(raw, 6, 10, expect_finite_support=False).passed
    with pytest.raises(ValueError):
        check_window_stability(raw, 6, 6)


def test_numeric_checks():
    k3 = cy_fermat_genus(4, 3, 8)
    assert check_numeric(k3).passed
    assert check_numeric(corrupted(k3, 1, 1)).status == "fail"
    assert check_numeric(k3, samples=[(0.1 + 0.05j, 0.3j)]).status == "inconclusive"


def test_s_law():
    quartic = lg_genus(WeightSystem((1, 1, 1, 1), 4), 0, 4)
    assert check_s_law(quartic).passed
    display = lg_genus(WeightSystem((1, 1, 1, 1), 4), 0, 4, convention="display")
    assert check_s_law(display).status == "fail"


def test_origin_with_independent_parameter():
    assert check_origin_numeric(WeightSystem((1, 1, 1, 1), 4), F(1, 2)).passed
    assert check_origin_numeric(WeightSystem((1, 2, 3), 6), F(2, 3), qmax=2).passed


def test_campaign():
    reports = run_campaign(
        [
            {"check": "lgcy", "params": {"n": 3, "qmax": 2}},
            {"check": "lgcy", "params": {"n": 4, "cy_degree": 5, "qmax": 1}},
            {"check": "nonsense"},
        ]
    )
    assert [r.status for r in reports] == ["pass", "fail", "fail"]
    assert "unknown check" in reports[2].detail


def test_empty_region_is_inconclusive():
    from epg.verify import check_series_equal

    a = PuiseuxSeries.zero(2, qmax=-1, ywindow=2)
    assert check_series_equal("empty", a, a).status == "inconclusive"


@pytest.mark.parametrize("index,status", [(0, "pass"), (1, "fail")])
def test_jacobi_constant_series(index, status):
    s = PuiseuxSeries.constant(2, 2, qmax=3, ywindow=4)
    rep = GenusReport(s, "external", {}, F(2 * index), F(index), True)
    assert check_jacobi(rep).status == status
