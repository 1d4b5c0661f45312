from fractions import Fraction as F

import mpmath
import pytest

from epg.errors import NonCalabiYauError, SingularLeadingTermError
from epg.genus import (
    GenusReport,
    GroupSpec,
    HybridSpec,
    WeightSystem,
    cy_fermat_genus,
    hybrid_genus,
    lg_genus,
    origin_contrib_equivariant,
    weighted_cy_genus,
)
from epg.numeric import evaluate_formula
from epg.pseries import PuiseuxSeries, series_equal

K3 = {
    (0, -1): 2, (0, 0): 20, (0, 1): 2,
    (1, -2): 20, (1, -1): -128, (1, 0): 216, (1, 1): -128, (1, 2): 20,
}


def k3(qmax=1):
    return PuiseuxSeries(2, {(F(a), F(b)): v for (a, b), v in K3.items() if a <= qmax}, qmax)


def test_weight_system():
    ws = WeightSystem((3, 1, 1, 1), 6)
    assert ws.n == 4 and ws.charges == (F(1, 2), F(1, 6), F(1, 6), F(1, 6))
    assert ws.is_cy and ws.central_charge == 2
    assert not WeightSystem((1, 1), 3).is_cy
    with pytest.raises(ValueError):
        WeightSystem((0, 1), 2)


def test_group_spec():
    ws = WeightSystem((1, 2, 3), 6)
    assert GroupSpec.grading(ws).order == 6
    assert GroupSpec.trivial(3).elements() == [(0, 0, 0)]
    g = GroupSpec(((F(1, 2), F(1, 2), 0), (0, F(1, 2), F(1, 2))), 3)
    assert g.order == 4 and g.exponent() == 2


def test_k3_from_fermat_quartic():
    r = cy_fermat_genus(4, 1, 6)
    assert series_equal(r.series, k3()).equal
    assert (r.dimension, r.index, r.cy_flag) == (2, 1, True)


def test_small_cases():
    assert cy_fermat_genus(2, 2, 4).series == PuiseuxSeries(2, {(0, 0): 2}, 2, 4)
    assert cy_fermat_genus(3, 3, 5).series.is_zero()
    assert lg_genus(WeightSystem((1,), 1), 2, 4).series.is_zero()


def test_non_cy_lg_runs_and_is_flagged():
    r = lg_genus(WeightSystem((1, 1), 3), 1, 4)
    assert not r.cy_flag and r.index == F(1, 3)
    assert not r.series.is_zero()


def test_weighted_needs_cy():
    with pytest.raises(NonCalabiYauError):
        weighted_cy_genus(WeightSystem((1, 1, 1), 4), 1, 4)


def test_explicit_group_matches_default():
    ws = WeightSystem((1, 1, 1, 1), 4)
    a = lg_genus(ws, 2, 6).series
    b = lg_genus(ws, 2, 6, group=GroupSpec.grading(ws)).series
    assert series_equal(a, b).equal


def test_denominator_override():
    a = lg_genus(WeightSystem((1, 1, 1, 1), 4), 1, 6)
    b = lg_genus(WeightSystem((1, 1, 1, 1), 4), 1, 6, denom=12)
    assert b.denom == 12 and series_equal(a.series, b.series).equal


def test_thread_count_does_not_change_output(monkeypatch):
    ws = WeightSystem((3, 1, 1, 1), 6)
    monkeypatch.setenv("EPG_THREADS", "1")
    a = weighted_cy_genus(ws, 1, 8).to_json()
    monkeypatch.setenv("EPG_THREADS", "4")
    b = weighted_cy_genus(ws, 1, 8).to_json()
    assert a == b


def test_report_json_round_trip():
    r = hybrid_genus(HybridSpec(2, 3), "h1", 1, 6)
    back = GenusReport.from_json(r.to_json())
    assert back.series == r.series and back.params == r.params and back.index == 1


def test_singular_sector_is_identified():
    with pytest.raises(SingularLeadingTermError) as exc:
        origin_contrib_equivariant(WeightSystem((1, 1), 2), 0, 1, 4)
    assert exc.value.sector == "a=0,b=0"


def test_display_convention_disagrees():
    # the alternative phase bookkeeping gives 1 + y for two points
    two = lg_genus(WeightSystem((1, 1), 2), 1, 4, convention="display").series
    assert two.terms == {(F(0), F(0)): two.coeff(0, 0), (F(0), F(1)): two.coeff(0, 1)}
    assert two.coeff(0, 0).to_fraction() == 1 and two.coeff(0, 1).to_fraction() == 1
    quartic = lg_genus(WeightSystem((1, 1, 1, 1), 4), 1, 6, convention="display").series
    assert not series_equal(quartic, k3()).equal


def test_weighted_without_branch_factor_disagrees():
    ws = WeightSystem((3, 1, 1, 1), 6)
    naive = weighted_cy_genus(ws, 1, 8, branch_correction=False).series
    assert not series_equal(naive, k3()).equal


def test_hybrid_requires_two_blocks():
    with pytest.raises(ValueError):
        HybridSpec(1, 3)
    with pytest.raises(ValueError):
        hybrid_genus(HybridSpec(2, 2), "h4", 1, 4)


@pytest.mark.parametrize(
    "report",
    [
        lambda: lg_genus(WeightSystem((1, 2, 3), 6), 3, 7),
        lambda: hybrid_genus(HybridSpec(2, 3), "h3", 3, 9),
        lambda: origin_contrib_equivariant(WeightSystem((1, 1, 1, 1), 4), F(1, 2), 3, 8),
    ],
)
def test_series_matches_direct_evaluation(report):
    r = report()
    z, tau = mpmath.mpc("0.11", "0.07"), mpmath.mpc("0.05", "1.5")
    with mpmath.workdps(30):
        direct = evaluate_formula(r.formula, r.params, z, tau, 20)
        approx = r.series.evaluate(z, tau, 20)
        assert abs(direct - approx) < 1e-8 * max(1, abs(direct))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_projective_space_class(n):
    from epg.theta import unit_ratio_factor, unit_zero_factor

    fs = unit_ratio_factor(0, 1) ** n / unit_zero_factor(1)
    res = fs.expand(fs.required_denom(), 0, n + 2, (n,), top_only=True)
    res.ks = ((),)
    q0 = res.to_series(()).q_slice(0)
    half = F(n - 1, 2)
    assert {k: v.to_fraction() for k, v in q0.items()} == {k - half: 1 for k in range(n)}


def _even(s):
    t = s.lattice_terms()
    return all(t.get((a, -b)) == c for (a, b), c in t.items())


@pytest.mark.parametrize(
    "report",
    [
        lambda: cy_fermat_genus(4, 2, 8),
        lambda: cy_fermat_genus(5, 2, 9),
        lambda: lg_genus(WeightSystem((1,) * 5, 5), 2, 9),
        lambda: weighted_cy_genus(WeightSystem((3, 1, 1, 1), 6), 2, 8),
        lambda: hybrid_genus(HybridSpec(3, 3), "h2", 2, 10),
    ],
)
def test_genus_is_even_in_z(report):
    # weight 0: phi(-z) = phi(z) in every dimension
    assert _even(report().series)
