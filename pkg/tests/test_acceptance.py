"""Acceptance criteria, one test per criterion.

Each test prints a single line ``[PASS|FAIL] criterion k: ...`` (also when
pytest captures output) and then asserts.  Run directly with
``python3 tests/test_acceptance.py`` for just the summary lines.
"""
from __future__ import annotations

import sys
from fractions import Fraction as F

import pytest

from epg.genus import (
    HybridSpec,
    WeightSystem,
    cy_fermat_genus,
    hybrid_genus,
    lg_genus,
    origin_contrib_equivariant,
    weighted_cy_genus,
)
from epg.pseries import series_equal
from epg.verify import (
    DEFAULT_SAMPLES,
    CheckReport,
    check_jacobi,
    check_numeric,
    check_s_law,
    check_series_equal,
    check_untwisted_spectrum,
    check_window_stability,
    euler_number,
    hodge_oracle,
    verify_hybrid,
    verify_lg_cy,
    verify_weighted_lg_cy,
)

W123 = WeightSystem((1, 2, 3), 6)
W3111 = WeightSystem((3, 1, 1, 1), 6)


def _zero_check(name, series) -> CheckReport:
    if series.is_zero() and series.qmax >= 3:
        return CheckReport(name, "pass", "", {"qmax": series.qmax})
    return CheckReport(name, "fail", f"expected 0 through q^3, got {series!r}")


def criterion_1():
    return [verify_lg_cy(n, 3, n + 4) for n in (2, 3, 4, 5)]


def criterion_2():
    out = [verify_weighted_lg_cy(W123, 3, 7), verify_weighted_lg_cy(W3111, 3, 8)]
    out.append(_zero_check("lg (1,2,3;6) = 0", lg_genus(W123, 3, 7).series))
    out.append(_zero_check("weighted_cy (1,2,3;6) = 0", weighted_cy_genus(W123, 3, 7).series))
    out.append(
        check_series_equal("weighted_cy(3,1,1,1;6) = cy_fermat(4)", weighted_cy_genus(W3111, 3, 8).series,
                           cy_fermat_genus(4, 3, 8).series)
    )
    return out


def criterion_3():
    out = [verify_hybrid(HybridSpec(n, m), 2, n + m + 4) for n, m in ((2, 2), (2, 3), (3, 3))]
    q0 = hybrid_genus(HybridSpec(2, 3), "h1", 2, 9).series.q_limit()
    out.append(check_series_equal("hybrid (2,3) q^0 = hodge_oracle(4,4)", q0, hodge_oracle(4, 4)))
    return out


def criterion_4():
    out = []
    for n in (4, 5):
        r = cy_fermat_genus(n, 3, n + 4)
        rep = check_jacobi(r)
        expect = F(n - 2, 2)
        if rep.passed and r.index != expect:
            rep = CheckReport(rep.name, "fail", f"index {r.index} != {expect}")
        out.append(rep)
        out.append(check_s_law(cy_fermat_genus(n, 0, n), DEFAULT_SAMPLES, precision=40, tol=1e-20))
    return out


def criterion_5():
    systems = [((1,), 2), ((1,), 3), ((1, 1, 1), 3), ((1, 1, 1, 1), 4), ((1, 2, 3), 6)]
    return [check_untwisted_spectrum(WeightSystem(w, d)) for w, d in systems]


def criterion_6():
    out = []
    for n, chi in zip((2, 3, 4, 5), (2, 0, 24, -200)):
        s = cy_fermat_genus(n, 0, n + 2).series
        rep = check_series_equal(f"q_limit cy_fermat({n}) = hodge_oracle", s.q_limit(), hodge_oracle(n, n))
        e = euler_number(s)
        if rep.passed and e != chi:
            rep = CheckReport(rep.name, "fail", f"Euler number {e} != {chi}")
        out.append(rep)
    return out


def _genus_descriptors():
    for n in (2, 3, 4, 5):
        yield {"formula": "lg", "params": {"weights": [1] * n, "degree": n}, "qmax": 3}, n + 4
        yield {"formula": "cy_fermat", "params": {"n": n}, "qmax": 3}, n + 4
    for ws, w in ((W123, 7), (W3111, 8)):
        p = {"weights": list(ws.weights), "degree": ws.degree}
        yield {"formula": "lg", "params": p, "qmax": 3}, w
        yield {"formula": "weighted_cy", "params": p, "qmax": 3}, w
    for n, m in ((2, 2), (2, 3), (3, 3)):
        for ph in ("h1", "h2", "h3"):
            yield {"formula": "hybrid", "params": {"n": n, "m": m, "phase": ph}, "qmax": 2}, n + m + 4


def criterion_7():
    out = [check_window_stability(d, w, w + 4) for d, w in _genus_descriptors()]
    out += [check_numeric(cy_fermat_genus(n, 3, n + 4), DEFAULT_SAMPLES) for n in (2, 3, 4)]
    neg = verify_lg_cy(4, 3, 8, cy_degree=5)
    located = neg.status == "fail" and "first mismatch at q^" in neg.detail
    out.append(CheckReport("negative control: LG 4 vs CY 5 must fail", "pass" if located else "fail", neg.detail))
    return out


def criterion_8():
    out = []
    for ws, w in (((1, 1, 1, 1), 4), ((1, 2, 3), 6)):
        ws = WeightSystem(ws, w)
        W = ws.n + 4
        o = origin_contrib_equivariant(ws, 1, 3, W).series
        lg = lg_genus(ws, 3, W).series
        out.append(check_series_equal(f"origin(c=1) = lg {ws.weights};{ws.degree}", o, lg))
    return out


CRITERIA = {
    1: ("LG/CY Fermat n=2..5 through q^3", criterion_1),
    2: ("weighted LG/CY (1,2,3;6), (3,1,1,1;6)", criterion_2),
    3: ("hybrid H1=H2=H3 for (2,2),(2,3),(3,3)", criterion_3),
    4: ("Jacobi laws and S-law for cy_fermat 4, 5", criterion_4),
    5: ("untwisted q^0 spectrum law", criterion_5),
    6: ("chi_y limit and Euler numbers", criterion_6),
    7: ("window stability, numeric agreement, negative control", criterion_7),
    8: ("origin contribution equals LG genus", criterion_8),
}


def run(k: int) -> tuple[bool, str]:
    title, fn = CRITERIA[k]
    reports = fn()
    bad = [r for r in reports if not r.passed]
    ok = not bad
    detail = f"{len(reports) - len(bad)}/{len(reports)} checks"
    if bad:
        detail += "; " + "; ".join(f"{r.name}: {r.status} {r.detail}" for r in bad)
    return ok, f"[{'PASS' if ok else 'FAIL'}] criterion {k}: {title} ({detail})"


@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_criterion(k, capsys):
    ok, line = run(k)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [run(k) for k in sorted(CRITERIA)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
