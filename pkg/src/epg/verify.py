"""Verification suite: Jacobi-form laws, correspondence equalities, independent
oracles, window-stability audits and numeric cross-checks.

Every check returns a CheckReport whose status is "pass", "fail" or
"inconclusive" (nothing meaningful could be compared).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, floor, isqrt, lcm
from typing import Callable, Sequence

import mpmath

from .cyclo import CycloNum, root_of_unity
from .factored import FactoredSeries
from .genus import (
    GenusReport,
    GroupSpec,
    HybridSpec,
    WeightSystem,
    cy_fermat_genus,
    evaluate_sectors,
    hybrid_genus,
    lg_genus,
    lg_sectors,
    origin_contrib_equivariant,
    weighted_cy_genus,
    weighted_sectors,
)
from .numeric import evaluate_formula, origin_numeric
from .pseries import PuiseuxSeries, series_equal

__all__ = [
    "CheckReport",
    "check_jacobi",
    "check_series_equal",
    "verify_lg_cy",
    "verify_weighted_lg_cy",
    "verify_hybrid",
    "verify_origin",
    "hodge_oracle",
    "euler_number",
    "spectrum_oracle",
    "check_untwisted_spectrum",
    "compute",
    "check_window_stability",
    "check_numeric",
    "check_s_law",
    "check_origin_numeric",
    "run_campaign",
]

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"


@dataclass
class CheckReport:
    name: str
    status: str
    detail: str = ""
    region: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "status": self.status,
            "detail": self.detail,
            "region": {k: _jsonable(v) for k, v in self.region.items()},
        }


def _jsonable(v):
    if v is None or isinstance(v, (bool, int, str)):
        return v
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v)
    return str(v)


def _region(qmax, ywindow, **extra) -> dict:
    out = {"qmax": qmax, "ywindow": ywindow}
    out.update(extra)
    return out


def _fmt_coeff(c: CycloNum) -> str:
    if c.is_rational():
        return str(c.coeffs[0])
    return repr(c)


def check_series_equal(name: str, a: PuiseuxSeries, b: PuiseuxSeries) -> CheckReport:
    res = series_equal(a, b)
    region = _region(res.qmax, res.ywindow, compared=res.compared)
    if res.equal and res.compared == 0 and res.qmax is not None and res.qmax < 0:
        return CheckReport(name, INCONCLUSIVE, "the common known region is empty", region)
    if res.equal:
        return CheckReport(name, PASS, "", region)
    eq, ey, ca, cb = res.mismatch
    return CheckReport(name, FAIL, f"first mismatch at q^{eq} y^{ey}: {_fmt_coeff(ca)} != {_fmt_coeff(cb)}", region)


# ---------------------------------------------------------------------------
# Jacobi-form laws


def check_jacobi(report: GenusReport) -> CheckReport:
    """Weight-0 Jacobi laws of index m = report.index on the truncated series.

    (i)   z -> z+1:   phi(z+1) = (-1)^(2m) phi(z)
    (ii)  z -> z+tau: phi(z+tau) = (-1)^(2m) q^(-m) y^(-2m) phi(z), compared
          coefficientwise as c(a, b) = (-1)^(2m) c(a + b + m, b + 2m) on every
          pair with both points inside the known region
    (iii) tau -> tau+1: the series is invariant.
    """
    s, m = report.series, Fraction(report.index)
    name = f"jacobi[{report.formula}]"
    if s.qmax is None or s.ywindow is None:
        return CheckReport(name, INCONCLUSIVE, "series must have finite qmax and ywindow")
    W, Q, N = s.ywindow, s.qmax, s.denom
    region = _region(Q, W, index=m)
    if W < 2 * m + 1:
        return CheckReport(name, INCONCLUSIVE, f"ywindow {W} < 2*index + 1", region)
    if (2 * m).denominator != 1 or (m * N).denominator != 1:
        return CheckReport(name, FAIL, f"index {m} incompatible with lattice 1/{N}", region)
    sign = -1 if (2 * m) % 2 else 1

    shifted = s.substitute_y_scale(1, 0)
    target = s.scale(sign)
    r1 = series_equal(shifted, target)
    if not r1.equal:
        eq, ey, ca, cb = r1.mismatch
        return CheckReport(name, FAIL, f"z->z+1 fails at q^{eq} y^{ey}: {_fmt_coeff(ca)} vs {_fmt_coeff(cb)}", region)

    r3 = series_equal(s.substitute_q_phase(), s)
    if not r3.equal:
        eq, ey, ca, cb = r3.mismatch
        return CheckReport(name, FAIL, f"tau->tau+1 fails at q^{eq} y^{ey}", region)

    terms = s.lattice_terms()
    qcap, ycap = floor(Q * N), floor(W * N)
    mi = int(m * N)
    zero = CycloNum.zero(N)
    nontrivial = 0
    for a in range(min([k[0] for k in terms] + [0]), qcap + 1):
        for b in range(-ycap, ycap + 1):
            # exponents in lattice units: q^(a/N) y^(b/N) <-> q^((a + b + mN)/N) y^((b + 2mN)/N)
            a2 = a + b + mi
            b2 = b + 2 * mi
            if a2 > qcap or abs(b2) > ycap:
                continue
            c1 = terms.get((a, b), zero)
            c2 = terms.get((a2, b2), zero)
            if c1.is_zero() and c2.is_zero():
                continue
            nontrivial += 1
            if c1 != c2 * sign:
                return CheckReport(
                    name,
                    FAIL,
                    f"z->z+tau fails: c(q^{Fraction(a, N)} y^{Fraction(b, N)}) = {_fmt_coeff(c1)} but "
                    f"c(q^{Fraction(a2, N)} y^{Fraction(b2, N)}) = {_fmt_coeff(c2)}",
                    region,
                )
    region["pairs_compared"] = nontrivial
    if nontrivial == 0 and not s.is_zero():
        return CheckReport(name, INCONCLUSIVE, "no coefficient pair fits inside the known region", region)
    return CheckReport(name, PASS, "", region)


# ---------------------------------------------------------------------------
# correspondences


def verify_lg_cy(n: int, qmax, ywindow, cy_degree: int | None = None, denom: int | None = None) -> CheckReport:
    """LG Fermat of degree n against the Fermat CY hypersurface (of degree cy_degree, default n)."""
    d = n if cy_degree is None else cy_degree
    lg = lg_genus(WeightSystem((1,) * n, n), qmax, ywindow, denom=denom)
    cy = cy_fermat_genus(d, qmax, ywindow, denom=denom)
    return check_series_equal(f"lgcy[n={n},cy={d}]", lg.series, cy.series)


def verify_weighted_lg_cy(ws: WeightSystem, qmax, ywindow, denom: int | None = None) -> CheckReport:
    lg = lg_genus(ws, qmax, ywindow, denom=denom)
    cy = weighted_cy_genus(ws, qmax, ywindow, denom=denom)
    return check_series_equal(f"weighted_lgcy[{ws.weights};{ws.degree}]", lg.series, cy.series)


def verify_hybrid(model: HybridSpec, qmax, ywindow, denom: int | None = None) -> CheckReport:
    name = f"hybrid[n={model.n},m={model.m}]"
    series = {ph: hybrid_genus(model, ph, qmax, ywindow, denom=denom).series for ph in ("h1", "h2", "h3")}
    for a, b in (("h1", "h2"), ("h1", "h3"), ("h2", "h3")):
        rep = check_series_equal(name, series[a], series[b])
        if not rep.passed:
            rep.detail = f"{a} vs {b}: {rep.detail}"
            return rep
    return CheckReport(name, PASS, "", _region(Fraction(qmax), Fraction(ywindow)))


def verify_origin(ws: WeightSystem, qmax, ywindow, denom: int | None = None) -> CheckReport:
    """Origin contribution at u = z against the LG genus with H = <J_W>."""
    o = origin_contrib_equivariant(ws, 1, qmax, ywindow, denom=denom)
    lg = lg_genus(ws, qmax, ywindow, denom=denom)
    return check_series_equal(f"origin[{ws.weights};{ws.degree}]", o.series, lg.series)


# ---------------------------------------------------------------------------
# oracles


def _poly_power(base: list[int], e: int) -> list[int]:
    out = [1]
    for _ in range(e):
        new = [0] * (len(out) + len(base) - 1)
        for i, a in enumerate(out):
            if a:
                for j, b in enumerate(base):
                    new[i + j] += a * b
        out = new
    return out


def hodge_numbers(n: int, d: int) -> dict[tuple[int, int], int]:
    """Hodge numbers of a smooth degree-d hypersurface in P^(n-1) (dimension n-2)."""
    dim = n - 2
    if dim < 0:
        raise ValueError("need n >= 2")
    base = [1] * max(d - 1, 0)  # (1 - t^(d-1))/(1 - t)
    jac = _poly_power(base, n) if base else [0]
    h: dict[tuple[int, int], int] = {}
    for p in range(dim + 1):
        k = (dim - p + 1) * d - n
        h[(p, dim - p)] = jac[k] if 0 <= k < len(jac) else 0
    for p in range(dim + 1):
        h[(p, p)] = h.get((p, p), 0) + 1
    return h


def hodge_oracle(n: int, d: int) -> PuiseuxSeries:
    """y^(-(n-2)/2) chi_{-y} of a smooth degree-d hypersurface in P^(n-1)."""
    dim = n - 2
    terms: dict = {}
    for (p, q), h in hodge_numbers(n, d).items():
        if h:
            key = (Fraction(0), Fraction(p) - Fraction(dim, 2))
            terms[key] = terms.get(key, 0) + (-1) ** (p + q) * h
    return PuiseuxSeries(2, terms, qmax=0)


def euler_number(s: PuiseuxSeries) -> Fraction:
    """Value at y = 1 of the q^0 slice (the Euler number for a genus)."""
    total = CycloNum.zero(s.denom)
    for c in s.q_slice(0).values():
        total = total + c
    return total.to_fraction()


def spectrum_oracle(ws: WeightSystem) -> PuiseuxSeries:
    """prod_i (t^q_i - t)/(1 - t^q_i) as an exact Puiseux polynomial in t (written as y)."""
    D = ws.degree
    if any(not (0 < q < 1) for q in ws.charges):
        raise ValueError("charges must lie strictly between 0 and 1")
    num = {0: 1}
    den = {0: 1}
    for w in ws.weights:
        # exponents in units of 1/D
        num = _pmul(num, {w: 1, D: -1})
        den = _pmul(den, {0: 1, w: -1})
    quot = _pdiv_exact(num, den)
    terms = {(Fraction(0), Fraction(k, D)): c for k, c in quot.items() if c}
    return PuiseuxSeries(D, terms, qmax=0)


def _pmul(a: dict, b: dict) -> dict:
    out: dict = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, 0) + x * y
    return {k: v for k, v in out.items() if v}


def _pdiv_exact(num: dict, den: dict) -> dict:
    num = dict(num)
    dlo = min(den)
    dlead = den[dlo]
    dhi = max(den)
    out: dict = {}
    while num:
        lo = min(num)
        c = num[lo]
        if c % dlead:
            raise ArithmeticError("inexact division in the spectrum product")
        qk = lo - dlo
        qc = c // dlead
        out[qk] = qc
        for e, v in den.items():
            num[qk + e] = num.get(qk + e, 0) - qc * v
            if num[qk + e] == 0:
                del num[qk + e]
        if num and min(num) > max(out) + dhi + 10 * (dhi + 1) and max(num) < min(num):
            break
        if len(out) > 10_000:
            raise ArithmeticError("spectrum product is not a polynomial")
    return out


def check_untwisted_spectrum(ws: WeightSystem, qmax=0, ywindow=None) -> CheckReport:
    """q^0 slice of the identity sector equals (-1)^n y^(-n/2) Sp_W(y)."""
    sectors = [s for s in lg_sectors(ws) if not any(s.meta["g"]) and not any(s.meta["h"])]
    sector = sectors[0]
    sector.weight = Fraction(1)
    W = Fraction(ywindow) if ywindow is not None else Fraction(ws.n + 2)
    got = evaluate_sectors([sector], qmax, W).q_limit()
    sp = spectrum_oracle(ws)
    sp = sp.lift(lcm(sp.denom, 2))
    expected = sp.shift(0, Fraction(-ws.n, 2)).scale((-1) ** ws.n)
    expected = PuiseuxSeries(expected.denom, expected.terms, qmax=0)
    rep = check_series_equal(f"spectrum[{ws.weights};{ws.degree}]", got, expected)
    return rep


# ---------------------------------------------------------------------------
# window stability


def compute(descriptor: dict, ywindow=None) -> GenusReport:
    """Run the computation named by a descriptor {"formula": tag, "params": {...}, "qmax": ..}.

    Descriptors with formula "sector" evaluate one raw summand with unit weight
    (params: weights, degree, family "lg" or "weighted_cy", index into the
    sector list).
    """
    f = descriptor["formula"]
    p = descriptor.get("params", {})
    qmax = descriptor.get("qmax", 2)
    W = descriptor.get("ywindow") if ywindow is None else ywindow
    denom = descriptor.get("denom")
    if f == "lg":
        ws = WeightSystem(tuple(p["weights"]), p["degree"])
        return lg_genus(ws, qmax, W, denom=denom, convention=p.get("convention", "phi"))
    if f == "origin":
        ws = WeightSystem(tuple(p["weights"]), p["degree"])
        return origin_contrib_equivariant(ws, Fraction(p.get("c", 1)), qmax, W, denom=denom)
    if f == "cy_fermat":
        return cy_fermat_genus(int(p["n"]), qmax, W, denom=denom)
    if f == "weighted_cy":
        ws = WeightSystem(tuple(p["weights"]), p["degree"])
        return weighted_cy_genus(ws, qmax, W, denom=denom, branch_correction=p.get("branch_correction", True))
    if f == "hybrid":
        return hybrid_genus(HybridSpec(int(p["n"]), int(p["m"])), p["phase"], qmax, W, denom=denom)
    if f == "sector":
        ws = WeightSystem(tuple(p["weights"]), p["degree"])
        family = p.get("family", "lg")
        if family == "lg":
            pool = lg_sectors(ws)
        elif family == "weighted_cy":
            pool = weighted_sectors(ws)
        else:
            raise ValueError(f"unknown sector family {family!r}")
        sec = pool[int(p["index"])]
        sec.weight = Fraction(1)
        s = evaluate_sectors([sec], qmax, W, denom)
        dim = ws.central_charge
        return GenusReport(s, "sector", dict(p), dim, dim / 2, ws.is_cy, 1)
    raise ValueError(f"unknown formula {f!r}")


def check_window_stability(descriptor: dict, w1, w2, expect_finite_support: bool = True) -> CheckReport:
    """Recompute at ywindow w1 < w2: the results must agree on |ey| <= w1.

    With ``expect_finite_support`` the larger computation must also have no
    terms in the band w1 < |ey| <= w2 below the smaller q-cap, which is what a
    genus (finite y-support per q-order) satisfies and a raw sector does not.
    """
    w1, w2 = Fraction(w1), Fraction(w2)
    if not w1 < w2:
        raise ValueError("need w1 < w2")
    name = f"window[{descriptor['formula']}:{descriptor.get('params', {})}]"
    a = compute(descriptor, w1).series
    b = compute(descriptor, w2).series
    rep = check_series_equal(name, a, b)
    rep.region.update({"w1": w1, "w2": w2})
    if not rep.passed:
        return rep
    band = [(eq, ey) for (eq, ey), _ in b.items() if abs(ey) > w1]
    rep.region["band_terms"] = len(band)
    if expect_finite_support and band:
        eq, ey = band[0]
        rep.status = FAIL
        rep.detail = f"{len(band)} terms beyond |y| = {w1}, first at q^{eq} y^{ey} (support not closed)"
    return rep


# ---------------------------------------------------------------------------
# numeric checks


DEFAULT_SAMPLES = (
    (complex(0.11, 0.13), complex(0.07, 1.21)),
    (complex(0.11, 0.07), complex(0.05, 1.4)),
    (complex(-0.17, 0.05), complex(-0.21, 1.6)),
)


def _tail_bound(s: PuiseuxSeries, z, tau, safety: int = 10):
    """Estimate of the omitted q-tail at (z, tau) from the growth of the known levels."""
    q = abs(mpmath.exp(2j * mpmath.pi * tau))
    yabs = abs(mpmath.exp(2j * mpmath.pi * z))
    levels: dict[Fraction, mpmath.mpf] = {}
    for (eq, ey), c in s.items():
        mag = abs(c.to_complex(20)) * yabs ** float(ey)
        levels[eq] = levels.get(eq, 0) + mag
    if not levels:
        return mpmath.mpf(0)
    ks = sorted(levels)
    rho = mpmath.mpf(1)
    for k0, k1 in zip(ks, ks[1:]):
        if levels[k0] > 0:
            rho = max(rho, (levels[k1] / levels[k0]) ** (1 / float(k1 - k0)))
    ratio = safety * rho * q
    if ratio >= mpmath.mpf(1) / 2:
        return mpmath.inf
    top = levels[ks[-1]] * q ** float(ks[-1])
    return top * ratio / (1 - ratio)


def check_numeric(report: GenusReport, samples: Sequence = DEFAULT_SAMPLES, precision: int = 30) -> CheckReport:
    """Exact series evaluated numerically vs. the defining expression evaluated directly."""
    name = f"numeric[{report.formula}:{report.params}]"
    worst, worst_bound, details = 0.0, 0.0, []
    for z, tau in samples:
        bound = _tail_bound(report.series, z, tau) + mpmath.mpf(10) ** (10 - precision)
        if bound == mpmath.inf:
            return CheckReport(name, INCONCLUSIVE, f"Im(tau) too small at tau={tau} for the truncation", {})
        try:
            direct = evaluate_formula(report.formula, report.params, z, tau, precision)
        except ValueError as exc:
            return CheckReport(name, INCONCLUSIVE, str(exc), {})
        approx = report.series.evaluate(z, tau, precision)
        dev = abs(direct - approx)
        details.append(f"(z={z}, tau={tau}): |diff|={mpmath.nstr(dev, 3)} bound={mpmath.nstr(bound, 3)}")
        worst = max(worst, float(dev))
        worst_bound = max(worst_bound, float(bound))
        if dev > bound:
            return CheckReport(name, FAIL, "; ".join(details), {"samples": len(samples)})
    return CheckReport(
        name, PASS, "", {"samples": len(samples), "max_deviation": f"{worst:.3e}", "max_bound": f"{worst_bound:.3e}"}
    )


def check_s_law(report: GenusReport, samples: Sequence = DEFAULT_SAMPLES, precision: int = 40, tol=1e-20) -> CheckReport:
    """phi(z/tau, -1/tau) = exp(2 pi i m z^2 / tau) phi(z, tau), both sides evaluated directly."""
    name = f"s_law[{report.formula}:{report.params}]"
    m = report.index
    worst = mpmath.mpf(0)
    with mpmath.workdps(precision + 10):
        for z, tau in samples:
            z, tau = mpmath.mpc(z), mpmath.mpc(tau)
            lhs = evaluate_formula(report.formula, report.params, z / tau, -1 / tau, precision)
            rhs = evaluate_formula(report.formula, report.params, z, tau, precision)
            rhs *= mpmath.exp(2j * mpmath.pi * (mpmath.mpf(m.numerator) / m.denominator) * z**2 / tau)
            dev = abs(lhs - rhs) / max(1, abs(rhs))
            worst = max(worst, dev)
            if dev > tol:
                return CheckReport(
                    name, FAIL, f"at z={mpmath.nstr(z, 6)}, tau={mpmath.nstr(tau, 6)}: relative deviation {mpmath.nstr(dev, 3)} > {tol}", {}
                )
    return CheckReport(name, PASS, "", {"samples": len(samples), "max_deviation": mpmath.nstr(worst, 3), "tol": tol})


def check_origin_numeric(ws: WeightSystem, c, samples: Sequence = DEFAULT_SAMPLES, qmax=3, ywindow=None, precision=30):
    """Origin contribution with u = c z (c != 1 allowed): exact series vs. direct evaluation at u = c z.

    For c != 1 the summands need not have finite y-support, so the series is
    computed at windows W, 2W, 3W and the y-tail is bounded from the observed
    geometric convergence (inconclusive when it does not converge).
    """
    W = Fraction(ywindow if ywindow is not None else ws.n + 4)
    cc = Fraction(c)
    name = f"origin_numeric[{ws.weights};{ws.degree};c={cc}]"
    reps = [origin_contrib_equivariant(ws, cc, qmax, k * W) for k in (1, 2, 3)]
    worst = 0.0
    for z, tau in samples:
        z, tau = mpmath.mpc(z), mpmath.mpc(tau)
        vals = [r.series.evaluate(z, tau, precision) for r in reps]
        d1, d2 = abs(vals[1] - vals[0]), abs(vals[2] - vals[1])
        noise = mpmath.mpf(10) ** (10 - precision)
        if d2 > noise:
            rho = d2 / d1
            if rho >= mpmath.mpf(1) / 2:
                return CheckReport(name, INCONCLUSIVE, f"y-window expansion not converging at z={mpmath.nstr(z, 6)}", {})
            ytail = 10 * d2 * rho / (1 - rho)
        else:
            ytail = 0
        bound = _tail_bound(reps[2].series, z, tau) + ytail + noise
        if bound == mpmath.inf:
            return CheckReport(name, INCONCLUSIVE, f"Im(tau) too small at tau={mpmath.nstr(tau, 6)}", {})
        direct = origin_numeric(ws.weights, ws.degree, z * cc.numerator / cc.denominator, z, tau, precision)
        dev = abs(direct - vals[2])
        worst = max(worst, float(dev))
        if dev > bound:
            return CheckReport(
                name,
                FAIL,
                f"at z={mpmath.nstr(z, 6)}, tau={mpmath.nstr(tau, 6)}: |diff| = {mpmath.nstr(dev, 3)} > {mpmath.nstr(bound, 3)}",
                {},
            )
    return CheckReport(name, PASS, "", {"samples": len(samples), "max_deviation": f"{worst:.3e}", "ywindow": 3 * W})


# ---------------------------------------------------------------------------
# campaigns


def _ws(p) -> WeightSystem:
    return WeightSystem(tuple(p["weights"]), int(p["degree"]))


def run_check(check: str, p: dict) -> CheckReport:
    qmax = p.get("qmax", 3)
    W = p.get("ywindow")
    if check == "lgcy":
        n = int(p["n"])
        return verify_lg_cy(n, qmax, W if W is not None else n + 4, p.get("cy_degree"))
    if check == "weighted_lgcy":
        ws = _ws(p)
        return verify_weighted_lg_cy(ws, qmax, W if W is not None else ws.n + 4)
    if check == "hybrid":
        model = HybridSpec(int(p["n"]), int(p["m"]))
        return verify_hybrid(model, p.get("qmax", 2), W if W is not None else model.n + model.m + 4)
    if check == "origin":
        ws = _ws(p)
        return verify_origin(ws, qmax, W if W is not None else ws.n + 4)
    if check == "jacobi":
        if "input" in p:
            import json

            with open(p["input"], encoding="utf-8") as fh:
                return check_jacobi(GenusReport.from_json(json.load(fh)))
        return check_jacobi(compute(p["descriptor"]))
    if check == "spectrum":
        return check_untwisted_spectrum(_ws(p))
    if check == "hodge":
        rep = cy_fermat_genus(int(p["n"]), 0, int(p["n"]))
        return check_series_equal(f"hodge[n={p['n']}]", rep.series.q_limit(), hodge_oracle(int(p["n"]), int(p["n"])))
    if check == "window":
        return check_window_stability(p["descriptor"], p["w1"], p["w2"], p.get("expect_finite_support", True))
    if check == "numeric":
        samples = [(complex(*s[0]), complex(*s[1])) for s in p["samples"]] if "samples" in p else DEFAULT_SAMPLES
        return check_numeric(compute(p["descriptor"]), samples, p.get("precision", 30))
    if check == "s_law":
        return check_s_law(compute(p["descriptor"]), precision=p.get("precision", 40), tol=p.get("tol", 1e-20))
    raise ValueError(f"unknown check {check!r}")


def run_campaign(entries: Sequence[dict]) -> list[CheckReport]:
    """Run every {check, params} entry; reports come back in input order."""
    reports = []
    for entry in entries:
        check = entry["check"]
        params = entry.get("params", {})
        try:
            reports.append(run_check(check, params))
        except (ValueError, KeyError, ArithmeticError) as exc:
            reports.append(CheckReport(f"{check}", FAIL, f"{type(exc).__name__}: {exc}", {}))
    return reports
