"""Theta functions, theta ratios and the elementary orbifold factors.

theta(w, tau) = q^(1/8) (y^(1/2) - y^(-1/2)) prod_{k>=1} (1-q^k)(1-q^k y)(1-q^k/y),
q = e^{2 pi i tau}, y = e^{2 pi i w}.  It is odd, theta(w+1) = -theta(w) and
theta(w+tau) = -q^(-1/2) y^(-1) theta(w).  D = y d/dy.

Functions named ``*_factor`` return symbolic FactoredSeries; ``theta`` and
``theta_ratio`` expand to exact series.
"""
from __future__ import annotations

from fractions import Fraction

import mpmath

from .cohring import CohomRing, CohomSeries
from .factored import DenseResult, FactoredSeries, ThetaArg
from .pseries import PuiseuxSeries

__all__ = [
    "ThetaArg",
    "theta",
    "theta_ratio",
    "theta_factor",
    "unit_ratio_factor",
    "unit_zero_factor",
    "phi_factor",
    "psi_factor",
    "psi",
    "theta_numeric",
    "dtheta0_numeric",
    "to_series",
]


def _nvars(ring: CohomRing | None) -> int:
    return 0 if ring is None else ring.nvars


def to_series(res: DenseResult, ring: CohomRing | None = None):
    """PuiseuxSeries (no ring) or CohomSeries (with ring) from a DenseResult."""
    if ring is None:
        return res.to_series()
    return CohomSeries(ring, {k: res.to_series(k) for k in res.ks})


def _expand(fs: FactoredSeries, denom, qmax, ywindow, ring):
    if denom is None:
        denom = fs.required_denom()
    degs = ring.degrees if ring is not None else ()
    return to_series(fs._widen(_nvars(ring)).expand(denom, qmax, ywindow, degs), ring)


def theta_factor(arg: ThetaArg, nvars: int = 0) -> FactoredSeries:
    return FactoredSeries.theta(arg, max(nvars, len(arg.nilp)))


def theta(arg: ThetaArg, qmax, ywindow, denom: int | None = None, ring: CohomRing | None = None):
    """Exact expansion of theta(arg) through q^qmax, |y-exponent| <= ywindow."""
    return _expand(theta_factor(arg, _nvars(ring)), denom, qmax, ywindow, ring)


def theta_ratio(num, den, qmax, ywindow, denom: int | None = None, ring: CohomRing | None = None):
    """prod theta(num_i) / prod theta(den_j); raises SingularLeadingTermError on theta(0)."""
    if isinstance(num, ThetaArg):
        num = [num]
    if isinstance(den, ThetaArg):
        den = [den]
    fs = FactoredSeries.one(_nvars(ring))
    for a in num:
        fs = fs * theta_factor(a, _nvars(ring))
    for a in den:
        fs = fs / theta_factor(a, _nvars(ring))
    return _expand(fs, denom, qmax, ywindow, ring)


def _unit_x(v: int, nvars: int, coef=1) -> tuple:
    return tuple(Fraction(coef) if i == v else Fraction(0) for i in range(nvars))


def unit_ratio_factor(v: int = 0, nvars: int = 1) -> FactoredSeries:
    """U(x_v) = x_v theta(x_v/(2 pi i) - z) / theta(x_v/(2 pi i))."""
    x = _unit_x(v, nvars)
    xp = tuple(1 if i == v else 0 for i in range(nvars))
    return (
        FactoredSeries.monomial(xpow=xp, nvars=nvars)
        * theta_factor(ThetaArg(-1, 0, 0, x), nvars)
        / theta_factor(ThetaArg(0, 0, 0, x), nvars)
    )


def unit_zero_factor(nvars: int = 0) -> FactoredSeries:
    """U(0) = theta(-z) / D theta(0)."""
    return theta_factor(ThetaArg(-1), nvars) / FactoredSeries.dtheta_zero(nvars)


def phi_factor(xcoef, lam_g, lam_h, qq, nvars: int = 0, v: int = 0) -> FactoredSeries:
    """theta(x' + (qq-1)z + lam_g - lam_h tau) / theta(x' + qq z + lam_g - lam_h tau) * y^lam_h.

    Here x' = xcoef * x_v / (2 pi i).  The factor only depends on lam_g and
    lam_h modulo 1.
    """
    lam_g, lam_h, qq = Fraction(lam_g) % 1, Fraction(lam_h) % 1, Fraction(qq)
    x = _unit_x(v, nvars, xcoef) if nvars else ()
    num = ThetaArg(qq - 1, lam_g, -lam_h, x)
    den = ThetaArg(qq, lam_g, -lam_h, x)
    return theta_factor(num, nvars) / theta_factor(den, nvars) * FactoredSeries.monomial(ey=lam_h, nvars=nvars)


def psi_factor(a: int, b: int, qq, xscale=0, nvars: int = 0, v: int = 0) -> FactoredSeries:
    """theta(x' + (qq-1)z + qq a - qq b tau) / theta(x' + qq z + qq a - qq b tau) * y^(qq b).

    Unlike phi_factor the tau-shift and the y-power use qq*b itself rather
    than its fractional part, which exercises a different expansion path.
    """
    qq = Fraction(qq)
    x = _unit_x(v, nvars, xscale) if nvars else ()
    num = ThetaArg(qq - 1, qq * a, -qq * b, x)
    den = ThetaArg(qq, qq * a, -qq * b, x)
    return theta_factor(num, nvars) / theta_factor(den, nvars) * FactoredSeries.monomial(ey=qq * b, nvars=nvars)


def psi(a: int, b: int, qq, qmax, ywindow, denom: int | None = None):
    """Expansion of the single-coordinate factor psi_factor(a, b, qq) (no x)."""
    return _expand(psi_factor(a, b, qq), denom, qmax, ywindow, None)


def theta_numeric(z, tau, precision: int = 30):
    """theta(z, tau) evaluated with mpmath's Jacobi theta_1."""
    with mpmath.workdps(precision + 10):
        z, tau = mpmath.mpc(z), mpmath.mpc(tau)
        nome = mpmath.exp(1j * mpmath.pi * tau)
        return 1j * mpmath.jtheta(1, mpmath.pi * z, nome)


def dtheta0_numeric(tau, precision: int = 30):
    """D theta(0) = q^(1/8) prod (1 - q^k)^3."""
    with mpmath.workdps(precision + 10):
        nome = mpmath.exp(1j * mpmath.pi * mpmath.mpc(tau))
        return mpmath.jtheta(1, 0, nome, 1) / 2
