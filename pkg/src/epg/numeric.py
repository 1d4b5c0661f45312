"""Direct numerical evaluation of the genus formulas.

Independent of the series engine: theta values come from mpmath's Jacobi
theta_1 and cohomological pushforwards are Cauchy integrals on a small circle
|x| = r (trapezoid rule, exponentially accurate for analytic integrands).
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product

import mpmath

from .cohring import fixed_loci, tangent_chern_roots
from .theta import dtheta0_numeric, theta_numeric

__all__ = ["evaluate_formula", "contour_coefficient", "origin_numeric"]

NODES = 64


class _Ctx:
    """Per-evaluation constants: z, tau, precision and cached U(0)."""

    def __init__(self, z, tau, precision):
        self.z = mpmath.mpc(z)
        self.tau = mpmath.mpc(tau)
        if self.tau.imag <= 0:
            raise ValueError("Im(tau) must be positive")
        self.prec = precision
        self.two_pi_i = 2j * mpmath.pi
        self._u0 = None

    def th(self, w):
        return theta_numeric(w, self.tau, self.prec)

    def U(self, x):
        if x == 0:
            return self.U0
        w = x / self.two_pi_i
        return x * self.th(w - self.z) / self.th(w)

    @property
    def U0(self):
        if self._u0 is None:
            self._u0 = self.th(-self.z) / dtheta0_numeric(self.tau, self.prec)
        return self._u0

    def phi(self, x, lam_g, lam_h, qq):
        w = x / self.two_pi_i + _mp(lam_g) - _mp(lam_h) * self.tau
        qq = _mp(qq)
        return (
            self.th(w + (qq - 1) * self.z)
            / self.th(w + qq * self.z)
            * mpmath.exp(self.two_pi_i * _mp(lam_h) * self.z)
        )

    def zero_distance(self, shifts, scale=1):
        """min |x| over x = 2 pi i (k + l tau - s)/scale, s in shifts, excluding x = 0."""
        best = mpmath.inf
        for s in shifts:
            for k in range(-3, 4):
                for l in range(-3, 4):
                    x = self.two_pi_i * (k + l * self.tau - s) / scale
                    if abs(x) > _mp(10) ** (-self.prec // 2):
                        best = min(best, abs(x))
        return best


def _mp(v):
    if isinstance(v, Fraction):
        return mpmath.mpf(v.numerator) / v.denominator
    return mpmath.mpf(v)


def contour_coefficient(f, k: int, r, nodes: int = NODES):
    """Coefficient of x^k of f analytic on |x| <= r (up to (r/R)^nodes)."""
    total = mpmath.mpc(0)
    for j in range(nodes):
        x = r * mpmath.expjpi(_mp(2 * j) / nodes)
        total += f(x) / x**k
    return total / nodes


def _frac(v) -> Fraction:
    return Fraction(v)


def _lg(ctx: _Ctx, weights, degree, group=None, convention="phi"):
    qs = [Fraction(w, degree) for w in weights]
    if group is None:
        gens = [qs]
    else:
        gens = [[_frac(t) for t in g] for g in group]
    elems = {tuple(Fraction(0) for _ in qs)}
    frontier = list(elems)
    while frontier:
        nxt = []
        for e in frontier:
            for g in gens:
                h = tuple((a + b) % 1 for a, b in zip(e, g))
                if h not in elems:
                    elems.add(h)
                    nxt.append(h)
        frontier = nxt
    total = mpmath.mpc(0)
    for g in elems:
        for h in elems:
            t = mpmath.mpc(1)
            for qi, tg, th in zip(qs, g, h):
                if convention == "phi":
                    t *= ctx.phi(0, tg, th, qi)
                else:
                    q, a, b = _mp(qi), _mp(tg), _mp(th)
                    t *= (
                        mpmath.exp(-ctx.two_pi_i * b)
                        * ctx.th((1 - q) * ctx.z + a - b * ctx.tau)
                        / ctx.th(q * ctx.z + a + b * ctx.tau)
                    )
            total += t
    return total / len(elems)


def origin_numeric(weights, degree, u, z, tau, precision: int = 30):
    """(1/D) sum_{a,b<D} prod_i theta(u q_i + q_i(a - b tau) - z)/theta(u q_i + q_i(a - b tau)) e^{2 pi i q_i b z}.

    ``u`` is an arbitrary complex number (the equivariant parameter).
    """
    with mpmath.workdps(precision + 10):
        ctx = _Ctx(z, tau, precision)
        u = mpmath.mpc(u)
        total = mpmath.mpc(0)
        for a in range(degree):
            for b in range(degree):
                t = mpmath.mpc(1)
                for w in weights:
                    q = _mp(w) / degree
                    s = u * q + q * (a - b * ctx.tau)
                    t *= ctx.th(s - ctx.z) / ctx.th(s) * mpmath.exp(ctx.two_pi_i * q * b * ctx.z)
                total += t
        return +(total / degree)


def _cy_fermat(ctx: _Ctx, n):
    tp = ctx.two_pi_i
    R = min(ctx.zero_distance([ctx.z], n), ctx.zero_distance([0]))
    r = R / 4

    def f(x):
        return ctx.U(x) ** n / ctx.U0 * ctx.th(n * x / tp) / ctx.th(n * x / tp - ctx.z)

    return contour_coefficient(f, n - 1, r)


def _weighted(ctx: _Ctx, weights, degree, branch_correction=True):
    n = len(weights)
    tp = ctx.two_pi_i
    elems = list(product(*(range(w) for w in weights)))
    total = mpmath.mpc(0)
    for gi in elems:
        for hi in elems:
            g = [Fraction(k, w) for k, w in zip(gi, weights)]
            h = [Fraction(k, w) for k, w in zip(hi, weights)]
            for locus in fixed_loci(n, g, h):
                roots = tangent_chern_roots(locus, n, g, h)
                tg, th = locus.charpair
                ng, nh = (degree * tg) % 1, (degree * th) % 1
                eps = []
                for i, w in enumerate(weights):
                    if w == 1:
                        continue
                    if i in locus.coords:
                        eps.append((w, Fraction(0), Fraction(0)))
                    else:
                        eps.append((w, (g[i] - tg) % 1, (h[i] - th) % 1))
                shifts = [_mp(rt.charpair[0]) - _mp(rt.charpair[1]) * ctx.tau for rt in roots]
                R = ctx.zero_distance(shifts + [0])
                R = min(R, ctx.zero_distance([ctx.z - _mp(ng) + _mp(nh) * ctx.tau], degree))
                for w, eg, eh in eps:
                    R = min(R, ctx.zero_distance([ctx.z - _mp(eg) + _mp(eh) * ctx.tau]))
                r = R / 4

                def f(x, roots=roots, ng=ng, nh=nh, eps=eps):
                    val = mpmath.mpc(1)
                    for rt in roots:
                        if rt.removed:
                            val /= ctx.U0
                        elif rt.trivial:
                            val *= ctx.U(x)
                        else:
                            val *= ctx.phi(x, rt.charpair[0], rt.charpair[1], 0)
                    val *= ctx.phi(-degree * x, ng, nh, 1)
                    if branch_correction:
                        for w, eg, eh in eps:
                            s = x / tp + _mp(eg) - _mp(eh) * ctx.tau
                            val *= (
                                ctx.th(s - w * ctx.z)
                                / ctx.th(s - ctx.z)
                                * ctx.th(-ctx.z)
                                / ctx.th(-w * ctx.z)
                                * mpmath.exp(tp * (w - 1) * _mp(eh) * ctx.z)
                            )
                    return val

                total += contour_coefficient(f, len(locus.coords) - 1, r)
    return total / len(elems)


def _hybrid(ctx: _Ctx, n, m, phase):
    tp = ctx.two_pi_i
    if phase in ("h1", "h2"):
        if phase == "h2":
            n, m = m, n
        total = mpmath.mpc(0)
        for a in range(n):
            for b in range(n):
                s = (a - b * ctx.tau) / n
                R = min(ctx.zero_distance([0]), ctx.zero_distance([ctx.z / n + s], Fraction(-m, n)))
                r = R / 4

                def f(x, s=s, b=b):
                    w = -_mp(m) / n * x / tp
                    fib = (
                        ctx.th(w + (_mp(1) / n - 1) * ctx.z + s)
                        / ctx.th(w + ctx.z / n + s)
                        * mpmath.exp(tp * b * ctx.z / n)
                    )
                    return fib**n * ctx.U(x) ** m / ctx.U0

                total += contour_coefficient(f, m - 1, r)
        return total / n
    if phase == "h3":
        R = min(ctx.zero_distance([0]), ctx.zero_distance([ctx.z]))
        r = R / (4 * (n + m))

        def inner(x1):
            def f(x2):
                w = (n * x1 + m * x2) / tp
                return ctx.U(x1) ** n * ctx.U(x2) ** m / ctx.U0**2 * ctx.th(w) / ctx.th(w - ctx.z)

            return contour_coefficient(f, m - 1, r, nodes=32)

        return contour_coefficient(inner, n - 1, r, nodes=32)
    raise ValueError(f"unknown hybrid phase {phase!r}")


def evaluate_formula(formula: str, params: dict, z, tau, precision: int = 30):
    """Value at (z, tau) of the expression a GenusReport was computed from."""
    with mpmath.workdps(precision + 10):
        ctx = _Ctx(z, tau, precision)
        if formula == "lg":
            val = _lg(ctx, params["weights"], params["degree"], params.get("group"), params.get("convention", "phi"))
        elif formula == "origin":
            c = _mp(Fraction(params.get("c", 1)))
            return origin_numeric(params["weights"], params["degree"], c * ctx.z, z, tau, precision)
        elif formula == "cy_fermat":
            val = _cy_fermat(ctx, int(params["n"]))
        elif formula == "weighted_cy":
            val = _weighted(ctx, params["weights"], params["degree"], params.get("branch_correction", True))
        elif formula == "hybrid":
            val = _hybrid(ctx, int(params["n"]), int(params["m"]), params["phase"])
        else:
            raise ValueError(f"no numeric evaluator for formula {formula!r}")
        return +val
