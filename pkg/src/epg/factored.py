"""Exact expansion of products of theta functions.

Every quantity assembled by the genus formulas is a product

    c * zeta^p * q^a * y^b * e^{<g, x>} * x^k * prod theta(w_j)^{m_j} * Dtheta(0)^d

with theta(w) = q^(1/8) (Y^(1/2) - Y^(-1/2)) prod_k (1-q^k)(1-q^k Y)(1-q^k/Y),
Y = exp(2 pi i w).  Such a product is kept symbolically and only turned into
coefficients by ``expand``, which multiplies out all (1 - u) factors on a dense
integer grid.  Each factor is expanded in its small direction (q first, then
|y| < 1) so every sector of a genus sum uses the same expansion region.

The nilpotent variables are the hyperplane classes x_v; an argument
w = ... + <s, x>/(2 pi i) gives Y = ... * e^{<s, x>}.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct
from math import factorial, floor, lcm
from typing import Iterable

import numpy as np

from . import kernel
from .cyclo import CycloNum, euler_phi, reduction_matrix, root_of_unity
from .errors import KernelOverflow, OrderMismatchError, SingularLeadingTermError
from .pseries import PuiseuxSeries

__all__ = ["ThetaArg", "FactoredSeries", "DenseResult", "SeriesAccumulator"]

F0 = Fraction(0)


def _fr(v) -> Fraction:
    return Fraction(v)


@dataclass(frozen=True)
class ThetaArg:
    """w = zcoef*z + ashift + tshift*tau + <nilp, x>/(2 pi i).

    ``ashift`` is stored reduced to [0, 1): a ThetaArg names the theta value at
    that representative (theta changes sign under ashift -> ashift + 1, which
    cancels in every ratio with matching shifts).
    """

    zcoef: Fraction = F0
    ashift: Fraction = F0
    tshift: Fraction = F0
    nilp: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "zcoef", _fr(self.zcoef))
        object.__setattr__(self, "ashift", _fr(self.ashift) % 1)
        object.__setattr__(self, "tshift", _fr(self.tshift))
        nilp = tuple(_fr(s) for s in self.nilp)
        while nilp and nilp[-1] == 0:
            nilp = nilp[:-1]
        object.__setattr__(self, "nilp", nilp)

    def __neg__(self) -> "ThetaArg":
        return ThetaArg(-self.zcoef, -self.ashift, -self.tshift, tuple(-s for s in self.nilp))

    def shifted(self, zcoef=0, ashift=0, tshift=0, nilp=()) -> "ThetaArg":
        n = max(len(nilp), len(self.nilp))
        a = tuple(self.nilp) + (F0,) * (n - len(self.nilp))
        b = tuple(_fr(s) for s in nilp) + (F0,) * (n - len(nilp))
        return ThetaArg(self.zcoef + zcoef, self.ashift + ashift, self.tshift + tshift, tuple(x + y for x, y in zip(a, b)))

    def is_zero(self) -> bool:
        return self.zcoef == 0 and self.ashift == 0 and self.tshift == 0 and not self.nilp

    def nilp_padded(self, nvars: int) -> tuple:
        if len(self.nilp) > nvars:
            raise ValueError(f"argument uses {len(self.nilp)} nilpotent variables, product has {nvars}")
        return self.nilp + (F0,) * (nvars - len(self.nilp))


# ---------------------------------------------------------------------------
# factor keys: (phase mod 1, q-exponent, y-exponent, x-exponent tuple)


def _neg_key(key):
    p, a, b, g = key
    return ((-p) % 1, -a, -b, tuple(-s for s in g))


def _is_large(key) -> bool:
    _, a, b, _ = key
    return a < 0 or (a == 0 and b < 0)


def _is_const(key) -> bool:
    return key[1] == 0 and key[2] == 0


class _Mono:
    __slots__ = ("coef", "phase", "eq", "ey", "ex")

    def __init__(self, coef, phase, eq, ey, ex):
        self.coef, self.phase, self.eq, self.ey, self.ex = coef, phase % 1, eq, ey, tuple(ex)

    def absorb(self, key, e: int):
        p, a, b, g = key
        self.phase = (self.phase + e * p) % 1
        self.eq += e * a
        self.ey += e * b
        self.ex = tuple(x + e * s for x, s in zip(self.ex, g))


class FactoredSeries:
    """A symbolic product of theta functions and elementary factors."""

    __slots__ = ("nvars", "coef", "phase", "eq", "ey", "ex", "xpow", "thetas", "dtheta0")

    def __init__(self, nvars: int = 0):
        self.nvars = nvars
        self.coef = Fraction(1)
        self.phase = F0
        self.eq = F0
        self.ey = F0
        self.ex = (F0,) * nvars
        self.xpow = (0,) * nvars
        self.thetas: Counter = Counter()
        self.dtheta0 = 0

    # -- constructors -----------------------------------------------------------
    @classmethod
    def one(cls, nvars: int = 0) -> "FactoredSeries":
        return cls(nvars)

    @classmethod
    def theta(cls, arg: ThetaArg, nvars: int | None = None) -> "FactoredSeries":
        f = cls(len(arg.nilp) if nvars is None else nvars)
        arg.nilp_padded(f.nvars)
        f.thetas[arg] = 1
        return f

    @classmethod
    def dtheta_zero(cls, nvars: int = 0) -> "FactoredSeries":
        """D theta(0) = q^(1/8) prod (1 - q^k)^3, with D = y d/dy."""
        f = cls(nvars)
        f.dtheta0 = 1
        return f

    @classmethod
    def monomial(cls, coef=1, phase=0, eq=0, ey=0, ex=None, xpow=None, nvars: int = 0) -> "FactoredSeries":
        f = cls(nvars)
        f.coef = Fraction(coef)
        f.phase = Fraction(phase) % 1
        f.eq, f.ey = Fraction(eq), Fraction(ey)
        if ex is not None:
            f.ex = tuple(Fraction(s) for s in ex) + (F0,) * (nvars - len(ex))
        if xpow is not None:
            f.xpow = tuple(xpow) + (0,) * (nvars - len(xpow))
        return f

    def copy(self) -> "FactoredSeries":
        g = FactoredSeries(self.nvars)
        g.coef, g.phase, g.eq, g.ey, g.ex, g.xpow = self.coef, self.phase, self.eq, self.ey, self.ex, self.xpow
        g.thetas = Counter(self.thetas)
        g.dtheta0 = self.dtheta0
        return g

    # -- algebra ----------------------------------------------------------------
    def _combine(self, other: "FactoredSeries", sign: int) -> "FactoredSeries":
        if not isinstance(other, FactoredSeries):
            other = FactoredSeries.monomial(other, nvars=self.nvars) if sign > 0 else FactoredSeries.monomial(
                Fraction(1) / Fraction(other), nvars=self.nvars
            )
            sign = 1
        n = max(self.nvars, other.nvars)
        a, b = self._widen(n), other._widen(n)
        out = a.copy()
        out.coef = a.coef * (b.coef if sign > 0 else 1 / b.coef)
        out.phase = (a.phase + sign * b.phase) % 1
        out.eq = a.eq + sign * b.eq
        out.ey = a.ey + sign * b.ey
        out.ex = tuple(x + sign * y for x, y in zip(a.ex, b.ex))
        out.xpow = tuple(x + sign * y for x, y in zip(a.xpow, b.xpow))
        for arg, m in b.thetas.items():
            out.thetas[arg] += sign * m
            if out.thetas[arg] == 0:
                del out.thetas[arg]
        out.dtheta0 = a.dtheta0 + sign * b.dtheta0
        return out

    def _widen(self, n: int) -> "FactoredSeries":
        if n == self.nvars:
            return self
        g = self.copy()
        g.nvars = n
        g.ex = self.ex + (F0,) * (n - self.nvars)
        g.xpow = self.xpow + (0,) * (n - self.nvars)
        return g

    def __mul__(self, other):
        return self._combine(other, 1)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._combine(other, -1)

    def __pow__(self, e: int) -> "FactoredSeries":
        out = FactoredSeries(self.nvars)
        out.coef = self.coef**e
        out.phase = (self.phase * e) % 1
        out.eq, out.ey = self.eq * e, self.ey * e
        out.ex = tuple(s * e for s in self.ex)
        out.xpow = tuple(k * e for k in self.xpow)
        out.thetas = Counter({a: m * e for a, m in self.thetas.items() if m * e})
        out.dtheta0 = self.dtheta0 * e
        return out

    def scale(self, c) -> "FactoredSeries":
        out = self.copy()
        out.coef *= Fraction(c)
        return out

    # -- materialization ------------------------------------------------------------
    def _theta_keys(self, arg: ThetaArg, kmax: int):
        g = arg.nilp_padded(self.nvars)
        a, r, t = arg.ashift, arg.zcoef, arg.tshift
        keys = [((-a) % 1, -t, -r, tuple(-s for s in g))]
        for k in range(1, kmax + 1):
            keys.append((F0, Fraction(k), F0, (F0,) * self.nvars))
            keys.append((a % 1, k + t, r, g))
            keys.append(((-a) % 1, k - t, -r, tuple(-s for s in g)))
        return keys

    def _plan(self, qmax: Fraction | None, kmin_only: bool = False):
        mono = _Mono(self.coef, self.phase, self.eq, self.ey, self.ex)
        raw: Counter = Counter()
        nq8 = sum(self.thetas.values()) + self.dtheta0
        mono.eq += Fraction(nq8, 8)
        for arg, m in self.thetas.items():
            g = arg.nilp_padded(self.nvars)
            mono.phase = (mono.phase + m * arg.ashift / 2) % 1
            mono.ey += m * arg.zcoef / 2
            mono.eq += m * arg.tshift / 2
            mono.ex = tuple(x + m * s / 2 for x, s in zip(mono.ex, g))

        def kmax_for(t, q_rel):
            base = floor(abs(t)) + 1
            if q_rel is None:
                return base
            return max(base, floor(q_rel + abs(t)) + 1)

        def collect(q_rel):
            c: Counter = Counter()
            for arg, m in self.thetas.items():
                for key in self._theta_keys(arg, kmax_for(arg.tshift, q_rel)):
                    c[key] += m
            if self.dtheta0:
                for k in range(1, kmax_for(F0, q_rel) + 1):
                    c[(F0, Fraction(k), F0, (F0,) * self.nvars)] += 3 * self.dtheta0
            return c

        def normalize(c: Counter, mono: _Mono) -> Counter:
            out: Counter = Counter()
            for key, e in c.items():
                if e == 0:
                    continue
                if _is_large(key):
                    if e % 2:
                        mono.coef = -mono.coef
                    mono.absorb(key, e)
                    key = _neg_key(key)
                out[key] += e
            return Counter({k: e for k, e in out.items() if e})

        probe = _Mono(mono.coef, mono.phase, mono.eq, mono.ey, mono.ex)
        normalize(collect(None), probe)
        if kmin_only or qmax is None:
            return probe, normalize(collect(None), mono)
        q_rel = qmax - probe.eq
        factors = normalize(collect(max(q_rel, F0)), mono)
        factors = Counter({k: e for k, e in factors.items() if k[1] <= q_rel})
        return mono, factors

    def required_denom(self) -> int:
        """Smallest N such that every exponent and phase lies in (1/N)Z."""
        mono, factors = self._plan(None, kmin_only=True)
        dens = [mono.phase.denominator, mono.eq.denominator, mono.ey.denominator]
        for (p, a, b, _), _e in factors.items():
            dens += [p.denominator, a.denominator, b.denominator]
        return lcm(*dens)

    # -- expansion ---------------------------------------------------------------
    def expand(self, denom: int, qmax, ywindow, degrees: Iterable[int] = (), top_only: bool = False) -> "DenseResult":
        """Coefficients of q^a y^b x^k for a <= qmax, |b| <= ywindow.

        ``degrees`` are the nilpotency orders of the x variables (x_v^m_v = 0).
        With ``top_only`` only the coefficient of prod x_v^(m_v - 1) is kept.
        """
        return _expand(self, int(denom), Fraction(qmax), Fraction(ywindow), tuple(degrees), top_only)


# ---------------------------------------------------------------------------
# truncated multivariate x-series with CycloNum coefficients


def _xs_one(N, nv):
    return {(0,) * nv: CycloNum.one(N)}


def _xs_mul(a, b, degs):
    out = {}
    for k1, c1 in a.items():
        for k2, c2 in b.items():
            k = tuple(i + j for i, j in zip(k1, k2))
            if any(e >= m for e, m in zip(k, degs)):
                continue
            v = c1 * c2
            out[k] = out[k] + v if k in out else v
    return {k: v for k, v in out.items() if not v.is_zero()}


def _xs_exp(N, g, degs):
    """e^{<g, x>} truncated."""
    out = {}
    for k in iproduct(*(range(m) for m in degs)):
        c = Fraction(1)
        for gv, kv in zip(g, k):
            c *= gv**kv / factorial(kv)
        if c:
            out[k] = CycloNum.from_rational(c, N)
    return out


def _xs_inv(a, degs, N):
    nv = len(degs)
    z = (0,) * nv
    c0 = a.get(z)
    if c0 is None or c0.is_zero():
        raise SingularLeadingTermError("x-series with vanishing constant term is not invertible")
    c0inv = c0.inv()
    h = {k: -(v * c0inv) for k, v in a.items() if k != z}
    out = _xs_one(N, nv)
    power = _xs_one(N, nv)
    total_deg = sum(m - 1 for m in degs)
    for _ in range(total_deg):
        power = _xs_mul(power, h, degs)
        if not power:
            break
        for k, v in power.items():
            out[k] = out[k] + v if k in out else v
    return {k: v * c0inv for k, v in out.items()}


def _xs_pow(a, e, degs, N):
    if e < 0:
        a, e = _xs_inv(a, degs, N), -e
    out = _xs_one(N, len(degs))
    for _ in range(e):
        out = _xs_mul(out, a, degs)
    return out


def _xs_unit_factor(N, phase, g, degs):
    """1 - zeta^phase e^{<g, x>}."""
    zeta = _phase_num(phase, N)
    ex = _xs_exp(N, g, degs)
    out = {k: -(v * zeta) for k, v in ex.items()}
    z = (0,) * len(degs)
    out[z] = out.get(z, CycloNum.zero(N)) + 1
    return {k: v for k, v in out.items() if not v.is_zero()}


def _xs_x_over_unit(N, v, gamma, degs):
    """x_v / (1 - e^{gamma x_v}) = 1 / ((1 - e^{gamma x_v}) / x_v)."""
    nv = len(degs)
    series = {}
    for k in range(degs[v]):
        key = tuple(k if i == v else 0 for i in range(nv))
        series[key] = CycloNum.from_rational(-(gamma ** (k + 1)) / factorial(k + 1), N)
    return _xs_inv(series, degs, N)


def _phase_num(phase: Fraction, N: int) -> CycloNum:
    phase = Fraction(phase) % 1
    if (phase * N).denominator != 1:
        raise OrderMismatchError(f"phase {phase} needs a root of unity outside Q(zeta_{N})")
    return root_of_unity(phase.numerator, phase.denominator, N)


def _idx(v: Fraction, N: int) -> int:
    s = v * N
    if s.denominator != 1:
        raise OrderMismatchError(f"exponent {v} is not on the lattice (1/{N})Z")
    return s.numerator


# ---------------------------------------------------------------------------
# dense results


@dataclass
class DenseResult:
    """Coefficients on a rectangular lattice window, sharing one denominator.

    ``num[i, j, t, :]`` holds the Q(zeta_N) power-basis numerators of the
    coefficient of q^((q0+i)/N) y^((y0+j)/N) x^ks[t].
    """

    N: int
    q0: int
    y0: int
    ks: tuple
    num: np.ndarray
    den: int
    qmax: Fraction
    ywindow: Fraction

    def to_series(self, k=None) -> PuiseuxSeries:
        t = 0 if k is None else self.ks.index(tuple(k))
        return _array_to_series(self.N, self.q0, self.y0, self.num[:, :, t, :], self.den, self.qmax, self.ywindow)


def _array_to_series(N, q0, y0, arr, den, qmax, ywindow) -> PuiseuxSeries:
    terms = {}
    if arr.size:
        nz = np.nonzero(np.any(arr != 0, axis=-1))
        for i, j in zip(*nz):
            coeffs = [Fraction(int(v), den) for v in arr[i, j]]
            terms[(q0 + int(i), y0 + int(j))] = CycloNum(N, coeffs)
    return PuiseuxSeries._raw(N, terms, Fraction(qmax), Fraction(ywindow))


class SeriesAccumulator:
    """Running weighted sum of DenseResults on the window q <= qmax, |y| <= W."""

    def __init__(self, N: int, qmax, ywindow, ks):
        self.N = N
        self.qmax = Fraction(qmax)
        self.ywindow = Fraction(ywindow)
        self.ks = tuple(tuple(k) for k in ks)
        self.qtop = floor(self.qmax * N)
        self.wi = floor(self.ywindow * N)
        self.q0 = self.qtop + 1
        self.num = np.zeros((0, 2 * self.wi + 1, len(self.ks), euler_phi(N)), dtype=object)
        self.den = 1

    def add(self, res: DenseResult, weight=1):
        if res.N != self.N:
            raise OrderMismatchError("accumulating results with different N")
        weight = Fraction(weight)
        if weight == 0 or res.num.size == 0:
            return
        if res.q0 < self.q0:
            pad = np.zeros((self.q0 - res.q0,) + self.num.shape[1:], dtype=object)
            self.num = np.concatenate([pad, self.num], axis=0)
            self.q0 = res.q0
        rden = res.den * weight.denominator
        new_den = lcm(self.den, rden)
        if new_den != self.den:
            self.num = self.num * (new_den // self.den)
            self.den = new_den
        mult = weight.numerator * (new_den // rden)
        sel = [res.ks.index(k) for k in self.ks]
        src = res.num[:, :, sel, :].astype(object) * mult
        i0 = res.q0 - self.q0
        j0 = res.y0 + self.wi
        nq, ny = src.shape[0], src.shape[1]
        self.num[i0 : i0 + nq, j0 : j0 + ny] += src

    def result(self) -> DenseResult:
        num = self.num
        if self.den != 1 and num.size:
            g = 0
            from math import gcd

            for v in num.flat:
                if v:
                    g = gcd(g, int(v))
                    if g == 1:
                        break
            g = gcd(g, self.den) if g else self.den
            if g > 1:
                num = num // g
                den = self.den // g
            else:
                den = self.den
        else:
            den = self.den
        return DenseResult(self.N, self.q0, -self.wi, self.ks, num, den, self.qmax, self.ywindow)

    def series(self, k=None) -> PuiseuxSeries:
        return self.result().to_series(k)


# ---------------------------------------------------------------------------


def _x_matrix(g_scaled: tuple[int, ...], degs: tuple[int, ...]) -> np.ndarray | None:
    """Integer matrix of e^{<g,x>} in the scaled basis E_k = k! s^k c_k."""
    if not any(g_scaled):
        return None
    mats = []
    for gv, m in zip(g_scaled, degs):
        M = np.zeros((m, m), dtype=object)
        for k in range(m):
            for j in range(k + 1):
                from math import comb

                M[k, j] = comb(k, j) * gv ** (k - j)
        mats.append(M)
    X = mats[0]
    for M in mats[1:]:
        X = np.kron(X, M)
    return X


def _expand(fs: FactoredSeries, N: int, qmax: Fraction, ywindow: Fraction, degs: tuple, top_only: bool) -> DenseResult:
    nv = fs.nvars
    if len(degs) != nv:
        if not degs and nv == 0:
            pass
        else:
            raise ValueError(f"product has {nv} nilpotent variables but {len(degs)} degrees were given")
    degs = tuple(degs)
    all_ks = list(iproduct(*(range(m) for m in degs))) if nv else [()]
    out_ks = [tuple(m - 1 for m in degs)] if top_only else all_ks
    phi = euler_phi(N)
    qtop, wi = floor(qmax * N), floor(ywindow * N)

    def empty():
        return DenseResult(N, 0, 0, tuple(out_ks), np.zeros((0, 0, len(out_ks), phi), dtype=object), 1, qmax, ywindow)

    if fs.coef == 0:
        return empty()
    mono, factors = fs._plan(qmax)

    # multiplier: scalar, e^{ex x}, x powers, and constant (eq = ey = 0) factors
    xpow = list(fs.xpow)
    mult = {(0,) * nv: _phase_num(mono.phase, N) * mono.coef}
    if nv and any(mono.ex):
        mult = _xs_mul(mult, _xs_exp(N, mono.ex, degs), degs)
    kernel_factors = []
    for key, e in sorted(factors.items(), key=lambda kv: (kv[0][1], kv[0][2], kv[0][0], kv[0][3])):
        p, a, b, g = key
        if not _is_const(key):
            kernel_factors.append((key, e))
            continue
        if not any(g):
            if p == 0:
                if e > 0:
                    return empty()
                raise SingularLeadingTermError("division by theta at a lattice point (a zero of theta)")
            c = 1 - _phase_num(p, N)
            mult = {k: v * c**e for k, v in mult.items()}
            continue
        if p != 0 or e > 0:
            mult = _xs_mul(mult, _xs_pow(_xs_unit_factor(N, p, g, degs), e, degs, N), degs)
            continue
        support = [v for v, s in enumerate(g) if s]
        if len(support) != 1 or xpow[support[0]] < -e:
            raise SingularLeadingTermError("nilpotent denominator without a matching power of x")
        v = support[0]
        xpow[v] += e
        mult = _xs_mul(mult, _xs_pow(_xs_x_over_unit(N, v, g[v], degs), -e, degs, N), degs)
    if any(k < 0 for k in xpow):
        raise SingularLeadingTermError("negative power of a nilpotent class")
    if any(k >= m for k, m in zip(xpow, degs)):
        return empty()
    if any(xpow):
        mult = {tuple(i + j for i, j in zip(k, xpow)): v for k, v in mult.items()}
        mult = {k: v for k, v in mult.items() if all(e < m for e, m in zip(k, degs))}
    if not mult:
        return empty()

    eq0, ey0 = _idx(mono.eq, N), _idx(mono.ey, N)
    Q = qtop - eq0
    if Q < 0:
        return empty()

    # integer kernel factors
    scale = [1] * nv
    for (p, a, b, g), e in kernel_factors:
        for v, s in enumerate(g):
            scale[v] = lcm(scale[v], s.denominator)
    kf = []
    for (p, a, b, g), e in kernel_factors:
        dq, dy, kp = _idx(a, N), _idx(b, N), _idx(p, N) % N
        gs = tuple(int(s * sc) for s, sc in zip(g, scale))
        kf.append((dq, dy, kp, gs, e))

    # grid bounds
    down_simple = down_slope_const = 0
    up_simple = up_slope_const = 0
    slope_down = slope_up = Fraction(0)
    for dq, dy, kp, gs, e in kf:
        if e < 0 and dq == 0:
            continue
        jmax = (Q // dq if dq else abs(e)) if e < 0 else (min(e, Q // dq) if dq else e)
        if dy < 0:
            down_simple += -dy * jmax
        else:
            up_simple += dy * jmax
        if dq == 0:
            up_slope_const += dy * jmax
        elif dy < 0:
            slope_down = max(slope_down, Fraction(-dy, dq))
        else:
            slope_up = max(slope_up, Fraction(dy, dq))
    down = min(down_simple, floor(slope_down * Q))
    up = min(up_simple, up_slope_const + floor(slope_up * Q))
    ylo = -down
    out_lo, out_hi = -wi - ey0, wi - ey0
    yhi = max(out_hi, min(up, out_hi + down))
    if out_hi < ylo:
        return empty()
    nq, ny = Q + 1, yhi - ylo + 1
    nx = len(all_ks)

    X_cache = {}

    def xmat(gs):
        if gs not in X_cache:
            X_cache[gs] = _x_matrix(gs, degs) if nv else None
        return X_cache[gs]

    order = (
        [f for f in kf if f[4] > 0]
        + [f for f in kf if f[4] < 0 and f[0] > 0]
        + [f for f in kf if f[4] < 0 and f[0] == 0]
    )

    def run(dtype):
        A = np.zeros((nq, ny, nx, N), dtype=dtype)
        A[0, -ylo, 0, 0] = 1
        for dq, dy, kp, gs, e in order:
            X = xmat(gs)
            if X is not None and dtype != object:
                if max(abs(int(v)) for v in X.flat) >= (1 << 62):
                    raise KernelOverflow("transform too large")
                X = X.astype(np.int64)
            for _ in range(abs(e)):
                if e > 0:
                    kernel.mul_factor(A, dq, dy, kp, X)
                else:
                    kernel.div_factor(A, dq, dy, kp, X)
        return A

    try:
        A = run(np.int64)
    except KernelOverflow:
        A = run(object)

    # crop to the output window and reduce the zeta axis modulo Phi_N
    j_lo = max(0, out_lo - ylo)
    j_hi = min(ny - 1, out_hi - ylo)
    A = A[:, j_lo : j_hi + 1]
    y_first = ylo + j_lo + ey0
    R = reduction_matrix(N)
    amax = int(np.abs(A).max()) if A.size else 0
    if A.dtype != object and amax * N * int(np.abs(R).max()) < (1 << 62):
        Ared = np.matmul(A, R).astype(object)
    else:
        Ared = np.matmul(A.astype(object), R.astype(object))

    kfact = {}
    for k in all_ks:
        f = 1
        for kv, sv in zip(k, scale):
            f *= factorial(kv) * sv**kv
        kfact[k] = f
    mats = {}
    for j, c in mult.items():
        M = c.matrix()
        d = lcm(*(x.denominator for row in M for x in row))
        mats[j] = (np.array([[int(x * d) for x in row] for row in M], dtype=object), d)

    nums, dens = [], []
    for k in out_ks:
        pieces = []
        for t, jk in enumerate(all_ks):
            rest = tuple(a - b for a, b in zip(k, jk))
            if any(r < 0 for r in rest) or rest not in mats:
                continue
            Mint, d = mats[rest]
            pieces.append((np.matmul(Ared[:, :, t, :], Mint.T), d * kfact[jk]))
        if not pieces:
            nums.append(np.zeros(Ared.shape[:2] + (phi,), dtype=object))
            dens.append(1)
            continue
        L = lcm(*(d for _, d in pieces))
        total = sum(arr * (L // d) for arr, d in pieces)
        nums.append(total)
        dens.append(L)
    L = lcm(*dens)
    num = np.stack([n * (L // d) for n, d in zip(nums, dens)], axis=2)
    return DenseResult(N, eq0, y_first, tuple(out_ks), num, L, qmax, ywindow)
