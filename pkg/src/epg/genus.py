"""Elliptic genera of Landau-Ginzburg orbifolds, Calabi-Yau hypersurfaces and
hybrid phases, as exact q-expansions.

Every genus is a weighted sum of sector products (FactoredSeries), each
expanded exactly on the window q <= qmax, |y| <= ywindow and accumulated with
rational weights.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import lcm
from typing import Sequence

from .cohring import fixed_loci, tangent_chern_roots
from .errors import NonCalabiYauError, SingularLeadingTermError
from .factored import FactoredSeries, SeriesAccumulator, ThetaArg
from .pseries import PuiseuxSeries
from .theta import phi_factor, psi_factor, theta_factor, unit_ratio_factor, unit_zero_factor

__all__ = [
    "WeightSystem",
    "GroupSpec",
    "HybridSpec",
    "GenusReport",
    "Sector",
    "lg_sectors",
    "lg_genus",
    "origin_contrib_equivariant",
    "cy_fermat_genus",
    "weighted_cy_genus",
    "weighted_sectors",
    "hybrid_sectors",
    "hybrid_genus",
    "evaluate_sectors",
]


@dataclass(frozen=True)
class WeightSystem:
    """W = sum x_i^(D/w_i) type quasi-homogeneous data: weights w_i and degree D."""

    weights: tuple[int, ...]
    degree: int

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if not self.weights or any(w <= 0 for w in self.weights) or self.degree <= 0:
            raise ValueError("weights and degree must be positive")

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def charges(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(w, self.degree) for w in self.weights)

    @property
    def is_cy(self) -> bool:
        return sum(self.weights) == self.degree

    @property
    def central_charge(self) -> Fraction:
        """c/3 = sum (1 - 2 q_i)."""
        return sum((1 - 2 * q for q in self.charges), Fraction(0))


@dataclass(frozen=True)
class GroupSpec:
    """A finite diagonal group, given by generator character vectors mod 1.

    The element with characters (t_1..t_n) acts on x_i by exp(2 pi i t_i).
    """

    generators: tuple[tuple[Fraction, ...], ...]
    n: int

    def __post_init__(self):
        gens = tuple(tuple(Fraction(t) % 1 for t in g) for g in self.generators)
        if any(len(g) != self.n for g in gens):
            raise ValueError("generator length must equal the number of coordinates")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def grading(cls, ws: WeightSystem) -> "GroupSpec":
        """The cyclic group generated by J = (exp(2 pi i q_i))."""
        return cls((ws.charges,), ws.n)

    @classmethod
    def coordinate_roots(cls, weights: Sequence[int]) -> "GroupSpec":
        """prod_i mu_{w_i} acting coordinatewise."""
        n = len(weights)
        gens = tuple(tuple(Fraction(1, w) if i == j else Fraction(0) for j in range(n)) for i, w in enumerate(weights))
        return cls(gens, n)

    @classmethod
    def trivial(cls, n: int) -> "GroupSpec":
        return cls((), n)

    def elements(self) -> list[tuple[Fraction, ...]]:
        seen = {(Fraction(0),) * self.n}
        frontier = list(seen)
        while frontier:
            nxt = []
            for e in frontier:
                for g in self.generators:
                    h = tuple((a + b) % 1 for a, b in zip(e, g))
                    if h not in seen:
                        seen.add(h)
                        nxt.append(h)
            frontier = nxt
        return sorted(seen)

    @property
    def order(self) -> int:
        return len(self.elements())

    def exponent(self) -> int:
        return lcm(1, *(t.denominator for g in self.generators for t in g))

    def to_json(self) -> list:
        return [[str(t) for t in g] for g in self.generators]


@dataclass(frozen=True)
class HybridSpec:
    """The two-parameter model with fibre degree n and base P^(m-1)."""

    n: int
    m: int

    def __post_init__(self):
        if self.n < 2 or self.m < 2:
            raise ValueError("hybrid blocks need n, m >= 2")


@dataclass
class GenusReport:
    series: PuiseuxSeries
    formula: str
    params: dict
    dimension: Fraction
    index: Fraction
    cy_flag: bool
    sectors: int = 0

    @property
    def denom(self) -> int:
        return self.series.denom

    def to_json(self) -> dict:
        data = self.series.to_json()
        data.update(
            {
                "formula": self.formula,
                "params": self.params,
                "dimension": str(self.dimension),
                "index": str(self.index),
                "cy_flag": self.cy_flag,
                "sectors": self.sectors,
            }
        )
        return data

    @classmethod
    def from_json(cls, data: dict) -> "GenusReport":
        return cls(
            PuiseuxSeries.from_json(data),
            data.get("formula", "external"),
            dict(data.get("params", {})),
            Fraction(data.get("dimension", "0")),
            Fraction(data.get("index", "0")),
            bool(data.get("cy_flag", True)),
            int(data.get("sectors", 0)),
        )


@dataclass
class Sector:
    """One summand: weight * (pushforward of) a theta product."""

    label: str
    weight: Fraction
    product: FactoredSeries
    degrees: tuple[int, ...] = ()
    meta: dict = field(default_factory=dict)


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("EPG_THREADS", "1")))
    except ValueError:
        return 1


def _auto_denom(sectors: Sequence[Sector], extra: int = 2) -> int:
    n = extra
    for s in sectors:
        n = lcm(n, s.product.required_denom())
    return n


def evaluate_sectors(sectors: Sequence[Sector], qmax, ywindow, denom: int | None = None) -> PuiseuxSeries:
    """Sum of weight * top-degree coefficient over the given sectors.

    Sectors are expanded in parallel when EPG_THREADS > 1 and always summed in
    list order, so the result does not depend on the thread count.
    """
    qmax, ywindow = Fraction(qmax), Fraction(ywindow)
    N = denom if denom is not None else _auto_denom(sectors)
    acc = SeriesAccumulator(N, qmax, ywindow, [()])

    def run(s: Sector):
        try:
            res = s.product.expand(N, qmax, ywindow, s.degrees, top_only=True)
        except SingularLeadingTermError as exc:
            raise SingularLeadingTermError(f"sector {s.label}: {exc}", sector=s.label) from exc
        res.ks = ((),)  # the single top-degree coefficient, keyed like a scalar
        return res

    workers = _threads()
    if workers > 1 and len(sectors) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, sectors))
    else:
        results = [run(s) for s in sectors]
    for s, res in zip(sectors, results):
        acc.add(res, s.weight)
    return acc.series()


# ---------------------------------------------------------------------------
# Landau-Ginzburg orbifolds


def _group_for(ws: WeightSystem, group: GroupSpec | None) -> GroupSpec:
    return GroupSpec.grading(ws) if group is None else group


def lg_sectors(ws: WeightSystem, group: GroupSpec | None = None, convention: str = "phi") -> list[Sector]:
    """Sectors (g, h) of the LG orbifold genus.

    ``convention="phi"``: prod_i theta((q_i-1)z + theta_i(g) - theta_i(h) tau) /
    theta(q_i z + theta_i(g) - theta_i(h) tau) * y^theta_i(h).

    ``convention="display"``: prod_i exp(-2 pi i theta_i(h)) theta((1-q_i)z +
    theta_i(g) - theta_i(h) tau) / theta(q_i z + theta_i(g) + theta_i(h) tau).
    This alternative phase bookkeeping is kept for comparison only; it does
    not agree with the geometric side (see the tests).
    """
    grp = _group_for(ws, group)
    elems = grp.elements()
    w = Fraction(1, len(elems))
    out = []
    for g in elems:
        for h in elems:
            fs = FactoredSeries.one()
            for qi, tg, th in zip(ws.charges, g, h):
                if convention == "phi":
                    fs = fs * phi_factor(0, tg, th, qi)
                elif convention == "display":
                    fs = fs * theta_factor(ThetaArg(1 - qi, tg, -th)) / theta_factor(ThetaArg(qi, tg, th))
                    fs = fs * FactoredSeries.monomial(phase=-th)
                else:
                    raise ValueError(f"unknown convention {convention!r}")
            out.append(Sector(f"g={_fmt(g)},h={_fmt(h)}", w, fs, (), {"g": g, "h": h}))
    return out


def _fmt(v) -> str:
    return "(" + ",".join(str(t) for t in v) + ")"


def lg_genus(
    ws: WeightSystem,
    qmax,
    ywindow,
    group: GroupSpec | None = None,
    denom: int | None = None,
    convention: str = "phi",
) -> GenusReport:
    """Orbifold elliptic genus of (C^n, W)/H; H defaults to the grading group."""
    sectors = lg_sectors(ws, group, convention)
    series = evaluate_sectors(sectors, qmax, ywindow, denom)
    c = ws.central_charge
    params = {"weights": list(ws.weights), "degree": ws.degree}
    if group is not None:
        params["group"] = group.to_json()
    if convention != "phi":
        params["convention"] = convention
    return GenusReport(series, "lg", params, c, c / 2, ws.is_cy, len(sectors))


def origin_contrib_equivariant(ws: WeightSystem, c, qmax, ywindow, denom: int | None = None) -> GenusReport:
    """Contribution of the origin of C^n/mu_D with the equivariant parameter u = c*z.

    (1/D) sum_{a,b<D} prod_i theta(c q_i z + q_i(a - b tau) - z) / theta(c q_i z + q_i(a - b tau)) y^(q_i b).
    """
    c = Fraction(c)
    D = ws.degree
    sectors = []
    for a in range(D):
        for b in range(D):
            fs = FactoredSeries.one()
            for qi in ws.charges:
                if c == 1:
                    fs = fs * psi_factor(a, b, qi)
                    continue
                num = ThetaArg(c * qi - 1, qi * a, -qi * b)
                den = ThetaArg(c * qi, qi * a, -qi * b)
                fs = fs * theta_factor(num) / theta_factor(den) * FactoredSeries.monomial(ey=qi * b)
            sectors.append(Sector(f"a={a},b={b}", Fraction(1, D), fs))
    series = evaluate_sectors(sectors, qmax, ywindow, denom)
    cc = ws.central_charge
    return GenusReport(
        series, "origin", {"weights": list(ws.weights), "degree": D, "c": str(c)}, cc, cc / 2, ws.is_cy, len(sectors)
    )


# ---------------------------------------------------------------------------
# Calabi-Yau hypersurfaces


def cy_fermat_product(n: int) -> FactoredSeries:
    """U(x)^n / U(0) * theta(n x) / theta(n x - z) on P^(n-1)."""
    fs = unit_ratio_factor(0, 1) ** n / unit_zero_factor(1)
    fs = fs * theta_factor(ThetaArg(0, 0, 0, (n,)), 1) / theta_factor(ThetaArg(-1, 0, 0, (n,)), 1)
    return fs


def cy_fermat_genus(n: int, qmax, ywindow, denom: int | None = None) -> GenusReport:
    """Elliptic genus of the degree-n Fermat hypersurface in P^(n-1)."""
    if n < 1:
        raise ValueError("n must be positive")
    sectors = [Sector("P^%d" % (n - 1), Fraction(1), cy_fermat_product(n), (n,))]
    series = evaluate_sectors(sectors, qmax, ywindow, denom)
    d = Fraction(n - 2)
    return GenusReport(series, "cy_fermat", {"n": n}, d, d / 2, True, 1)


def _branch_factor(w: int, eg: Fraction, eh: Fraction, xcoef: int) -> FactoredSeries:
    """Correction for a coordinate of weight w: the pair (branch divisor, ramified cover)."""
    x = (Fraction(xcoef),)
    num = theta_factor(ThetaArg(-w, eg, -eh, x), 1)
    den = theta_factor(ThetaArg(-1, eg, -eh, x), 1)
    fix = theta_factor(ThetaArg(-1), 1) / theta_factor(ThetaArg(-w), 1)
    return num / den * fix * FactoredSeries.monomial(ey=(w - 1) * eh, nvars=1)


def weighted_sectors(ws: WeightSystem, branch_correction: bool = True) -> list[Sector]:
    """Fixed-locus sectors of the hypersurface in P^(n-1) / prod mu_{w_i}.

    The hypersurface {sum x_i^D = 0} in P(w) is presented as the quotient of
    the degree-D Fermat-type hypersurface in P^(n-1) (coordinates
    x_i = X_i^(1/w_i)); with ``branch_correction`` each coordinate of weight
    w > 1 contributes the factor that accounts for the ramification divisor.
    """
    if not ws.is_cy:
        raise NonCalabiYauError(f"weights {ws.weights} do not sum to the degree {ws.degree}")
    n, D = ws.n, ws.degree
    grp = GroupSpec.coordinate_roots(ws.weights)
    elems = grp.elements()
    w0 = Fraction(1, len(elems))
    out = []
    for g in elems:
        for h in elems:
            for locus in fixed_loci(n, g, h):
                fs = FactoredSeries.one(1)
                for root in tangent_chern_roots(locus, n, g, h):
                    if root.removed:
                        fs = fs / unit_zero_factor(1)
                    elif root.trivial:
                        fs = fs * unit_ratio_factor(0, 1)
                    else:
                        fs = fs * phi_factor(1, root.charpair[0], root.charpair[1], 0, nvars=1)
                tg, th = locus.charpair
                fs = fs * phi_factor(-D, D * tg, D * th, 1, nvars=1)
                if branch_correction:
                    for i, w in enumerate(ws.weights):
                        if w == 1:
                            continue
                        if i in locus.coords:
                            eg = eh = Fraction(0)
                        else:
                            eg, eh = (g[i] - tg) % 1, (h[i] - th) % 1
                        fs = fs * _branch_factor(w, eg, eh, 1)
                label = f"g={_fmt(g)},h={_fmt(h)},J={locus.coords}"
                out.append(Sector(label, w0, fs, (len(locus.coords),)))
    return out


def weighted_cy_genus(
    ws: WeightSystem, qmax, ywindow, denom: int | None = None, branch_correction: bool = True
) -> GenusReport:
    """Elliptic genus of the CY hypersurface of degree D in weighted projective space."""
    sectors = weighted_sectors(ws, branch_correction)
    series = evaluate_sectors(sectors, qmax, ywindow, denom)
    d = Fraction(ws.n - 2)
    params = {"weights": list(ws.weights), "degree": ws.degree}
    if not branch_correction:
        params["branch_correction"] = False
    return GenusReport(series, "weighted_cy", params, d, d / 2, True, len(sectors))


# ---------------------------------------------------------------------------
# hybrid phases


def _fibre_sectors(n: int, m: int, label: str) -> list[Sector]:
    """mu_n-orbifold of C^n fibred over P^(m-1); fibre coordinates carry root -(m/n) x."""
    out = []
    for a in range(n):
        for b in range(n):
            fib = phi_factor(Fraction(-m, n), Fraction(a, n), Fraction(b, n), Fraction(1, n), nvars=1) ** n
            fs = fib * unit_ratio_factor(0, 1) ** m / unit_zero_factor(1)
            out.append(Sector(f"{label}:a={a},b={b}", Fraction(1, n), fs, (m,)))
    return out


def hybrid_sectors(model: HybridSpec, phase: str) -> list[Sector]:
    n, m = model.n, model.m
    if phase == "h1":
        return _fibre_sectors(n, m, "h1")
    if phase == "h2":
        return _fibre_sectors(m, n, "h2")
    if phase == "h3":
        fs = unit_ratio_factor(0, 2) ** n * unit_ratio_factor(1, 2) ** m / unit_zero_factor(2) ** 2
        fs = fs * theta_factor(ThetaArg(0, 0, 0, (n, m)), 2) / theta_factor(ThetaArg(-1, 0, 0, (n, m)), 2)
        return [Sector("h3", Fraction(1), fs, (n, m))]
    raise ValueError(f"unknown hybrid phase {phase!r}; expected h1, h2 or h3")


def hybrid_genus(model: HybridSpec, phase: str, qmax, ywindow, denom: int | None = None) -> GenusReport:
    """Elliptic genus of the hybrid model in phase h1, h2 (orbifold fibrations) or h3 (geometric)."""
    sectors = hybrid_sectors(model, phase)
    series = evaluate_sectors(sectors, qmax, ywindow, denom)
    d = Fraction(model.n + model.m - 3)
    return GenusReport(series, "hybrid", {"n": model.n, "m": model.m, "phase": phase}, d, d / 2, True, len(sectors))
