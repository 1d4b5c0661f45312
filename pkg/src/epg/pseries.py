"""Truncated two-variable Puiseux series in q and y with cyclotomic coefficients.

Exponents live on the lattice (1/N)Z x (1/N)Z where N is the series' ``denom``;
coefficients live in Q(zeta_N).  A series records what it knows: every
coefficient with ``eq <= qmax`` and ``|ey| <= ywindow`` is correct, and nothing
outside that region is stored.  ``None`` for either bound means "exact in that
direction".
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, floor, lcm
from typing import Iterator, Mapping

from .cyclo import CycloNum, root_of_unity
from .errors import NotHolomorphicAtCuspError, OrderMismatchError, SingularLeadingTermError

__all__ = ["PuiseuxSeries", "EqualityResult", "series_equal", "min_bound"]


def min_bound(a, b):
    """Minimum of two truncation bounds where None means unbounded."""
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _frac(x) -> Fraction | None:
    return None if x is None else Fraction(x)


def _to_index(value: Fraction, denom: int) -> int:
    scaled = Fraction(value) * denom
    if scaled.denominator != 1:
        raise OrderMismatchError(f"exponent {value} is not on the lattice (1/{denom})Z")
    return scaled.numerator


class PuiseuxSeries:
    """Sum of c * q^eq * y^ey over a finite set of lattice points."""

    __slots__ = ("denom", "qmax", "ywindow", "_terms")

    def __init__(self, denom: int, terms: Mapping | None = None, qmax=None, ywindow=None):
        self.denom = int(denom)
        self.qmax = _frac(qmax)
        self.ywindow = _frac(ywindow)
        self._terms: dict[tuple[int, int], CycloNum] = {}
        for (eq, ey), c in (terms or {}).items():
            key = (_to_index(eq, self.denom), _to_index(ey, self.denom))
            if not isinstance(c, CycloNum):
                c = CycloNum.from_rational(c, self.denom)
            elif c.order != self.denom:
                raise OrderMismatchError(f"coefficient order {c.order} != series denom {self.denom}")
            if key in self._terms:
                c = self._terms[key] + c
            self._terms[key] = c
        self._prune()

    @classmethod
    def _raw(cls, denom, terms, qmax, ywindow) -> "PuiseuxSeries":
        s = cls.__new__(cls)
        s.denom, s.qmax, s.ywindow, s._terms = denom, qmax, ywindow, terms
        s._prune()
        return s

    def _prune(self):
        qcap = None if self.qmax is None else floor(self.qmax * self.denom)
        ycap = None if self.ywindow is None else floor(self.ywindow * self.denom)
        self._terms = {
            k: c
            for k, c in self._terms.items()
            if not c.is_zero() and (qcap is None or k[0] <= qcap) and (ycap is None or abs(k[1]) <= ycap)
        }

    # -- construction helpers -------------------------------------------------
    @classmethod
    def monomial(cls, denom, eq, ey, coeff=1, qmax=None, ywindow=None) -> "PuiseuxSeries":
        return cls(denom, {(Fraction(eq), Fraction(ey)): coeff}, qmax, ywindow)

    @classmethod
    def constant(cls, denom, coeff=1, qmax=None, ywindow=None) -> "PuiseuxSeries":
        return cls.monomial(denom, 0, 0, coeff, qmax, ywindow)

    @classmethod
    def zero(cls, denom, qmax=None, ywindow=None) -> "PuiseuxSeries":
        return cls(denom, {}, qmax, ywindow)

    # -- access ---------------------------------------------------------------
    def items(self) -> Iterator[tuple[tuple[Fraction, Fraction], CycloNum]]:
        n = self.denom
        for (a, b) in sorted(self._terms):
            yield (Fraction(a, n), Fraction(b, n)), self._terms[(a, b)]

    @property
    def terms(self) -> dict[tuple[Fraction, Fraction], CycloNum]:
        return dict(self.items())

    def lattice_terms(self) -> dict[tuple[int, int], CycloNum]:
        """Terms keyed by integer lattice coordinates (eq*N, ey*N)."""
        return dict(self._terms)

    def coeff(self, eq, ey) -> CycloNum:
        key = (_to_index(eq, self.denom), _to_index(ey, self.denom))
        return self._terms.get(key, CycloNum.zero(self.denom))

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def min_q(self) -> Fraction | None:
        if not self._terms:
            return None
        return Fraction(min(k[0] for k in self._terms), self.denom)

    def max_abs_y(self) -> Fraction:
        if not self._terms:
            return Fraction(0)
        return Fraction(max(abs(k[1]) for k in self._terms), self.denom)

    def q_slice(self, eq) -> dict[Fraction, CycloNum]:
        a = _to_index(eq, self.denom)
        return {Fraction(k[1], self.denom): c for k, c in sorted(self._terms.items()) if k[0] == a}

    # -- arithmetic -------------------------------------------------------------
    def _check(self, other: "PuiseuxSeries"):
        if other.denom != self.denom:
            raise OrderMismatchError(f"series denominators differ ({self.denom} vs {other.denom}); lift explicitly")

    def _scalar(self, c) -> CycloNum:
        if isinstance(c, CycloNum):
            if c.order != self.denom:
                raise OrderMismatchError(f"scalar order {c.order} != series denom {self.denom}")
            return c
        return CycloNum.from_rational(c, self.denom)

    def __add__(self, other):
        if not isinstance(other, PuiseuxSeries):
            other = PuiseuxSeries.constant(self.denom, self._scalar(other))
        self._check(other)
        terms = dict(self._terms)
        for k, c in other._terms.items():
            terms[k] = terms[k] + c if k in terms else c
        return PuiseuxSeries._raw(
            self.denom, terms, min_bound(self.qmax, other.qmax), min_bound(self.ywindow, other.ywindow)
        )

    __radd__ = __add__

    def __neg__(self):
        return PuiseuxSeries._raw(self.denom, {k: -c for k, c in self._terms.items()}, self.qmax, self.ywindow)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "PuiseuxSeries":
        c = self._scalar(c)
        return PuiseuxSeries._raw(self.denom, {k: v * c for k, v in self._terms.items()}, self.qmax, self.ywindow)

    def __mul__(self, other):
        if not isinstance(other, PuiseuxSeries):
            return self.scale(other)
        self._check(other)
        qmax = min_bound(self.qmax, other.qmax)
        ywin = min_bound(self.ywindow, other.ywindow)
        qcap = None if qmax is None else floor(qmax * self.denom)
        ycap = None if ywin is None else floor(ywin * self.denom)
        right = sorted(other._terms.items())
        out: dict[tuple[int, int], CycloNum] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in right:
                a = a1 + a2
                if qcap is not None and a > qcap:
                    break
                b = b1 + b2
                if ycap is not None and abs(b) > ycap:
                    continue
                v = c1 * c2
                out[(a, b)] = out[(a, b)] + v if (a, b) in out else v
        return PuiseuxSeries._raw(self.denom, out, qmax, ywin)

    __rmul__ = __mul__

    def shift(self, eq, ey) -> "PuiseuxSeries":
        """Multiply by the monomial q^eq y^ey; the known window shrinks by |ey|."""
        da, db = _to_index(eq, self.denom), _to_index(ey, self.denom)
        qmax = None if self.qmax is None else self.qmax + Fraction(eq)
        ywin = None if self.ywindow is None else self.ywindow - abs(Fraction(ey))
        if ywin is not None and ywin < 0:
            ywin = Fraction(0)
        terms = {(a + da, b + db): c for (a, b), c in self._terms.items()}
        return PuiseuxSeries._raw(self.denom, terms, qmax, ywin)

    def invert(self, qmax=None, ywindow=None) -> "PuiseuxSeries":
        """Multiplicative inverse.

        The lowest q-slice L must be a single monomial or a binomial
        c*y^b*(1 - r*y^s) with s > 0, which is expanded as a geometric series in
        y^s.  With H = self - L the inverse is sum_k (-H)^k / L^(k+1), summed
        exactly on the output window.
        """
        if not self._terms:
            raise SingularLeadingTermError("cannot invert the zero series")
        n = self.denom
        qmax = min_bound(_frac(qmax), self.qmax)
        ywin = min_bound(_frac(ywindow), self.ywindow)
        a0 = min(k[0] for k in self._terms)
        lead = sorted((k[1], c) for k, c in self._terms.items() if k[0] == a0)
        if len(lead) > 2:
            raise SingularLeadingTermError(
                f"leading q-slice has {len(lead)} terms; only a monomial or c*(1-u) can be inverted"
            )
        b0, c0 = lead[0]
        step, ratio = None, None
        if len(lead) == 2:
            if ywin is None:
                raise ValueError("inverting a binomial leading slice needs a finite ywindow")
            step = lead[1][0] - b0
            ratio = -(lead[1][1] * c0.inv())
        rest = {k: c for k, c in self._terms.items() if k[0] != a0}
        if rest and qmax is None:
            raise ValueError("invert needs a finite qmax when the series is not a single slice")
        qmax_out = None if qmax is None else qmax - 2 * Fraction(a0, n)
        qcap = None if qmax_out is None else floor(qmax_out * n)
        ycap = None if ywin is None else floor(ywin * n)
        c0inv = c0.inv()
        out: dict[tuple[int, int], CycloNum] = {}

        def add(key, v):
            out[key] = out[key] + v if key in out else v

        power = {(0, 0): CycloNum.one(n)}
        k = 0
        while power:
            scale = c0inv ** (k + 1) * (-1 if k % 2 else 1)
            for (ah, bh), c in power.items():
                eq = ah - (k + 1) * a0
                base = c * scale
                if step is None:
                    ey = bh - (k + 1) * b0
                    if ycap is None or abs(ey) <= ycap:
                        add((eq, ey), base)
                    continue
                for ey in range(-ycap, ycap + 1):
                    t = ey - bh + (k + 1) * b0
                    if t >= 0 and t % step == 0:
                        j = t // step
                        add((eq, ey), base * comb(j + k, k) * ratio**j)
            if not rest:
                break
            nxt: dict[tuple[int, int], CycloNum] = {}
            for (ah, bh), c in power.items():
                for (ar, br), cr in rest.items():
                    key = (ah + ar, bh + br)
                    if key[0] - (k + 2) * a0 > qcap:
                        continue
                    v = c * cr
                    nxt[key] = nxt[key] + v if key in nxt else v
            power = {key: v for key, v in nxt.items() if not v.is_zero()}
            k += 1
        return PuiseuxSeries._raw(n, out, qmax_out, ywin)

    def restrict(self, qmax=None, ywindow=None) -> "PuiseuxSeries":
        return PuiseuxSeries._raw(
            self.denom, dict(self._terms), min_bound(self.qmax, _frac(qmax)), min_bound(self.ywindow, _frac(ywindow))
        )

    def lift(self, denom: int) -> "PuiseuxSeries":
        """Re-express over (1/denom)Z and Q(zeta_denom); denom must be a multiple."""
        if denom % self.denom:
            raise OrderMismatchError(f"cannot lift denom {self.denom} to {denom}")
        s = denom // self.denom
        terms = {(a * s, b * s): c.lift(denom) for (a, b), c in self._terms.items()}
        return PuiseuxSeries._raw(denom, terms, self.qmax, self.ywindow)

    def substitute_y_scale(self, zshift, r) -> "PuiseuxSeries":
        """Realize z -> z + zshift + r*tau, i.e. y -> exp(2 pi i zshift) q^r y.

        The term c q^a y^b becomes c exp(2 pi i zshift b) q^(a + r b) y^b.  The
        known q-range shrinks by |r| * ywindow.
        """
        zshift, r = Fraction(zshift), Fraction(r)
        n = self.denom
        if r and self.qmax is not None and self.ywindow is None:
            raise ValueError("a finite ywindow is needed to shift by a multiple of tau")
        out = {}
        for (a, b), c in self._terms.items():
            ph = zshift * Fraction(b, n)
            if ph.denominator > n or n % ph.denominator:
                raise OrderMismatchError(f"phase {ph} is not an N-th root of unity for N={n}")
            na = a + _to_index(r * Fraction(b, n), n)
            v = c * root_of_unity(ph.numerator, ph.denominator, n) if ph else c
            out[(na, b)] = out[(na, b)] + v if (na, b) in out else v
        qmax = None if self.qmax is None else self.qmax - abs(r) * (self.ywindow or 0)
        return PuiseuxSeries._raw(n, out, qmax, self.ywindow)

    def substitute_q_phase(self) -> "PuiseuxSeries":
        """Realize tau -> tau + 1: the q^a coefficient picks up exp(2 pi i a)."""
        n = self.denom
        out = {}
        for (a, b), c in self._terms.items():
            ph = Fraction(a, n) % 1
            out[(a, b)] = c * root_of_unity(ph.numerator, ph.denominator, n) if ph else c
        return PuiseuxSeries._raw(n, out, self.qmax, self.ywindow)

    def q_limit(self) -> "PuiseuxSeries":
        """The q^0 part (requires no negative q-exponents)."""
        if any(k[0] < 0 for k in self._terms):
            raise NotHolomorphicAtCuspError("series has negative q-exponents")
        terms = {k: c for k, c in self._terms.items() if k[0] == 0}
        return PuiseuxSeries._raw(self.denom, terms, Fraction(0), self.ywindow)

    def evaluate(self, z, tau, precision: int = 30):
        """Numerical value of the stored terms at (z, tau)."""
        import mpmath

        with mpmath.workdps(precision + 10):
            z, tau = mpmath.mpc(z), mpmath.mpc(tau)
            total = mpmath.mpc(0)
            n = self.denom
            for (a, b), c in self._terms.items():
                total += c.to_complex(precision) * mpmath.exp(2j * mpmath.pi * (tau * a + z * b) / n)
            return +total

    # -- comparison / serialization ----------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, PuiseuxSeries):
            return NotImplemented
        return (
            self.denom == other.denom
            and self.qmax == other.qmax
            and self.ywindow == other.ywindow
            and self._terms == other._terms
        )

    __hash__ = None

    def to_json(self) -> dict:
        return {
            "denom": self.denom,
            "qmax": None if self.qmax is None else str(self.qmax),
            "ywindow": None if self.ywindow is None else str(self.ywindow),
            "terms": [
                {"q": str(eq), "y": str(ey), "coeff": c.to_json()["coeffs"]} for (eq, ey), c in self.items()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "PuiseuxSeries":
        n = int(data["denom"])
        terms = {}
        for t in data["terms"]:
            terms[(Fraction(t["q"]), Fraction(t["y"]))] = CycloNum(n, [Fraction(c) for c in t["coeff"]])
        return cls(n, terms, _frac(data.get("qmax")), _frac(data.get("ywindow")))

    def __repr__(self):
        shown = []
        for (eq, ey), c in list(self.items())[:8]:
            shown.append(f"({c})q^{eq}y^{ey}")
        more = " + ..." if len(self._terms) > 8 else ""
        return f"PuiseuxSeries(N={self.denom}, qmax={self.qmax}, W={self.ywindow}: {' + '.join(shown) or '0'}{more})"


@dataclass(frozen=True)
class EqualityResult:
    equal: bool
    qmax: Fraction | None
    ywindow: Fraction | None
    mismatch: tuple | None = None
    compared: int = 0

    def __bool__(self):
        return self.equal


def series_equal(a: PuiseuxSeries, b: PuiseuxSeries) -> EqualityResult:
    """Compare on the common known region.

    Series over different lattices are lifted to the lcm lattice first; this is
    the one place an implicit lift happens since no arithmetic is performed.
    """
    if a.denom != b.denom:
        n = lcm(a.denom, b.denom)
        a, b = a.lift(n), b.lift(n)
    qmax = min_bound(a.qmax, b.qmax)
    ywin = min_bound(a.ywindow, b.ywindow)
    ra, rb = a.restrict(qmax, ywin), b.restrict(qmax, ywin)
    keys = sorted(set(ra._terms) | set(rb._terms))
    zero = CycloNum.zero(a.denom)
    for k in keys:
        ca, cb = ra._terms.get(k, zero), rb._terms.get(k, zero)
        if ca != cb:
            loc = (Fraction(k[0], a.denom), Fraction(k[1], a.denom))
            return EqualityResult(False, qmax, ywin, (loc[0], loc[1], ca, cb), len(keys))
    return EqualityResult(True, qmax, ywin, None, len(keys))
