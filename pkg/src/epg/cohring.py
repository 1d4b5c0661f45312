"""Cohomology of (products of) projective spaces and fixed-locus data for
diagonal finite group actions on P^{n-1}.

A CohomSeries is a truncated polynomial in the hyperplane classes whose
coefficients are PuiseuxSeries.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Mapping, Sequence

from .errors import RingMismatchError
from .pseries import PuiseuxSeries

__all__ = [
    "CohomRing",
    "CohomSeries",
    "FixedLocus",
    "ChernRoot",
    "pushforward",
    "fixed_loci",
    "tangent_chern_roots",
]


@dataclass(frozen=True)
class CohomRing:
    """Q[x_1..x_k]/(x_i^{m_i}): generator names with nilpotency orders."""

    gens: tuple[tuple[str, int], ...]

    def __post_init__(self):
        for name, m in self.gens:
            if m < 1:
                raise ValueError(f"nilpotency order of {name} must be >= 1")

    @classmethod
    def projective(cls, m: int, name: str = "x") -> "CohomRing":
        """H*(P^{m-1}) = Q[x]/(x^m)."""
        return cls(((name, m),))

    @classmethod
    def product(cls, *rings: "CohomRing") -> "CohomRing":
        return cls(tuple(g for r in rings for g in r.gens))

    @property
    def nvars(self) -> int:
        return len(self.gens)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(m for _, m in self.gens)

    @property
    def top(self) -> tuple[int, ...]:
        return tuple(m - 1 for _, m in self.gens)

    @property
    def dimension(self) -> int:
        return sum(self.top)

    def monomials(self):
        return product(*(range(m) for _, m in self.gens))


class CohomSeries:
    """sum over monomials x^k of PuiseuxSeries coefficients in a CohomRing."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: CohomRing, coeffs: Mapping[tuple[int, ...], PuiseuxSeries]):
        self.ring = ring
        clean = {}
        for k, s in coeffs.items():
            k = tuple(k)
            if len(k) != ring.nvars:
                raise RingMismatchError(f"monomial {k} does not match ring with {ring.nvars} generators")
            if any(e >= m for e, m in zip(k, ring.degrees)):
                continue
            clean[k] = s
        self.coeffs = clean

    @classmethod
    def scalar(cls, ring: CohomRing, s: PuiseuxSeries) -> "CohomSeries":
        return cls(ring, {(0,) * ring.nvars: s})

    def coefficient(self, k) -> PuiseuxSeries | None:
        return self.coeffs.get(tuple(k))

    def _check(self, other: "CohomSeries"):
        if other.ring != self.ring:
            raise RingMismatchError("cohomology series live in different rings")

    def __add__(self, other: "CohomSeries") -> "CohomSeries":
        self._check(other)
        out = dict(self.coeffs)
        for k, s in other.coeffs.items():
            out[k] = out[k] + s if k in out else s
        return CohomSeries(self.ring, out)

    def __mul__(self, other):
        if isinstance(other, PuiseuxSeries):
            return CohomSeries(self.ring, {k: s * other for k, s in self.coeffs.items()})
        self._check(other)
        out: dict[tuple[int, ...], PuiseuxSeries] = {}
        degs = self.ring.degrees
        for k1, s1 in self.coeffs.items():
            for k2, s2 in other.coeffs.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                if any(e >= m for e, m in zip(k, degs)):
                    continue
                v = s1 * s2
                out[k] = out[k] + v if k in out else v
        return CohomSeries(self.ring, out)

    def pushforward(self) -> PuiseuxSeries:
        return pushforward(self)

    def __repr__(self):
        return f"CohomSeries({self.ring.gens}, {len(self.coeffs)} monomials)"


def pushforward(c: CohomSeries, ring: CohomRing | None = None) -> PuiseuxSeries:
    """Integral over the product of projective spaces: the top-monomial coefficient."""
    if ring is not None and ring != c.ring:
        raise RingMismatchError("pushforward ring does not match the series' ring")
    top = c.ring.top
    s = c.coeffs.get(top)
    if s is not None:
        return s
    any_s = next(iter(c.coeffs.values()), None)
    denom = any_s.denom if any_s is not None else 1
    qmax = any_s.qmax if any_s is not None else None
    ywin = any_s.ywindow if any_s is not None else None
    return PuiseuxSeries.zero(denom, qmax, ywin)


@dataclass(frozen=True)
class FixedLocus:
    """Coordinate linear subspace P(J) fixed by a commuting pair (g, h).

    ``charpair`` is the common pair (theta_j(g), theta_j(h)) mod 1 for j in J.
    """

    coords: tuple[int, ...]
    charpair: tuple[Fraction, Fraction]

    @property
    def dim(self) -> int:
        return len(self.coords) - 1


@dataclass(frozen=True)
class ChernRoot:
    """A Chern root of the (twisted) tangent bundle restricted to a fixed locus.

    ``xcoef`` is the multiple of the hyperplane class x (1 for the O(1) summands
    of the Euler sequence, 0 for the trivial summand); ``charpair`` is the
    eigen-character for (g, h); ``removed`` marks the trivial Euler summand,
    which enters with exponent -1.
    """

    xcoef: int
    charpair: tuple[Fraction, Fraction]
    coord: int | None = None
    removed: bool = False

    @property
    def trivial(self) -> bool:
        return self.charpair == (Fraction(0), Fraction(0))


def _char(v) -> Fraction:
    return Fraction(v) % 1


def fixed_loci(n: int, g: Sequence, h: Sequence) -> list[FixedLocus]:
    """Fixed loci of the pair (g, h) acting diagonally on P^{n-1}.

    g and h are character vectors: g acts on coordinate i by exp(2 pi i g[i]).
    Coordinates sharing the same character pair span one fixed component.
    """
    if len(g) != n or len(h) != n:
        raise ValueError("character vectors must have one entry per coordinate")
    groups: dict[tuple[Fraction, Fraction], list[int]] = {}
    for i in range(n):
        groups.setdefault((_char(g[i]), _char(h[i])), []).append(i)
    loci = [FixedLocus(tuple(c), key) for key, c in groups.items()]
    return sorted(loci, key=lambda L: L.coords)


def tangent_chern_roots(locus: FixedLocus, n: int, g: Sequence, h: Sequence) -> list[ChernRoot]:
    """Euler-sequence roots of T P^{n-1} restricted to a fixed locus.

    Returns the n roots of O(1) (x) V, each x with character
    (theta_i - theta_J) mod 1, followed by the trivial summand (root 0,
    character 0) flagged ``removed``.
    """
    tg, th = locus.charpair
    roots = [
        ChernRoot(1, (_char(Fraction(g[i]) - tg), _char(Fraction(h[i]) - th)), coord=i) for i in range(n)
    ]
    roots.append(ChernRoot(0, (Fraction(0), Fraction(0)), None, removed=True))
    return roots
