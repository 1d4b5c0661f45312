"""Exact arithmetic in the cyclotomic field Q(zeta_N).

Elements are stored as coefficient vectors of polynomials in zeta_N reduced
modulo the N-th cyclotomic polynomial, so equality is vector equality and
every nonzero element has an inverse.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

import numpy as np

from .errors import OrderMismatchError

__all__ = [
    "CycloNum",
    "cyclotomic_poly",
    "euler_phi",
    "root_of_unity",
    "reduction_matrix",
]


def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _div_monic(num: list[int], den: tuple[int, ...]) -> list[int]:
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + dn]
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    if any(num[:dn]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients (constant term first) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("cyclotomic order must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _div_monic(poly, cyclotomic_poly(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    # row k: coefficients of zeta^k reduced mod Phi_n, for 0 <= k < n
    phi = cyclotomic_poly(n)
    deg = len(phi) - 1
    rows = []
    cur = [1] + [0] * (deg - 1) if deg > 0 else []
    for _ in range(n):
        rows.append(tuple(cur))
        nxt = [0] + cur
        lead = nxt[deg]
        if lead:
            for j in range(deg):
                nxt[j] -= lead * phi[j]
        cur = nxt[:deg]
    return tuple(rows)


@lru_cache(maxsize=None)
def reduction_matrix(n: int) -> np.ndarray:
    """Integer (n x phi(n)) matrix mapping Z[x]/(x^n - 1) onto Z[zeta_n]."""
    m = np.array(_power_table(n), dtype=np.int64)
    m.setflags(write=False)
    return m


def _poly_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(a) >= len(b) and any(a):
        c = a[-1] / lead
        shift = len(a) - len(b)
        q[shift] = c
        for i, bc in enumerate(b):
            a[shift + i] -= c * bc
        a.pop()
        _poly_trim(a)
    return q, a


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    return _poly_trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


class CycloNum:
    """An element of Q(zeta_N), immutable.

    ``coeffs[k]`` is the coefficient of ``zeta_N**k`` for ``k < phi(N)``.
    Integers and Fractions are accepted wherever a CycloNum is expected and
    embedded at index 0.
    """

    __slots__ = ("order", "coeffs", "_hash")

    def __init__(self, order: int, coeffs):
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != euler_phi(order):
            raise ValueError(f"Q(zeta_{order}) needs {euler_phi(order)} coefficients, got {len(coeffs)}")
        self.order = order
        self.coeffs = coeffs
        self._hash = None

    @classmethod
    def from_rational(cls, value, order: int) -> "CycloNum":
        out = [Fraction(0)] * euler_phi(order)
        out[0] = Fraction(value)
        return cls(order, out)

    @classmethod
    def zero(cls, order: int) -> "CycloNum":
        return cls.from_rational(0, order)

    @classmethod
    def one(cls, order: int) -> "CycloNum":
        return cls.from_rational(1, order)

    @classmethod
    def from_power_coeffs(cls, order: int, power_coeffs) -> "CycloNum":
        """Build sum_k c_k zeta^k for arbitrary exponents k (reduced mod order)."""
        table = _power_table(order)
        out = [Fraction(0)] * euler_phi(order)
        for k, c in enumerate(power_coeffs):
            if c:
                for j, r in enumerate(table[k % order]):
                    if r:
                        out[j] += c * r
        return cls(order, out)

    def _coerce(self, other) -> "CycloNum":
        if isinstance(other, CycloNum):
            if other.order != self.order:
                raise OrderMismatchError(f"cannot mix Q(zeta_{self.order}) and Q(zeta_{other.order})")
            return other
        if isinstance(other, (int, Fraction)):
            return CycloNum.from_rational(other, self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloNum(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycloNum(self.order, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloNum(self.order, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloNum(self.order, [a * other for a in self.coeffs])
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        prod = [Fraction(0)] * (2 * len(self.coeffs))
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        return CycloNum.from_power_coeffs(self.order, prod)

    __rmul__ = __mul__

    def inv(self) -> "CycloNum":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self.is_rational():
            return CycloNum.from_rational(1 / self.coeffs[0], self.order)
        # extended Euclid: s*a + t*Phi = 1
        phi = [Fraction(c) for c in cyclotomic_poly(self.order)]
        r0, r1 = phi, _poly_trim(list(self.coeffs))
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        c = r1[0]
        out = [Fraction(0)] * len(self.coeffs)
        for i, v in enumerate(s1):
            out[i] = v / c
        return CycloNum(self.order, out)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return CycloNum(self.order, [a / other for a in self.coeffs])
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inv()

    def __rtruediv__(self, other):
        return self.inv() * other

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        result, base = CycloNum.one(self.order), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, CycloNum):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.order, self.coeffs))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def lift(self, order: int) -> "CycloNum":
        """Embed into Q(zeta_order); order must be a multiple of self.order."""
        if order % self.order:
            raise OrderMismatchError(f"Q(zeta_{self.order}) does not embed in Q(zeta_{order})")
        step = order // self.order
        powers = [Fraction(0)] * order
        for k, c in enumerate(self.coeffs):
            powers[k * step] += c
        return CycloNum.from_power_coeffs(order, powers)

    def to_complex(self, precision: int = 30):
        """Numerical value as an mpmath mpc accurate to about 10**(1 - precision)."""
        import mpmath

        with mpmath.workdps(max(precision, 16) + 10):
            total = mpmath.mpc(0)
            for k, c in enumerate(self.coeffs):
                if c:
                    total += mpmath.mpf(c.numerator) / c.denominator * mpmath.expjpi(mpmath.mpf(2 * k) / self.order)
            return +total

    def matrix(self) -> list[list[Fraction]]:
        """Matrix of multiplication by self in the power basis (column j = self * zeta^j)."""
        cols = []
        for j in range(len(self.coeffs)):
            basis = [Fraction(0)] * len(self.coeffs)
            basis[j] = Fraction(1)
            cols.append((self * CycloNum(self.order, basis)).coeffs)
        return [[cols[j][i] for j in range(len(cols))] for i in range(len(cols))]

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "CycloNum":
        return cls(int(data["order"]), [Fraction(c) for c in data["coeffs"]])

    def __repr__(self):
        if self.is_rational():
            return f"CycloNum({self.order}, {self.coeffs[0]})"
        terms = [f"{c}*z^{k}" if k else str(c) for k, c in enumerate(self.coeffs) if c]
        return f"CycloNum({self.order}, {' + '.join(terms)})"


def root_of_unity(num: int, den: int, order: int) -> CycloNum:
    """exp(2 pi i num/den) as an element of Q(zeta_order)."""
    if den <= 0:
        raise ValueError("den must be positive")
    g = gcd(num, den) or 1
    num, den = num // g, den // g
    if order % den:
        raise OrderMismatchError(f"e^(2 pi i {num}/{den}) is not in Q(zeta_{order})")
    k = (num * (order // den)) % order
    powers = [0] * order
    powers[k] = 1
    return CycloNum.from_power_coeffs(order, powers)
