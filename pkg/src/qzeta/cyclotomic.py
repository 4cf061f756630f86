"""Exact arithmetic in the cyclotomic field Q(zeta_N).

Elements are stored in the power basis 1, zeta, ..., zeta^(d-1) with
d = phi(N), reduced modulo the cyclotomic polynomial Phi_N. Internally a
coefficient vector is a tuple of Python ints over one positive common
denominator, kept in lowest terms, so equality is tuple equality.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .errors import DomainError, MixedOrderError, NotRational
from .exact import RationalPolynomial, format_rational, to_rational


@lru_cache(maxsize=None)
def cyclotomic_coefficients(N: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_N, lowest degree first."""
    if N < 1:
        raise DomainError(f"cyclotomic polynomial of order {N}")
    # x^N - 1 divided by Phi_d for every proper divisor d
    num = [-1] + [0] * (N - 1) + [1]
    for d in range(1, N):
        if N % d == 0:
            num = _exact_int_div(num, cyclotomic_coefficients(d))
    return tuple(num)


def _exact_int_div(num: list[int], den: tuple[int, ...]) -> list[int]:
    # den is monic
    num = list(num)
    dd = len(den) - 1
    quo = [0] * (len(num) - dd)
    for k in range(len(num) - 1 - dd, -1, -1):
        c = num[k + dd]
        quo[k] = c
        if c:
            for i, b in enumerate(den):
                num[k + i] -= c * b
    if any(num[:dd]):
        raise ArithmeticError("inexact division while building a cyclotomic polynomial")
    return quo


class CycloContext:
    """The field Q(zeta_N): order, Phi_N and its degree phi(N)."""

    __slots__ = ("order", "degree", "_phi", "_powers", "__weakref__")

    def __init__(self, N: int):
        if N < 2:
            raise DomainError(f"cyclotomic context needs N >= 2, got {N}")
        self.order = N
        self._phi = cyclotomic_coefficients(N)
        self.degree = len(self._phi) - 1
        d = self.degree
        # reduced int vectors of zeta^j for 0 <= j < max(N, 2d - 1)
        powers = []
        vec = [1] + [0] * (d - 1)
        for _ in range(max(N, 2 * d - 1)):
            powers.append(tuple(vec))
            top = vec[-1]
            vec = [0] + vec[:-1]
            if top:
                for i in range(d):
                    vec[i] -= top * self._phi[i]
        self._powers = tuple(powers)

    @property
    def phi_poly(self) -> RationalPolynomial:
        return RationalPolynomial(self._phi)

    def __repr__(self):
        return f"CycloContext({self.order})"

    def __reduce__(self):
        return (make_context, (self.order,))

    # constructors

    def element(self, coeffs: Iterable) -> "CycloElement":
        """Element from rational coefficients in the power basis.

        Longer vectors are reduced modulo Phi_N.
        """
        fr = [to_rational(c) for c in coeffs]
        den = 1
        for c in fr:
            den = den * c.denominator // math.gcd(den, c.denominator)
        ints = [c.numerator * (den // c.denominator) for c in fr]
        return CycloElement._make(self, self._reduce(ints), den)

    def rational(self, r) -> "CycloElement":
        r = to_rational(r)
        return CycloElement._make(self, [r.numerator] + [0] * (self.degree - 1), r.denominator)

    def zero(self) -> "CycloElement":
        return self.rational(0)

    def one(self) -> "CycloElement":
        return self.rational(1)

    def zeta_power(self, k: int) -> "CycloElement":
        return CycloElement._make(self, list(self._powers[k % self.order]), 1)

    def _reduce(self, ints: list[int]) -> list[int]:
        d = self.degree
        if len(ints) <= d:
            return ints + [0] * (d - len(ints))
        out = list(ints[:d])
        for k in range(d, len(ints)):
            c = ints[k]
            if c:
                p = self._powers[k % self.order] if k >= len(self._powers) else self._powers[k]
                for i in range(d):
                    if p[i]:
                        out[i] += c * p[i]
        return out


@lru_cache(maxsize=None)
def make_context(N: int) -> CycloContext:
    """Shared, immutable context for Q(zeta_N)."""
    return CycloContext(N)


def root_power(ctx: CycloContext, k: int) -> "CycloElement":
    return ctx.zeta_power(k)


class CycloElement:
    """Immutable element of Q(zeta_N)."""

    __slots__ = ("context", "_num", "_den")

    def __init__(self, context: CycloContext, coeffs: Iterable):
        other = context.element(coeffs)
        self.context = context
        self._num = other._num
        self._den = other._den

    @classmethod
    def _make(cls, ctx: CycloContext, num: list[int], den: int) -> "CycloElement":
        g = math.gcd(den, *num)
        if den < 0:
            g = -g
        self = object.__new__(cls)
        self.context = ctx
        if g != 1:
            self._num = tuple(a // g for a in num)
            self._den = den // g
        else:
            self._num = tuple(num)
            self._den = den
        return self

    @property
    def order(self) -> int:
        return self.context.order

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(a, self._den) for a in self._num)

    def is_zero(self) -> bool:
        return not any(self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def _check(self, other) -> "CycloElement":
        if isinstance(other, CycloElement):
            if other.context.order != self.context.order:
                raise MixedOrderError(
                    f"cannot combine elements of Q(zeta_{self.order}) and Q(zeta_{other.order})"
                )
            return other
        return self.context.rational(to_rational(other))

    def __add__(self, other):
        try:
            o = self._check(other)
        except TypeError:
            return NotImplemented
        da, db = self._den, o._den
        if da == db:
            num = [a + b for a, b in zip(self._num, o._num)]
            return CycloElement._make(self.context, num, da)
        num = [a * db + b * da for a, b in zip(self._num, o._num)]
        return CycloElement._make(self.context, num, da * db)

    __radd__ = __add__

    def __neg__(self):
        return CycloElement._make(self.context, [-a for a in self._num], self._den)

    def __sub__(self, other):
        try:
            o = self._check(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            r = to_rational(other)
            return CycloElement._make(
                self.context, [a * r.numerator for a in self._num], self._den * r.denominator
            )
        try:
            o = self._check(other)
        except TypeError:
            return NotImplemented
        a, b = self._num, o._num
        prod = [0] * (2 * len(a) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return CycloElement._make(self.context, self.context._reduce(prod), self._den * o._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            r = to_rational(other)
            if r == 0:
                raise ZeroDivisionError("division of a cyclotomic element by zero")
            return self * (1 / r)
        return self * invert(self._check(other))

    def __rtruediv__(self, other):
        return invert(self) * other

    def __pow__(self, k: int):
        if k < 0:
            return invert(self) ** (-k)
        out = self.context.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __eq__(self, other):
        if isinstance(other, CycloElement):
            return (
                self.context.order == other.context.order
                and self._den == other._den
                and self._num == other._num
            )
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self._num[0], self._den) == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(Fraction(self._num[0], self._den))
        return hash((self.context.order, self._num, self._den))

    def __repr__(self):
        return f"CycloElement(order={self.order}, coeffs={[format_rational(c) for c in self.coeffs]})"

    def to_string(self, var: str = "z") -> str:
        return RationalPolynomial(self.coeffs).to_string(var)

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [format_rational(c) for c in self.coeffs]}


def element_from_json(obj: dict) -> CycloElement:
    ctx = make_context(int(obj["order"]))
    coeffs = [Fraction(c) for c in obj["coeffs"]]
    if len(coeffs) != ctx.degree:
        raise DomainError(f"expected {ctx.degree} coefficients, got {len(coeffs)}")
    return ctx.element(coeffs)


def invert(x: CycloElement) -> CycloElement:
    """Inverse via the extended Euclidean algorithm on (x, Phi_N) over Q[t]."""
    if x.is_zero():
        raise ZeroDivisionError("inverse of zero in a cyclotomic field")
    if x.is_rational():
        return x.context.rational(1 / Fraction(x._num[0], x._den))
    ctx = x.context
    # invert the integer numerator polynomial, then multiply by the denominator
    r0, r1 = ctx.phi_poly, RationalPolynomial(x._num)
    s0, s1 = RationalPolynomial(), RationalPolynomial.constant(1)
    while r1.degree > 0:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
    # r1 is a nonzero constant: s1 * x_num == r1 (mod Phi_N)
    g = r1.coefficients[0]
    return ctx.element(c * x._den / g for c in s1.coefficients)


def conjugate(x: CycloElement) -> CycloElement:
    """Image under zeta -> zeta^(N-1) (complex conjugation)."""
    ctx = x.context
    N = ctx.order
    out = [0] * ctx.degree
    for k, c in enumerate(x._num):
        if c:
            p = ctx._powers[(N - k) % N]
            for i, v in enumerate(p):
                if v:
                    out[i] += c * v
    return CycloElement._make(ctx, out, x._den)


def as_rational(x: CycloElement) -> Fraction:
    if not x.is_rational():
        raise NotRational([format_rational(c) for c in x.coeffs])
    return Fraction(x._num[0], x._den)


def real_part(x: CycloElement) -> CycloElement:
    return (x + conjugate(x)) * Fraction(1, 2)


def imag_part_times_i(x: CycloElement) -> CycloElement:
    """(x - conj x)/2, i.e. sqrt(-1) * Im(x); zero iff x is real."""
    return (x - conjugate(x)) * Fraction(1, 2)


def real_part_rational(x: CycloElement) -> Fraction:
    return as_rational(real_part(x))
