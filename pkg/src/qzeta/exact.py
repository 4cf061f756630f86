"""Exact scalar substrate: rationals, polynomials in one variable, binomials,
Bernoulli numbers, interpolation and Hessenberg determinants.

Rationals are :class:`fractions.Fraction`; everything here is exact.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence

from .errors import DomainError

Rational = Fraction


def to_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def format_rational(x: Fraction) -> str:
    """Lowest-terms string, ``"p/q"`` or ``"p"`` when q == 1."""
    x = to_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class RationalPolynomial:
    """Immutable polynomial with rational coefficients, lowest degree first."""

    __slots__ = ("_c",)

    def __init__(self, coefficients: Iterable = ()):
        c = [to_rational(a) for a in coefficients]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def x(cls) -> "RationalPolynomial":
        return cls((0, 1))

    @classmethod
    def constant(cls, a) -> "RationalPolynomial":
        return cls((a,))

    @classmethod
    def from_roots(cls, roots: Iterable, leading=1) -> "RationalPolynomial":
        p = cls.constant(leading)
        for r in roots:
            p = p * cls((-to_rational(r), 1))
        return p

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self) -> int:
        """Degree; -1 stands in for minus infinity on the zero polynomial."""
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return not self._c

    def leading(self) -> Fraction:
        return self._c[-1] if self._c else Fraction(0)

    def __call__(self, x):
        x = to_rational(x)
        acc = Fraction(0)
        for a in reversed(self._c):
            acc = acc * x + a
        return acc

    @staticmethod
    def _coerce(other) -> "RationalPolynomial":
        if isinstance(other, RationalPolynomial):
            return other
        return RationalPolynomial.constant(to_rational(other))

    def __add__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self._c, o._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return RationalPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return RationalPolynomial(-a for a in self._c)

    def __sub__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        if not self._c or not o._c:
            return RationalPolynomial()
        out = [Fraction(0)] * (len(self._c) + len(o._c) - 1)
        for i, a in enumerate(self._c):
            if a:
                for j, b in enumerate(o._c):
                    out[i + j] += a * b
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, RationalPolynomial):
            q, r = divmod(self, other)
            if not r.is_zero():
                raise DomainError("polynomial division is not exact")
            return q
        d = to_rational(other)
        if d == 0:
            raise ZeroDivisionError("polynomial divided by zero")
        return RationalPolynomial(a / d for a in self._c)

    def __pow__(self, k: int):
        if k < 0:
            raise DomainError("negative polynomial power")
        out = RationalPolynomial.constant(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __divmod__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._c)
        dd = other.degree
        lead = other._c[-1]
        if len(rem) - 1 < dd:
            return RationalPolynomial(), self
        quo = [Fraction(0)] * (len(rem) - dd)
        for k in range(len(rem) - 1 - dd, -1, -1):
            c = rem[k + dd] / lead
            quo[k] = c
            if c:
                for i, b in enumerate(other._c):
                    rem[k + i] -= c * b
        return RationalPolynomial(quo), RationalPolynomial(rem[:dd])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        if isinstance(other, RationalPolynomial):
            return self._c == other._c
        try:
            return self._c == self._coerce(other)._c
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(self._c)

    def __repr__(self):
        return f"RationalPolynomial({self.to_string()!r})"

    def to_string(self, var: str = "n") -> str:
        """Expanded form, highest degree first, e.g. ``n^3+n^2-109n+251``."""
        if not self._c:
            return "0"
        parts = []
        for k in range(len(self._c) - 1, -1, -1):
            a = self._c[k]
            if a == 0:
                continue
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            if k == 0:
                body = format_rational(mag)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                if mag == 1:
                    body = mono
                elif mag.denominator == 1:
                    body = f"{mag.numerator}{mono}"
                else:
                    body = f"({format_rational(mag)}){mono}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += sign + body
        return out

    __str__ = to_string


def binomial(n: int, k: int) -> Fraction:
    """Generalized binomial n(n-1)...(n-k+1)/k!; zero when 0 <= n < k."""
    if k < 0:
        raise DomainError(f"binomial with negative k={k}")
    if 0 <= n < k:
        return Fraction(0)
    num = 1
    den = 1
    for i in range(k):
        num *= n - i
        den *= i + 1
    return Fraction(num, den)


@lru_cache(maxsize=None)
def _bernoulli_tuple(max_index: int) -> tuple[Fraction, ...]:
    B = [Fraction(1)]
    for k in range(1, max_index + 1):
        # sum_{j=0}^{k} C(k+1, j) B_j = 0
        acc = Fraction(0)
        c = 1  # C(k+1, j)
        for j in range(k):
            acc += c * B[j]
            c = c * (k + 1 - j) // (j + 1)
        B.append(-acc / (k + 1))
    return tuple(B)


class BernoulliTable(tuple):
    """Tuple of exact Bernoulli numbers B_0..B_K with B_1 = -1/2."""

    @property
    def max_index(self) -> int:
        return len(self) - 1


def bernoulli(max_index: int) -> BernoulliTable:
    if max_index < 0:
        raise DomainError("max_index must be non-negative")
    return BernoulliTable(_bernoulli_tuple(max_index))


def lagrange_interpolate(points: Sequence[tuple]) -> RationalPolynomial:
    """Unique polynomial of degree < len(points) through ``points``.

    Newton divided differences, then expansion to monomial coefficients.
    """
    if not points:
        raise DomainError("interpolation needs at least one point")
    xs = [to_rational(p[0]) for p in points]
    ys = [to_rational(p[1]) for p in points]
    if len(set(xs)) != len(xs):
        raise DomainError("duplicate x-coordinates in interpolation data")
    k = len(xs)
    coef = list(ys)
    for level in range(1, k):
        for i in range(k - 1, level - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level])
    # Horner on the Newton form: c0 + (x-x0)(c1 + (x-x1)(c2 + ...))
    acc = [coef[-1]]
    for i in range(k - 2, -1, -1):
        shifted = [Fraction(0)] + acc
        for j in range(len(acc)):
            shifted[j] -= xs[i] * acc[j]
        shifted[0] += coef[i]
        acc = shifted
    return RationalPolynomial(acc)


def hessenberg_determinant(matrix: Sequence[Sequence]) -> Fraction:
    """Determinant of a lower-Hessenberg matrix in O(s^2) multiplications.

    D_k = sum_{j<=k} (-1)^(k-j) h[k][j] (h[j][j+1] ... h[k-1][k]) D_{j-1}.
    """
    s = len(matrix)
    if any(len(row) != s for row in matrix):
        raise DomainError("hessenberg_determinant needs a square matrix")
    if s == 0:
        return Fraction(1)
    h = [[to_rational(a) for a in row] for row in matrix]
    for i in range(s):
        for j in range(i + 2, s):
            if h[i][j] != 0:
                raise DomainError(f"entry ({i},{j}) above the superdiagonal is nonzero")
    D = [Fraction(1)]
    for k in range(s):
        acc = Fraction(0)
        chain = Fraction(1)  # product of superdiagonal h[j][j+1] .. h[k-1][k]
        sign = 1
        for j in range(k, -1, -1):
            acc += sign * h[k][j] * chain * D[j]
            if j:
                chain *= h[j - 1][j]
                sign = -sign
        D.append(acc)
    return D[-1]


def integer_root_factorization(p: RationalPolynomial, search_bound: int):
    """Divide out integer linear factors (n - r), |r| <= search_bound.

    Returns ``(roots, remainder)`` with roots sorted ascending, repeated per
    multiplicity. The zero polynomial is returned unchanged with no roots.
    """
    if search_bound < 0:
        raise DomainError("search_bound must be non-negative")
    roots: list[int] = []
    rem = p
    if rem.is_zero():
        return roots, rem
    for r in sorted(range(-search_bound, search_bound + 1), key=lambda v: (abs(v), v)):
        lin = RationalPolynomial((-r, 1))
        while rem.degree >= 1 and rem(r) == 0:
            rem = rem // lin
            roots.append(r)
    roots.sort()
    return roots, rem
