"""Finite q-multiple zeta values at roots of unity.

``evaluate`` computes

    Z_n(q; s_1, ..., s_m) = sum over 1 <= i_1 < ... < i_m <= n-1 of
                            prod_j (1 - q^{i_j})^{-s_j}

(``<=`` between the i_j for the star variant) with q = zeta_{q_order}^k, and
``evaluate_t`` computes the 1-2-...-m sum T_n(zeta_{(m+1)n}; m). Both run a
prefix dynamic program over the summation index, so the cost is O(n*m)
field multiplications rather than O(n^m).
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

from .cyclotomic import CycloContext, CycloElement, invert, make_context
from .errors import DomainError


@dataclass(frozen=True)
class Composition:
    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int]):
        parts = tuple(int(s) for s in parts)
        if not parts:
            raise DomainError("a composition needs at least one part")
        if any(s < 1 for s in parts):
            raise DomainError(f"composition parts must be positive: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def one_two_one(cls, a: int, b: int) -> "Composition":
        """The index (1^a, 2, 1^b)."""
        if a < 0 or b < 0:
            raise DomainError("one_two_one needs a, b >= 0")
        return cls((1,) * a + (2,) + (1,) * b)

    @classmethod
    def parse(cls, text: str) -> "Composition":
        return cls(int(t) for t in text.replace(" ", "").split(",") if t)

    @property
    def depth(self) -> int:
        return len(self.parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __str__(self):
        return ",".join(map(str, self.parts))


def reverse(index: Composition) -> Composition:
    return Composition(index.parts[::-1])


def _as_composition(index) -> Composition:
    return index if isinstance(index, Composition) else Composition(index)


@dataclass(frozen=True)
class ZetaValue:
    value: Optional[CycloElement]  # None only for an empty sum (exact zero)
    n: int
    q_order: int
    index: Composition
    star: bool

    def is_zero(self) -> bool:
        return self.value is None or self.value.is_zero()

    def element(self, ctx: Optional[CycloContext] = None) -> CycloElement:
        """The value as a field element; empty sums need a context to embed 0."""
        if self.value is not None:
            return self.value
        ctx = ctx or make_context(max(self.q_order, 2))
        return ctx.zero()


def u(ctx: CycloContext, r: int, root_exponent: int = 1) -> CycloElement:
    """1/(1 - zeta^(r*root_exponent)) in ctx."""
    return _u_cached(ctx.order, r, root_exponent)


@lru_cache(maxsize=65536)
def _u_cached(N: int, r: int, k: int) -> CycloElement:
    if (r * k) % N == 0:
        raise DomainError(f"u_{r} undefined: zeta_{N}^{r * k} = 1")
    ctx = make_context(N)
    return invert(ctx.one() - ctx.zeta_power(r * k))


def _empty_range(n: int, depth: int, star: bool) -> bool:
    if star:
        return n <= 1
    return n <= depth


def evaluate(
    n: int,
    q_order: Optional[int] = None,
    index=(1,),
    star: bool = False,
    root_exponent: int = 1,
    counter: Optional[Counter] = None,
) -> ZetaValue:
    """Exact Z_n(q; index) (or Z*_n) with q = zeta_{q_order}^{root_exponent}.

    ``q_order`` defaults to n. Empty ranges give an exact zero without
    building a field. Pass a ``Counter`` to tally field multiplications
    under the key ``"mul"``.
    """
    index = _as_composition(index)
    if q_order is None:
        q_order = n
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if q_order < n:
        raise DomainError(f"q_order={q_order} must be >= n={n}")
    if _empty_range(n, index.depth, star):
        return ZetaValue(None, n, q_order, index, star)
    if q_order < 2:
        raise DomainError("q_order must be >= 2 for a nonempty sum")
    if math.gcd(root_exponent, q_order) != 1:
        raise DomainError("root_exponent must be coprime to q_order")
    if counter is None:
        value = _evaluate_cached(n, q_order, index.parts, star, root_exponent)
    else:
        value = _evaluate_dp(n, q_order, index.parts, star, root_exponent, counter)
    return ZetaValue(value, n, q_order, index, star)


@lru_cache(maxsize=4096)
def _evaluate_cached(n, q_order, parts, star, root_exponent) -> CycloElement:
    return _evaluate_dp(n, q_order, parts, star, root_exponent, None)


def _evaluate_dp(n, q_order, parts, star, root_exponent, counter) -> CycloElement:
    ctx = make_context(q_order)
    m = len(parts)
    top = max(parts)
    zero = ctx.zero()
    acc = [ctx.one()] + [zero] * m
    muls = 0
    for i in range(1, n):
        base = u(ctx, i, root_exponent)
        pw = [None, base]
        for _ in range(2, top + 1):
            pw.append(pw[-1] * base)
            muls += 1
        if star:
            # ascending j reads the already-updated acc[j-1]: allows i_{j-1} == i_j
            for j in range(1, m + 1):
                if not acc[j - 1].is_zero():
                    acc[j] = acc[j] + acc[j - 1] * pw[parts[j - 1]]
                    muls += 1
        else:
            # descending j reads the previous row of acc[j-1]: forces i_{j-1} < i_j
            for j in range(min(m, i), 0, -1):
                acc[j] = acc[j] + acc[j - 1] * pw[parts[j - 1]]
                muls += 1
    if counter is not None:
        counter["mul"] += muls
    return acc[m]


def evaluate_t(n: int, m: int, counter: Optional[Counter] = None) -> CycloElement:
    """T_n(zeta_{(m+1)n}; m), the sum over 1 <= i_1 < ... < i_m <= n of
    prod_j 1/(1 - zeta^{(m+1) i_j - j}), as an element of Q(zeta_{(m+1)n}).

    The empty sum (m > n) is the zero element. ``m == 0`` is the empty
    product 1, so the generating-function series starts at 1.
    """
    if n < 1 or m < 0:
        raise DomainError(f"evaluate_t needs n >= 1 and m >= 0, got n={n}, m={m}")
    N = (m + 1) * n
    ctx = make_context(max(N, 2))
    if m == 0:
        return ctx.one()
    if m > n:
        return ctx.zero()
    zero = ctx.zero()
    acc = [ctx.one()] + [zero] * m
    muls = 0
    for i in range(1, n + 1):
        for j in range(min(m, i), 0, -1):
            e = (m + 1) * i - j
            assert e % N != 0, "exponent (m+1)i - j is never divisible by m+1"
            acc[j] = acc[j] + acc[j - 1] * u(ctx, e)
            muls += 1
    if counter is not None:
        counter["mul"] += muls
    return acc[m]
