"""Power sums, elementary symmetric functions and cotangent power sums of
u_r = 1/(1 - zeta_n^r), r = 1..n-1.

Cotangents never become floats: with u_r = 1/2 + (i/2) cot(r pi/n) we have
cot(r pi/n) = -i (2 u_r - 1), so every even power of a cotangent is an
element of Q(zeta_n).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import factorial

from .cyclotomic import CycloElement, as_rational, make_context, real_part_rational
from .errors import DomainError
from .exact import bernoulli, binomial
from .qmzv import Composition, evaluate, u


def power_sum(n: int, t: int) -> CycloElement:
    """p_t(n) = sum_r u_r^t."""
    if n < 2 or t < 1:
        raise DomainError(f"power_sum needs n >= 2 and t >= 1, got n={n}, t={t}")
    ctx = make_context(n)
    acc = ctx.zero()
    for r in range(1, n):
        acc = acc + u(ctx, r) ** t
    return acc


@dataclass(frozen=True)
class SymmetricBasis:
    n: int
    power_sums: tuple[CycloElement, ...]  # p_1 .. p_K
    elementary: tuple[CycloElement, ...]  # e_1 .. e_K

    def e(self, k: int) -> CycloElement:
        if k == 0:
            return make_context(self.n).one()
        return self.elementary[k - 1]

    def p(self, k: int) -> CycloElement:
        return self.power_sums[k - 1]


def elementary(n: int, k_max: int) -> SymmetricBasis:
    """e_1..e_{k_max} from the power sums by Newton's identities
    k e_k = sum_{i=1}^{k} (-1)^(i-1) e_{k-i} p_i."""
    if n < 2:
        raise DomainError(f"elementary needs n >= 2, got {n}")
    if not 1 <= k_max <= n - 1:
        raise DomainError(f"k_max must lie in 1..{n - 1}, got {k_max}")
    ps = [power_sum(n, t) for t in range(1, k_max + 1)]
    es = [make_context(n).one()]
    for k in range(1, k_max + 1):
        acc = make_context(n).zero()
        for i in range(1, k + 1):
            term = es[k - i] * ps[i - 1]
            acc = acc + term if i % 2 else acc - term
        es.append(acc * Fraction(1, k))
    return SymmetricBasis(n, tuple(ps), tuple(es[1:]))


def _cot_even_power_sum(n: int, u_: int) -> CycloElement:
    ctx = make_context(n)
    acc = ctx.zero()
    for r in range(1, n):
        acc = acc + (u(ctx, r) * 2 - 1) ** (2 * u_)
    return acc * (-1) ** u_


def cot_sum_exact(n: int, u_: int) -> Fraction:
    """S_{2u}(n) = sum_{r=1}^{n-1} cot^{2u}(r pi/n), exactly.

    The exponent is 2u by construction, so the choice of square root of -1
    does not matter.
    """
    if n < 2 or u_ < 0:
        raise DomainError(f"cot_sum_exact needs n >= 2 and u >= 0, got n={n}, u={u_}")
    if u_ == 0:
        return Fraction(n - 1)
    value = _cot_even_power_sum(n, u_)
    try:
        return as_rational(value)
    except Exception as exc:  # pragma: no cover - would be an arithmetic bug
        raise AssertionError(f"cotangent power sum S_{2 * u_}({n}) is not rational") from exc


def _weak_compositions(total: int, parts: int):
    """All tuples of ``parts`` non-negative ints summing to ``total``."""
    # stars and bars: choose positions of parts-1 bars among total+parts-1 slots
    for bars in combinations_with_replacement(range(total + 1), parts - 1):
        prev = 0
        out = []
        for b in bars:
            out.append(b - prev)
            prev = b
        out.append(total - prev)
        yield tuple(out)


def cot_sum_bernoulli(n: int, u_: int) -> Fraction:
    """S_{2u}(n) from the Bernoulli-number expansion

        (-1)^u n - (-1)^u 2^{2u} sum_{j_0+...+j_{2u}=u} n^{2 j_0} prod_r B_{2 j_r}/(2 j_r)!
    """
    if n < 2 or u_ < 1:
        raise DomainError(f"cot_sum_bernoulli needs n >= 2 and u >= 1, got n={n}, u={u_}")
    B = bernoulli(2 * u_)
    weights = [B[2 * j] / factorial(2 * j) for j in range(u_ + 1)]
    total = Fraction(0)
    for js in _weak_compositions(u_, 2 * u_ + 1):
        term = Fraction(n) ** (2 * js[0])
        for j in js:
            term *= weights[j]
        total += term
    sign = (-1) ** u_
    return sign * n - sign * 2 ** (2 * u_) * total


def power_sum_via_cot(n: int, t: int) -> Fraction:
    """p_t(n) = 2^{-t} sum_{u=0}^{t//2} C(t, 2u) (-1)^u S_{2u}(n)."""
    if n < 2 or t < 1:
        raise DomainError(f"power_sum_via_cot needs n >= 2 and t >= 1, got n={n}, t={t}")
    acc = Fraction(0)
    for k in range(t // 2 + 1):
        acc += binomial(t, 2 * k) * (-1) ** k * cot_sum_exact(n, k)
    return acc / 2 ** t


def q_m_element(n: int, m: int) -> CycloElement:
    """(e_1 e_m - (m+1) e_{m+1}) / m as a field element."""
    if n < 2 or not 1 <= m <= n - 2:
        raise DomainError(f"q_m needs n >= 2 and 1 <= m <= n-2, got n={n}, m={m}")
    basis = elementary(n, m + 1)
    return (basis.e(1) * basis.e(m) - basis.e(m + 1) * (m + 1)) * Fraction(1, m)


def q_m(n: int, m: int) -> Fraction:
    """Average Q_m(n) of the (1^{j-1}, 2, 1^{m-j}) values; rational."""
    return as_rational(q_m_element(n, m))


def q_m_average(n: int, m: int) -> CycloElement:
    """(1/m) sum_j Z_n(1^{j-1}, 2, 1^{m-j}), by direct evaluation."""
    ctx = make_context(n)
    acc = ctx.zero()
    for j in range(1, m + 1):
        acc = acc + evaluate(n, n, Composition.one_two_one(j - 1, m - j)).element(ctx)
    return acc * Fraction(1, m)


def r_m(n: int, m: int, j: int = 1) -> Fraction:
    """Re Z_n(1^{j-1}, 2, 1^{m-j}); zero when the sum is empty (n <= m)."""
    value = evaluate(n, n, Composition.one_two_one(j - 1, m - j))
    if value.value is None:
        return Fraction(0)
    return real_part_rational(value.value)
