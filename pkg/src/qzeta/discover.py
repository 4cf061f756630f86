"""Closed-form discovery by exact interpolation in n.

A family n -> value is sampled at n = 1..K (small n are exact zeros from
empty sums), interpolated, checked on held-out n, and printed in factored
form such as ``-(n-1)(n-5)/12``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Optional

from .cyclotomic import as_rational, real_part_rational
from .errors import DomainError, NotRational
from .exact import (
    RationalPolynomial,
    format_rational,
    integer_root_factorization,
    lagrange_interpolate,
)
from .qmzv import Composition, evaluate, reverse

MODES = {
    "full": "full",
    "full-value": "full",
    "re": "re",
    "real-part": "re",
    "pair": "pair",
    "symmetric-pair": "pair",
}

ROOT_SEARCH_BOUND = 64


def _primitive(p: RationalPolynomial) -> tuple[Fraction, RationalPolynomial]:
    """Split p = c * g with g integral, content 1, positive leading coefficient."""
    den = 1
    for a in p.coefficients:
        den = lcm(den, a.denominator)
    ints = [int(a * den) for a in p.coefficients]
    g = 0
    for a in ints:
        g = gcd(g, a)
    if ints[-1] < 0:
        g = -g
    return Fraction(g, den), RationalPolynomial(Fraction(a, g) for a in ints)


def _root_factor(r: int, var: str) -> str:
    if r == 0:
        return var
    return f"({var}-{r})" if r > 0 else f"({var}+{-r})"


def factored_string(p: RationalPolynomial, var: str = "n", search_bound: int = ROOT_SEARCH_BOUND) -> str:
    """Factored rendering: sign, integer content, integer linear factors
    ordered by |root| (negative root first on ties), one primitive
    cofactor, then the denominator."""
    if p.is_zero():
        return "0"
    roots, rem = integer_root_factorization(p, search_bound)
    factors = []
    seen = sorted(set(roots), key=lambda r: (abs(r), r))
    for r in seen:
        k = roots.count(r)
        f = _root_factor(r, var)
        if k > 1:
            f = f"{f if f.startswith('(') else '(' + f + ')'}^{k}"
        factors.append(f)
    if rem.degree >= 1:
        scale, prim = _primitive(rem)
        factors.append(f"({prim.to_string(var)})")
    else:
        scale = rem.coefficients[0]
    out = "-" if scale < 0 else ""
    scale = abs(scale)
    if scale.numerator != 1 or not factors:
        out += str(scale.numerator)
    out += "".join(factors)
    if scale.denominator != 1:
        out += f"/{scale.denominator}"
    return out


@dataclass
class DiscoveryResult:
    index: Composition
    star: bool
    mode: str
    polynomial: RationalPolynomial
    integer_roots: list[int]
    remainder: RationalPolynomial
    certified_degree: int
    holdout_verified: bool
    samples: list[tuple[int, Fraction]] = field(default_factory=list, repr=False)

    @property
    def factored(self) -> str:
        return factored_string(self.polynomial)

    def to_json(self) -> dict:
        return {
            "index": list(self.index.parts),
            "star": self.star,
            "mode": self.mode,
            "polynomial": self.polynomial.to_string(),
            "coefficients": [format_rational(c) for c in self.polynomial.coefficients],
            "integer_roots": self.integer_roots,
            "remainder": self.remainder.to_string(),
            "certified_degree": self.certified_degree,
            "holdout_verified": self.holdout_verified,
            "factored": self.factored,
        }


def sample(index: Composition, star: bool, mode: str, n: int) -> Fraction:
    """One rational sample of the family at n."""
    mode = MODES[mode]
    z = evaluate(n, n, index, star)
    if mode == "pair":
        z2 = evaluate(n, n, reverse(index), star)
        if z.value is None and z2.value is None:
            return Fraction(0)
        return as_rational(z.element() + z2.element())
    if z.value is None:
        return Fraction(0)
    if mode == "re":
        return real_part_rational(z.value)
    try:
        return as_rational(z.value)
    except NotRational as exc:
        raise NotRational(
            exc.coeffs,
            f"Z_{n}({index}) is not rational; use mode 're' or 'pair'",
        ) from None


def discover(
    index,
    star: bool = False,
    mode: str = "full",
    n_sample_max: Optional[int] = None,
    n_holdout: int = 3,
) -> DiscoveryResult:
    """Interpolate the family over n = 1..n_sample_max and certify the
    result on the next ``n_holdout`` values of n.

    ``n_sample_max`` defaults to weight + 2, one more point than the
    degree bound weight + 1 needs.
    """
    index = index if isinstance(index, Composition) else Composition(index)
    if mode not in MODES:
        raise DomainError(f"unknown discovery mode {mode!r}")
    mode = MODES[mode]
    if n_sample_max is None:
        n_sample_max = index.weight + 2
    if n_sample_max < 1 or n_holdout < 0:
        raise DomainError("need n_sample_max >= 1 and n_holdout >= 0")
    samples = [(n, sample(index, star, mode, n)) for n in range(1, n_sample_max + 1)]
    poly = lagrange_interpolate(samples)
    holdout = range(n_sample_max + 1, n_sample_max + n_holdout + 1)
    verified = all(poly(n) == sample(index, star, mode, n) for n in holdout)
    roots, rem = integer_root_factorization(poly, ROOT_SEARCH_BOUND)
    return DiscoveryResult(
        index=index,
        star=star,
        mode=mode,
        polynomial=poly,
        integer_roots=roots,
        remainder=rem,
        certified_degree=poly.degree,
        holdout_verified=verified,
        samples=samples,
    )
