"""Catalog of closed-form identities for q-multiple zeta values at roots of
unity, and a harness that checks each one by direct exact evaluation.

Every identity is a pair of recipes ``lhs(point)`` and ``rhs(point)`` over
parameter points (dicts such as ``{"n": 7, "s": 2}``). Values are
Fractions, cyclotomic elements or rational polynomials; comparison is exact
``==`` with no tolerance.
"""
from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Any, Callable, Optional

from .cyclotomic import (
    CycloElement,
    as_rational,
    conjugate,
    make_context,
    real_part_rational,
)
from .errors import DomainError, NotRational
from .exact import (
    RationalPolynomial,
    binomial,
    format_rational,
    hessenberg_determinant,
)
from .qmzv import Composition, evaluate, evaluate_t, reverse, u

X = RationalPolynomial.x()
P = RationalPolynomial

# Z_n(zeta_n; s) for s = 2..9
SINGLE_S = {
    2: -(X - 1) * (X - 5) / 12,
    3: -(X - 1) * (X - 3) / 8,
    4: (X - 1) * P([251, -109, 1, 1]) / factorial(6),
    5: (X - 1) * (X - 5) * P([-19, 6, 1]) / 288,
    6: -(X - 1) * P([-19087, 11153, -355, -355, 2, 2]) / (12 * factorial(7)),
    7: -(X - 1) * (X - 7) * P([751, -376, -33, 16, 2]) / (24 * factorial(6)),
    8: (X - 1) * P([1070017, -744383, 39697, 39697, -917, -917, 3, 3]) / factorial(10),
    9: 27 * (X - 1) * (X - 3) * (X - 9) * P([2857, -851, -350, 10, 13, 1]) / (2 * factorial(10)),
}

# Z_n(2, k) + Z_n(k, 2) for k = 3..7
PAIR_2K = {
    3: (X - 1) * (X - 2) * (X - 5) * (X - 7) / 144,
    4: -(X - 1) * (X - 2) * P([-13936, 5787, -469, -27, 5]) / (12 * factorial(7)),
    5: -(X - 1) * (X - 2) * (X - 3) * P([424, -61, -4, 1]) / (8 * factorial(6)),
    # sign corrected: the printed display has a leading minus
    6: (X - 1) * (X - 2) * P([773596, -411111, 33743, 7950, -946, -39, 7]) / factorial(10),
    7: (X - 1) * (X - 2) * P([1501364, -870339, 73587, 23910, -2514, -291, 43]) / (2 * factorial(10)),
}

# star identities: (index, partner index or None, rhs)
STAR_ENTRIES = (
    ((1, 2), (2, 1), -(X + 1) * (X - 1) * (X - 4) / 24),
    ((1, 1, 2), (2, 1, 1), -(X + 1) * (X - 1) * P([-64, 15, 1]) / 720),
    ((1, 2, 1), None, -(X + 1) * (X - 1) * (X + 3) * (X - 3) / 240),
    ((1, 1, 1, 2), (2, 1, 1, 1), (X + 1) * (X - 1) * (X + 4) * (X - 3) * (X - 7) / 1440),
    ((1, 1, 2, 1), (1, 2, 1, 1), -(X + 1) * (X - 1) * P([-7, 0, 1]) / 144),
    ((1, 1, 1, 1, 2), (2, 1, 1, 1, 1), (X + 1) * (X - 1) * P([2564, -567, -334, 63, 2]) / 60480),
    ((1, 1, 1, 2, 1), (1, 2, 1, 1, 1), (X + 1) * (X - 1) * P([710, 0, -137, 0, 3]) / 20160),
    ((1, 1, 2, 1, 1), None, (X + 1) * (X - 1) * P([1051, 0, -188, 0, 1]) / 60480),
)

# canonical factored strings (see discover.factored_string)
SINGLE_S_DISPLAY = {
    2: "-(n-1)(n-5)/12",
    3: "-(n-1)(n-3)/8",
    4: "(n-1)(n^3+n^2-109n+251)/720",
    5: "(n-1)(n-5)(n^2+6n-19)/288",
    6: "-(n-1)(2n^5+2n^4-355n^3-355n^2+11153n-19087)/60480",
    7: "-(n-1)(n-7)(2n^4+16n^3-33n^2-376n+751)/17280",
    8: "(n-1)(3n^7+3n^6-917n^5-917n^4+39697n^3+39697n^2-744383n+1070017)/3628800",
    9: "(n-1)(n-3)(n-9)(n^5+13n^4+10n^3-350n^2-851n+2857)/268800",
}
PAIR_2K_DISPLAY = {
    3: "(n-1)(n-2)(n-5)(n-7)/144",
    4: "-(n-1)(n-2)(5n^4-27n^3-469n^2+5787n-13936)/60480",
    5: "-(n-1)(n-2)(n-3)(n^3-4n^2-61n+424)/5760",
    6: "(n-1)(n-2)(7n^6-39n^5-946n^4+7950n^3+33743n^2-411111n+773596)/3628800",
    7: "(n-1)(n-2)(43n^6-291n^5-2514n^4+23910n^3+73587n^2-870339n+1501364)/7257600",
}
STAR_DISPLAY = (
    "-(n+1)(n-1)(n-4)/24",
    "-(n+1)(n-1)(n^2+15n-64)/720",
    "-(n+1)(n-1)(n+3)(n-3)/240",
    "(n+1)(n-1)(n-3)(n+4)(n-7)/1440",
    "-(n+1)(n-1)(n^2-7)/144",
    "(n+1)(n-1)(2n^4+63n^3-334n^2-567n+2564)/60480",
    "(n+1)(n-1)(3n^4-137n^2+710)/20160",
    "(n+1)(n-1)(n^4-188n^2+1051)/60480",
)

STUFFLE3_FINAL = -(X - 1) * (X - 2) * (X - 3) * (X - 9) / 40
STUFFLE4_FINAL = -(X - 1) * (X - 2) * (X - 3) * (X - 4) * (X - 11) / 60


def Z(n: int, *parts: int, star: bool = False) -> CycloElement:
    """Z_n(zeta_n; parts) as an element of Q(zeta_n), n >= 2."""
    return evaluate(n, n, parts, star).element(make_context(n))


def theorem_pair_rhs(n: int, m: int) -> Fraction:
    """-m!(n-2m-3)/(m+2)! * C(n-1, m)."""
    return -Fraction(factorial(m) * (n - 2 * m - 3), factorial(m + 2)) * binomial(n - 1, m)


def single_s_matrix(n: int, s: int) -> list[list[Fraction]]:
    """The s x s lower-Hessenberg matrix whose determinant is Z_n(s).

    Row i (1-based): first column (i/(i+1)) C(n-1, i), column j >= 2
    C(n-1, i-j+1)/(i-j+2), superdiagonal 1.
    """
    rows = []
    for i in range(1, s + 1):
        row = []
        for j in range(1, s + 1):
            if j == 1:
                row.append(Fraction(i, i + 1) * binomial(n - 1, i))
            elif j <= i + 1:
                row.append(binomial(n - 1, i - j + 1) / (i - j + 2))
            else:
                row.append(Fraction(0))
        rows.append(row)
    return rows


def stuffle3(n: int, s1: int, s2: int, s3: int) -> tuple[CycloElement, CycloElement]:
    """Both sides of the depth-3 symmetric sum identity."""
    lhs = (
        Z(n, s1, s2, s3) + Z(n, s1, s3, s2) + Z(n, s2, s1, s3)
        + Z(n, s2, s3, s1) + Z(n, s3, s1, s2) + Z(n, s3, s2, s1)
    )
    rhs = (
        Z(n, s1) * Z(n, s2) * Z(n, s3)
        - Z(n, s1 + s2) * Z(n, s3) - Z(n, s1 + s3) * Z(n, s2)
        - Z(n, s2 + s3) * Z(n, s1) + Z(n, s1 + s2 + s3) * 2
    )
    return lhs, rhs


def _permutations(seq):
    if len(seq) <= 1:
        yield tuple(seq)
        return
    for i in range(len(seq)):
        for rest in _permutations(seq[:i] + seq[i + 1:]):
            yield (seq[i],) + rest


def stuffle4(n: int, s1: int, s2: int, s3: int, s4: int) -> tuple[CycloElement, CycloElement]:
    """Both sides of the depth-4 symmetric sum identity (24 orderings)."""
    ctx = make_context(n)
    lhs = ctx.zero()
    for perm in _permutations((s1, s2, s3, s4)):
        lhs = lhs + Z(n, *perm)
    z = lambda *a: Z(n, sum(a))  # noqa: E731
    rhs = (
        z(s1) * z(s2) * z(s3) * z(s4)
        - z(s1, s2) * z(s3) * z(s4) - z(s1, s3) * z(s2) * z(s4)
        - z(s1, s4) * z(s2) * z(s3) - z(s2, s3) * z(s1) * z(s4)
        - z(s2, s4) * z(s1) * z(s3) - z(s3, s4) * z(s1) * z(s2)
        + z(s1, s2) * z(s3, s4) + z(s1, s3) * z(s2, s4) + z(s1, s4) * z(s2, s3)
        + (z(s1, s2, s3) * z(s4) + z(s1, s2, s4) * z(s3)
           + z(s1, s3, s4) * z(s2) + z(s2, s3, s4) * z(s1)) * 2
        - z(s1, s2, s3, s4) * 6
    )
    return lhs, rhs


def t_generating_polynomials(n: int, M: int) -> tuple[RationalPolynomial, RationalPolynomial]:
    """sum_{m<=M} T_n(zeta_{(m+1)n}; m) X^m and the degree-<=M truncation
    of ((X+1)^(n+1) - 1)/((n+1) X)."""
    lhs = RationalPolynomial([as_rational(evaluate_t(n, m)) for m in range(M + 1)])
    closed = (((X + 1) ** (n + 1)) - 1) / ((n + 1) * X)
    rhs = RationalPolynomial(closed.coefficients[: M + 1])
    return lhs, rhs


# ---------------------------------------------------------------- catalog


@dataclass(frozen=True)
class Identity:
    id: str
    description: str
    kind: str  # "rational-equality" | "real-part-equality" | "element-equality"
    lhs: Callable[[dict], Any]
    rhs: Callable[[dict], Any]
    grid: Callable[[], list[dict]]
    domain: Callable[[dict], bool]
    depth: Callable[[dict], Optional[int]] = lambda p: None


def _random_compositions(seed: int, count: int, depth_range, part_max: int) -> list[tuple[int, ...]]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        d = rng.randint(*depth_range)
        out.append(tuple(rng.randint(1, part_max) for _ in range(d)))
    return out


def _points_c6() -> list[dict]:
    rng = random.Random(2022)
    pts = []
    for _ in range(200):
        d = rng.randint(1, 4)
        s = tuple(rng.randint(1, 4) for _ in range(d))
        pts.append({"n": rng.randint(2, 15), "s": s})
    return pts


def _c8_lhs(p):
    n = p["n"]
    if "s" in p:
        return stuffle3(n, *p["s"])[0]
    if p["form"] == "display":
        return (Z(n, 1, 1, 2) + Z(n, 2, 1, 1) + Z(n, 1, 2, 1)) * 2
    # the middle line of the display
    z1, z2, z3, z4 = Z(n, 1), Z(n, 2), Z(n, 3), Z(n, 4)
    return z1 * z1 * z2 - z2 * z2 - z1 * z3 * 2 + z4 * 2


def _c8_rhs(p):
    if "s" in p:
        return stuffle3(p["n"], *p["s"])[1]
    return STUFFLE3_FINAL(p["n"])


def _c9_lhs(p):
    n = p["n"]
    if "s" in p:
        return stuffle4(n, *p["s"])[0]
    if p["form"] == "display":
        return (Z(n, 1, 1, 1, 2) + Z(n, 1, 1, 2, 1) + Z(n, 1, 2, 1, 1) + Z(n, 2, 1, 1, 1)) * 6
    # the printed middle line has -3 Z(1)(Z(2)^2 - Z(4)); expanding the
    # 24-term identity at (1,1,1,2) gives +6 Z(1)Z(4), i.e. the 2 below
    z1, z2, z3, z4, z5 = (Z(n, k) for k in range(1, 6))
    return (
        z1 ** 3 * z2 - z1 * z1 * z3 * 3 + z2 * z3 * 5
        - z1 * (z2 * z2 - z4 * 2) * 3 - z5 * 6
    )


def _c9_rhs(p):
    if "s" in p:
        return stuffle4(p["n"], *p["s"])[1]
    return STUFFLE4_FINAL(p["n"])


def _c10_lhs(p):
    n = p["n"]
    z = Z(n, *((1,) * (n - 2) + (2,)))
    return z if p["part"] == "element" else real_part_rational(z)


def _c10_rhs(p):
    n = p["n"]
    if p["part"] == "element":
        return u(make_context(n), n - 1) * Fraction(1, n)
    return Fraction(1, 2 * n)


def _c11_lhs(p):
    n = p["n"]
    z = Z(n, *((1,) * (n - 3) + (2,)))
    return z if p["part"] == "element" else real_part_rational(z)


def _c11_rhs(p):
    n = p["n"]
    if p["part"] == "real":
        return Fraction(n - 1, 2 * n)
    # (1/n)/(1 + zeta^{-1}) + u_{n-1} - 1/n
    ctx = make_context(n)
    return (ctx.one() + ctx.zeta_power(-1)) ** -1 * Fraction(1, n) + u(ctx, n - 1) - Fraction(1, n)


def _c13_lhs(p):
    n = p["n"]
    a, b, _ = STAR_ENTRIES[p["entry"]]
    value = Z(n, *a, star=True)
    if b is not None:
        value = value + Z(n, *b, star=True)
    return as_rational(value)


def _splits(m_max: int):
    for m in range(2, m_max + 1):
        for a in range(m):
            yield a, m - 1 - a


def _one_two_one(p) -> tuple[int, ...]:
    return Composition.one_two_one(p["a"], p["b"]).parts


def _build_catalog() -> tuple[Identity, ...]:
    ids = []
    ids.append(Identity(
        "C1", "Z_n(1^m) = C(n-1, m)/(m+1)", "rational-equality",
        lambda p: as_rational(Z(p["n"], *(1,) * p["m"])),
        lambda p: binomial(p["n"] - 1, p["m"]) / (p["m"] + 1),
        lambda: [{"n": n, "m": m} for m in range(1, 7) for n in range(2, 31)],
        lambda p: p["n"] >= 2 and p["m"] >= 1,
        lambda p: p["m"],
    ))
    ids.append(Identity(
        "C2", "Z_n(s) closed forms, s = 2..9", "rational-equality",
        lambda p: as_rational(Z(p["n"], p["s"])),
        lambda p: SINGLE_S[p["s"]](p["n"]),
        lambda: [{"n": n, "s": s} for s in range(2, 10) for n in range(2, 26)],
        lambda p: p["n"] >= 2 and p["s"] in SINGLE_S,
        lambda p: 1,
    ))
    ids.append(Identity(
        "C3", "Hessenberg determinant formula for Z_n(s)", "rational-equality",
        lambda p: hessenberg_determinant(single_s_matrix(p["n"], p["s"])),
        lambda p: as_rational(Z(p["n"], p["s"])),
        lambda: [{"n": n, "s": s} for s in range(2, 10) for n in range(2, 16)],
        lambda p: p["n"] >= 2 and p["s"] >= 1,
        lambda p: 1,
    ))
    ids.append(Identity(
        "C4", "Z(1^a,2,1^b) + Z(1^b,2,1^a) = -m!(n-2m-3)/(m+2)! C(n-1,m)", "rational-equality",
        lambda p: as_rational(Z(p["n"], *_one_two_one(p)) + Z(p["n"], *_one_two_one(p)[::-1])),
        lambda p: theorem_pair_rhs(p["n"], p["a"] + p["b"] + 1),
        lambda: [{"n": n, "a": a, "b": b} for a, b in _splits(5) for n in range(2, 16)],
        lambda p: p["n"] >= 2 and p["a"] >= 0 and p["b"] >= 0 and p["a"] + p["b"] >= 1,
        lambda p: p["a"] + p["b"] + 1,
    ))
    ids.append(Identity(
        "C5", "Re Z(1^a,2,1^b) = -m!(n-2m-3)/(2(m+2)!) C(n-1,m)", "real-part-equality",
        lambda p: real_part_rational(Z(p["n"], *_one_two_one(p))),
        lambda p: theorem_pair_rhs(p["n"], p["a"] + p["b"] + 1) / 2,
        lambda: [{"n": n, "a": a, "b": b} for a, b in _splits(5) for n in range(2, 16)],
        lambda p: p["n"] >= 2 and p["a"] >= 0 and p["b"] >= 0 and p["a"] + p["b"] >= 1,
        lambda p: p["a"] + p["b"] + 1,
    ))
    ids.append(Identity(
        "C6", "conj Z(s) = Z(reverse s)", "element-equality",
        lambda p: conjugate(Z(p["n"], *p["s"])),
        lambda p: Z(p["n"], *reverse(Composition(p["s"])).parts),
        _points_c6,
        lambda p: p["n"] >= 2 and len(p["s"]) >= 1,
        lambda p: len(p["s"]),
    ))
    ids.append(Identity(
        "C7", "Z(s1,s2) + Z(s2,s1) = Z(s1)Z(s2) - Z(s1+s2); (1,2) gives -(n-1)(n-2)(n-7)/24",
        "element-equality",
        lambda p: (Z(p["n"], *p["s"]) + Z(p["n"], *p["s"][::-1])) if "s" in p
        else as_rational(Z(p["n"], 1, 2) + Z(p["n"], 2, 1)),
        lambda p: (Z(p["n"], p["s"][0]) * Z(p["n"], p["s"][1]) - Z(p["n"], sum(p["s"]))) if "s" in p
        else -(p["n"] - 1) * (p["n"] - 2) * Fraction(p["n"] - 7, 24),
        lambda: [{"n": n, "s": (a, b)} for a in range(1, 5) for b in range(1, 5) for n in range(2, 21)]
        + [{"n": n, "form": "display"} for n in range(2, 21)],
        lambda p: p["n"] >= 2,
        lambda p: 2,
    ))
    ids.append(Identity(
        "C8", "depth-3 symmetric sum; (1,1,2) gives -(n-1)(n-2)(n-3)(n-9)/40", "element-equality",
        _c8_lhs, _c8_rhs,
        lambda: [{"n": n, "s": s}
                 for s in [(1, 1, 2)] + _random_compositions(3, 50, (3, 3), 3) for n in range(2, 13)]
        + [{"n": n, "form": f} for f in ("display", "middle") for n in range(2, 13)],
        lambda p: p["n"] >= 2,
        lambda p: 3,
    ))
    ids.append(Identity(
        "C9", "depth-4 symmetric sum; (1,1,1,2) gives -(n-1)(n-2)(n-3)(n-4)(n-11)/60",
        "element-equality",
        _c9_lhs, _c9_rhs,
        lambda: [{"n": n, "s": s}
                 for s in [(1, 1, 1, 2)] + _random_compositions(4, 50, (4, 4), 3) for n in range(2, 13)]
        + [{"n": n, "form": f} for f in ("display", "middle") for n in range(2, 13)],
        lambda p: p["n"] >= 2,
        lambda p: 4,
    ))
    ids.append(Identity(
        "C10", "m = n-1: Z_n(1^{n-2},2) = u_{n-1}/n, real part 1/(2n)", "element-equality",
        _c10_lhs, _c10_rhs,
        lambda: [{"n": n, "part": part} for n in range(3, 21) for part in ("element", "real")],
        lambda p: p["n"] >= 3,
    ))
    ids.append(Identity(
        "C11", "m = n-2: Re Z_n(1^{n-3},2) = (n-1)/(2n)", "real-part-equality",
        _c11_lhs, _c11_rhs,
        lambda: [{"n": n, "part": part} for n in range(3, 21) for part in ("element", "real")],
        lambda p: p["n"] >= 3,
    ))
    ids.append(Identity(
        "C12", "Z(2,k) + Z(k,2) closed forms, k = 3..7", "rational-equality",
        lambda p: as_rational(Z(p["n"], 2, p["k"]) + Z(p["n"], p["k"], 2)),
        lambda p: PAIR_2K[p["k"]](p["n"]),
        lambda: [{"n": n, "k": k} for k in range(3, 8) for n in range(2, 21)],
        lambda p: p["n"] >= 2 and p["k"] in PAIR_2K,
        lambda p: 2,
    ))
    ids.append(Identity(
        "C13", "star-value closed forms (eight displays)", "rational-equality",
        _c13_lhs,
        lambda p: STAR_ENTRIES[p["entry"]][2](p["n"]),
        lambda: [{"n": n, "entry": e} for e in range(len(STAR_ENTRIES)) for n in range(2, 21)],
        lambda p: p["n"] >= 2 and 0 <= p["entry"] < len(STAR_ENTRIES),
        lambda p: len(STAR_ENTRIES[p["entry"]][0]),
    ))
    ids.append(Identity(
        "C14", "T_n(zeta_{(m+1)n}; m) = C(n,m)/(m+1)", "rational-equality",
        lambda p: as_rational(evaluate_t(p["n"], p["m"])),
        lambda p: binomial(p["n"], p["m"]) / (p["m"] + 1),
        lambda: [{"n": n, "m": m} for m in range(1, 5) for n in range(1, 11)],
        lambda p: p["n"] >= 1 and p["m"] >= 1,
        lambda p: p["m"],
    ))
    ids.append(Identity(
        "C15", "sum_m T X^m = ((X+1)^{n+1} - 1)/((n+1)X), coefficientwise", "rational-equality",
        lambda p: t_generating_polynomials(p["n"], p["M"])[0],
        lambda p: t_generating_polynomials(p["n"], p["M"])[1],
        lambda: [{"n": n, "M": n + 2} for n in range(1, 9)],
        lambda p: p["n"] >= 1 and p["M"] >= 0,
    ))
    return tuple(ids)


_CATALOG: Optional[tuple[Identity, ...]] = None


def catalog() -> tuple[Identity, ...]:
    global _CATALOG
    if _CATALOG is None:
        _CATALOG = _build_catalog()
    return _CATALOG


def get_identity(identity_id: str) -> Identity:
    for ident in catalog():
        if ident.id == identity_id:
            return ident
    raise KeyError(f"unknown identity {identity_id!r}")


# ---------------------------------------------------------------- verification


def to_jsonable(value):
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, int) and not isinstance(value, bool):
        return value
    if isinstance(value, CycloElement):
        return value.to_json()
    if isinstance(value, RationalPolynomial):
        return {
            "polynomial": value.to_string("X"),
            "coefficients": [format_rational(c) for c in value.coefficients],
        }
    if isinstance(value, dict):
        return {k: to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    return value


@dataclass
class VerificationReport:
    id: str
    points_tested: list = field(default_factory=list)
    failures: list = field(default_factory=list)  # (point, lhs, rhs)
    elapsed: float = 0.0  # seconds

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "pass": self.passed,
            "points_tested": to_jsonable(self.points_tested),
            "failures": [
                {"point": to_jsonable(p), "lhs": to_jsonable(l), "rhs": to_jsonable(r)}
                for p, l, r in self.failures
            ],
            "ms": round(self.elapsed * 1000, 3),
        }


def verify(identity_id: str, points: Optional[list[dict]] = None) -> VerificationReport:
    """Check one identity at ``points`` (default: its full grid)."""
    ident = get_identity(identity_id)
    if points is None:
        points = ident.grid()
    for p in points:
        if not ident.domain(p):
            raise DomainError(f"point {p} is outside the domain of {identity_id}")
    report = VerificationReport(identity_id)
    start = time.perf_counter()
    for p in points:
        try:
            lhs = ident.lhs(p)
        except NotRational as exc:
            lhs = {"not_rational": exc.coeffs}
        try:
            rhs = ident.rhs(p)
        except NotRational as exc:
            rhs = {"not_rational": exc.coeffs}
        report.points_tested.append(p)
        if isinstance(lhs, dict) or isinstance(rhs, dict) or lhs != rhs:
            report.failures.append((p, lhs, rhs))
    report.elapsed = time.perf_counter() - start
    return report


def default_points(identity_id: str, n_max: int, depth_max: int) -> list[dict]:
    ident = get_identity(identity_id)
    out = []
    for p in ident.grid():
        if p["n"] > n_max:
            continue
        d = ident.depth(p)
        if d is not None and d > depth_max:
            continue
        out.append(p)
    return out


def _verify_clipped(args) -> VerificationReport:
    identity_id, n_max, depth_max = args
    return verify(identity_id, default_points(identity_id, n_max, depth_max))


def verify_all(n_max: int = 15, depth_max: int = 4, parallelism: int = 1) -> list[VerificationReport]:
    """Run every catalog entry on its default grid clipped to n <= n_max and
    depth <= depth_max. Reports come back in catalog order."""
    if n_max < 2:
        raise DomainError("verify_all needs n_max >= 2")
    jobs = [(ident.id, n_max, depth_max) for ident in catalog()]
    if parallelism <= 1:
        return [_verify_clipped(job) for job in jobs]
    with ProcessPoolExecutor(max_workers=parallelism) as pool:
        return list(pool.map(_verify_clipped, jobs))
