import json
from fractions import Fraction

import pytest

from qzeta.closed_forms import (
    PAIR_2K,
    PAIR_2K_DISPLAY,
    SINGLE_S,
    SINGLE_S_DISPLAY,
    STAR_DISPLAY,
    STAR_ENTRIES,
    theorem_pair_rhs,
)
from qzeta.discover import discover, factored_string
from qzeta.errors import DomainError, NotRational
from qzeta.exact import RationalPolynomial

X = RationalPolynomial.x()


def test_factored_string_shapes():
    assert factored_string(RationalPolynomial()) == "0"
    assert factored_string(RationalPolynomial([7])) == "7"
    assert factored_string(RationalPolynomial([Fraction(-1, 24)])) == "-1/24"
    assert factored_string((X - 3) ** 2) == "(n-3)^2"
    assert factored_string(X * (X + 2) / 5) == "n(n+2)/5"
    assert factored_string(-(X + 1) * (X - 1) * (X ** 2 - 7) / 144) == "-(n+1)(n-1)(n^2-7)/144"
    assert factored_string(3 * (X - 1) * (2 * X - 3)) == "3(n-1)(2n-3)"


@pytest.mark.parametrize("s", sorted(SINGLE_S))
def test_catalog_display_strings_single_s(s):
    assert factored_string(SINGLE_S[s]) == SINGLE_S_DISPLAY[s]


@pytest.mark.parametrize("k", sorted(PAIR_2K))
def test_catalog_display_strings_pairs(k):
    assert factored_string(PAIR_2K[k]) == PAIR_2K_DISPLAY[k]


def test_catalog_display_strings_star():
    for (_, _, poly), text in zip(STAR_ENTRIES, STAR_DISPLAY):
        assert factored_string(poly) == text


def test_discover_examples():
    r = discover((2,))
    assert r.factored == "-(n-1)(n-5)/12"
    assert r.integer_roots == [1, 5] and r.holdout_verified
    r = discover((1, 2), mode="pair")
    assert r.factored == "-(n-1)(n-2)(n-7)/24"
    r = discover((1, 1, 2), mode="re")
    assert r.polynomial == -(X - 1) * (X - 2) * (X - 3) * (X - 9) / 240
    # cross-check against the pair-sum formula at m = 3
    assert all(r.polynomial(n) == theorem_pair_rhs(n, 3) / 2 for n in range(1, 20))


@pytest.mark.parametrize("a,b", [(a, m - 1 - a) for m in range(2, 6) for a in range(m)])
def test_real_part_degree_is_m_plus_one(a, b):
    idx = (1,) * a + (2,) + (1,) * b
    r = discover(idx, mode="re")
    assert r.holdout_verified and r.certified_degree == a + b + 2


def test_discover_rejects_irrational_full_value():
    with pytest.raises(NotRational):
        discover((1, 2), mode="full")
    with pytest.raises(DomainError):
        discover((2,), mode="bogus")


def test_holdout_detects_a_non_polynomial():
    # too few samples for the degree-8 family: interpolant fails on holdout
    r = discover((9,), n_sample_max=5)
    assert not r.holdout_verified


def test_discovery_json():
    obj = json.loads(json.dumps(discover((3,)).to_json()))
    assert obj["factored"] == "-(n-1)(n-3)/8"
    assert obj["integer_roots"] == [1, 3]
    assert obj["holdout_verified"] is True and obj["certified_degree"] == 2
    assert obj["coefficients"] == ["-3/8", "1/2", "-1/8"]
