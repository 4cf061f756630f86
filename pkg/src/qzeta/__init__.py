"""Exact finite q-multiple zeta values at roots of unity."""
from .cyclotomic import (
    CycloContext,
    CycloElement,
    as_rational,
    conjugate,
    invert,
    make_context,
    real_part,
    real_part_rational,
    root_power,
)
from .errors import DomainError, MixedOrderError, NotRational
from .exact import (
    BernoulliTable,
    RationalPolynomial,
    bernoulli,
    binomial,
    hessenberg_determinant,
    integer_root_factorization,
    lagrange_interpolate,
)
from .qmzv import Composition, ZetaValue, evaluate, evaluate_t, reverse, u
from .closed_forms import VerificationReport, catalog, verify, verify_all
# bound last so the function, not the submodule, is qzeta.discover
from .discover import DiscoveryResult, discover, factored_string

__version__ = "0.1.0"
