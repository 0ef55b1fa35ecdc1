"""Exact scalar arithmetic: rationals, Laurent polynomials in s = q**(1/2) and eps,
rational functions, and cyclotomic fields for roots of unity."""

from fractions import Fraction as Rational

from .cyclotomic import CycloElement, cyclotomic_polynomial
from .domain import CoeffDomain, eval_epsilon, invert, specialize
from .epspoly import EpsPolynomial
from .laurent import EPS, ONE, Q, Q_INV, S, S_INV, ZERO, LaurentScalar
from .ratfunc import RationalFunction

__all__ = [
    "Rational", "LaurentScalar", "RationalFunction", "CycloElement", "EpsPolynomial",
    "CoeffDomain", "cyclotomic_polynomial", "specialize", "invert", "eval_epsilon",
    "S", "S_INV", "Q", "Q_INV", "EPS", "ONE", "ZERO",
]
