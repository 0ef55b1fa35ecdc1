"""Coefficient domains and the maps between them."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import (DenominatorVanishes, DivisionByZero, DomainMismatch,
                      NegativeEpsilonPower, UnsupportedN)
from .cyclotomic import CycloElement
from .epspoly import EpsPolynomial
from .laurent import LaurentScalar
from .ratfunc import RationalFunction


def _as_ratfunc(v):
    if isinstance(v, RationalFunction):
        return v
    if isinstance(v, LaurentScalar):
        return RationalFunction._laurent(v)
    if isinstance(v, (int, Fraction)):
        return RationalFunction(v)
    raise TypeError(f"cannot read {type(v).__name__} as a rational function")


def _eval_laurent_at_root(num, conductor):
    """Evaluate a Laurent scalar at s = zeta_conductor; returns {eps_power: CycloElement}."""
    by_eps = {}
    for (sp, ep), c in num.items():
        vec = by_eps.setdefault(ep, [Fraction(0)] * conductor)
        vec[sp % conductor] += c
    return {ep: CycloElement(conductor, vec) for ep, vec in by_eps.items()}


def specialize(v, n, *, with_epsilon=False, strict=True):
    """Map s to a primitive 2n-th root of unity, so q = s**2 is a primitive n-th root.

    Returns a :class:`CycloElement` of conductor 2n, or an
    :class:`EpsPolynomial` over it when ``with_epsilon`` is set.
    ``strict=False`` admits n < 3 (used only for degenerate counterexamples).
    """
    if strict and n < 3:
        raise UnsupportedN(f"roots of unity of order {n} < 3 are excluded")
    if n < 1:
        raise UnsupportedN("order of a root of unity must be positive")
    v = _as_ratfunc(v)
    conductor = 2 * n
    if v.den_eps:
        raise NegativeEpsilonPower("eps occurs in the denominator")
    num = _eval_laurent_at_root(v.num, conductor)
    den = CycloElement(conductor, v.den_poly)
    if not den:
        raise DenominatorVanishes(f"denominator vanishes at a primitive {n}-th root of unity")
    inv = den.invert()
    one = CycloElement.constant(conductor, 1)
    if with_epsilon:
        return EpsPolynomial({ep: c * inv for ep, c in num.items()}, one)
    if any(ep for ep in num):
        raise DomainMismatch("eps appears in a scalar of an eps-free domain")
    return num.get(0, one * 0) * inv


def invert(v):
    """Multiplicative inverse in the scalar's own domain."""
    if isinstance(v, (int, Fraction)):
        if not v:
            raise DivisionByZero("inverse of zero")
        return 1 / Fraction(v)
    if isinstance(v, LaurentScalar):
        if not v:
            raise DivisionByZero("inverse of zero")
        if v.is_monomial():
            return v ** -1
        return RationalFunction._laurent(v).invert()
    return v.invert()


def eval_epsilon(v, value):
    """Substitute eps -> value; value 0 implements the contraction limit."""
    if isinstance(v, (int, Fraction, CycloElement)):
        return v
    return v.eval_epsilon(value)


@dataclass(frozen=True)
class CoeffDomain:
    """Generic q (``root_of_unity=None``) or q a primitive n-th root of unity."""

    root_of_unity: int | None = None
    with_epsilon: bool = False
    strict: bool = True

    def __post_init__(self):
        n = self.root_of_unity
        if n is not None and (n < 1 or (self.strict and n < 3)):
            raise UnsupportedN(f"root-of-unity order must be >= 3, got {n}")

    @classmethod
    def generic(cls, with_epsilon=False):
        return cls(None, with_epsilon)

    @classmethod
    def root(cls, n, with_epsilon=False):
        return cls(n, with_epsilon)

    @property
    def is_generic(self):
        return self.root_of_unity is None

    @property
    def conductor(self):
        return None if self.root_of_unity is None else 2 * self.root_of_unity

    def with_eps(self, flag=True):
        return CoeffDomain(self.root_of_unity, flag, self.strict)

    def describe(self):
        base = "generic" if self.is_generic else f"root-of-unity {self.root_of_unity}"
        return base + (" +eps" if self.with_epsilon else "")

    def coerce(self, v):
        """Bring an int, Fraction, Laurent scalar or rational function into this domain."""
        if self.is_generic:
            if isinstance(v, (CycloElement, EpsPolynomial)):
                raise DomainMismatch("cannot lift a specialized scalar back to generic q")
            r = _as_ratfunc(v)
            if not self.with_epsilon and r.has_epsilon():
                raise DomainMismatch("eps appears in a scalar of an eps-free domain")
            return r
        if isinstance(v, CycloElement):
            if v.conductor != self.conductor:
                raise DomainMismatch("cyclotomic conductor mismatch")
            if self.with_epsilon:
                return EpsPolynomial({0: v}, CycloElement.constant(v.conductor, 1))
            return v
        if isinstance(v, EpsPolynomial):
            if self.with_epsilon:
                return v
            if v.has_epsilon():
                raise DomainMismatch("eps appears in a scalar of an eps-free domain")
            return v.eval_epsilon(0)
        return specialize(v, self.root_of_unity, with_epsilon=self.with_epsilon,
                          strict=self.strict)

    @property
    def zero(self):
        return self.coerce(0)

    @property
    def one(self):
        return self.coerce(1)

    def s(self, power=1):
        return self.coerce(LaurentScalar.monomial(power))

    def eps(self, power=1):
        if not self.with_epsilon:
            raise DomainMismatch("domain has no eps")
        return self.coerce(LaurentScalar.monomial(0, power))

    def owns(self, v):
        if self.is_generic:
            return isinstance(v, RationalFunction)
        if self.with_epsilon:
            return isinstance(v, EpsPolynomial)
        return isinstance(v, CycloElement) and v.conductor == self.conductor
