"""Rational functions in s (s**2 == q) and eps.

Canonical form: ``num / (eps**k * d(s))`` where ``num`` is a
:class:`LaurentScalar`, ``d`` is a monic polynomial in s with nonzero
constant term, and the fraction is fully cancelled.  Laurent units
``s**a`` always live in the numerator, so the denominator of a Laurent
polynomial is exactly 1.

Denominators are restricted to a power of eps times a polynomial in s.
That covers every quotient the algebra constructions need; dividing by a
scalar that mixes eps-degrees raises :class:`UnsupportedScalar`.
"""

from fractions import Fraction

from ..errors import DivisionByZero, NegativeEpsilonPower, UnsupportedScalar
from . import upoly
from .laurent import LaurentScalar

_ONE_POLY = (Fraction(1),)


def _slice_to_poly(slice_, shift):
    top = max(slice_) - shift
    out = [Fraction(0)] * (top + 1)
    for sp, c in slice_.items():
        out[sp - shift] = c
    return tuple(out)


def _poly_to_laurent(p, s_shift=0, eps_power=0):
    return LaurentScalar._raw({(i + s_shift, eps_power): c for i, c in enumerate(p) if c})


class RationalFunction:
    __slots__ = ("num", "den_eps", "den_poly", "_hash")

    def __init__(self, num=0, den=None):
        if not isinstance(num, LaurentScalar):
            num = LaurentScalar.constant(num)
        if den is None:
            self._set(num, 0, _ONE_POLY)
            return
        if not isinstance(den, LaurentScalar):
            den = LaurentScalar.constant(den)
        k, s_shift, poly = _split_denominator(den)
        self._set(*_normalize(num.shift(-s_shift), k, poly))

    def _set(self, num, k, poly):
        self.num = num
        self.den_eps = k
        self.den_poly = poly
        self._hash = None

    @classmethod
    def _make(cls, num, k, poly):
        obj = cls.__new__(cls)
        obj._set(*_normalize(num, k, poly))
        return obj

    @classmethod
    def _laurent(cls, num):
        obj = cls.__new__(cls)
        obj._set(num, 0, _ONE_POLY)
        return obj

    # -- structure -----------------------------------------------------

    @property
    def den(self):
        return _poly_to_laurent(self.den_poly, 0, self.den_eps)

    def is_laurent(self):
        return self.den_eps == 0 and self.den_poly == _ONE_POLY

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return (self.num == other.num and self.den_eps == other.den_eps
                    and self.den_poly == other.den_poly)
        if isinstance(other, (LaurentScalar, int, Fraction)):
            return self.is_laurent() and self.num == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_laurent():
                self._hash = hash(self.num)
            else:
                self._hash = hash((self.num, self.den_eps, self.den_poly))
        return self._hash

    def __repr__(self):
        if self.is_laurent():
            return f"RationalFunction({self.num!r})"
        return f"RationalFunction({self.num!r}, {self.den!r})"

    # -- arithmetic ----------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, LaurentScalar):
            return RationalFunction._laurent(other)
        if isinstance(other, (int, Fraction)):
            return RationalFunction._laurent(LaurentScalar.constant(other))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_laurent() and o.is_laurent():
            return RationalFunction._laurent(self.num + o.num)
        k = max(self.den_eps, o.den_eps)
        g = upoly.gcd(self.den_poly, o.den_poly)
        cof_a = upoly.divmod_(o.den_poly, g)[0]
        cof_b = upoly.divmod_(self.den_poly, g)[0]
        lcm = upoly.mul(self.den_poly, cof_a)
        num = (self.num * _poly_to_laurent(cof_a, 0, k - self.den_eps)
               + o.num * _poly_to_laurent(cof_b, 0, k - o.den_eps))
        return RationalFunction._make(num, k, lcm)

    __radd__ = __add__

    def __neg__(self):
        obj = RationalFunction.__new__(RationalFunction)
        obj._set(-self.num, self.den_eps, self.den_poly)
        return obj

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_laurent() and o.is_laurent():
            return RationalFunction._laurent(self.num * o.num)
        return RationalFunction._make(self.num * o.num, self.den_eps + o.den_eps,
                                      upoly.mul(self.den_poly, o.den_poly))

    __rmul__ = __mul__

    def invert(self):
        if not self.num:
            raise DivisionByZero("inverse of zero")
        k, s_shift, poly = _split_denominator(self.num)
        new_num = _poly_to_laurent(self.den_poly, -s_shift, self.den_eps)
        return RationalFunction._make(new_num, k, poly)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.invert()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.invert()

    def __pow__(self, e):
        if e < 0:
            return self.invert() ** (-e)
        out = RationalFunction(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def eval_epsilon(self, value):
        """Substitute eps -> value (a rational); ``value == 0`` is the contraction limit."""
        if self.den_eps:
            raise NegativeEpsilonPower("eps occurs in the denominator")
        return RationalFunction._make(self.num.eval_epsilon(value), 0, self.den_poly)

    def has_epsilon(self):
        return self.den_eps > 0 or any(ep for (_, ep) in self.num.terms)


def _split_denominator(den):
    """Write ``den`` as eps**k * s**shift * poly(s) with poly(0) != 0."""
    if not den:
        raise DivisionByZero("zero denominator")
    slices = den.eps_slices()
    if len(slices) != 1:
        raise UnsupportedScalar("denominator must be an eps-power times a polynomial in s")
    (k, slice_), = slices.items()
    shift = min(slice_)
    return k, shift, _slice_to_poly(slice_, shift)


def _normalize(num, k, poly):
    if not num:
        return num, 0, _ONE_POLY
    if k == 0 and poly == _ONE_POLY:
        return num, 0, poly
    if k:
        cut = min(k, min(ep for (_, ep) in num.terms))
        if cut:
            num = num.shift(0, -cut)
            k -= cut
    if len(poly) > 1:
        slices = num.eps_slices()
        shifts = {ep: min(sl) for ep, sl in slices.items()}
        polys = {ep: _slice_to_poly(sl, shifts[ep]) for ep, sl in slices.items()}
        g = poly
        for p in polys.values():
            g = upoly.gcd(g, p)
            if len(g) == 1:
                break
        if len(g) > 1:
            poly = upoly.divmod_(poly, g)[0]
            num = LaurentScalar._raw({})
            for ep, p in polys.items():
                num = num + _poly_to_laurent(upoly.divmod_(p, g)[0], shifts[ep], ep)
    lead = poly[-1]
    if lead != 1:
        poly = tuple(c / lead for c in poly)
        inv = 1 / Fraction(lead)
        num = LaurentScalar._raw({key: c * inv for key, c in num.items()})
    return num, k, poly
