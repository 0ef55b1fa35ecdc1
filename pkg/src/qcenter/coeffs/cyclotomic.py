"""Exact arithmetic in the cyclotomic field Q(zeta_M) = Q[x] / Phi_M(x).

Elements are stored as an integer coefficient vector of length phi(M)
over a common positive denominator, kept in lowest terms.  Because Phi_M
is monic with integer coefficients, products reduce without leaving Z.
"""

import math
from fractions import Fraction
from functools import lru_cache

from ..errors import DivisionByZero
from . import upoly


def _int_poly_divexact(p, r):
    """Exact quotient of integer polynomials (r monic)."""
    rem = list(p)
    dr = len(r) - 1
    quot = [0] * (len(rem) - dr)
    for k in range(len(rem) - 1, dr - 1, -1):
        c = rem[k]
        if c:
            quot[k - dr] = c
            for i, b in enumerate(r):
                rem[k - dr + i] -= c * b
    if any(rem[:dr]):
        raise ArithmeticError("inexact cyclotomic division")
    return tuple(quot)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(M):
    """Phi_M as a tuple of integers, constant term first."""
    if M < 1:
        raise ValueError("conductor must be a positive integer")
    poly = (-1,) + (0,) * (M - 1) + (1,)
    for d in range(1, M):
        if M % d == 0:
            poly = _int_poly_divexact(poly, cyclotomic_polynomial(d))
    return poly


@lru_cache(maxsize=None)
def _field_data(M):
    phi = cyclotomic_polynomial(M)
    deg = len(phi) - 1
    # rows[k - deg] = x**k mod Phi_M for deg <= k <= 2*deg - 2
    rows = []
    cur = [-c for c in phi[:-1]]
    for _ in range(max(deg - 1, 0)):
        rows.append(tuple(cur))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for i in range(deg):
                cur[i] -= top * phi[i]
    return phi, deg, tuple(rows)


def _reduce_int(vec, M):
    """Reduce an integer vector of any length mod Phi_M."""
    phi, deg, rows = _field_data(M)
    vec = list(vec)
    if len(vec) <= deg:
        return vec + [0] * (deg - len(vec))
    if len(vec) > 2 * deg - 1:
        # fold long vectors with x**M == 1 first
        folded = [0] * M
        for i, c in enumerate(vec):
            folded[i % M] += c
        vec = folded
        if len(vec) <= deg:
            return vec + [0] * (deg - len(vec))
        if len(vec) > 2 * deg - 1:
            fq = upoly.divmod_(tuple(Fraction(c) for c in vec), tuple(Fraction(c) for c in phi))[1]
            out = [int(c) for c in fq]
            return out + [0] * (deg - len(out))
    out = vec[:deg]
    for k in range(deg, len(vec)):
        c = vec[k]
        if c:
            row = rows[k - deg]
            for i in range(deg):
                out[i] += c * row[i]
    return out


class CycloElement:
    __slots__ = ("conductor", "_num", "_den", "_hash")

    def __init__(self, conductor, coeffs=()):
        """Build from rational coefficients of 1, x, x**2, ... (any length)."""
        fr = [Fraction(c) for c in coeffs]
        den = 1
        for c in fr:
            den = den * c.denominator // math.gcd(den, c.denominator)
        ints = [int(c * den) for c in fr]
        self._set(conductor, _reduce_int(ints, conductor), den)

    def _set(self, conductor, ints, den):
        g = math.gcd(den, *ints)
        if g > 1:
            ints = [c // g for c in ints]
            den //= g
        self.conductor = conductor
        self._num = tuple(ints)
        self._den = den
        self._hash = None

    @classmethod
    def _make(cls, conductor, ints, den):
        obj = cls.__new__(cls)
        obj._set(conductor, ints, den)
        return obj

    @classmethod
    def constant(cls, conductor, c):
        c = Fraction(c)
        deg = _field_data(conductor)[1]
        return cls._make(conductor, [c.numerator] + [0] * (deg - 1), c.denominator)

    @classmethod
    def root(cls, conductor, power=1):
        """zeta_M ** power for any integer power."""
        ints = [0] * conductor
        ints[power % conductor] = 1
        return cls._make(conductor, _reduce_int(ints, conductor), 1)

    @property
    def coeffs(self):
        return tuple(Fraction(c, self._den) for c in self._num)

    @property
    def degree(self):
        return len(self._num)

    def __bool__(self):
        return any(self._num)

    def __eq__(self, other):
        if isinstance(other, CycloElement):
            return (self.conductor == other.conductor and self._den == other._den
                    and self._num == other._num)
        if isinstance(other, (int, Fraction)):
            return self == CycloElement.constant(self.conductor, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if not any(self._num[1:]):
                self._hash = hash(Fraction(self._num[0], self._den))
            else:
                self._hash = hash((self.conductor, self._num, self._den))
        return self._hash

    def __repr__(self):
        return f"CycloElement({self.conductor}, {list(map(str, self.coeffs))})"

    def _coerce(self, other):
        if isinstance(other, CycloElement):
            if other.conductor != self.conductor:
                raise TypeError("cyclotomic elements of different conductors")
            return other
        if isinstance(other, (int, Fraction)):
            return CycloElement.constant(self.conductor, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        da, db = self._den, o._den
        if da == db:
            ints = [a + b for a, b in zip(self._num, o._num)]
            return CycloElement._make(self.conductor, ints, da)
        ints = [a * db + b * da for a, b in zip(self._num, o._num)]
        return CycloElement._make(self.conductor, ints, da * db)

    __radd__ = __add__

    def __neg__(self):
        return CycloElement._make(self.conductor, [-a for a in self._num], self._den)

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
        a, b = self._num, o._num
        n = len(a)
        prod = [0] * (2 * n - 1)
        for i in range(n):
            ai = a[i]
            if ai:
                for j in range(n):
                    bj = b[j]
                    if bj:
                        prod[i + j] += ai * bj
        return CycloElement._make(self.conductor, _reduce_int(prod, self.conductor),
                                  self._den * o._den)

    __rmul__ = __mul__

    def invert(self):
        """Field inverse via extended Euclid against Phi_M."""
        if not self:
            raise DivisionByZero("inverse of zero in a cyclotomic field")
        phi = tuple(Fraction(c) for c in cyclotomic_polynomial(self.conductor))
        mine = upoly.trim(Fraction(c) for c in self._num)
        g, u, _ = upoly.xgcd(mine, phi)
        if g != (Fraction(1),):
            raise ArithmeticError("Phi_M is irreducible; gcd must be 1")
        return CycloElement(self.conductor, [c * self._den for c in u])

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
        out = CycloElement.constant(self.conductor, 1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out
