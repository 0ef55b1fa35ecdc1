"""Sparse Laurent polynomials in s (with s**2 == q) and polynomials in eps.

A :class:`LaurentScalar` maps ``(s_power, eps_power)`` to a nonzero
:class:`~fractions.Fraction`.  s-powers may be negative, eps-powers may not.
"""

from fractions import Fraction
from numbers import Rational as _RationalABC

from ..errors import NegativeEpsilonPower


def _frac(c):
    return c if type(c) is Fraction else Fraction(c)


class LaurentScalar:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for (sp, ep), c in dict(terms).items():
                if ep < 0:
                    raise NegativeEpsilonPower(f"eps^{ep} is not a polynomial term")
                if c:
                    clean[(int(sp), int(ep))] = _frac(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c):
        return cls._raw({(0, 0): _frac(c)} if c else {})

    @classmethod
    def monomial(cls, s_power=0, eps_power=0, coeff=1):
        return cls({(s_power, eps_power): coeff})

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, LaurentScalar):
            return self._terms == other._terms
        if isinstance(other, (int, _RationalABC)):
            return self._terms == ({(0, 0): other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if not self._terms:
                self._hash = hash(0)
            elif len(self._terms) == 1 and (0, 0) in self._terms:
                self._hash = hash(self._terms[(0, 0)])
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def _coerce(self, other):
        if isinstance(other, LaurentScalar):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentScalar.constant(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for k, c in o._terms.items():
            v = out.get(k)
            if v is None:
                out[k] = c
            else:
                v += c
                if v:
                    out[k] = v
                else:
                    del out[k]
        return LaurentScalar._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentScalar._raw({k: -c for k, c in self._terms.items()})

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
        a, b = self._terms, o._terms
        if not a or not b:
            return LaurentScalar._raw({})
        out = {}
        for (s1, e1), c1 in a.items():
            for (s2, e2), c2 in b.items():
                k = (s1 + s2, e1 + e2)
                v = out.get(k)
                out[k] = c1 * c2 if v is None else v + c1 * c2
        return LaurentScalar._raw({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            if len(self._terms) != 1:
                raise ValueError("only Laurent monomials have negative powers")
            ((sp, ep), c), = self._terms.items()
            if ep:
                raise NegativeEpsilonPower("eps has no inverse in the Laurent ring")
            return LaurentScalar._raw({(sp * e, 0): c ** e})
        out = LaurentScalar.constant(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def is_constant(self):
        return not self._terms or set(self._terms) == {(0, 0)}

    def constant_value(self):
        return self._terms.get((0, 0), Fraction(0))

    def is_monomial(self):
        return len(self._terms) == 1

    def eps_degrees(self):
        return sorted({ep for (_, ep) in self._terms})

    def min_s_power(self):
        return min(sp for (sp, _) in self._terms)

    def eps_slices(self):
        """Split into ``{eps_power: {s_power: coeff}}``."""
        out = {}
        for (sp, ep), c in self._terms.items():
            out.setdefault(ep, {})[sp] = c
        return out

    def shift(self, s_power=0, eps_power=0):
        return LaurentScalar._raw({(sp + s_power, ep + eps_power): c
                                   for (sp, ep), c in self._terms.items()})

    def eval_epsilon(self, value):
        value = _frac(value)
        out = {}
        for (sp, ep), c in self._terms.items():
            if ep == 0:
                w = c
            elif value == 0:
                continue
            else:
                w = c * value ** ep
            out[sp] = out.get(sp, 0) + w
        return LaurentScalar({(sp, 0): c for sp, c in out.items()})

    def sorted_items(self):
        """Terms in ascending (eps-degree, s-degree) order."""
        return sorted(self._terms.items(), key=lambda kv: (kv[0][1], kv[0][0]))

    def __repr__(self):
        return f"LaurentScalar({self.sorted_items()!r})"


S = LaurentScalar.monomial(1)
S_INV = LaurentScalar.monomial(-1)
Q = LaurentScalar.monomial(2)
Q_INV = LaurentScalar.monomial(-2)
EPS = LaurentScalar.monomial(0, 1)
ONE = LaurentScalar.constant(1)
ZERO = LaurentScalar()
