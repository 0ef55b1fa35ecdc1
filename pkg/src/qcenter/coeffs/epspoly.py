"""Polynomials in eps over a base field (cyclotomic elements in practice)."""

from fractions import Fraction

from ..errors import DivisionByZero, UnsupportedScalar


class EpsPolynomial:
    __slots__ = ("_terms", "_base_one", "_hash")

    def __init__(self, terms, base_one):
        self._terms = {k: c for k, c in terms.items() if c}
        self._base_one = base_one
        self._hash = None

    @classmethod
    def _raw(cls, terms, base_one):
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._base_one = base_one
        obj._hash = None
        return obj

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, EpsPolynomial):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)) or type(other) is type(self._base_one):
            return self._terms == ({0: self._base_one * other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if not self._terms:
                self._hash = hash(0)
            elif set(self._terms) == {0}:
                self._hash = hash(self._terms[0])
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"EpsPolynomial({sorted(self._terms.items())!r})"

    def _coerce(self, other):
        if isinstance(other, EpsPolynomial):
            return other
        if isinstance(other, (int, Fraction)) or type(other) is type(self._base_one):
            c = self._base_one * other
            return EpsPolynomial._raw({0: c} if c else {}, self._base_one)
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
                v = v + c
                if v:
                    out[k] = v
                else:
                    del out[k]
        return EpsPolynomial._raw(out, self._base_one)

    __radd__ = __add__

    def __neg__(self):
        return EpsPolynomial._raw({k: -c for k, c in self._terms.items()}, self._base_one)

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
        out = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in o._terms.items():
                k = k1 + k2
                v = out.get(k)
                out[k] = c1 * c2 if v is None else v + c1 * c2
        return EpsPolynomial._raw({k: c for k, c in out.items() if c}, self._base_one)

    __rmul__ = __mul__

    def invert(self):
        if not self._terms:
            raise DivisionByZero("inverse of zero")
        if set(self._terms) != {0}:
            raise UnsupportedScalar("only eps-free polynomials are invertible")
        return EpsPolynomial._raw({0: self._terms[0].invert()}, self._base_one)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.invert()

    def __pow__(self, e):
        if e < 0:
            return self.invert() ** (-e)
        out = self._coerce(1)
        for _ in range(e):
            out = out * self
        return out

    def eval_epsilon(self, value):
        """Substitute eps -> value and return a base-field element."""
        value = Fraction(value)
        out = self._base_one * 0
        for k, c in self._terms.items():
            if k == 0:
                out = out + c
            elif value:
                out = out + c * value ** k
        return out

    def has_epsilon(self):
        return any(k for k in self._terms)
