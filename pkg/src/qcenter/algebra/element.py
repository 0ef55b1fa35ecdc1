"""Elements of a presented algebra, always held in PBW normal form."""

from fractions import Fraction

from ..errors import DomainMismatch


def _merge_into(acc, terms, scale=None):
    for mono, c in terms.items():
        if scale is not None:
            c = scale * c
        v = acc.get(mono)
        if v is None:
            if c:
                acc[mono] = c
        else:
            v = v + c
            if v:
                acc[mono] = v
            else:
                del acc[mono]


class AlgebraElement:
    """Finite map from normal monomials to nonzero scalars.

    A monomial is a tuple of ``(letter_index, exponent)`` runs with strictly
    increasing letter indices; ``()`` is the unit.  Because the map is a
    normal form, equality of elements is equality of maps.
    """

    __slots__ = ("pres", "terms")

    def __init__(self, pres, terms=None):
        self.pres = pres
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def _wrap(cls, pres, terms):
        obj = cls.__new__(cls)
        obj.pres = pres
        obj.terms = terms
        return obj

    # -- inspection ----------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def items(self):
        return self.terms.items()

    def coefficient(self, mono):
        return self.terms.get(mono, self.pres.domain.zero)

    def monomials(self):
        return sorted(self.terms, key=self.pres.mono_sort_key)

    def degree(self):
        if not self.terms:
            return -1
        return max(sum(e for _, e in m) for m in self.terms)

    def is_scalar(self):
        return not self.terms or set(self.terms) == {()}

    def scalar_value(self):
        if not self.is_scalar():
            raise ValueError("element is not a scalar")
        return self.terms.get((), self.pres.domain.zero)

    def map_coefficients(self, fn, pres=None):
        pres = pres or self.pres
        return AlgebraElement(pres, {m: fn(c) for m, c in self.terms.items()})

    # -- ring structure ------------------------------------------------

    def _check(self, other):
        if other.pres is not self.pres and other.pres != self.pres:
            raise DomainMismatch("elements belong to different presentations")

    def _lift(self, other):
        if isinstance(other, AlgebraElement):
            self._check(other)
            return other
        return self.pres.scalar(other)

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self.pres == other.pres and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self.pres.scalar(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        o = self._lift(other)
        acc = dict(self.terms)
        _merge_into(acc, o.terms)
        return AlgebraElement._wrap(self.pres, acc)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement._wrap(self.pres, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            self._check(other)
            return self.pres.multiply(self, other)
        c = self.pres.domain.coerce(other)
        return AlgebraElement(self.pres, {m: v * c for m, v in self.terms.items()})

    def __rmul__(self, other):
        c = self.pres.domain.coerce(other)
        return AlgebraElement(self.pres, {m: c * v for m, v in self.terms.items()})

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative powers of algebra elements are undefined")
        out = self.pres.scalar(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def __str__(self):
        from ..cli.formatting import format_element
        return format_element(self)

    def __repr__(self):
        return f"<{self.pres.name}: {self}>"
