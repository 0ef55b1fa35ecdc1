"""PBW letters and their total order."""

from functools import total_ordering

_KIND_RANK = {"I": 0, "T": 1, "J": 2}


@total_ordering
class GeneratorId:
    """One PBW letter: ``I[k,l]`` (k > l), ``T[k]`` or ``J[i]``.

    Order: I-letters by k ascending then l descending (I21 < I32 < I31 < I43 ...),
    then T-letters by index, then J-letters by index.
    """

    __slots__ = ("kind", "k", "l", "_key")

    def __init__(self, kind, k, l=0):
        if kind not in _KIND_RANK:
            raise ValueError(f"unknown letter kind {kind!r}")
        self.kind = kind
        self.k = k
        self.l = l
        self._key = (_KIND_RANK[kind], k, -l)

    @property
    def sort_key(self):
        return self._key

    def __eq__(self, other):
        if not isinstance(other, GeneratorId):
            return NotImplemented
        return self._key == other._key

    def __lt__(self, other):
        if not isinstance(other, GeneratorId):
            return NotImplemented
        return self._key < other._key

    def __hash__(self):
        return hash(self._key)

    def __str__(self):
        if self.kind == "I":
            return f"I[{self.k},{self.l}]"
        return f"{self.kind}[{self.k}]"

    def __repr__(self):
        return str(self)


def So(k, l):
    return GeneratorId("I", k, l)


def Trans(k):
    return GeneratorId("T", k)


def Eps(i):
    return GeneratorId("J", i)
