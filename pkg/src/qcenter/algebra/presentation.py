"""Presentations of U'_q(so_m), U_q(iso_m) and U'_{q,eps}(so_3) as rewriting systems.

Every presentation owns a straightening table: for each pair of letters
``X > Y`` in PBW order a rule ``X*Y -> (normal-form element)`` whose leading
term is a scalar multiple of ``Y*X``.  Products are normalized by the
left-multiplication recursion ``X * (Y^e * rest)`` with memoization.
"""

from functools import lru_cache
from itertools import combinations

from ..coeffs import CoeffDomain
from ..coeffs.laurent import EPS, ONE, Q, Q_INV, S, S_INV
from ..errors import NotOutOfOrder, UnknownLetter, UnsupportedRank
from .element import AlgebraElement, _merge_into
from .letters import Eps, So, Trans

SO = "so"
ISO = "iso"
EPS_SO = "eps-so"

QBRACKET = "q"
PLAIN = "plain"
DEFAULT_CROSSING = PLAIN

_Q_MINUS = Q - Q_INV


class Presentation:
    """Algebra descriptor owning the straightening table and the product cache."""

    def __init__(self, family, m, domain, crossing):
        self.family = family
        self.m = m
        self.domain = domain
        self.crossing = crossing
        self.letters = _alphabet(family, m)
        self.index = {g: i for i, g in enumerate(self.letters)}
        self.generators = _generators(family, m)
        self._raw_rules = _raw_rules(family, m, crossing)
        missing = [(a, b) for a, b in combinations(range(len(self.letters)), 2)
                   if (b, a) not in self._raw_rules]
        if missing:
            raise AssertionError(f"straightening table incomplete: {missing}")
        self._rules = {}
        self._memo = {}
        self._one = domain.one
        self._coerced = {}

    # -- identity ------------------------------------------------------

    @property
    def key(self):
        return (self.family, self.m, self.domain, self.crossing)

    @property
    def name(self):
        return f"{self.family}:{self.m}"

    def __eq__(self, other):
        return isinstance(other, Presentation) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        extra = f", crossing={self.crossing}" if self.crossing else ""
        return f"Presentation({self.name}, {self.domain.describe()}{extra})"

    # -- element constructors ------------------------------------------

    def lookup(self, letter):
        try:
            return self.index[letter]
        except KeyError:
            raise UnknownLetter(f"{letter} is not a letter of {self.name}") from None

    def scalar(self, c):
        c = self.domain.coerce(c)
        return AlgebraElement(self, {(): c})

    def zero(self):
        return AlgebraElement(self, {})

    def letter(self, g, exponent=1):
        i = self.lookup(g)
        if exponent == 0:
            return self.scalar(1)
        return AlgebraElement._wrap(self, {((i, exponent),): self._one})

    def word(self, letters, coeff=1):
        """Normal form of ``coeff * letters[0] * letters[1] * ...``."""
        idx = [self.lookup(g) for g in letters]
        terms = {(): self._one}
        for i in reversed(idx):
            terms = self._lmul_terms(i, terms)
        return self.domain.coerce(coeff) * AlgebraElement._wrap(self, terms)

    def normal_form(self, words):
        """Normalize a list of ``(coeff, [letters])`` pairs."""
        out = self.zero()
        for coeff, letters in words:
            out = out + self.word(letters, coeff)
        return out

    def coerce_scalar(self, c):
        """Coerce a rule coefficient, caching the common ones."""
        hit = self._coerced.get(c)
        if hit is None:
            hit = self._coerced[c] = self.domain.coerce(c)
        return hit

    # -- rules ---------------------------------------------------------

    def raw_rule(self, i, j):
        return self._raw_rules[(i, j)]

    def rule_terms(self, i, j):
        """Normal form of letter_i * letter_j for i > j."""
        hit = self._rules.get((i, j))
        if hit is None:
            acc = {}
            for coeff, word in self._raw_rules[(i, j)]:
                c = self.coerce_scalar(coeff)
                terms = {(): self._one}
                for w in reversed(word):
                    terms = self._lmul_terms(w, terms)
                _merge_into(acc, terms, c)
            hit = self._rules[(i, j)] = acc
        return hit

    def straighten_pair(self, x, y):
        i, j = self.lookup(x), self.lookup(y)
        if i <= j:
            raise NotOutOfOrder(f"{x}*{y} is already in PBW order")
        return AlgebraElement._wrap(self, dict(self.rule_terms(i, j)))

    def rule_table(self):
        return {(self.letters[i], self.letters[j]): AlgebraElement._wrap(self, dict(self.rule_terms(i, j)))
                for (i, j) in sorted(self._raw_rules)}

    # -- engine --------------------------------------------------------

    def lmul(self, a, mono):
        """Normal form of letter ``a`` times normal monomial ``mono`` as a term dict."""
        key = (a, mono)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        if not mono:
            res = {((a, 1),): self._one}
        else:
            b, e = mono[0]
            if a < b:
                res = {((a, 1),) + mono: self._one}
            elif a == b:
                res = {((a, e + 1),) + mono[1:]: self._one}
            else:
                rest = mono[1:] if e == 1 else ((b, e - 1),) + mono[1:]
                res = {}
                for w, c in self.rule_terms(a, b).items():
                    _merge_into(res, self.mono_times(w, rest), c)
        self._memo[key] = res
        return res

    def _lmul_terms(self, a, terms):
        acc = {}
        for mono, c in terms.items():
            _merge_into(acc, self.lmul(a, mono), c)
        return acc

    def mono_times(self, u, v):
        """Normal form of the product of normal monomials ``u * v``."""
        if not u:
            return {v: self._one}
        if not v:
            return {u: self._one}
        (x, e), (y, f) = u[-1], v[0]
        if x < y:
            return {u + v: self._one}
        if x == y:
            return {u[:-1] + ((x, e + f),) + v[1:]: self._one}
        terms = {v: self._one}
        for x, e in reversed(u):
            for _ in range(e):
                terms = self._lmul_terms(x, terms)
        return terms

    def multiply(self, a, b):
        acc = {}
        for u, c in a.terms.items():
            for v, d in b.terms.items():
                _merge_into(acc, self.mono_times(u, v), c * d)
        return AlgebraElement._wrap(self, acc)

    def mono_sort_key(self, mono):
        return tuple(i for i, e in mono for _ in range(e))

    def flat_word(self, mono):
        return [self.letters[i] for i in self.mono_sort_key(mono)]

    def cache_size(self):
        return len(self._memo)


# -- alphabets ---------------------------------------------------------


def _so_letters(m):
    return sorted(So(k, l) for k in range(2, m + 1) for l in range(1, k))


def _alphabet(family, m):
    if family == SO:
        return _so_letters(m)
    if family == ISO:
        return _so_letters(m) + [Trans(k) for k in range(1, m + 1)]
    return [Eps(1), Eps(2), Eps(3)]


def _generators(family, m):
    if family == SO:
        return [So(k, k - 1) for k in range(2, m + 1)]
    if family == ISO:
        return [So(k, k - 1) for k in range(2, m + 1)] + [Trans(m)]
    return [Eps(1), Eps(2)]


# -- rule derivation ---------------------------------------------------


def _pbw_less(x, y):
    return x < y


def _qbracket_rule(a, b, rhs):
    """Rule from s*a*b - s^-1*b*a = rhs; ``rhs`` is a list of (coeff, word)."""
    if _pbw_less(b, a):
        # a*b = q^-1 b*a + s^-1 rhs
        return (a, b), [(Q_INV, [b, a])] + [(S_INV * c, w) for c, w in rhs]
    # b*a = q a*b - s rhs
    return (b, a), [(Q, [a, b])] + [(-S * c, w) for c, w in rhs]


def _commutator_rule(a, b, rhs):
    """Rule from a*b - b*a = rhs."""
    if _pbw_less(b, a):
        return (a, b), [(ONE, [b, a])] + list(rhs)
    return (b, a), [(ONE, [a, b])] + [(-c, w) for c, w in rhs]


def _so_relations(m, crossing):
    """All relations among I-letters of so_m, as (kind, a, b, rhs)."""
    rels = []
    for i in range(1, m + 1):
        for j in range(1, i):
            for h in range(1, j):
                # [I_jh, I_ij]_q = I_ih, [I_ij, I_ih]_q = I_jh, [I_ih, I_jh]_q = I_ij
                rels.append(("q", So(j, h), So(i, j), [(ONE, [So(i, h)])]))
                rels.append(("q", So(i, j), So(i, h), [(ONE, [So(j, h)])]))
                rels.append(("q", So(i, h), So(j, h), [(ONE, [So(i, j)])]))
    for a in range(1, m + 1):
        for b in range(1, a):
            for c in range(1, b):
                for d in range(1, c):
                    rels.append(("c", So(a, b), So(c, d), []))
                    rels.append(("c", So(a, d), So(b, c), []))
                    # crossing k=a > n=b > l=c > r=d
                    rhs = [(_Q_MINUS, [So(c, d), So(a, b)]),
                           (-_Q_MINUS, [So(a, d), So(b, c)])]
                    kind = "q" if crossing == QBRACKET else "c"
                    rels.append((kind, So(a, c), So(b, d), rhs))
    return rels


def _iso_relations(m):
    rels = []
    for l in range(1, m + 1):
        for n in range(1, l):
            rels.append(("q", So(l, n), Trans(l), [(ONE, [Trans(n)])]))
            rels.append(("q", Trans(n), So(l, n), [(ONE, [Trans(l)])]))
            rels.append(("q", Trans(l), Trans(n), []))
    for l in range(1, m + 1):
        for n in range(1, m + 1):
            for p in range(1, n):
                if l in (n, p):
                    continue
                if l > n > p or n > p > l:
                    rels.append(("c", Trans(l), So(n, p), []))
                else:  # n > l > p
                    rhs = [(_Q_MINUS, [Trans(n), So(l, p)]),
                           (-_Q_MINUS, [Trans(p), So(n, l)])]
                    rels.append(("c", Trans(l), So(n, p), rhs))
    return rels


def _eps_relations():
    j1, j2, j3 = Eps(1), Eps(2), Eps(3)
    return [("q", j1, j2, [(ONE, [j3])]),
            ("q", j2, j3, [(ONE, [j1])]),
            ("q", j3, j1, [(EPS * EPS, [j2])])]


def defining_relations(family, m, crossing):
    """Relations from which the straightening table is read off."""
    if family == SO:
        return _so_relations(m, crossing)
    if family == ISO:
        return _so_relations(m, crossing) + _iso_relations(m)
    return _eps_relations()


def _raw_rules(family, m, crossing):
    letters = _alphabet(family, m)
    pos = {g: i for i, g in enumerate(letters)}
    rules = {}
    for kind, a, b, rhs in defining_relations(family, m, crossing):
        make = _qbracket_rule if kind == "q" else _commutator_rule
        (x, y), terms = make(a, b, rhs)
        key = (pos[x], pos[y])
        if key in rules:
            raise AssertionError(f"duplicate rule for {x}*{y}")
        rules[key] = [(c, [pos[w] for w in word]) for c, word in terms]
    return rules


# -- public constructor ------------------------------------------------


_MIN_RANK = {SO: 3, ISO: 2, EPS_SO: 3}


@lru_cache(maxsize=None)
def build_presentation(family, m, domain=None, crossing=DEFAULT_CROSSING):
    """Build (and cache) a presentation; ``crossing`` is ignored for eps-so."""
    if domain is None:
        domain = CoeffDomain.generic(with_epsilon=family == EPS_SO)
    if family not in _MIN_RANK:
        raise ValueError(f"unknown family {family!r}")
    if family == EPS_SO:
        if m != 3:
            raise UnsupportedRank("the eps-algebra exists only for m = 3")
        if not domain.with_epsilon:
            domain = domain.with_eps()
        crossing = None
    elif m < _MIN_RANK[family]:
        raise UnsupportedRank(f"{family} needs m >= {_MIN_RANK[family]}, got {m}")
    elif crossing not in (QBRACKET, PLAIN):
        raise ValueError(f"unknown crossing variant {crossing!r}")
    return Presentation(family, m, domain, crossing)
