"""Hypothesis strategies shared by the test modules."""

from fractions import Fraction

from hypothesis import strategies as st

from qcenter.coeffs import CoeffDomain, LaurentScalar, RationalFunction

small_fractions = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


def laurent(max_terms=4, eps=False):
    key = st.tuples(st.integers(-4, 4), st.integers(0, 2) if eps else st.just(0))
    return st.dictionaries(key, small_fractions, max_size=max_terms).map(LaurentScalar)


def ratfuncs(eps=False):
    def build(num, den):
        return RationalFunction(num) / RationalFunction(den)
    den = laurent(3).filter(bool)
    return st.builds(build, laurent(3, eps), den)


def cyclo(conductor):
    n = conductor // 2
    d = CoeffDomain.root(n)
    return laurent(5).map(lambda ls: d.coerce(ls))


def cyclo_triples():
    """Three elements of one randomly chosen cyclotomic field."""
    return st.sampled_from([6, 8, 10, 12, 14]).flatmap(lambda M: st.tuples(cyclo(M), cyclo(M), cyclo(M)))


def eps_cyclo(n=5):
    d = CoeffDomain.root(n, with_epsilon=True)
    return laurent(5, eps=True).map(d.coerce)


def elements(pres, max_terms=3, max_degree=3):
    """Random elements of ``pres`` built as sums of scaled words."""
    word = st.lists(st.sampled_from(pres.letters), max_size=max_degree)
    coeff = laurent(2, eps=pres.domain.with_epsilon).filter(bool)
    terms = st.lists(st.tuples(coeff, word), min_size=1, max_size=max_terms)
    return terms.map(pres.normal_form)


def rich_elements(pres, max_terms=4, max_degree=3):
    """Like ``elements`` but with genuine fractions as coefficients at generic q."""
    if not pres.domain.is_generic:
        return elements(pres, max_terms, max_degree)
    word = st.lists(st.sampled_from(pres.letters), max_size=max_degree)
    coeff = ratfuncs(eps=pres.domain.with_epsilon).filter(bool)
    terms = st.lists(st.tuples(coeff, word), min_size=1, max_size=max_terms)
    return terms.map(pres.normal_form)
