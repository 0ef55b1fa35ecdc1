from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qcenter.algebra import (EPS_SO, ISO, SO, Eps, So, Trans, build_presentation,
                             commutator, expand_derived, expand_translation, q_commutator,
                             straighten_pair)
from qcenter.coeffs import EPS, Q, Q_INV, S, S_INV, CoeffDomain, eval_epsilon
from qcenter.elements import substitute
from qcenter.errors import (BadIndices, DomainMismatch, NotOutOfOrder, UnknownLetter,
                            UnsupportedRank)

from strategies import elements

SO3 = build_presentation(SO, 3)
SO4 = build_presentation(SO, 4)
ISO2 = build_presentation(ISO, 2)
EPS3 = build_presentation(EPS_SO, 3)


def I(pres, k, l, e=1):
    return pres.letter(So(k, l), e)


class TestPresentation:
    def test_so3_counts(self):
        assert len(SO3.letters) == 3
        assert len(SO3.rule_table()) == 3

    def test_so4_counts(self):
        assert len(SO4.letters) == 6
        assert len(SO4.rule_table()) == 15

    def test_iso2_letters(self):
        assert set(ISO2.letters) == {So(2, 1), Trans(1), Trans(2)}

    @pytest.mark.parametrize("m", [3, 4, 5, 6])
    def test_so_letter_count(self, m):
        assert len(build_presentation(SO, m).letters) == m * (m - 1) // 2

    def test_pbw_order(self):
        order = [So(2, 1), So(3, 2), So(3, 1), So(4, 3), So(4, 2), So(4, 1)]
        assert SO4.letters == order
        assert ISO2.letters[-1] == Trans(2)
        assert Eps(1) < Eps(2) < Eps(3)

    @pytest.mark.parametrize("family,m", [(SO, 2), (ISO, 1), (EPS_SO, 4)])
    def test_unsupported_rank(self, family, m):
        with pytest.raises(UnsupportedRank):
            build_presentation(family, m)

    def test_presentations_are_cached(self):
        assert build_presentation(SO, 3) is SO3

    def test_unknown_letter(self):
        with pytest.raises(UnknownLetter):
            SO3.letter(So(4, 1))
        with pytest.raises(UnknownLetter):
            SO3.letter(Trans(1))


class TestStraightening:
    def test_adjacent_pair(self):
        got = straighten_pair(So(3, 2), So(2, 1), SO3)
        assert got == Q * I(SO3, 2, 1) * I(SO3, 3, 2) - S * I(SO3, 3, 1)

    def test_reversed_bracket(self):
        got = straighten_pair(So(3, 1), So(2, 1), SO3)
        assert got == Q_INV * I(SO3, 2, 1) * I(SO3, 3, 1) + S_INV * I(SO3, 3, 2)

    def test_plain_crossing(self):
        got = straighten_pair(So(4, 2), So(3, 1), SO4)
        expected = I(SO4, 3, 1) * I(SO4, 4, 2) + (Q - Q_INV) * (
            I(SO4, 2, 1) * I(SO4, 4, 3) - I(SO4, 3, 2) * I(SO4, 4, 1))
        assert got == expected

    def test_ordered_pair_rejected(self):
        with pytest.raises(NotOutOfOrder):
            straighten_pair(So(2, 1), So(3, 2), SO3)

    def test_normal_words_are_untouched(self):
        w = SO4.word([So(2, 1), So(3, 2), So(3, 2), So(4, 1)])
        assert len(w) == 1 and w.degree() == 4

    def test_so3_relation_by_hand(self):
        # [I1, I2]_q = I3 means s I1 I2 - s^-1 I2 I1 = I3
        i1, i2, i3 = (I(SO3, 2, 1), I(SO3, 3, 2), I(SO3, 3, 1))
        assert S * i1 * i2 - S_INV * (i2 * i1) == i3


class TestOps:
    def test_q_commutator_generators(self):
        assert q_commutator(I(SO3, 2, 1), I(SO3, 3, 2)) == I(SO3, 3, 1)

    def test_q_commutator_of_x_with_itself(self):
        x = I(SO3, 2, 1)
        assert q_commutator(x, x) == (S - S_INV) * x * x

    def test_commutator_antisymmetric(self):
        a, b = I(SO4, 4, 2), I(SO4, 3, 1)
        assert commutator(a, b) == -commutator(b, a)

    def test_expand_derived_is_the_letter(self):
        assert expand_derived(4, 1, 1, SO4) == I(SO4, 4, 1)

    @pytest.mark.parametrize("m", [3, 4, 5])
    def test_expand_derived_all(self, m):
        pres = build_presentation(SO, m)
        for k in range(2, m + 1):
            for l in range(1, k):
                assert expand_derived(k, l, 1, pres) == I(pres, k, l)

    def test_expand_derived_bad_indices(self):
        with pytest.raises(BadIndices):
            expand_derived(2, 2, 1, SO4)
        with pytest.raises(BadIndices):
            expand_derived(1, 3, 1, SO4)

    def test_expand_derived_minus_is_a_different_element(self):
        # I^-_31 = [I_21, I_32]_{q^-1} = s^-1 I21 I32 - s I32 I21
        minus = expand_derived(3, 1, -1, SO3)
        i1, i2 = I(SO3, 2, 1), I(SO3, 3, 2)
        assert minus == S_INV * i1 * i2 - S * (i2 * i1)
        assert minus != I(SO3, 3, 1)

    @pytest.mark.parametrize("m", [2, 3, 4])
    def test_expand_translation(self, m):
        pres = build_presentation(ISO, m)
        for k in range(1, m + 1):
            assert expand_translation(k, 1, pres) == pres.letter(Trans(k))

    def test_mixed_presentations_rejected(self):
        with pytest.raises(DomainMismatch):
            I(SO3, 2, 1) * I(SO4, 2, 1)


def _at_s_one(c):
    total = Fraction(0)
    for (sp, ep), v in c.items():
        assert ep == 0
        total += v
    return total


@pytest.mark.parametrize("family,m", [(SO, 3), (SO, 4), (SO, 5), (ISO, 2), (ISO, 3)])
def test_classical_limit_is_a_lie_algebra(family, m):
    """At s = 1 every rule reads YX + [X, Y] with a linear bracket obeying Jacobi."""
    pres = build_presentation(family, m)
    n = len(pres.letters)
    bracket = {}
    for (i, j), terms in pres._raw_rules.items():
        lin = {}
        for coeff, word in terms:
            v = _at_s_one(coeff)
            if len(word) == 2:
                if word == [j, i]:
                    assert v == 1
                else:
                    assert v == 0
            elif v:
                assert len(word) == 1
                lin[word[0]] = lin.get(word[0], 0) + v
        bracket[i, j] = lin
        bracket[j, i] = {k: -v for k, v in lin.items()}

    def br(x, vec):
        out = {}
        for k, v in vec.items():
            for r, w in bracket.get((x, k), {}).items():
                out[r] = out.get(r, 0) + v * w
        return out

    for a in range(n):
        for b in range(n):
            for c in range(n):
                total = {}
                for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
                    for k, v in br(x, bracket.get((y, z), {})).items():
                        total[k] = total.get(k, 0) + v
                assert not any(total.values())


class TestProperties:
    @settings(max_examples=100, deadline=None)
    @given(elements(SO4), elements(SO4), elements(SO4))
    def test_associativity_so4(self, a, b, c):
        assert (a * b) * c == a * (b * c)

    @settings(max_examples=100, deadline=None)
    @given(elements(ISO2), elements(ISO2), elements(ISO2))
    def test_associativity_iso2(self, a, b, c):
        assert (a * b) * c == a * (b * c)

    @settings(max_examples=100, deadline=None)
    @given(elements(SO4), elements(SO4))
    def test_degree_filtration(self, a, b):
        if a and b:
            assert (a * b).degree() == a.degree() + b.degree()

    @settings(max_examples=100, deadline=None)
    @given(elements(SO3), elements(SO3))
    def test_distributivity(self, a, b):
        x = I(SO3, 3, 1)
        assert (a + b) * x == a * x + b * x

    @settings(max_examples=200, deadline=None)
    @given(st.lists(st.sampled_from([Eps(1), Eps(2), Eps(3)]), max_size=5))
    def test_eps_algebra_at_one_is_so3(self, word):
        rename = {Eps(1): So(2, 1), Eps(2): So(3, 2), Eps(3): So(3, 1)}
        images = {g: SO3.letter(h) for g, h in rename.items()}
        reduced = substitute(EPS3.word(word), images, SO3,
                             lambda c: SO3.domain.coerce(eval_epsilon(c, 1)))
        assert reduced == SO3.word([rename[g] for g in word])


def test_root_of_unity_presentation_multiplies():
    pres = build_presentation(SO, 3, CoeffDomain.root(5))
    x = I(pres, 2, 1)
    assert (x ** 5).degree() == 5
    assert I(pres, 3, 2) * x == pres.domain.coerce(Q) * x * I(pres, 3, 2) - pres.domain.s() * I(pres, 3, 1)


def test_eps_relations():
    j1, j2, j3 = (EPS3.letter(Eps(i)) for i in (1, 2, 3))
    assert q_commutator(j1, j2) == j3
    assert q_commutator(j3, j1) == EPS * EPS * j2
