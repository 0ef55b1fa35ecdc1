"""Residuals of every defining and derived relation, moved to one side and normalized."""

from ..algebra import (EPS_SO, ISO, PLAIN, Eps, So, Trans, commutator, expand_derived,
                       expand_translation, q_commutator)
from ..coeffs.laurent import EPS, Q, Q_INV

_QQ = Q + Q_INV
_QM = Q - Q_INV


def _serre_pair(a, b):
    """a b^2 - (q+q^-1) b a b + b^2 a + a, which must vanish for adjacent generators."""
    return a * b * b - _QQ * (b * a * b) + b * b * a + a


def _so_defining(pres, out):
    m = pres.m
    gen = {k: pres.letter(So(k, k - 1)) for k in range(2, m + 1)}
    for i in range(2, m):
        up, down = gen[i + 1], gen[i]
        out.append((f"serre-up[{i}]", _serre_pair(up, down)))
        out.append((f"serre-down[{i}]", _serre_pair(down, up)))
    for i in range(2, m + 1):
        for j in range(2, i - 1):
            out.append((f"far-commute[{i},{j}]", commutator(gen[i], gen[j])))
    for k in range(3, m + 1):
        for l in range(1, k - 1):
            out.append((f"derived-letter[{k},{l}]", expand_derived(k, l, 1, pres) - pres.letter(So(k, l))))
    if m == 3:
        i1, i2, i3 = (pres.letter(g) for g in (So(2, 1), So(3, 2), So(3, 1)))
        out.append(("so3-serre-21", _serre_pair(i2, i1)))
        out.append(("so3-serre-12", _serre_pair(i1, i2)))
        out.append(("so3-bracket-12", q_commutator(i1, i2) - i3))
        out.append(("so3-bracket-23", q_commutator(i2, i3) - i1))
        out.append(("so3-bracket-31", q_commutator(i3, i1) - i2))


def _so_enlarged(pres, out, letter, sign=1, tag=""):
    """Triple, commuting and crossing relations for the family ``letter(k, l)``; sign=-1 replaces q by q^-1."""
    m = pres.m
    qm = _QM if sign == 1 else -_QM
    for k in range(1, m + 1):
        for l in range(1, k):
            for n in range(1, l):
                out.append((f"triple-a{tag}[{k},{l},{n}]",
                            q_commutator(letter(l, n), letter(k, l), sign) - letter(k, n)))
                out.append((f"triple-b{tag}[{k},{l},{n}]",
                            q_commutator(letter(k, l), letter(k, n), sign) - letter(l, n)))
                out.append((f"triple-c{tag}[{k},{l},{n}]",
                            q_commutator(letter(k, n), letter(l, n), sign) - letter(k, l)))
    for a in range(1, m + 1):
        for b in range(1, a):
            for c in range(1, b):
                for d in range(1, c):
                    out.append((f"commute{tag}[{a},{b}|{c},{d}]",
                                commutator(letter(a, b), letter(c, d))))
                    out.append((f"commute{tag}[{a},{d}|{b},{c}]",
                                commutator(letter(a, d), letter(b, c))))
                    rhs = qm * (letter(c, d) * letter(a, b) - letter(a, d) * letter(b, c))
                    x, y = letter(a, c), letter(b, d)
                    if pres.crossing == PLAIN:
                        lhs, name = commutator(x, y), "plain"
                    else:
                        lhs, name = q_commutator(x, y, sign), "q-bracket"
                    out.append((f"crossing{tag}/{name}[{a},{c}|{b},{d}]", lhs - rhs))


def _so4_list(pres, out):
    """Explicit list of fifteen so_4 relations (the last one a plain commutator)."""
    I = {(k, l): pres.letter(So(k, l)) for k in range(2, 5) for l in range(1, k)}
    qb = q_commutator
    rels = [
        commutator(I[4, 3], I[2, 1]),
        qb(I[3, 2], I[3, 1]) - I[2, 1],
        qb(I[2, 1], I[3, 2]) - I[3, 1],
        qb(I[3, 1], I[2, 1]) - I[3, 2],
        qb(I[4, 3], I[4, 2]) - I[3, 2],
        qb(I[3, 2], I[4, 3]) - I[4, 2],
        qb(I[4, 2], I[3, 2]) - I[4, 3],
        qb(I[3, 1], I[4, 3]) - I[4, 1],
        qb(I[2, 1], I[4, 2]) - I[4, 1],
        qb(I[4, 1], I[2, 1]) - I[4, 2],
        qb(I[4, 1], I[3, 1]) - I[4, 3],
        qb(I[4, 2], I[4, 1]) - I[2, 1],
        commutator(I[4, 1], I[3, 2]),
        qb(I[4, 3], I[4, 1]) - I[3, 1],
        commutator(I[4, 2], I[3, 1]) - _QM * (I[2, 1] * I[4, 3] - I[4, 1] * I[3, 2]),
    ]
    for idx, r in enumerate(rels, 1):
        out.append((f"so4-list#{idx}", r))


def _iso_relations(pres, out):
    m = pres.m
    t_m = pres.letter(Trans(m))
    i_top = pres.letter(So(m, m - 1))
    out.append(("translation-serre-a", _serre_pair(t_m, i_top)))
    # right-hand side 0; the variant with -I fails already at q = 1,
    # see translation_serre_minus_form
    out.append(("translation-serre-b", _serre_pair(i_top, t_m) - i_top))
    for k in range(2, m):
        out.append((f"iso-c[{k}]", commutator(pres.letter(So(k, k - 1)), t_m)))
    for k in range(1, m):
        out.append((f"T-rec[{k}]", expand_translation(k, 1, pres) - pres.letter(Trans(k))))
    T = {k: pres.letter(Trans(k)) for k in range(1, m + 1)}

    def I(k, l):
        return pres.letter(So(k, l))

    if m == 2:
        i = I(2, 1)
        out.append(("iso2-bracket-a", q_commutator(i, T[2]) - T[1]))
        out.append(("iso2-bracket-b", q_commutator(T[1], i) - T[2]))
        out.append(("iso2-bracket-c", q_commutator(T[2], T[1])))
    for l in range(1, m + 1):
        for n in range(1, l):
            out.append((f"trans-bracket-a[{l},{n}]", q_commutator(I(l, n), T[l]) - T[n]))
            out.append((f"trans-bracket-b[{l},{n}]", q_commutator(T[n], I(l, n)) - T[l]))
            out.append((f"trans-qcommute[{l},{n}]", q_commutator(T[l], T[n])))
    for l in range(1, m + 1):
        for n in range(1, m + 1):
            for p in range(1, n):
                if l in (n, p):
                    continue
                lhs = commutator(T[l], I(n, p))
                if l > n > p or n > p > l:
                    out.append((f"trans-commute[{l}|{n},{p}]", lhs))
                else:
                    rhs = _QM * (T[n] * I(l, p) - T[p] * I(n, l))
                    out.append((f"trans-crossing[{l}|{n},{p}]", lhs - rhs))


def translation_serre_minus_form(pres):
    """Residual of I T^2 - (q+q^-1) T I T + T^2 I = -I (I = I_{m,m-1}, T = T_m).

    Equals I exactly, so imposing this form would force I = 0.
    """
    t_m = pres.letter(Trans(pres.m))
    i_top = pres.letter(So(pres.m, pres.m - 1))
    return _serre_pair(i_top, t_m)


def _eps_relations(pres, out):
    j1, j2, j3 = (pres.letter(Eps(i)) for i in (1, 2, 3))
    out.append(("eps-a", q_commutator(j1, j2) - j3))
    out.append(("eps-b", q_commutator(j2, j3) - j1))
    out.append(("eps-c", q_commutator(j3, j1) - EPS * EPS * j2))


def check_relations(pres, minus_family_max_rank=6):
    """Return ``[(relation id, residual)]``; every residual must be the zero element.

    The I^- family (q replaced by q^-1) is checked as elements up to rank
    ``minus_family_max_rank``.
    """
    out = []
    if pres.family == EPS_SO:
        _eps_relations(pres, out)
        return out
    _so_defining(pres, out)
    _so_enlarged(pres, out, lambda k, l: pres.letter(So(k, l)))
    if pres.m <= minus_family_max_rank:
        minus = {}

        def letter_minus(k, l):
            if (k, l) not in minus:
                minus[k, l] = expand_derived(k, l, -1, pres)
            return minus[k, l]

        _so_enlarged(pres, out, letter_minus, sign=-1, tag="-minus")
    if pres.m >= 4:
        _so4_list(pres, out)
    if pres.family == ISO:
        _iso_relations(pres, out)
    return out


def nonzero_residuals(pres, **kw):
    return [(rid, r) for rid, r in check_relations(pres, **kw) if r]
