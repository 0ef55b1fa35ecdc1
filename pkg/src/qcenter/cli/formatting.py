"""Canonical text and JSON renderings of scalars and algebra elements."""

import json
from fractions import Fraction

from ..coeffs import CycloElement, EpsPolynomial, LaurentScalar, RationalFunction
from ..errors import UnsupportedScalar


# -- scalars as signed terms ---------------------------------------------


def _q_part(sp):
    if sp == 0:
        return ""
    if sp % 2:
        return f"q^({sp}/2)"
    k = sp // 2
    if k == 1:
        return "q"
    return f"q^{k}" if k > 0 else f"q^({k})"


def _eps_part(ep):
    if ep == 0:
        return ""
    return "eps" if ep == 1 else f"eps^{ep}"


def _laurent_like_terms(items):
    """[(sign, body)] for ``[((s_pow, eps_pow), coeff)]`` sorted by (eps, s)."""
    out = []
    for (sp, ep), c in sorted(items, key=lambda kv: (kv[0][1], kv[0][0])):
        parts = [p for p in (_q_part(sp), _eps_part(ep)) if p]
        mag = abs(c)
        if mag != 1 or not parts:
            parts.insert(0, str(mag))
        out.append((-1 if c < 0 else 1, "*".join(parts)))
    return out


def _join(terms):
    if not terms:
        return "0"
    text = ""
    for i, (sign, body) in enumerate(terms):
        if i == 0:
            text = ("-" if sign < 0 else "") + body
        else:
            text += (" - " if sign < 0 else " + ") + body
    return text


def _flat_items(c):
    """Items ``((s_pow, eps_pow), Fraction)`` of a polynomial-like scalar, or None."""
    if isinstance(c, (int, Fraction)):
        return [((0, 0), Fraction(c))] if c else []
    if isinstance(c, LaurentScalar):
        return list(c.items())
    if isinstance(c, RationalFunction):
        return list(c.num.items()) if c.is_laurent() else None
    if isinstance(c, CycloElement):
        return [((k, 0), v) for k, v in enumerate(c.coeffs) if v]
    if isinstance(c, EpsPolynomial):
        return [((k, ep), v) for ep, base in c.items() for k, v in enumerate(base.coeffs) if v]
    raise UnsupportedScalar(f"cannot format {type(c).__name__}")


def scalar_terms(c):
    """Signed term list, or a single compound ``(num)/(den)`` body."""
    items = _flat_items(c)
    if items is not None:
        return _laurent_like_terms(items)
    num = _join(_laurent_like_terms(c.num.items()))
    den = _join(_laurent_like_terms(c.den.items()))
    return [(1, f"({num})/({den})")]


def format_scalar(c):
    return _join(scalar_terms(c))


# -- elements --------------------------------------------------------------


def format_monomial(pres, mono):
    parts = []
    for i, e in mono:
        name = str(pres.letters[i])
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def format_element(a):
    """Canonical text: terms in PBW monomial order, scalars in front, zero as ``0``."""
    pres = a.pres
    out = []
    for mono in a.monomials():
        st = scalar_terms(a.coefficient(mono))
        if not mono:
            out.extend(st)
            continue
        word = format_monomial(pres, mono)
        if len(st) == 1 and not st[0][1].startswith("("):
            sign, body = st[0]
            out.append((sign, word if body == "1" else f"{body}*{word}"))
        else:
            out.append((1, f"({_join(st)})*{word}" if len(st) > 1 else f"{st[0][1]}*{word}"))
    return _join(out)


# -- JSON ------------------------------------------------------------------


def _rat_json(r):
    r = Fraction(r)
    return {"num": str(r.numerator), "den": str(r.denominator)}


def _rat_from(obj):
    return Fraction(int(obj["num"]), int(obj["den"]))


def _laurent_json(ls):
    return [[sp, ep, str(c.numerator), str(c.denominator)]
            for (sp, ep), c in sorted(ls.items(), key=lambda kv: (kv[0][1], kv[0][0]))]


def _laurent_from(rows):
    return LaurentScalar({(int(sp), int(ep)): Fraction(int(n), int(d)) for sp, ep, n, d in rows})


def scalar_to_json(c):
    """Rationals as {num, den}; Laurent scalars as [s_pow, eps_pow, num, den] rows;
    cyclotomic elements as {conductor, coeffs}; eps polynomials as {eps: [[k, cyclo]]}."""
    if isinstance(c, (int, Fraction)):
        return _rat_json(c)
    if isinstance(c, LaurentScalar):
        return _laurent_json(c)
    if isinstance(c, RationalFunction):
        if c.is_laurent():
            return _laurent_json(c.num)
        return {"num": _laurent_json(c.num), "den": _laurent_json(c.den)}
    if isinstance(c, CycloElement):
        return {"conductor": c.conductor, "coeffs": [_rat_json(v) for v in c.coeffs]}
    if isinstance(c, EpsPolynomial):
        return {"eps": [[k, scalar_to_json(base)] for k, base in sorted(c.items())]}
    raise UnsupportedScalar(f"cannot serialize {type(c).__name__}")


def scalar_from_json(obj, domain):
    if isinstance(obj, list):
        return domain.coerce(RationalFunction(_laurent_from(obj)))
    if "conductor" in obj:
        return domain.coerce(CycloElement(obj["conductor"], [_rat_from(v) for v in obj["coeffs"]]))
    if "eps" in obj:
        one = domain.one
        out = domain.zero
        for k, base in obj["eps"]:
            out = out + domain.eps(k) * scalar_from_json(base, domain.with_eps(False)) * one
        return out
    if isinstance(obj["num"], list):
        return domain.coerce(RationalFunction(_laurent_from(obj["num"]), _laurent_from(obj["den"])))
    return domain.coerce(_rat_from(obj))


def element_to_json(a):
    terms = []
    for mono in a.monomials():
        terms.append({"mono": [[str(a.pres.letters[i]), e] for i, e in mono],
                      "coeff": scalar_to_json(a.coefficient(mono))})
    return {"terms": terms}


def element_from_json(obj, pres):
    from .parser import parse_letter
    out = pres.zero()
    for t in obj["terms"]:
        term = pres.scalar(scalar_from_json(t["coeff"], pres.domain))
        for name, e in t["mono"]:
            term = term * pres.letter(parse_letter(name, pres), e)
        out = out + term
    return out


def dumps(obj):
    return json.dumps(obj, indent=2, sort_keys=False)
