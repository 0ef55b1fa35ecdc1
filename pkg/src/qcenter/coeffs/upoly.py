"""Dense univariate polynomials over Q as tuples of Fractions, low degree first.

The empty tuple is the zero polynomial; nonempty tuples never end in zero.
"""

from fractions import Fraction


def trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


def degree(p):
    return len(p) - 1


def add(p, r):
    n = max(len(p), len(r))
    return trim((p[i] if i < len(p) else 0) + (r[i] if i < len(r) else 0) for i in range(n))


def sub(p, r):
    return add(p, tuple(-c for c in r))


def mul(p, r):
    if not p or not r:
        return ()
    out = [Fraction(0)] * (len(p) + len(r) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(r):
                out[i + j] += a * b
    return trim(out)


def scale(p, c):
    return trim(a * c for a in p)


def divmod_(p, r):
    if not r:
        raise ZeroDivisionError("polynomial division by zero")
    rem = [Fraction(c) for c in p]
    lead = Fraction(r[-1])
    dr = len(r) - 1
    if len(rem) <= dr:
        return (), trim(rem)
    quot = [Fraction(0)] * (len(rem) - dr)
    for k in range(len(rem) - 1, dr - 1, -1):
        c = rem[k] / lead
        if c:
            quot[k - dr] = c
            for i, b in enumerate(r):
                rem[k - dr + i] -= c * b
    return trim(quot), trim(rem[:dr])


def monic(p):
    if not p:
        return p
    lead = Fraction(p[-1])
    return tuple(Fraction(c) / lead for c in p)


def gcd(p, r):
    """Monic gcd; gcd(0, 0) is 0."""
    p, r = trim(p), trim(r)
    while r:
        p, r = r, divmod_(p, r)[1]
    return monic(p)


def xgcd(p, r):
    """Return (g, u, v) with u*p + v*r = g, g monic."""
    r0, r1 = trim(p), trim(r)
    u0, u1 = (Fraction(1),), ()
    v0, v1 = (), (Fraction(1),)
    while r1:
        quo, rem = divmod_(r0, r1)
        r0, r1 = r1, rem
        u0, u1 = u1, sub(u0, mul(quo, u1))
        v0, v1 = v1, sub(v0, mul(quo, v1))
    if not r0:
        return (), (), ()
    lead = Fraction(r0[-1])
    return monic(r0), scale(u0, 1 / lead), scale(v0, 1 / lead)
