"""Named elements and maps: Casimirs, the root-of-unity central elements C^(n),
the polynomials p_m and q_m, the cyclic automorphism, the eps-isomorphism and
the contraction to U_q(iso_2)."""

from fractions import Fraction
from math import comb

from .algebra import EPS_SO, ISO, SO, AlgebraElement, Eps, So, Trans, build_presentation
from .coeffs import CoeffDomain, RationalFunction
from .coeffs.domain import eval_epsilon
from .coeffs.laurent import EPS, Q, Q_INV, S, S_INV
from .errors import NonPolynomialResult, UnsupportedN, WrongFamily

_Q_MINUS = RationalFunction(Q - Q_INV)
_Q_PLUS = RationalFunction(Q + Q_INV)


def _require(pres, family, m=None):
    if pres.family != family or (m is not None and pres.m != m):
        want = f"{family}:{m}" if m is not None else family
        raise WrongFamily(f"expected {want}, got {pres.name}")


def so3_letters(pres):
    """(I_1, I_2, I_3) = (I_21, I_32, I_31) as elements of so_3."""
    _require(pres, SO, 3)
    return tuple(pres.letter(g) for g in (So(2, 1), So(3, 2), So(3, 1)))


def casimir_so3(pres):
    """q^2 I_1^2 + I_2^2 + q^2 I_3^2 + q^(1/2)(1 - q^2) I_1 I_2 I_3."""
    i1, i2, i3 = so3_letters(pres)
    q2 = Q * Q
    return q2 * i1 * i1 + i2 * i2 + q2 * i3 * i3 + S * (1 - q2) * (i1 * i2 * i3)


def casimir_iso2(pres):
    """q^-1 T_1^2 + q T_2^2 + q^(-3/2)(1 - q^2) T_1 T_2 I."""
    _require(pres, ISO, 2)
    i, t1, t2 = (pres.letter(g) for g in (So(2, 1), Trans(1), Trans(2)))
    return Q_INV * t1 * t1 + Q * t2 * t2 + (S_INV ** 3) * (1 - Q * Q) * (t1 * t2 * i)


def cn_coefficients(n):
    """[(power, coeff)] of C^(n)(x) = sum_j C(n-j,j)/(n-j) (i/(q-q^-1))^(2j) x^(n-2j).

    The imaginary unit only enters squared, as (-1)^j.
    """
    out = []
    for j in range((n - 1) // 2 + 1):
        c = Fraction((-1) ** j * comb(n - j, j), n - j)
        out.append((n - 2 * j, c * _Q_MINUS ** (-2 * j)))
    return out


def cn_sum(x, n):
    """C^(n) evaluated on an arbitrary element x, for any n >= 1 (no hypothesis checks)."""
    pres = x.pres
    out = pres.zero()
    power, cur = 0, pres.scalar(1)
    for p, c in sorted(cn_coefficients(n)):
        while power < p:
            cur, power = cur * x, power + 1
        out = out + c * cur
    return out


def cn_element(letter, n, pres):
    """C^(n)(X) for a PBW letter X; central when q is a primitive n-th root of unity."""
    if n < 3:
        raise UnsupportedN(f"C^(n) needs n >= 3, got {n}")
    pres.lookup(letter)
    out = pres.zero()
    for p, c in cn_coefficients(n):
        out = out + c * pres.letter(letter, p)
    return out


# -- p_m and q_m ---------------------------------------------------------


class UniPoly:
    """Laurent polynomial in one variable x with rational-function coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {p: c for p, c in (terms or {}).items() if c}

    @classmethod
    def x_power(cls, p, coeff=1):
        return cls({p: RationalFunction(1) * coeff})

    def __add__(self, other):
        out = dict(self.terms)
        for p, c in other.terms.items():
            out[p] = out.get(p, 0) + c
        return UniPoly(out)

    def __neg__(self):
        return UniPoly({p: -c for p, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            return UniPoly({p: c * other for p, c in self.terms.items()})
        out = {}
        for p1, c1 in self.terms.items():
            for p2, c2 in other.terms.items():
                out[p1 + p2] = out.get(p1 + p2, 0) + c1 * c2
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        out = UniPoly.x_power(0)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, UniPoly) and self.terms == other.terms

    def min_power(self):
        return min(self.terms, default=0)

    def degree(self):
        return max(self.terms, default=-1)

    @property
    def coeffs(self):
        """Dense coefficient list, constant term first (no negative powers allowed)."""
        if self.min_power() < 0:
            raise NonPolynomialResult("negative powers of x present")
        return [self.terms.get(p, RationalFunction(0)) for p in range(self.degree() + 1)]

    def evaluate(self, x):
        """Substitute an algebra element (or scalar-like) for x."""
        pres = x.pres
        out = pres.zero()
        cur = pres.scalar(1)
        for p in range(self.degree() + 1):
            c = self.terms.get(p)
            if c:
                out = out + c * cur
            cur = cur * x
        return out

    def __repr__(self):
        return f"UniPoly({sorted(self.terms.items())!r})"


def pq_polys(m):
    """(p_m, q_m) with I_3 I_1^m = p_m(I_1) I_2 + q_m(I_1) I_3 in so_3.

    Expands the closed-form sums over Laurent polynomials in x and checks that
    every negative power of x cancels.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    half = _Q_PLUS * Fraction(1, 2)
    ratio_sq = (_Q_MINUS / _Q_PLUS) ** 2
    inner = UniPoly({0: ratio_sq, -2: -half ** -2})
    p_sum = UniPoly()
    for t in range((m - 1) // 2 + 1) if m >= 1 else ():
        p_sum = p_sum + comb(m, 2 * t + 1) * inner ** t
    p = UniPoly.x_power(m - 1, half ** (m - 1)) * p_sum * RationalFunction(S_INV)
    q_sum = UniPoly()
    for t in range(m // 2 + 1):
        q_sum = q_sum + comb(m, 2 * t) * inner ** t
    q = (UniPoly.x_power(1, -S * _Q_MINUS * Fraction(1, 2)) * p
         + UniPoly.x_power(m, half ** m) * q_sum)
    if p.min_power() < 0 or q.min_power() < 0:
        raise NonPolynomialResult(f"p_{m} or q_{m} keeps negative powers of x")
    return p, q


# -- maps ---------------------------------------------------------------


def substitute(a, images, target, coeff_map=None):
    """Apply the letter substitution ``images`` (GeneratorId -> element of target)."""
    coeff_map = coeff_map or target.domain.coerce
    out = target.zero()
    for mono, c in a.terms.items():
        term = target.scalar(1)
        for i, e in mono:
            img = images[a.pres.letters[i]]
            for _ in range(e):
                term = term * img
        out = out + coeff_map(c) * term
    return out


def rho_apply(a):
    """Cyclic automorphism I_1 -> I_2 -> I_3 -> I_1 of so_3."""
    pres = a.pres
    i1, i2, i3 = so3_letters(pres)
    images = {So(2, 1): i2, So(3, 2): i3, So(3, 1): i1}
    return substitute(a, images, pres)


def eps_so3(domain=None):
    """U'_{q,eps}(so_3) over ``domain`` (eps is always adjoined)."""
    domain = domain or CoeffDomain.generic(with_epsilon=True)
    return build_presentation(EPS_SO, 3, domain.with_eps())


def eps_iso(a, target=None):
    """J_1 -> eps I_1, J_2 -> I_2, J_3 -> eps I_3 into so_3 with eps adjoined."""
    _require(a.pres, EPS_SO)
    if target is None:
        target = build_presentation(SO, 3, a.pres.domain)
    _require(target, SO, 3)
    i1, i2, i3 = so3_letters(target)
    images = {Eps(1): EPS * i1, Eps(2): i2, Eps(3): EPS * i3}
    return substitute(a, images, target)


def tilde_cn(i, n, pres=None):
    """n eps^n C^(n)(J_i / eps) for i = 1, 3 and C^(n)(J_2) for i = 2."""
    if n < 3:
        raise UnsupportedN(f"C^(n) needs n >= 3, got {n}")
    if i not in (1, 2, 3):
        raise ValueError("i must be 1, 2 or 3")
    pres = pres or eps_so3()
    _require(pres, EPS_SO)
    if i == 2:
        return cn_element(Eps(2), n, pres)
    out = pres.zero()
    for p, c in cn_coefficients(n):
        out = out + (n * c * EPS ** (n - p)) * pres.letter(Eps(i), p)
    return out


def contract_to_iso2(a, target=None):
    """eps -> 0, then J_1 -> T_1, J_2 -> I_21, J_3 -> T_2, renormalized in iso_2."""
    _require(a.pres, EPS_SO)
    if target is None:
        target = build_presentation(ISO, 2, a.pres.domain.with_eps(False))
    _require(target, ISO, 2)
    images = {Eps(1): target.letter(Trans(1)), Eps(2): target.letter(So(2, 1)),
              Eps(3): target.letter(Trans(2))}
    return substitute(a, images, target, lambda c: target.domain.coerce(eval_epsilon(c, 0)))


__all__ = [
    "AlgebraElement", "casimir_so3", "casimir_iso2", "cn_coefficients", "cn_sum", "cn_element",
    "UniPoly", "pq_polys", "substitute", "rho_apply", "eps_so3", "eps_iso", "tilde_cn",
    "contract_to_iso2", "so3_letters",
]
