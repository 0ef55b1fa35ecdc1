"""Ring operations and the recursively defined elements I^{+-}_{kl}, T^{+-}_k."""

from ..coeffs.laurent import S, S_INV
from ..errors import BadIndices, DomainMismatch, UnknownLetter
from .letters import So, Trans
from .presentation import ISO, SO


def straighten_pair(x, y, pres):
    return pres.straighten_pair(x, y)


def normal_form(words, pres):
    """Normalize a scalar-weighted word list ``[(coeff, [GeneratorId, ...]), ...]``."""
    return pres.normal_form(words)


def multiply(a, b, pres=None):
    pres = pres or a.pres
    if a.pres != pres or b.pres != pres:
        raise DomainMismatch("operands belong to different presentations")
    return pres.multiply(a, b)


def commutator(a, b):
    """Plain commutator ``a*b - b*a``."""
    return multiply(a, b) - multiply(b, a)


def q_commutator(a, b, sign=1):
    """``[a, b]_{q^sign} = q^(sign/2) a b - q^(-sign/2) b a``."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    up, down = (S, S_INV) if sign == 1 else (S_INV, S)
    return up * multiply(a, b) - down * multiply(b, a)


def expand_derived(k, l, sign, pres):
    """I^{sign}_{kl} through the recursion [I_{l+1,l}, I^{sign}_{k,l+1}]_{q^sign}.

    Built from generators only, so for sign=+1 the normalized result is the
    single PBW letter I[k,l] exactly when the rule table is sound.
    """
    if k <= l or l < 1:
        raise BadIndices(f"I[{k},{l}] needs k > l >= 1")
    if pres.family not in (SO, ISO) or k > pres.m:
        raise UnknownLetter(f"I[{k},{l}] is not in {pres.name}")
    if k == l + 1:
        return pres.letter(So(k, l))
    return q_commutator(pres.letter(So(l + 1, l)), expand_derived(k, l + 1, sign, pres), sign)


def expand_translation(k, sign, pres):
    """T^{sign}_k = [I_{k+1,k}, T^{sign}_{k+1}]_{q^sign}, with T_m a generator."""
    if pres.family != ISO:
        raise UnknownLetter("T-letters exist only in iso algebras")
    if not 1 <= k <= pres.m:
        raise BadIndices(f"T[{k}] needs 1 <= k <= {pres.m}")
    if k == pres.m:
        return pres.letter(Trans(k))
    return q_commutator(pres.letter(So(k + 1, k)), expand_translation(k + 1, sign, pres), sign)
