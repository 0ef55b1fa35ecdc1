"""Centrality checks against the generating set of a presentation."""

from dataclasses import dataclass

from ..algebra import commutator
from ..errors import DomainMismatch


@dataclass(frozen=True)
class CentralityVerdict:
    central: bool
    witness: tuple = None  # (GeneratorId, nonzero commutator)

    def __bool__(self):
        return self.central


def is_central(a, pres=None):
    """Commute ``a`` with every generator; the first nonzero commutator is the witness.

    The generators (I_{k,k-1}, plus T_m for iso, J_1 and J_2 for the
    eps-algebra) generate the algebra, so vanishing on them suffices.
    """
    pres = pres or a.pres
    if a.pres != pres:
        raise DomainMismatch("element is not over the given presentation")
    for g in pres.generators:
        c = commutator(a, pres.letter(g))
        if c:
            return CentralityVerdict(False, (g, c))
    return CentralityVerdict(True)
