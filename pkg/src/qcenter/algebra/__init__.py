"""Presentations, the PBW straightening table and the normal-form engine."""

from .element import AlgebraElement
from .letters import Eps, GeneratorId, So, Trans
from .ops import (commutator, expand_derived, expand_translation, multiply, normal_form,
                  q_commutator, straighten_pair)
from .presentation import (DEFAULT_CROSSING, EPS_SO, ISO, PLAIN, QBRACKET, SO, Presentation,
                           build_presentation, defining_relations)

__all__ = [
    "AlgebraElement", "GeneratorId", "So", "Trans", "Eps", "Presentation", "build_presentation",
    "defining_relations", "straighten_pair", "normal_form", "multiply", "commutator",
    "q_commutator", "expand_derived", "expand_translation",
    "SO", "ISO", "EPS_SO", "QBRACKET", "PLAIN", "DEFAULT_CROSSING",
]
