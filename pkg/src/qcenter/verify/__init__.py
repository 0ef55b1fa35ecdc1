"""Executable checks of every theorem-level claim."""

from .centrality import CentralityVerdict, is_central
from .confluence import (ConfluenceReport, check_local_confluence, crossing_finding,
                         pbw_oracle_sweep, random_word, strategy_oracle)
from .identities import (check_identity_A, check_identity_B, identity_A_sides, identity_B_sides,
                         sweep_identity)
from .relations import check_relations, nonzero_residuals, translation_serre_minus_form
from .suite import TARGETS, Report, check_pm_identity, n2_counterexample, run_check

__all__ = [
    "CentralityVerdict", "is_central", "ConfluenceReport", "check_local_confluence",
    "crossing_finding", "pbw_oracle_sweep", "random_word", "strategy_oracle",
    "check_identity_A", "check_identity_B", "identity_A_sides", "identity_B_sides",
    "sweep_identity", "check_relations", "nonzero_residuals", "translation_serre_minus_form",
    "TARGETS", "Report", "check_pm_identity", "n2_counterexample", "run_check",
]
