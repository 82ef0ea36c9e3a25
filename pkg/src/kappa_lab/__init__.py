"""kappa-lab: pinned distance-graph admissibility and configuration-set workbench."""

from .graph import PinnedGraph, parse_graph, serialize_graph, validate
from .admissibility import (
    ChoicePolicy,
    ConstructionOrder,
    DismantleTrace,
    admissibility_number,
    brute_force_kappa,
    degeneracy,
    run_k_algorithm,
)
from .certificates import (
    StarCertificate,
    StarStep,
    ThresholdReport,
    component_split,
    cycle_split,
    star_schedule,
    threshold_table,
)

__all__ = [
    "PinnedGraph",
    "parse_graph",
    "serialize_graph",
    "validate",
    "ChoicePolicy",
    "ConstructionOrder",
    "DismantleTrace",
    "admissibility_number",
    "brute_force_kappa",
    "degeneracy",
    "run_k_algorithm",
    "StarCertificate",
    "StarStep",
    "ThresholdReport",
    "component_split",
    "cycle_split",
    "star_schedule",
    "threshold_table",
]
