"""Minimum-link k-connected survivable network topologies.

Nodes are ranked by accumulated link cost, split into the ``k`` cheapest
and the rest, and joined as a complete bipartite graph. Comparator
constructions, exact vertex connectivity with certificates, and a failure
simulator are included so every connectivity claim can be checked.
"""

__version__ = "0.1.0"

from .analysis import ComparisonRow, compare, link_count_formula, total_cost
from .connectivity import (
    ConnectivityReport,
    brute_force_connectivity,
    is_k_connected,
    local_connectivity,
    vertex_connectivity,
)
from .costmodel import CostMatrix, CostMatrixError, Numbering, accumulated_costs, number_nodes
from .generators import (
    ConnectivityWarning,
    generate_bipartite,
    generate_harary,
    generate_hypercube,
    generate_sequential,
)
from .survivsim import SurvivabilityReport, TrialConfig, exhaustive_survivability, simulate
from .topology import Topology, degree, is_connected, remove_nodes

__all__ = [
    "ComparisonRow",
    "ConnectivityReport",
    "ConnectivityWarning",
    "CostMatrix",
    "CostMatrixError",
    "Numbering",
    "SurvivabilityReport",
    "Topology",
    "TrialConfig",
    "accumulated_costs",
    "brute_force_connectivity",
    "compare",
    "degree",
    "exhaustive_survivability",
    "generate_bipartite",
    "generate_harary",
    "generate_hypercube",
    "generate_sequential",
    "is_connected",
    "is_k_connected",
    "link_count_formula",
    "local_connectivity",
    "number_nodes",
    "remove_nodes",
    "simulate",
    "total_cost",
    "vertex_connectivity",
]
