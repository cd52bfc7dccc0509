"""Hamilton-circuit packings and decompositions of diregular tournaments.

Builds circulant ("leading") tournaments, packs them edge-disjointly by
modular step circuits (a full decomposition at prime orders, circuits
plus residual cycle systems otherwise), constructs rotationally
generated Hamilton-decomposable tournaments of any odd order, and
settles remaining cases with an exhaustive backtracking search and an
independent verifier.
"""

from .core import (
    Didegree,
    DirectedEdge,
    InvalidOrderError,
    NotATournamentError,
    Tournament,
    build_leading_tournament,
    didegree,
    edge_type,
    edges_of_type,
    is_diregular,
    validate_order,
)
from .steps import (
    CompositeOrderError,
    CycleSystem,
    HamiltonCircuit,
    NonCoprimeStepError,
    PackingResult,
    canonical_cycle,
    cycle_edges,
    decompose_prime,
    pack_leading,
    step_cycles,
    step_sequence,
)
from .rotation import (
    RotationLayout,
    base_circuit,
    rotation_decomposition,
    rotation_layout,
    rotation_permutation,
    rotation_tournament,
)
from .oracle import (
    BUDGET_EXCEEDED,
    DECOMPOSED,
    EXHAUSTED,
    EXHAUSTIVE_CEILING,
    SearchBudget,
    SearchOutcome,
    VerificationReport,
    find_decomposition,
    greedy_extend_circuit,
    verify_decomposition,
)
from .io_formats import (
    ExportStyle,
    MatrixFormatError,
    PackingJSONError,
    PALETTE,
    RESIDUAL_COLOR,
    export_dot,
    export_json,
    export_matrix,
    packing_to_dict,
    parse_json,
    parse_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "BUDGET_EXCEEDED",
    "CompositeOrderError",
    "CycleSystem",
    "DECOMPOSED",
    "Didegree",
    "DirectedEdge",
    "EXHAUSTED",
    "EXHAUSTIVE_CEILING",
    "ExportStyle",
    "HamiltonCircuit",
    "InvalidOrderError",
    "MatrixFormatError",
    "NonCoprimeStepError",
    "NotATournamentError",
    "PALETTE",
    "PackingJSONError",
    "PackingResult",
    "RESIDUAL_COLOR",
    "RotationLayout",
    "SearchBudget",
    "SearchOutcome",
    "Tournament",
    "VerificationReport",
    "base_circuit",
    "build_leading_tournament",
    "canonical_cycle",
    "cycle_edges",
    "decompose_prime",
    "didegree",
    "edge_type",
    "edges_of_type",
    "export_dot",
    "export_json",
    "export_matrix",
    "find_decomposition",
    "greedy_extend_circuit",
    "is_diregular",
    "pack_leading",
    "packing_to_dict",
    "parse_json",
    "parse_matrix",
    "rotation_decomposition",
    "rotation_layout",
    "rotation_permutation",
    "rotation_tournament",
    "step_cycles",
    "step_sequence",
    "validate_order",
    "verify_decomposition",
]
