"""Coverage solvers for labeled graphs and two-player game graphs.

Decide whether m coverage goals can be visited (optionally within k
steps), compute exact coverage values, synthesize witness paths and
tester strategies, analyze end components of re-initializable games, and
generate the classic hardness instances (SAT, QBF, vertex cover,
Hamiltonian path) for cross-validation.
"""

from . import formats, oracle
from .errors import (
    ApCapExceededError,
    BudgetExceededError,
    CoverageError,
    EmptyEdgeSetError,
    FormatError,
    InvalidModelError,
    MOutOfRangeError,
    NotDeterministicError,
    NotRecurrentError,
)
from .game_cover import (
    EndComponent,
    GameAnswer,
    TesterStrategy,
    bounded_coverage_game,
    coverage_value_game,
    is_controllably_recurrent_game,
    max_coverage_game,
    min_cover_end_component,
    min_safety_value,
    strategy_covers,
    verify_end_component_witness,
)
from .graph_cover import (
    GraphAnswer,
    bounded_coverage_graph,
    coverage_value_graph,
    is_controllably_recurrent_graph,
    max_coverage_graph,
    max_coverage_recurrent_graph,
)
from .model import (
    DEFAULT_AP_CAP,
    PLAYER1,
    PLAYER2,
    LabeledGameGraph,
    LabeledGraph,
    SystemAutomaton,
    ValidationReport,
    Violation,
    compile_system,
    cover_of,
    game_to_graph,
    mask_names,
    names_mask,
    patch_self_loops,
    path_check,
    path_from_names,
    require_valid,
    validate,
)
from .reductions import (
    CnfFormula,
    Digraph,
    GadgetResult,
    QbfFormula,
    UndirectedGraph,
    hampath_to_bounded,
    parse_dimacs,
    parse_edge_list,
    parse_qdimacs,
    qbf_to_game,
    sat_to_graph,
    vc_to_game,
)

__version__ = "0.1.0"
