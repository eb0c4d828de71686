"""Edge-labeling games on spliced pairs of planar binary trees.

Build a graph from two same-arity trees glued leaf-to-leaf, label every
edge with 0, 1 or 2 so that each ternary vertex sees all three labels
and the two pendant roots agree. The package provides the tree grammar
and enumeration, the label product and its evaluation, the rotation
lattice on trees with primality and decomposition of games, two
bracket-algebra reformulations, exhaustive conjecture sweeps, a CLI,
and an HTTP service for the interactive board.
"""

from .algebras import (
    F2_ZERO,
    K_ZERO,
    KElem,
    KI,
    KJ,
    KK,
    Z0,
    Z1,
    Z2,
    f2_bracket,
    f2_evaluate,
    f2_jacobiator,
    k_bracket,
    k_check_presentation,
    k_evaluate,
    k_solve,
    label_to_f2,
)
from .game import (
    BudgetError,
    EdgeLabeling,
    Solution,
    SolutionCounts,
    Verdict,
    Vertex,
    Violation,
    YYGraph,
    count_solutions,
    derive_edge_labeling,
    make_graph,
    solve,
    solve_by_decomposition,
    to_dot,
    verify,
)
from .magma import (
    EXT_LABELS,
    INF,
    LABELS,
    PERMS,
    ExtLabel,
    Label,
    Perm3,
    apply_perm,
    evaluate,
    label_from_json,
    label_to_json,
    permute_label,
    product,
    transposition,
)
from .sweep import (
    AuditVerdict,
    SweepConfig,
    SweepReport,
    reduction_factor_audit,
    sweep,
)
from .tamari import (
    Decomposition,
    covers,
    decompose,
    is_prime_interval,
    is_prime_meetjoin,
    join,
    leq,
    meet,
)
from .trees import (
    LEAF,
    MAX_ARITY,
    ArityError,
    LeafInterval,
    Tree,
    TreeSyntaxError,
    enumerate_trees,
    leaf_intervals,
    left_comb,
    mirror,
    node,
    parse,
    right_comb,
    to_string,
)
from .version import __version__

__all__ = [
    "ArityError",
    "AuditVerdict",
    "BudgetError",
    "Decomposition",
    "EdgeLabeling",
    "EXT_LABELS",
    "ExtLabel",
    "F2_ZERO",
    "INF",
    "KElem",
    "KI",
    "KJ",
    "KK",
    "K_ZERO",
    "LABELS",
    "LEAF",
    "Label",
    "LeafInterval",
    "MAX_ARITY",
    "PERMS",
    "Perm3",
    "Solution",
    "SolutionCounts",
    "SweepConfig",
    "SweepReport",
    "Tree",
    "TreeSyntaxError",
    "Verdict",
    "Vertex",
    "Violation",
    "YYGraph",
    "Z0",
    "Z1",
    "Z2",
    "__version__",
    "apply_perm",
    "count_solutions",
    "covers",
    "decompose",
    "derive_edge_labeling",
    "enumerate_trees",
    "evaluate",
    "f2_bracket",
    "f2_evaluate",
    "f2_jacobiator",
    "is_prime_interval",
    "is_prime_meetjoin",
    "join",
    "k_bracket",
    "k_check_presentation",
    "k_evaluate",
    "k_solve",
    "label_from_json",
    "label_to_f2",
    "label_to_json",
    "leaf_intervals",
    "left_comb",
    "leq",
    "make_graph",
    "meet",
    "mirror",
    "node",
    "parse",
    "permute_label",
    "product",
    "reduction_factor_audit",
    "right_comb",
    "solve",
    "solve_by_decomposition",
    "sweep",
    "to_dot",
    "to_string",
    "transposition",
    "verify",
]
