"""Smooth (arbitrarily run-length differentiable) words over {1, 2}.

Derivative calculus, minimal forbidden-word catalogs, the avoidance
automaton of the k-differentiable languages with its compactions, the
vertical frontier representation with exact inversion, and an empirical
repetition-with-gap engine around the Kolakoski word.
"""

from .words import (
    ALPHABET,
    ExtensionProfile,
    NotCInfinity,
    NotDifferentiable,
    RootOfEmptyWord,
    WordError,
    classify,
    complement,
    derivative,
    derivative_chain,
    extend,
    extremal_primitives,
    height,
    is_cinf,
    is_k_differentiable,
    parse_word,
    primitives,
    reversal,
    rle,
    root,
    runs_to_word,
)
from .forbidden import (
    ForbiddenCatalog,
    InternalInconsistencyError,
    NotMinimalForbidden,
    Trie,
    build_trie,
    is_minimal_forbidden,
    mf_height,
    mf_set,
)
from .automata import (
    Automaton,
    CompactAutomaton,
    CompactState,
    avoidance_automaton,
    ck_automaton,
    class_members,
    compact,
)
from .vertical import (
    FrontierAutomaton,
    InconsistentFrontiers,
    Vertical,
    build_frontier_automaton,
    canonical_minimal,
    frontier_automaton_via_compaction,
    left_frontier,
    realize_left,
    reconstruct,
    right_frontier,
    vertical_repr,
    weak_target,
)
from .repetitions import (
    BoundReport,
    BudgetExceeded,
    CensusReport,
    GapRecord,
    RepetitivityTable,
    bound_check,
    census,
    kolakoski,
    repetitivity,
    self_encoding_holds,
    shortest_gap,
)

__version__ = "1.0.0"

__all__ = [
    "ALPHABET",
    "Automaton",
    "BoundReport",
    "BudgetExceeded",
    "CensusReport",
    "CompactAutomaton",
    "CompactState",
    "ExtensionProfile",
    "ForbiddenCatalog",
    "FrontierAutomaton",
    "GapRecord",
    "InconsistentFrontiers",
    "InternalInconsistencyError",
    "NotCInfinity",
    "NotDifferentiable",
    "NotMinimalForbidden",
    "RepetitivityTable",
    "RootOfEmptyWord",
    "Trie",
    "Vertical",
    "WordError",
    "avoidance_automaton",
    "bound_check",
    "build_frontier_automaton",
    "build_trie",
    "canonical_minimal",
    "census",
    "ck_automaton",
    "class_members",
    "classify",
    "compact",
    "complement",
    "derivative",
    "derivative_chain",
    "extend",
    "extremal_primitives",
    "frontier_automaton_via_compaction",
    "height",
    "is_cinf",
    "is_k_differentiable",
    "is_minimal_forbidden",
    "kolakoski",
    "left_frontier",
    "mf_height",
    "mf_set",
    "parse_word",
    "primitives",
    "realize_left",
    "reconstruct",
    "repetitivity",
    "reversal",
    "right_frontier",
    "rle",
    "root",
    "runs_to_word",
    "self_encoding_holds",
    "shortest_gap",
    "vertical_repr",
    "weak_target",
]
