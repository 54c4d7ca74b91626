"""Restricted Kolmogorov complexity over enumerated classes of total functions.

The package provides:

  * effective classes with computable joint evaluation (eventually constant
    functions, a primitive recursive fragment),
  * prefix complexity, complexity profiles and finite complexity classes,
  * computable orders and exact decision of anticomplexity,
  * boundary constructions (escape values, trapping orders, witnesses),
  * staged acceptors, uniform effective opens and oracle semi-decision,
  * synthesis of cylinder-plus-anticomplexity covers for semi-decidable
    properties, replay from indices, and exhaustive truncation verification.
"""

from .anticomplex import (
    DecideStats,
    TrappingOrder,
    brute_force_anticomplex,
    decide_anticomplex,
    escape_index,
    non_interior_witness,
    trapping_order,
)
from .classes import EffectiveClass
from .complexity import (
    ClassFunctions,
    ComplexityProfile,
    class_functions,
    class_points,
    complexity_profile,
    prefix_complexity,
    prefix_complexity_at_most,
)
from .cover import (
    CoverBudgets,
    CoverComponent,
    CoverReport,
    UniformOpenFamily,
    breakpoint_invariant_violations,
    cover_from_json,
    cover_to_json,
    enumerate_cover,
    monotonize,
    open_family,
    semidecide_from_cover,
    synthesize_breakpoints,
    verify_cover_truncation,
)
from .ec import ec_decode, ec_encode, make_ec, pair, reduce_word, unpair
from .orders import (
    BreakpointsOrder,
    ComputableOrder,
    IdentityOrder,
    MinClauseOrder,
    TableOrder,
    load_order,
    order_from_json,
)
from .outcomes import (
    Accept,
    ArityError,
    BudgetExhausted,
    CeclabError,
    DifferAt,
    Equal,
    ExceedsBound,
    FuelExhausted,
    NoVerdictYet,
    NotCapable,
    ParseError,
    SearchExhausted,
    UnknownBeyondHorizon,
    WitnessNotFound,
)
from .pr import (
    ADDITION,
    MULTIPLICATION,
    Comp,
    PrimRec,
    Proj,
    Succ,
    Term,
    Zero,
    arity,
    evaluate,
    make_pr,
    parse,
    pr_enumerate,
    render,
)
from .topology import (
    ClassifiedRun,
    EffectiveOpen,
    StagedAcceptor,
    build_uniform_opens,
    certified_words,
    certifies_acceptance,
    cylinder_acceptor,
    oracle_semidecide,
    word_in_open,
)
from .words import Word, canonical_words, format_word, parse_word, word_at, word_is_prefix

__version__ = "0.1.0"

__all__ = [
    "Accept",
    "ADDITION",
    "ArityError",
    "BreakpointsOrder",
    "BudgetExhausted",
    "CeclabError",
    "ClassFunctions",
    "ClassifiedRun",
    "Comp",
    "ComplexityProfile",
    "ComputableOrder",
    "CoverBudgets",
    "CoverComponent",
    "CoverReport",
    "DecideStats",
    "DifferAt",
    "EffectiveClass",
    "EffectiveOpen",
    "Equal",
    "ExceedsBound",
    "FuelExhausted",
    "IdentityOrder",
    "MinClauseOrder",
    "MULTIPLICATION",
    "NotCapable",
    "NoVerdictYet",
    "ParseError",
    "PrimRec",
    "Proj",
    "SearchExhausted",
    "StagedAcceptor",
    "Succ",
    "TableOrder",
    "Term",
    "TrappingOrder",
    "UniformOpenFamily",
    "UnknownBeyondHorizon",
    "WitnessNotFound",
    "Word",
    "Zero",
    "arity",
    "breakpoint_invariant_violations",
    "brute_force_anticomplex",
    "build_uniform_opens",
    "canonical_words",
    "certified_words",
    "certifies_acceptance",
    "class_functions",
    "class_points",
    "complexity_profile",
    "cover_from_json",
    "cover_to_json",
    "cylinder_acceptor",
    "decide_anticomplex",
    "ec_decode",
    "ec_encode",
    "enumerate_cover",
    "escape_index",
    "evaluate",
    "format_word",
    "load_order",
    "make_ec",
    "make_pr",
    "monotonize",
    "non_interior_witness",
    "open_family",
    "oracle_semidecide",
    "order_from_json",
    "pair",
    "parse",
    "parse_word",
    "pr_enumerate",
    "prefix_complexity",
    "prefix_complexity_at_most",
    "reduce_word",
    "render",
    "semidecide_from_cover",
    "synthesize_breakpoints",
    "trapping_order",
    "unpair",
    "verify_cover_truncation",
    "word_at",
    "word_in_open",
    "word_is_prefix",
]
