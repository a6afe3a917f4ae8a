"""Compound three-valued conditionals as exact-rational random quantities.

A conditional [a|b] is true where both events hold, false where the
antecedent holds without the consequent, and undecided elsewhere.
Compounds built from such conditionals with not/and/or are interpreted
as world-indexed vectors of exact rationals: decided worlds contribute
0 or 1, undecided worlds contribute the fair price of what remains of
the term there.  The package computes those vectors and their
previsions under finite full conditional probabilities, decides
equivalence and entailment of terms through the atoms of their Boolean
algebra, and exposes the betting reading of the prices.
"""

from .betting import BetReport, bet
from .conditionals import (
    DEFAULT_ATOM_LIMIT,
    AtomSequence,
    atom_chain_weight,
    atom_set,
    atom_term,
    enumerate_atoms,
    equiv,
    eval_under_atom,
    leq_term,
    mu_p,
)
from .errors import (
    AtomLimitError,
    DomainError,
    ModelError,
    ParseError,
    SpaceMismatchError,
    TrieventError,
)
from .events import Event, WorldSpace
from .laws import LawsReport, run_laws
from .model import Model
from .parsing import load_model, parse_event_expr, parse_model, parse_term
from .prevision import (
    PrevisionEngine,
    RandomQuantity,
    conditional_prevision,
    conditionalize,
)
from .probability import (
    ConditionalProbability,
    ValidationReport,
    validate_conditional_probability,
)
from .rationals import parse_rational, rational_from_json, rational_json
from .terms import (
    And,
    BasicConditional,
    CondTerm,
    Constant,
    Not,
    ONE,
    Or,
    ZERO,
    antecedent_disjunction,
    basic_occurrences,
    cond_set,
    normalize,
    proper_reducts,
    reduce,
    term_space,
    term_to_str,
)

__version__ = "0.1.0"

__all__ = [
    "AtomLimitError",
    "AtomSequence",
    "And",
    "BasicConditional",
    "BetReport",
    "CondTerm",
    "ConditionalProbability",
    "Constant",
    "DEFAULT_ATOM_LIMIT",
    "DomainError",
    "Event",
    "LawsReport",
    "Model",
    "ModelError",
    "Not",
    "ONE",
    "Or",
    "ParseError",
    "PrevisionEngine",
    "RandomQuantity",
    "SpaceMismatchError",
    "TrieventError",
    "ValidationReport",
    "WorldSpace",
    "ZERO",
    "antecedent_disjunction",
    "atom_chain_weight",
    "atom_set",
    "atom_term",
    "basic_occurrences",
    "bet",
    "cond_set",
    "conditional_prevision",
    "conditionalize",
    "enumerate_atoms",
    "equiv",
    "eval_under_atom",
    "leq_term",
    "load_model",
    "mu_p",
    "normalize",
    "parse_event_expr",
    "parse_model",
    "parse_rational",
    "parse_term",
    "proper_reducts",
    "rational_from_json",
    "rational_json",
    "reduce",
    "run_laws",
    "term_space",
    "term_to_str",
    "validate_conditional_probability",
]
