"""Right-congruence analysis toolkit for deterministic omega-automata."""

from .congruence import (
    Classification,
    Quotient,
    classify,
    index,
    is_trivial,
    powerset,
    refines,
    rightcon_quotient,
    state_equivalent,
    trivial_decomposition,
)
from .fixtures import fixture, fixture_names, wagner_family
from .lab import ExperimentConfig, ExperimentReport, random_dma, run_experiment
from .loops import (
    AlternationMeasure,
    LoopTable,
    alternation_measure,
    is_db,
    is_dc,
    is_weak,
    loopable_sets,
    weak_to_buchi,
    weak_to_cobuchi,
)
from .model import (
    Acceptor,
    Alphabet,
    Buchi,
    CoBuchi,
    LassoWord,
    MullerStates,
    MullerTransitions,
    Parity,
    RunAnalysis,
    TransitionStructure,
    complete_with_sink,
    lasso,
    make_structure,
    validate,
)
from .oaf import format_lasso, parse_lasso, parse_oaf, print_oaf
from .ops import combine, complement, convert, equivalent, product
from .profiles import (
    Profile,
    ProfileMonoid,
    is_non_counting,
    is_respective,
    omega_accept,
    profile_monoid,
    respective_pair_check,
)
from .semantics import accepts, lasso_run

__version__ = "0.1.0"
