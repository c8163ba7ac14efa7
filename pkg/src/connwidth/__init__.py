"""Symmetric submodular connectivity systems: single ideals, linear
obstacles and exact linear-width, with exhaustive cross-checks."""

from .config import GuardExceeded, Guards
from .core import (
    AxiomId,
    AxiomReport,
    AxiomViolation,
    ConnectivitySystem,
    Graph,
    complement,
    elements_of,
    eval_subset,
    is_k_efficient,
    make_explicit,
    make_graph_boundary,
    make_graph_cut,
    mask_of,
    validate_symmetric_submodular,
)
from .families import (
    IhVariant,
    SetFamily,
    check_IB,
    check_IE,
    check_IH,
    check_IW,
    check_O1,
    check_O2,
    check_O3,
    check_SIS,
    is_linear_obstacle,
    is_single_ideal,
)
from .search import (
    BudgetExceeded,
    WidthResult,
    efficient_sets,
    enumerate_families,
    find_single_ideal_with_IE,
    linear_width,
    linear_width_bruteforce,
    prefix_width,
)
from .verify import (
    VerificationReport,
    check_lemma1,
    duality_check,
    precondition_singletons,
    theorem1_crosscheck,
    witness_reproduces,
)

__version__ = "0.1.0"
