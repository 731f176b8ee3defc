"""Maximum likelihood decoding equivalence of binary asymmetric channels."""

from ._errors import DomainError, ResourceLimitError
from .channel_core import (
    ChannelParams,
    Monomial,
    Reasonableness,
    Region,
    TransitionMatrix,
    build_matrix,
    eval_monomial,
    exponents,
    monomial_family,
    reasonableness,
)
from .criteria import (
    Criterion,
    CriticalSet,
    SValue,
    bac_s,
    channel_distance,
    classify,
    compare_s_to_fraction,
    critical_set,
    equivalent_by_s,
    extended_s,
    quasi_symmetric_boundary,
    separation_order,
    stable_count,
)
from .geometry import area, percentages, ratios, square_curves, trace_level_curve
from .oracle import verify_symmetries, verify_theorem, verify_witness_words
from .ordered_form import equivalent, equivalent_by_families, is_stable_point, ordered_form

__version__ = "0.1.0"
