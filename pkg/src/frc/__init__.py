"""High-precision calculator for a closed-form fine-structure formula and the
finite charge/mass renormalization schemes built on it."""

from .alpha import AlphaPoint, SearchOutcome, alpha, alpha_full, alpha_limit, nearest_nb, search_interval
from .codata import (
    ConstantRecord,
    PhysicalConstants,
    alpha_from_charge,
    default_dataset,
    format_concise,
    interval_of,
    load_dataset,
    parse_concise,
)
from .errors import (
    BracketError,
    DegenerateInputError,
    DomainError,
    DuplicateRecordError,
    FRCError,
    NoSolutionError,
    ParseError,
)
from .mass import MassCounterTerm, delta_m_ratio
from .numerics import Bracket, WORK_DPS, ctx, invert_monotone, real, round_decimal, solve_quadratic_stable
from .renorm_general import (
    D,
    G,
    C_quantity,
    GeneralRenorm,
    LambdaRoots,
    alpha_g,
    cutoff_general,
    lambda_roots,
    z3_general_sq,
)
from .renorm_simple import (
    NB_PHYSICAL,
    SimpleRenorm,
    alpha_renormalized,
    apply_z3_charge,
    check_consistency,
    cutoff_simple,
    z3_gt,
)

__version__ = "0.1.0"
