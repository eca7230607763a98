"""Exact computation of Culler-Shalen seminorms of knots.

Given boundary slopes, the base orbifold of the two-fold branched cover and
known exceptional surgeries, csnorm derives the total minimal norm S,
enumerates the decompositions of the character variety into norm curves and
r-curves, builds the fundamental polygon and its dual Newton polygon, and
lists the cyclic/finite surgery slopes the norm bounds cannot exclude.
"""

from .catalog import CatalogEntry, catalog, pretzel_profile
from .charcount import (
    CONTRIBUTION,
    CharacterBudget,
    TriangleGroup,
    dihedral_count,
    psl2_irreducible_count,
    psl2_reducible_count,
    psl2_total_count,
    seifert_budget,
    sl2_lift_count,
    total_minimal_norm,
)
from .errors import (
    CoefficientError,
    CSNormError,
    NormCurveCountError,
    NotANormCurveError,
    ProfileError,
    UnderdeterminedProfileError,
    ZeroCoefficientsError,
)
from .geometry import (
    LatticePolygon,
    NormBallPolygon,
    RationalPoint,
    newton_polygon,
    norm_ball,
    primitive_classes_within,
    render_svg,
)
from .peripheral import (
    LONGITUDE,
    MERIDIAN,
    PeripheralClass,
    Slope,
    class_of,
    distance,
    is_primitive,
    make_slope,
    parse_slope,
)
from .profile import dump_profile, load_profile, loads_profile, save_profile
from .report import full_report, render_text
from .seminorm import CurveSolution, SlopeSystem, classify, evaluate, minimal_positive_norm
from .solver import (
    Decomposition,
    KnotProfile,
    RCurveHint,
    SurgeryFact,
    candidate_curves,
    compute_S,
    decompositions,
)
from .surgery import SurgeryReport, classify_surgeries

__version__ = "0.1.0"
