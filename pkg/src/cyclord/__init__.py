"""Finite circular orders, their maps, splits, completions, bounded
variation and Sturmian orbit snapshots, all in exact arithmetic."""
from .errors import *  # noqa: F401,F403
from .orders import (
    AxiomReport,
    ConvexSet,
    Cut,
    FiniteCircularOrder,
    FiniteLinearOrder,
    Gap,
    IntervalIntersection,
    PointCut,
    TernaryRelationTable,
    classify_cut,
    cut_at,
    intersect_intervals,
    is_convex,
    is_cycle,
    order_from_relation,
    verify_circular_axioms,
)
from .maps import (
    MapFamily,
    OrderMap,
    compose,
    validate_cop,
    validate_cop_via_cycles,
    validate_lop,
    validated_cop,
    validated_lop,
)
from .split import SplitLabel, SplitSpace, lex_product_circular, single_split, split_subset
from .completion import (
    build_quotient_system,
    inverse_limit_threads,
    novak_bracket,
    star_cover,
    star_refine,
)
from .variation import (
    RationalMetricSpace,
    SampledFunction,
    helly_select,
    independence_depth,
    jordan_decompose,
    oscillation_decompose,
    variation,
)
from .sturmian import IrrationalAngle, OrbitPoint, compare_orbit, orbit_cycle, sturmian_code

__version__ = "0.1.0"
