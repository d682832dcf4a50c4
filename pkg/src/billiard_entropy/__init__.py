"""Entropy bounds and symbolic orbit construction for stadium-like billiards."""

from .coding import (
    SymbolWord,
    TransitionTable,
    complete_word,
    count_words,
    encode,
    enumerate_words,
    growth_rate,
    is_admissible,
    level_diffs_to_word,
    word_to_level_diffs,
)
from .errors import (
    BilliardError,
    BisectionStall,
    BlockTooLong,
    CornerHit,
    DomainError,
    NoCollision,
    NoConvergence,
    NoMarker,
    ShapeUnsupported,
    TangentialCollision,
    TargetUnreachable,
    UntrackedCollision,
)
from .freearc import (
    FreeArcCertificate,
    find_marker_points,
    max_symbol_bound,
    verify_arc_free,
    verify_point_free,
)
from .geometry import (
    CircularArc,
    Curve,
    LineSegment,
    PhasePoint,
    SampledCurve,
    Table,
    TrajectorySegment,
    argument_of,
    make_mushroom,
    make_stadium,
    next_collision,
    simulate,
    simulate_to_cap_count,
    stadium_table,
    trace_ray,
)
from .sft import (
    EntropyCertificate,
    adjacency,
    entropy_lower_bound,
    largest_root_eq0,
    limit_bound,
    mushroom_certificate,
    rome_largest_zero,
    spectral_radius,
    stadium_certificate,
)
from .shooting import CurveBundle, initial_bundle, realize_itinerary, refine_bundle
from .unfolding import (
    LiftedSegment,
    cast_to_cap_copies,
    doubled_table,
    level_differences,
    unfold_flight,
)

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
