"""Toroidal hitomezashi patterns: loops, heights, excursions, and Seifert circles."""

from .errors import (
    DivisibilityViolation,
    HitomezashiError,
    InconsistentHeight,
    InvalidEdge,
    InvalidMap,
    LengthMismatch,
    MoveScheduleFailure,
    NotAlternating,
    NotATriangle,
    NotBalanced,
    OrientationViolation,
    ParseError,
    SizeTooSmall,
    SweepRangeError,
    WrongHomology,
)
from .pattern import (
    DirectedEdge,
    PlanarLift,
    SignString,
    ToroidalPattern,
    gcd_xy,
    k,
    lift,
    make_pattern,
    out_edge,
    parse_signs,
    reflect_x,
    reflect_y,
    rotated,
    symmetric_pattern,
    transpose_pattern,
)
from .loops import (
    CountSummary,
    Loop,
    LoopDecomposition,
    decompose,
    homology,
    loop_count,
    next_edge,
    summarize,
    turning_number,
)
from .height import (
    boundary_heights_separate,
    edge_height2,
    loop_height2,
    region_height,
)
from .excursion import (
    ABExcursion,
    AExcursion,
    PlanarPath,
    a_residue,
    ab_residue,
    decompose_vertical,
    find_ab_excursion,
    is_a_excursion,
    is_ab_excursion,
    lift_loop,
)
from .linklike import (
    LinkLikeGraph,
    MoveRecord,
    TriangleFace,
    apply_triple_move,
    configuration_type,
    from_symmetric_pattern,
    is_isomorphic,
    orientation_type,
    swap_first_strands,
    triangle_faces,
)
from .verify import (
    SweepSpec,
    TheoremReport,
    Violation,
    brute_oracle,
    oracle_agrees,
    render_report,
    verify_counts,
    verify_excursions,
    verify_homology,
    verify_length,
    verify_moves,
    verify_seifert,
)

__version__ = "0.1.0"
