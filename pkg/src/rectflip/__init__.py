"""Diagonal rectangulations, their permutation fibers, and flip graphs."""

from .bijection import (
    Fiber,
    antidiagonal_reading,
    baxter_of,
    block_delete_bottom_left,
    block_deletion_word,
    fiber,
    rightmost_of,
    slash_representative,
    twisted_baxter_of,
    unique_class_member,
)
from .flipgraph import (
    FlipGraph,
    VerificationReport,
    build,
    graph_json,
    metrics,
    simple_flip_components,
    verify_characterization,
    verify_counts,
    verify_inversion,
    verify_theorem_lr,
    verify_theorem_main,
)
from .flips import (
    EdgeUnflippable,
    FlipClass,
    FlipKind,
    classify_edge,
    flip,
    law_reading_edges,
    neighbors,
    rotated_partition,
)
from .order import drec_covers, inversion_mask, is_drec_cover, weak_leq
from .permutation import (
    BAXTER,
    CLASSES_BY_NAME,
    RIGHTMOST,
    S_CLASS,
    SEPARABLE,
    TWISTED_BAXTER,
    PatternClass,
    VincularPattern,
    adjacent_position_swap,
    avoids_class,
    consecutive_value_swap,
    contains_vincular,
    enumerate_avoiders,
    format_permutation,
    inverse,
    inversion_set,
    parse_permutation,
)
from .rectangulation import (
    Edge,
    Geometry,
    GridRectangulation,
    NotDiagonalError,
    Rect,
    TwinTrees,
    canonicalize,
    diagonal_obstruction,
    reflect_rows,
    rho,
    rho_prime,
    staircase_extraction,
    twin_trees,
)

__version__ = "0.1.0"
