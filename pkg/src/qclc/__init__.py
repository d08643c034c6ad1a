"""QC-LDPC codes with chordless short cycles: construction and analysis."""

from .chords import (
    ChordFreeReport,
    ChordWitness,
    SixEntryVector,
    check_3x3,
    check_3x4,
    check_chordfree,
    column_index_vector,
    six_entry_vector,
)
from .cycles import CycleWalk, algebraic_girth, cycle_sum, enumerate_walks, four_cycle_free
from .matrices import (
    BaseMatrix,
    ExponentMatrix,
    ParityCheckMatrix,
    export_alist,
    import_alist,
    lift,
    parse_text,
    serialize_text,
    validate,
)
from .search import (
    CompactSpec,
    SearchConfig,
    SearchResult,
    build_compact,
    corollary_check,
    search_compact,
    search_general,
)
from .tanner import (
    CycleInstance,
    TannerGraph,
    bfs_girth,
    enumerate_cycles,
    find_8wc,
    find_cycles_wc,
    is_chordless,
    six_cycles,
)
from .trapping import (
    BoundInfo,
    DistanceResult,
    TrappingSetRecord,
    VNGraph,
    b_lower_bound,
    dmin_bound,
    edge_bound,
    enumerate_ets,
    min_a,
    min_distance,
    vn_graph,
)

__version__ = "0.1.0"

__all__ = [
    "BaseMatrix",
    "BoundInfo",
    "ChordFreeReport",
    "ChordWitness",
    "CompactSpec",
    "CycleInstance",
    "CycleWalk",
    "DistanceResult",
    "ExponentMatrix",
    "ParityCheckMatrix",
    "SearchConfig",
    "SearchResult",
    "SixEntryVector",
    "TannerGraph",
    "TrappingSetRecord",
    "VNGraph",
    "algebraic_girth",
    "b_lower_bound",
    "bfs_girth",
    "build_compact",
    "check_3x3",
    "check_3x4",
    "check_chordfree",
    "column_index_vector",
    "corollary_check",
    "cycle_sum",
    "dmin_bound",
    "edge_bound",
    "enumerate_cycles",
    "enumerate_ets",
    "enumerate_walks",
    "export_alist",
    "find_8wc",
    "find_cycles_wc",
    "four_cycle_free",
    "import_alist",
    "is_chordless",
    "lift",
    "min_a",
    "min_distance",
    "parse_text",
    "search_compact",
    "search_general",
    "serialize_text",
    "six_cycles",
    "six_entry_vector",
    "validate",
    "vn_graph",
]
