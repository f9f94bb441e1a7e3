"""Distance-regular colorings and completely regular codes of the
infinite hexagonal grid: verification, exhaustive search, equivalence,
coset-line shifts, a machine-checked catalog, and rendering.
"""

from .arrays import (
    IntersectionArray,
    ParameterMatrix,
    class_representative,
    enumerate_candidates,
    format_array,
    parse,
    reverse,
)
from .catalog import CatalogEntry, list_entries, list_names, load_entry, verify_all
from .coloring import (
    CapExceededError,
    CodeSet,
    HexcolFile,
    NotPerfectError,
    PeriodicColoring,
    ShiftPeriodError,
    ShiftSelection,
    all_line_keys,
    apply_automorphism,
    canonical_key,
    diagonal_period,
    distance_coloring,
    dump_hexcol,
    equivalent,
    intersection_array_of,
    is_completely_regular,
    is_distance_regular,
    load_hexcol,
    parameter_matrix,
    periodic_selection,
    read_hexcol,
    shift_cosets,
    shiftable_keys,
    write_hexcol,
)
from .grid import (
    IDENTITY,
    ORIGIN,
    PERMUTATIONS,
    CosetLine,
    Direction,
    Node,
    Translation,
    X,
    Y,
    Z,
    apply_symmetry,
    ball,
    coset_line,
    distance,
    line_key,
    neighbors,
    shells,
    step,
)
from .kernels import active_backend, available_backends, set_backend
from .render import PALETTE, render
from .search import (
    FEASIBLE,
    INFEASIBLE,
    UNDECIDED,
    SearchOutcome,
    classify,
    classify_array,
    forbidden_fragment_check,
    refutation_radius,
    torus_search,
    verify_witness,
)

__version__ = "0.1.0"

__all__ = [
    "IntersectionArray",
    "ParameterMatrix",
    "class_representative",
    "enumerate_candidates",
    "format_array",
    "parse",
    "reverse",
    "CatalogEntry",
    "list_entries",
    "list_names",
    "load_entry",
    "verify_all",
    "CapExceededError",
    "CodeSet",
    "HexcolFile",
    "NotPerfectError",
    "PeriodicColoring",
    "ShiftPeriodError",
    "ShiftSelection",
    "all_line_keys",
    "apply_automorphism",
    "canonical_key",
    "diagonal_period",
    "distance_coloring",
    "dump_hexcol",
    "equivalent",
    "intersection_array_of",
    "is_completely_regular",
    "is_distance_regular",
    "load_hexcol",
    "parameter_matrix",
    "periodic_selection",
    "read_hexcol",
    "shift_cosets",
    "shiftable_keys",
    "write_hexcol",
    "IDENTITY",
    "ORIGIN",
    "PERMUTATIONS",
    "CosetLine",
    "Direction",
    "Node",
    "Translation",
    "X",
    "Y",
    "Z",
    "apply_symmetry",
    "ball",
    "coset_line",
    "distance",
    "line_key",
    "neighbors",
    "shells",
    "step",
    "active_backend",
    "available_backends",
    "set_backend",
    "PALETTE",
    "render",
    "FEASIBLE",
    "INFEASIBLE",
    "UNDECIDED",
    "SearchOutcome",
    "classify",
    "classify_array",
    "forbidden_fragment_check",
    "refutation_radius",
    "torus_search",
    "verify_witness",
    "__version__",
]
