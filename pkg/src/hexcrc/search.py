"""Search drivers: ball refutation, torus witness search, classification.

Feasibility of an intersection array means a distance-regular coloring
of the infinite grid with that array exists.  The drivers here decide
it from two directions:

  * torus witnesses: a perfect coloring of an even H x W torus with the
    array's profile matrix unrolls to a periodic plane coloring with
    the same matrix (neighbor counting on the torus is multiset-exact),
    proving the array FEASIBLE;
  * ball refutations: if even the radius-R ball around a node of color
    0 admits no partial coloring whose interior rows match exactly and
    whose boundary rows are not exceeded, no plane coloring exists and
    the array is INFEASIBLE.

Everything is deterministic: tori are scanned by increasing cell count
then height, the kernel explores nodes and colors in a fixed order, and
reports are sorted by array string.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import kernels
from .arrays import (
    IntersectionArray,
    enumerate_candidates,
    format_array,
    parse,
    reverse,
)
from .coloring import PeriodicColoring, is_distance_regular, parameter_matrix
from .grid import ORIGIN, Node, X, Y, Z, distance, shells, step

DEFAULT_RADIUS = 6
DEFAULT_SMALL_CELLS = 16
DEFAULT_MAX_CELLS = 256
DEFAULT_ASSIGN_BUDGET = 3_000_000


def _flat_rows(array: IntersectionArray) -> list[int]:
    return [v for row in array.rows for v in row]


def torus_class_sizes(array: IntersectionArray, cells: int) -> list[int] | None:
    """Exact color-class sizes forced on a torus with the given cell
    count, or None when no perfect coloring can exist on it.

    Counting edges between consecutive classes gives n_i * b_i =
    n_(i+1) * c_(i+1), so every class size is n_0 times a fixed
    rational; all sizes must be positive integers summing to the cell
    count, which rules many tori out by arithmetic alone.
    """
    ratios = [Fraction(1)]
    for i in range(array.k - 1):
        ratios.append(ratios[-1] * array.b(i) / array.c(i + 1))
    total = sum(ratios)
    n0 = Fraction(cells) / total
    sizes = []
    for ratio in ratios:
        ni = n0 * ratio
        if ni.denominator != 1 or ni <= 0:
            return None
        sizes.append(int(ni))
    return sizes


# ---------------------------------------------------------------------------
# Ball refutation
# ---------------------------------------------------------------------------


def _ball_graph(radius: int):
    """Nodes of the radius-R ball ordered by (distance, r, c), their
    neighbor slots (-1 outside the ball), and interior/boundary kinds."""
    layers = shells(ORIGIN, radius)
    nodes: list[Node] = [n for layer in layers for n in layer]
    index = {n: i for i, n in enumerate(nodes)}
    nbrs: list[int] = []
    kind: list[int] = []
    for d, layer in enumerate(layers):
        for n in layer:
            for g in (X, Y, Z):
                nbrs.append(index.get(step(n, g), -1))
            kind.append(0 if d < radius else 1)
    return nodes, nbrs, kind


def refutation_radius(array: IntersectionArray, r_max: int = DEFAULT_RADIUS) -> int | None:
    """The smallest radius R <= r_max whose ball admits no partial
    coloring rooted at color 0, or None if every ball up to r_max does.

    The root's three neighbors are constrained to non-decreasing colors,
    which removes the direction-permutation symmetry without losing any
    solution.
    """
    rows = _flat_rows(array)
    k = array.k
    for radius in range(1, r_max + 1):
        nodes, nbrs, kind = _ball_graph(radius)
        root_nbrs = tuple(
            nodes.index(step(ORIGIN, g)) for g in (X, Y, Z)
        )
        sol = kernels.solve(
            len(nodes), k, nbrs, kind, rows, [(0, 0)], root_nbrs
        )
        if sol is None:
            return radius
    return None


def forbidden_fragment_check(array: IntersectionArray) -> bool:
    """True when the array contains one of the two middle-group pairs
    111-102 or 201-111, a local pattern that admits no coloring."""
    if array.k < 4:
        return False
    groups = array.groups()
    for i in range(1, array.k - 2):
        a, b = groups[i], groups[i + 1]
        if a == (1, 1, 1) and b == (1, 0, 2):
            return True
        if a == (2, 0, 1) and b == (1, 1, 1):
            return True
    return False


# ---------------------------------------------------------------------------
# Torus search
# ---------------------------------------------------------------------------


def enumerate_tori(max_cells: int, min_cells: int = 0) -> list[tuple[int, int]]:
    """Even (H, W) pairs with min_cells < H*W <= max_cells, ordered by
    cell count then height."""
    out = []
    for h in range(2, max_cells // 2 + 1, 2):
        for w in range(2, max_cells // h + 1, 2):
            if min_cells < h * w:
                out.append((h, w))
    out.sort(key=lambda hw: (hw[0] * hw[1], hw[0]))
    return out


def _torus_graph(h: int, w: int) -> list[int]:
    nbrs = []
    for r in range(h):
        for c in range(w):
            n = Node(r, c)
            for g in (X, Y, Z):
                m = step(n, g)
                nbrs.append((m.r % h) * w + (m.c % w))
    return nbrs


def solve_torus(
    array: IntersectionArray,
    h: int,
    w: int,
    max_assigns: int | None = None,
) -> PeriodicColoring | None:
    """First perfect coloring of the h x w torus with the array's
    profile matrix, or None if there is none.

    Any solution can be translated so color 0 lands on cell (0, 0) or
    (0, 1) (grid translations move cells by even coordinate sums), so
    two pinned runs decide the whole torus.  Tori whose cell count is
    incompatible with the forced class sizes are rejected outright.
    A max_assigns budget makes an exhausted search raise BudgetExceeded
    instead of quietly looking like a completed proof.
    """
    if torus_class_sizes(array, h * w) is None:
        return None
    rows = _flat_rows(array)
    k = array.k
    nbrs = _torus_graph(h, w)
    kind = [0] * (h * w)
    for pin_cell in (0, 1):
        sol = kernels.solve(
            h * w, k, nbrs, kind, rows, [(pin_cell, 0)], None, max_assigns
        )
        if sol is not None:
            grid = tuple(
                tuple(sol[r * w + c] for c in range(w)) for r in range(h)
            )
            return PeriodicColoring(grid, k)
    return None


def torus_search(
    array: IntersectionArray,
    max_cells: int = DEFAULT_MAX_CELLS,
    min_cells: int = 0,
    max_assigns: int | None = DEFAULT_ASSIGN_BUDGET,
) -> PeriodicColoring | None:
    """Scan tori by increasing size for a witness coloring; every
    witness is re-verified against the array before it is returned.

    Tori whose search exceeds the assignment budget are skipped; that
    can only make the scan miss a witness, never invent one, so a
    returned coloring is always a proof while None means no witness was
    found within the budgets.
    """
    for h, w in enumerate_tori(max_cells, min_cells):
        try:
            col = solve_torus(array, h, w, max_assigns)
        except kernels.BudgetExceeded:
            continue
        if col is not None:
            verify_witness(array, col)
            return col
    return None


def verify_witness(array: IntersectionArray, coloring: PeriodicColoring) -> None:
    """Independent check that a witness proves its array feasible."""
    m = parameter_matrix(coloring)
    if m.rows != array.rows:
        raise RuntimeError(
            f"witness verification failed: matrix {m.rows} does not match "
            f"{format_array(array)}"
        )
    if not is_distance_regular(coloring):
        raise RuntimeError(
            f"witness verification failed: coloring for {format_array(array)} "
            "is not distance-regular"
        )


# ---------------------------------------------------------------------------
# Classification driver
# ---------------------------------------------------------------------------

FEASIBLE = "FEASIBLE"
INFEASIBLE = "INFEASIBLE"
UNDECIDED = "UNDECIDED"


@dataclass(frozen=True)
class SearchOutcome:
    """Classification result for one reversal class of arrays."""

    array: IntersectionArray
    status: str
    radius: int | None = None
    witness: PeriodicColoring | None = None

    @property
    def array_string(self) -> str:
        return format_array(self.array)


def classify_array(
    array: IntersectionArray,
    r_max: int = DEFAULT_RADIUS,
    small_cells: int = DEFAULT_SMALL_CELLS,
    max_cells: int = DEFAULT_MAX_CELLS,
) -> SearchOutcome:
    """Decide one array: small tori first, then ball refutation, then
    the full torus budget."""
    witness = torus_search(array, max_cells=small_cells)
    if witness is not None:
        return SearchOutcome(array, FEASIBLE, witness=witness)
    radius = refutation_radius(array, r_max)
    if radius is not None:
        return SearchOutcome(array, INFEASIBLE, radius=radius)
    witness = torus_search(array, max_cells=max_cells, min_cells=small_cells)
    if witness is not None:
        return SearchOutcome(array, FEASIBLE, witness=witness)
    return SearchOutcome(array, UNDECIDED)


def _classify_worker(args: tuple[str, int, int, int]) -> SearchOutcome:
    array_str, r_max, small_cells, max_cells = args
    return classify_array(parse(array_str), r_max, small_cells, max_cells)


def classify(
    k: int,
    r_max: int = DEFAULT_RADIUS,
    small_cells: int = DEFAULT_SMALL_CELLS,
    max_cells: int = DEFAULT_MAX_CELLS,
    threads: int = 1,
) -> list[SearchOutcome]:
    """Classify every reversal class of candidate arrays with k colors.
    Results are sorted by array string and independent of thread count."""
    reps = enumerate_candidates(k, up_to_reversal=True)
    jobs = [(format_array(a), r_max, small_cells, max_cells) for a in reps]
    if threads <= 1:
        outcomes = [_classify_worker(j) for j in jobs]
    else:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=threads) as pool:
            outcomes = list(pool.map(_classify_worker, jobs))
    return sorted(outcomes, key=lambda o: o.array_string)


def witness_filename(array: IntersectionArray) -> str:
    return format_array(array).strip("[]") + ".hexcol"


def report_lines(
    outcomes: list[SearchOutcome],
    out_dir: str | Path | None = None,
) -> list[str]:
    """One line per outcome: '<array> <STATUS>[@R] [witness-file]'.
    Witness files are written when out_dir is given."""
    from .coloring import write_hexcol

    lines = []
    for o in sorted(outcomes, key=lambda o: o.array_string):
        if o.status == FEASIBLE:
            assert o.witness is not None
            name = witness_filename(o.array)
            if out_dir is not None:
                path = Path(out_dir)
                path.mkdir(parents=True, exist_ok=True)
                write_hexcol(path / name, o.array, o.witness)
            lines.append(f"{o.array_string} FEASIBLE {name}")
        elif o.status == INFEASIBLE:
            lines.append(f"{o.array_string} INFEASIBLE@{o.radius}")
        else:
            lines.append(f"{o.array_string} UNDECIDED")
    return lines


def outcome_json(o: SearchOutcome) -> str:
    """One JSON object per outcome for machine consumption."""
    doc: dict = {
        "array": o.array_string,
        "reverse": format_array(reverse(o.array)),
        "k": o.array.k,
        "status": o.status,
    }
    if o.radius is not None:
        doc["radius"] = o.radius
    if o.witness is not None:
        doc["height"] = o.witness.H
        doc["width"] = o.witness.W
        doc["grid"] = ["".join(str(v) for v in row) for row in o.witness.grid]
    return json.dumps(doc, sort_keys=True)
