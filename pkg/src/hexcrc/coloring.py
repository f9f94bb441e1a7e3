"""Periodic colorings of the hexagonal grid.

A coloring is stored as a rectangular fundamental domain of color
indices with even height H and even width W: (H, 0) and (0, W) are grid
translations exactly when both are even, and tiling the plane with the
domain defines the coloring everywhere.

This module verifies perfectness (parameter matrices), distance
regularity and complete regularity, applies grid automorphisms, decides
equivalence, computes canonical keys, shifts colorings along coset
lines, and reads/writes the HEXCOL text format.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import gcd
from typing import Iterable, NamedTuple, Sequence

from .arrays import IntersectionArray, ParameterMatrix, format_array, parse
from .grid import (
    PERMUTATIONS,
    Direction,
    Node,
    X,
    Y,
    Z,
    line_key,
    step,
)


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


class NotPerfectError(Exception):
    """Two same-colored nodes have different neighbor color profiles."""

    def __init__(
        self,
        color: int,
        node_a: Node,
        profile_a: tuple[int, ...],
        node_b: Node,
        profile_b: tuple[int, ...],
    ) -> None:
        self.color = color
        self.node_a = node_a
        self.profile_a = profile_a
        self.node_b = node_b
        self.profile_b = profile_b
        super().__init__(
            f"color {color} is not perfect: node {tuple(node_a)} has "
            f"profile {profile_a} but node {tuple(node_b)} has {profile_b}"
        )


class CapExceededError(Exception):
    """A distance coloring grew beyond the requested cap."""

    def __init__(self, cap: int, max_distance: int) -> None:
        self.cap = cap
        self.max_distance = max_distance
        super().__init__(
            f"distance coloring exceeded cap {cap}: maximum distance found "
            f"is {max_distance}"
        )


class ShiftPeriodError(Exception):
    """A selected coset line is not 2-periodic along the yz direction."""

    def __init__(self, key: int, node_a: Node, node_b: Node) -> None:
        self.key = key
        self.node_a = node_a
        self.node_b = node_b
        super().__init__(
            f"coset line {key} is not periodic with period yzyz: nodes "
            f"{tuple(node_a)} and {tuple(node_b)} have different colors"
        )


@dataclass(frozen=True)
class PeriodicColoring:
    """An H x W fundamental domain (H, W even) of color indices 0..k-1;
    every color appears in the domain."""

    grid: tuple[tuple[int, ...], ...]
    k: int

    def __post_init__(self) -> None:
        h = len(self.grid)
        if h == 0 or h % 2 != 0:
            raise ValueError(f"domain height {h} must be a positive even number")
        w = len(self.grid[0])
        if w == 0 or w % 2 != 0:
            raise ValueError(f"domain width {w} must be a positive even number")
        seen = set()
        for r, row in enumerate(self.grid):
            if len(row) != w:
                raise ValueError(f"row {r} has length {len(row)}, expected {w}")
            for v in row:
                if not 0 <= v < self.k:
                    raise ValueError(
                        f"color {v} out of range 0..{self.k - 1} in row {r}"
                    )
                seen.add(v)
        if len(seen) != self.k:
            missing = sorted(set(range(self.k)) - seen)
            raise ValueError(f"colors {missing} missing from the domain")

    @staticmethod
    def from_rows(rows: Iterable[Iterable[int]], k: int | None = None) -> "PeriodicColoring":
        grid = tuple(tuple(int(v) for v in row) for row in rows)
        if k is None:
            k = max(max(row) for row in grid) + 1
        return PeriodicColoring(grid, k)

    @property
    def H(self) -> int:
        return len(self.grid)

    @property
    def W(self) -> int:
        return len(self.grid[0])

    def color(self, r: int, c: int) -> int:
        return self.grid[r % self.H][c % self.W]

    def node_color(self, n: Node) -> int:
        return self.grid[n.r % self.H][n.c % self.W]

    def lift(self, H2: int, W2: int) -> "PeriodicColoring":
        """The same coloring on an enlarged domain (H2, W2 multiples of
        H, W)."""
        if H2 % self.H or W2 % self.W:
            raise ValueError(
                f"cannot lift {self.H}x{self.W} domain to {H2}x{W2}: "
                "not multiples"
            )
        rows = tuple(
            tuple(self.color(r, c) for c in range(W2)) for r in range(H2)
        )
        return PeriodicColoring(rows, self.k)

    def translated(self, dr: int, dc: int) -> "PeriodicColoring":
        """The coloring shifted so that new(r, c) = old(r + dr, c + dc)."""
        if (dr + dc) % 2 != 0:
            raise ValueError("translation must have even coordinate sum")
        rows = tuple(
            tuple(self.color(r + dr, c + dc) for c in range(self.W))
            for r in range(self.H)
        )
        return PeriodicColoring(rows, self.k)

    def color_classes(self) -> list[list[Node]]:
        out: list[list[Node]] = [[] for _ in range(self.k)]
        for r in range(self.H):
            for c in range(self.W):
                out[self.grid[r][c]].append(Node(r, c))
        return out


def parameter_matrix(c: PeriodicColoring) -> ParameterMatrix:
    """The k x k matrix of neighbor color profiles, or NotPerfectError
    with the first witness pair in row-major scan order."""
    k = c.k
    first_seen: list[Node | None] = [None] * k
    profiles: list[tuple[int, ...] | None] = [None] * k
    for r in range(c.H):
        for cc in range(c.W):
            col = c.grid[r][cc]
            counts = [0] * k
            n = Node(r, cc)
            for g in (X, Y, Z):
                counts[c.node_color(step(n, g))] += 1
            prof = tuple(counts)
            if profiles[col] is None:
                profiles[col] = prof
                first_seen[col] = n
            elif profiles[col] != prof:
                a = first_seen[col]
                assert a is not None
                raise NotPerfectError(col, a, profiles[col], n, prof)
    rows = tuple(p for p in profiles if p is not None)
    assert len(rows) == k
    return ParameterMatrix(rows)


def _window_distance_check(c: PeriodicColoring) -> bool:
    """Check color classes are the distance classes from class 0 on a
    window with a k-ring margin around one fundamental domain."""
    k = c.k
    margin = k
    r_lo, r_hi = -margin, c.H + margin
    c_lo, c_hi = -margin, c.W + margin
    dist: dict[Node, int] = {}
    frontier: deque[Node] = deque()
    for r in range(r_lo, r_hi):
        for cc in range(c_lo, c_hi):
            if c.color(r, cc) == 0:
                n = Node(r, cc)
                dist[n] = 0
                frontier.append(n)
    while frontier:
        n = frontier.popleft()
        d = dist[n]
        for g in (X, Y, Z):
            m = step(n, g)
            if r_lo <= m.r < r_hi and c_lo <= m.c < c_hi and m not in dist:
                dist[m] = d + 1
                frontier.append(m)
    for r in range(c.H):
        for cc in range(c.W):
            if dist.get(Node(r, cc)) != c.grid[r][cc]:
                return False
    return True


def is_distance_regular(c: PeriodicColoring) -> bool:
    """True iff the coloring is perfect, its matrix is tridiagonal, and
    color i is exactly the set of nodes at distance i from class 0."""
    try:
        m = parameter_matrix(c)
    except NotPerfectError:
        return False
    if not m.is_tridiagonal():
        return False
    return _window_distance_check(c)


def intersection_array_of(c: PeriodicColoring) -> IntersectionArray | None:
    """The verified intersection array of c, or None if c is not a
    distance-regular coloring."""
    if not is_distance_regular(c):
        return None
    return IntersectionArray(parameter_matrix(c).rows)


@dataclass(frozen=True)
class CodeSet:
    """A periodic vertex set C: cells holding 0 are in the code (the
    indicator convention of a 2-coloring with color 0 = C)."""

    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        h = len(self.cells)
        if h == 0 or h % 2 != 0:
            raise ValueError(f"domain height {h} must be a positive even number")
        w = len(self.cells[0])
        if w == 0 or w % 2 != 0:
            raise ValueError(f"domain width {w} must be a positive even number")
        ok = False
        for r, row in enumerate(self.cells):
            if len(row) != w:
                raise ValueError(f"row {r} has length {len(row)}, expected {w}")
            for v in row:
                if v not in (0, 1):
                    raise ValueError(f"code cells must be 0 or 1, got {v}")
                if v == 0:
                    ok = True
        if not ok:
            raise ValueError("the code class is empty")

    @staticmethod
    def from_coloring(c: PeriodicColoring, color: int = 0) -> "CodeSet":
        cells = tuple(
            tuple(0 if v == color else 1 for v in row) for row in c.grid
        )
        return CodeSet(cells)

    @property
    def H(self) -> int:
        return len(self.cells)

    @property
    def W(self) -> int:
        return len(self.cells[0])


def distance_coloring(code: CodeSet, cap: int) -> PeriodicColoring:
    """Color every node by its distance to the code (multi-source BFS
    with periodic wraparound).  Raises CapExceededError if some node is
    farther than cap."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    H, W = code.H, code.W
    dist = [[-1] * W for _ in range(H)]
    frontier: deque[tuple[int, int]] = deque()
    for r in range(H):
        for c in range(W):
            if code.cells[r][c] == 0:
                dist[r][c] = 0
                frontier.append((r, c))
    while frontier:
        r, c = frontier.popleft()
        d = dist[r][c]
        n = Node(r, c)
        for g in (X, Y, Z):
            m = step(n, g)
            mr, mc = m.r % H, m.c % W
            if dist[mr][mc] < 0:
                dist[mr][mc] = d + 1
                frontier.append((mr, mc))
    max_d = max(max(row) for row in dist)
    if max_d > cap:
        raise CapExceededError(cap, max_d)
    return PeriodicColoring(tuple(tuple(row) for row in dist), max_d + 1)


def is_completely_regular(code: CodeSet) -> tuple[bool, IntersectionArray | None]:
    """Whether the distance partition from the code is a distance-regular
    coloring; returns its intersection array when it is."""
    dc = distance_coloring(code, cap=code.H * code.W)
    arr = intersection_array_of(dc)
    return (arr is not None, arr)


# ---------------------------------------------------------------------------
# Automorphisms, equivalence, canonical keys
# ---------------------------------------------------------------------------


def _propagate_map_window(
    seed: Node,
    perm: Sequence[Direction],
    rows: int,
    cols: int,
) -> list[list[Node]]:
    """Images psi(p) for p in [0, rows) x [0, cols) of the automorphism
    with psi(0, 0) = seed and psi(step(p, g)) = step(psi(p), perm[g]).

    Fills row-major: along a row, (i, j) is the X- or Y-step of
    (i, j-1); row starts follow a Z-step from (i-1, 0) when that edge
    exists, else the Z-then-X detour via (i-1, 1).
    """
    out: list[list[Node]] = [[Node(0, 0)] * cols for _ in range(rows)]
    out[0][0] = seed
    for i in range(rows):
        if i > 0:
            if (i - 1) % 2 == 0:
                # (i-1, 0) has even parity: its Z-step is (i, 0).
                out[i][0] = step(out[i - 1][0], perm[Z])
            else:
                # (i-1, 1) has even parity: Z lands on (i, 1), X on (i, 0).
                t = step(out[i - 1][1], perm[Z])
                out[i][0] = step(t, perm[X])
        for j in range(1, cols):
            g = X if (i + j - 1) % 2 == 0 else Y
            out[i][j] = step(out[i][j - 1], perm[g])
    return out


def apply_automorphism(
    c: PeriodicColoring,
    seed: Node = Node(0, 0),
    perm: Sequence[Direction] = PERMUTATIONS[0],
) -> PeriodicColoring:
    """The coloring c pulled back along the automorphism psi determined
    by psi(0,0) = seed and the direction permutation: result(p) =
    c(psi(p)).  The result is periodic on a 2M x 2M domain where M is
    the diagonal period of c."""
    m = diagonal_period(c)
    size = 2 * m
    psi = _propagate_map_window(seed, perm, size, size)
    rows = tuple(
        tuple(c.node_color(psi[i][j]) for j in range(size)) for i in range(size)
    )
    return PeriodicColoring(rows, c.k)


def _has_period(c: PeriodicColoring, dr: int, dc: int) -> bool:
    return all(
        c.grid[r][cc] == c.color(r + dr, cc + dc)
        for r in range(c.H)
        for cc in range(c.W)
    )


def diagonal_period(c: PeriodicColoring) -> int:
    """The least M >= 1 such that (M, M) and (M, -M) are both periods.
    Always divides lcm(H, W); invariant under equivalence."""
    limit = _lcm(c.H, c.W)
    for m in range(1, limit + 1):
        if limit % m == 0 and _has_period(c, m, m) and _has_period(c, m, -m):
            return m
    raise AssertionError("lcm(H, W) is always a diagonal period")


def _inverse_perm(perm: Sequence[Direction]) -> tuple[Direction, ...]:
    inv: list[Direction] = [X, X, X]
    for g in (X, Y, Z):
        inv[perm[g]] = g
    return tuple(inv)


def equivalent(c1: PeriodicColoring, c2: PeriodicColoring) -> bool:
    """True iff some grid automorphism maps c1 onto c2 color-for-color
    (colors are not permuted).

    Enumerates candidate automorphisms psi as (image of the origin in a
    fundamental window) x (six direction permutations) and checks
    c1(psi(p)) == c2(p) on a window that determines both sides: 2M x 2M
    for the common diagonal period M.
    """
    if c1.k != c2.k:
        return False
    m1, m2 = diagonal_period(c1), diagonal_period(c2)
    if m1 != m2:
        return False
    size = 2 * _lcm(m1, m2)
    for perm in PERMUTATIONS:
        for sr in range(size):
            for sc in range(size):
                if _window_matches(c1, c2, Node(sr, sc), perm, size):
                    return True
    return False


def _window_matches(
    c1: PeriodicColoring,
    c2: PeriodicColoring,
    seed: Node,
    perm: Sequence[Direction],
    size: int,
) -> bool:
    """Does c1(psi(p)) == c2(p) hold on [0, size)^2 for the automorphism
    psi seeded at psi(0,0) = seed?  Fills psi lazily row-major and stops
    at the first mismatch."""
    if c1.node_color(seed) != c2.grid[0][0]:
        return False
    prev_row: list[Node] = []
    cur_row: list[Node] = [seed]
    for j in range(1, size):
        g = X if (j - 1) % 2 == 0 else Y
        nxt = step(cur_row[j - 1], perm[g])
        if c1.node_color(nxt) != c2.color(0, j):
            return False
        cur_row.append(nxt)
    for i in range(1, size):
        prev_row = cur_row
        if (i - 1) % 2 == 0:
            start = step(prev_row[0], perm[Z])
        else:
            start = step(step(prev_row[1], perm[Z]), perm[X])
        if c1.node_color(start) != c2.color(i, 0):
            return False
        cur_row = [start]
        for j in range(1, size):
            g = X if (i + j - 1) % 2 == 0 else Y
            nxt = step(cur_row[j - 1], perm[g])
            if c1.node_color(nxt) != c2.color(i, j):
                return False
            cur_row.append(nxt)
    return True


def canonical_key(c: PeriodicColoring) -> str:
    """A complete equivalence invariant: the lexicographically smallest
    rendered 2M x 2M window over all automorphism pullbacks, prefixed
    with k and the diagonal period M."""
    m = diagonal_period(c)
    size = 2 * m
    best: list[int] | None = None
    for perm in PERMUTATIONS:
        for sr in range(size):
            for sc in range(size):
                cand = _pullback_window(c, Node(sr, sc), perm, size, best)
                if cand is not None:
                    best = cand
    assert best is not None
    digits = "".join(str(v) for v in best)
    return f"k{c.k}m{m}:{digits}"


def _pullback_window(
    c: PeriodicColoring,
    seed: Node,
    perm: Sequence[Direction],
    size: int,
    best: list[int] | None,
) -> list[int] | None:
    """Row-major color list of c(psi(p)) on [0, size)^2, or None as soon
    as it compares lexicographically greater than `best`."""
    out: list[int] = []
    pos = 0
    smaller = best is None
    cur_row: list[Node] = []
    prev_row: list[Node] = []
    for i in range(size):
        if i == 0:
            cur_row = [seed]
        else:
            prev_row = cur_row
            if (i - 1) % 2 == 0:
                cur_row = [step(prev_row[0], perm[Z])]
            else:
                cur_row = [step(step(prev_row[1], perm[Z]), perm[X])]
        for j in range(size):
            if j > 0:
                g = X if (i + j - 1) % 2 == 0 else Y
                cur_row.append(step(cur_row[j - 1], perm[g]))
            v = c.node_color(cur_row[j])
            if not smaller:
                assert best is not None
                bv = best[pos]
                if v > bv:
                    return None
                if v < bv:
                    smaller = True
            out.append(v)
            pos += 1
    return out if smaller else None


# ---------------------------------------------------------------------------
# Coset-line shifts
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ShiftSelection:
    """A periodic set of coset lines inside an enlarged H x W domain.

    On the H x W torus the plane lines L(d) and L(d') coincide exactly
    when d = d' modulo gcd(H, W) (both even), so a line is keyed by that
    even residue and the selection is automatically invariant under the
    (H, 0) and (0, W) translations.
    """

    H: int
    W: int
    keys: frozenset[int]

    def __post_init__(self) -> None:
        if self.H <= 0 or self.H % 2 or self.W <= 0 or self.W % 2:
            raise ValueError("selection domain must have positive even H and W")
        g = gcd(self.H, self.W)
        for d in self.keys:
            if d % 2 or not 0 <= d < g:
                raise ValueError(
                    f"line key {d} must be an even residue in [0, {g})"
                )

    @property
    def modulus(self) -> int:
        return gcd(self.H, self.W)

    def selects(self, n: Node) -> bool:
        return line_key(n) % self.modulus in self.keys


def all_line_keys(H: int, W: int) -> list[int]:
    """The keys of all coset lines of the H x W torus."""
    return list(range(0, gcd(H, W), 2))


def periodic_selection(
    c: PeriodicColoring, residues: Iterable[int], modulus: int
) -> ShiftSelection:
    """Select the lines whose key/2 is congruent to one of `residues`
    modulo `modulus`, enlarging the domain so the selection is periodic."""
    if modulus < 1:
        raise ValueError("modulus must be >= 1")
    H2 = _lcm(c.H, 2 * modulus)
    W2 = _lcm(c.W, 2 * modulus)
    g = gcd(H2, W2)
    wanted = {r % modulus for r in residues}
    keys = frozenset(
        d for d in range(0, g, 2) if (d // 2) % modulus in wanted
    )
    return ShiftSelection(H2, W2, keys)


def shift_cosets(c: PeriodicColoring, sel: ShiftSelection) -> PeriodicColoring:
    """Shift the coloring one yz step along every selected coset line:
    on selected lines the new color of v is the old color of v+(-1,-1);
    elsewhere unchanged.

    Precondition (checked): on every selected line the coloring has
    period yzyz, i.e. old(v) == old(v + (-2,-2)); violations raise
    ShiftPeriodError naming the line and a mismatching node pair.
    """
    if sel.H % c.H or sel.W % c.W:
        raise ValueError(
            f"selection domain {sel.H}x{sel.W} is not a multiple of the "
            f"coloring domain {c.H}x{c.W}"
        )
    lifted = c.lift(sel.H, sel.W)
    H, W = sel.H, sel.W
    for r in range(H):
        for cc in range(W):
            n = Node(r, cc)
            if not sel.selects(n):
                continue
            other = Node(r - 2, cc - 2)
            if lifted.node_color(n) != lifted.node_color(other):
                raise ShiftPeriodError(line_key(n) % sel.modulus, n, other)
    rows = tuple(
        tuple(
            lifted.node_color(Node(r - 1, cc - 1))
            if sel.selects(Node(r, cc))
            else lifted.grid[r][cc]
            for cc in range(W)
        )
        for r in range(H)
    )
    return PeriodicColoring(rows, c.k)


def shiftable_keys(c: PeriodicColoring, H: int, W: int) -> list[int]:
    """Keys of the lines of the H x W torus along which c has period
    yzyz (the lines eligible for shifting)."""
    lifted = c.lift(H, W)
    g = gcd(H, W)
    good = []
    for d in range(0, g, 2):
        ok = True
        for r in range(H):
            for cc in range(W):
                n = Node(r, cc)
                if line_key(n) % g != d:
                    continue
                if lifted.node_color(n) != lifted.node_color(Node(r - 2, cc - 2)):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            good.append(d)
    return good


# ---------------------------------------------------------------------------
# HEXCOL text format
# ---------------------------------------------------------------------------

HEXCOL_MAGIC = "HEXCOL 1"


class HexcolFile(NamedTuple):
    array: IntersectionArray
    coloring: PeriodicColoring


def dump_hexcol(array: IntersectionArray, coloring: PeriodicColoring) -> str:
    """Serialize to the HEXCOL text format (bit-exact round trips)."""
    lines = [
        HEXCOL_MAGIC,
        f"array {format_array(array)}",
        f"size {coloring.H} {coloring.W}",
    ]
    for row in coloring.grid:
        lines.append("".join(str(v) for v in row))
    return "\n".join(lines) + "\n"


def load_hexcol(text: str) -> HexcolFile:
    """Parse HEXCOL text; rejects wrong line counts, odd sizes, and
    digits outside the range implied by the array header."""
    lines = text.splitlines()
    if len(lines) < 3:
        raise ValueError("HEXCOL file must have at least 3 lines")
    if lines[0] != HEXCOL_MAGIC:
        raise ValueError(f"bad magic line {lines[0]!r}, expected {HEXCOL_MAGIC!r}")
    if not lines[1].startswith("array "):
        raise ValueError("line 2 must be 'array [..]'")
    array = parse(lines[1][len("array "):])
    parts = lines[2].split()
    if len(parts) != 3 or parts[0] != "size":
        raise ValueError("line 3 must be 'size H W'")
    try:
        h, w = int(parts[1]), int(parts[2])
    except ValueError:
        raise ValueError("line 3 must be 'size H W' with decimal H, W") from None
    if h <= 0 or w <= 0 or h % 2 or w % 2:
        raise ValueError(f"size {h} {w} must be positive and even")
    body = [ln for ln in lines[3:] if ln != ""]
    if len(body) != h:
        raise ValueError(f"expected {h} rows, found {len(body)}")
    rows = []
    for i, ln in enumerate(body):
        if len(ln) != w or not ln.isdigit():
            raise ValueError(f"row {i} must be exactly {w} digits")
        vals = tuple(int(ch) for ch in ln)
        bad = [v for v in vals if v >= array.k]
        if bad:
            raise ValueError(
                f"row {i} uses color {bad[0]} but the array has k={array.k}"
            )
        rows.append(vals)
    coloring = PeriodicColoring(tuple(rows), array.k)
    return HexcolFile(array, coloring)


def read_hexcol(path) -> HexcolFile:
    with open(path, "r", encoding="ascii") as f:
        return load_hexcol(f.read())


def write_hexcol(path, array: IntersectionArray, coloring: PeriodicColoring) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as f:
        f.write(dump_hexcol(array, coloring))
