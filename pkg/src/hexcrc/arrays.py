"""Intersection-array notation and candidate enumeration.

A perfect coloring of a cubic graph has a k x k parameter matrix whose
row i lists, for a vertex of color i, the number of neighbors of each
color; every row sums to 3.  A distance-regular coloring has a
tridiagonal matrix, written compactly as the bracket string

    [a0 b0 - c1 a1 b1 - ... - c_{k-1} a_{k-1}]

listing its nonzero band (the intersection array).  Color indices are
0-based throughout; entry names follow b_i = rows[i][i+1],
c_i = rows[i][i-1], a_i = rows[i][i].
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

DEGREE = 3

# Digit groups allowed by the bracket grammar, in enumeration order.
FIRST_GROUPS = ((0, 3), (1, 2), (2, 1))
MIDDLE_GROUPS = ((1, 0, 2), (1, 1, 1), (2, 0, 1))
LAST_GROUPS = ((1, 2), (2, 1), (3, 0))


@dataclass(frozen=True)
class ParameterMatrix:
    """A k x k matrix of neighbor counts; every row sums to the degree."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        k = len(self.rows)
        if k == 0:
            raise ValueError("empty parameter matrix")
        for i, row in enumerate(self.rows):
            if len(row) != k:
                raise ValueError(f"row {i} has length {len(row)}, expected {k}")
            if any(e < 0 or e > DEGREE for e in row):
                raise ValueError(f"row {i} has an entry outside 0..{DEGREE}")
            if sum(row) != DEGREE:
                raise ValueError(f"row {i} sums to {sum(row)}, expected {DEGREE}")

    @property
    def k(self) -> int:
        return len(self.rows)

    def is_tridiagonal(self) -> bool:
        return all(
            self.rows[i][j] == 0
            for i in range(self.k)
            for j in range(self.k)
            if abs(i - j) > 1
        )


@dataclass(frozen=True)
class IntersectionArray(ParameterMatrix):
    """A tridiagonal parameter matrix with all off-diagonal band entries
    at least 1 (so every color class reaches its neighbors in the chain).
    """

    def __post_init__(self) -> None:
        super().__post_init__()
        if not self.is_tridiagonal():
            raise ValueError("matrix is not tridiagonal")
        for i in range(self.k - 1):
            if self.rows[i][i + 1] < 1:
                raise ValueError(f"b_{i} must be >= 1 (row {i})")
            if self.rows[i + 1][i] < 1:
                raise ValueError(f"c_{i + 1} must be >= 1 (row {i + 1})")

    def a(self, i: int) -> int:
        return self.rows[i][i]

    def b(self, i: int) -> int:
        return self.rows[i][i + 1]

    def c(self, i: int) -> int:
        return self.rows[i][i - 1] if i >= 1 else 0

    def band(self) -> tuple[int, ...]:
        """The bracket-notation digits: a0 b0, then c a b per middle
        color, then c a for the last color (just a0 for k=1)."""
        if self.k == 1:
            return (self.a(0),)
        out = [self.a(0), self.b(0)]
        for i in range(1, self.k - 1):
            out.extend((self.c(i), self.a(i), self.b(i)))
        out.extend((self.c(self.k - 1), self.a(self.k - 1)))
        return tuple(out)

    def groups(self) -> tuple[tuple[int, ...], ...]:
        """Band digits chunked as written: first 2, middles 3, last 2."""
        if self.k == 1:
            return ((self.a(0), 0),)
        band = self.band()
        out = [band[:2]]
        for i in range(self.k - 2):
            out.append(band[2 + 3 * i : 5 + 3 * i])
        out.append(band[-2:])
        return tuple(out)


def _rows_from_groups(groups: list[tuple[int, ...]]) -> IntersectionArray:
    k = len(groups)
    rows = [[0] * k for _ in range(k)]
    for i, g in enumerate(groups):
        if i == 0:
            a0, b0 = g
            rows[0][0] = a0
            if k > 1:
                rows[0][1] = b0
            elif b0 != 0:
                raise ValueError("row 0: single-color array must end in 0")
        elif i < k - 1:
            c, a, b = g
            rows[i][i - 1] = c
            rows[i][i] = a
            rows[i][i + 1] = b
        else:
            c, a = g
            rows[i][i - 1] = c
            rows[i][i] = a
    return IntersectionArray(tuple(tuple(r) for r in rows))


def parse(s: str) -> IntersectionArray:
    """Parse a bracket string; rejects malformed text and bands that
    violate row sums or the b/c >= 1 rule (naming the offending row)."""
    if not isinstance(s, str):
        raise ValueError("array must be a string")
    text = s.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ValueError(f"malformed array {s!r}: missing brackets")
    body = text[1:-1]
    if not body:
        raise ValueError(f"malformed array {s!r}: empty")
    parts = body.split("-")
    for i, p in enumerate(parts):
        want = 2 if i in (0, len(parts) - 1) else 3
        if len(p) != want or not p.isdigit():
            raise ValueError(
                f"malformed array {s!r}: group {i} must be {want} digits"
            )
    groups = [tuple(int(ch) for ch in p) for p in parts]
    return _rows_from_groups(groups)


def format_array(a: IntersectionArray) -> str:
    """Inverse of parse (round-trips exactly)."""
    return "[" + "-".join("".join(str(d) for d in g) for g in a.groups()) + "]"


def reverse(a: IntersectionArray) -> IntersectionArray:
    """Central symmetry: entry (i, j) of the result is entry
    (k-1-i, k-1-j) of the input (0-based); an involution."""
    k = a.k
    rows = tuple(
        tuple(a.rows[k - 1 - i][k - 1 - j] for j in range(k)) for i in range(k)
    )
    return IntersectionArray(rows)


def class_representative(a: IntersectionArray) -> IntersectionArray:
    """The representative of {a, reverse(a)}: lexicographically smaller
    formatted string."""
    r = reverse(a)
    return a if format_array(a) <= format_array(r) else r


def _iter_candidates(k: int) -> Iterator[IntersectionArray]:
    if k == 1:
        yield _rows_from_groups([(3, 0)])
        return
    if k == 2:
        for f, l in product(FIRST_GROUPS, LAST_GROUPS):
            yield _rows_from_groups([f, l])
        return
    for combo in product(FIRST_GROUPS, *([MIDDLE_GROUPS] * (k - 2)), LAST_GROUPS):
        yield _rows_from_groups(list(combo))


def enumerate_candidates(
    k: int, up_to_reversal: bool = False
) -> list[IntersectionArray]:
    """All candidate intersection arrays on k colors, in a fixed order
    (first group slowest, digits ascending within each slot).  With
    up_to_reversal, keeps exactly one representative per reversal class
    (the lexicographically smaller formatted string)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    out = []
    for a in _iter_candidates(k):
        if up_to_reversal and format_array(a) > format_array(reverse(a)):
            continue
        out.append(a)
    return out
