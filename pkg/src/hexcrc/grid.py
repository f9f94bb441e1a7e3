"""Integer model of the infinite hexagonal grid.

The grid is the cubic Cayley graph of the group generated by three
involutions x, y, z with the hexagon relation (xyz)^2 = 1: every vertex
has one neighbor in each of the three edge directions X, Y, Z.

Nodes are embedded as integer pairs (r, c) in brick-wall fashion.  The
step rule depends on the parity of r + c:

    even parity:  X -> (r, c+1)   Y -> (r, c-1)   Z -> (r+1, c)
    odd parity:   X -> (r, c-1)   Y -> (r, c+1)   Z -> (r-1, c)

Walking X, Y, Z, X, Y, Z from any node returns to it (the hexagon
relation), and each single step is an involution.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import IntEnum
from itertools import permutations
from typing import Iterable, Iterator, NamedTuple, Sequence


class Direction(IntEnum):
    X = 0
    Y = 1
    Z = 2


X, Y, Z = Direction.X, Direction.Y, Direction.Z

# The six label permutations, lexicographically ordered; perm[g] is the
# image direction of g.
PERMUTATIONS: tuple[tuple[Direction, Direction, Direction], ...] = tuple(
    sorted(permutations((X, Y, Z)))
)

IDENTITY: tuple[Direction, Direction, Direction] = (X, Y, Z)


class Node(NamedTuple):
    r: int
    c: int

    @property
    def parity(self) -> int:
        return (self.r + self.c) & 1


ORIGIN = Node(0, 0)


@dataclass(frozen=True)
class Translation:
    """A grid translation; (dr + dc) must be even to preserve adjacency."""

    dr: int
    dc: int

    def __post_init__(self) -> None:
        if (self.dr + self.dc) % 2 != 0:
            raise ValueError(
                f"translation ({self.dr},{self.dc}) has odd coordinate sum"
            )

    def apply(self, n: Node) -> Node:
        return Node(n.r + self.dr, n.c + self.dc)

    def compose(self, other: "Translation") -> "Translation":
        return Translation(self.dr + other.dr, self.dc + other.dc)


def step(n: Node, g: Direction) -> Node:
    """The g-neighbor of n under the fixed brick embedding."""
    r, c = n
    if (r + c) & 1:
        if g == X:
            return Node(r, c - 1)
        if g == Y:
            return Node(r, c + 1)
        return Node(r - 1, c)
    if g == X:
        return Node(r, c + 1)
    if g == Y:
        return Node(r, c - 1)
    return Node(r + 1, c)


def neighbors(n: Node) -> tuple[Node, Node, Node]:
    """The three neighbors of n in direction order X, Y, Z."""
    return (step(n, X), step(n, Y), step(n, Z))


_CHAR_TO_DIR = {"x": X, "y": Y, "z": Z}


def parse_word(w: str) -> tuple[Direction, ...]:
    """Parse a generator word like 'yxz' into directions."""
    try:
        return tuple(_CHAR_TO_DIR[ch] for ch in w.lower())
    except KeyError as e:
        raise ValueError(f"invalid direction letter {e.args[0]!r} in {w!r}") from None


def word_to_node(word: Iterable[Direction] | str, start: Node = ORIGIN) -> Node:
    """Fold `step` over a word of directions, starting at `start`."""
    if isinstance(word, str):
        word = parse_word(word)
    n = start
    for g in word:
        n = step(n, g)
    return n


def distance(a: Node, b: Node) -> int:
    """Graph distance by breadth-first search."""
    if a == b:
        return 0
    seen = {a}
    frontier = [a]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for n in frontier:
            for m in neighbors(n):
                if m == b:
                    return d
                if m not in seen:
                    seen.add(m)
                    nxt.append(m)
        frontier = nxt
    raise AssertionError("unreachable: the grid is connected")


def shells(center: Node, radius: int) -> list[list[Node]]:
    """Nodes grouped by distance 0..radius; each shell sorted by (r, c)."""
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    seen = {center}
    layer = [center]
    out = [[center]]
    for _ in range(radius):
        nxt = []
        for n in layer:
            for m in neighbors(n):
                if m not in seen:
                    seen.add(m)
                    nxt.append(m)
        nxt.sort()
        out.append(nxt)
        layer = nxt
    return out


def ball(center: Node, radius: int) -> set[Node]:
    """All nodes at distance <= radius from center."""
    return {n for shell in shells(center, radius) for n in shell}


def _path_word(base: Node, n: Node) -> tuple[Direction, ...]:
    """A shortest generator word w with word_to_node(w, base) == n."""
    if n == base:
        return ()
    prev: dict[Node, tuple[Node, Direction]] = {}
    seen = {base}
    frontier = deque([base])
    while frontier:
        cur = frontier.popleft()
        for g in (X, Y, Z):
            m = step(cur, g)
            if m in seen:
                continue
            seen.add(m)
            prev[m] = (cur, g)
            if m == n:
                word: list[Direction] = []
                while m != base:
                    m, g2 = prev[m]
                    word.append(g2)
                return tuple(reversed(word))
            frontier.append(m)
    raise AssertionError("unreachable: the grid is connected")


def apply_symmetry(
    n: Node, base: Node, perm: Sequence[Direction]
) -> Node:
    """Image of n under the automorphism fixing `base` and relabeling the
    edge directions at every vertex by `perm`.

    Well-defined because the relabeling respects the defining relations,
    so the image does not depend on the chosen path from base to n.
    """
    word = _path_word(base, n)
    return word_to_node(tuple(perm[g] for g in word), base)


def line_key(n: Node) -> int:
    """Invariant of the coset line through n (an even integer).

    Lines are the node sets {(j, j+d), (j, j+d+1) : j in Z} for even d:
    a bi-infinite chain of X-edge dominoes advancing by the yz
    translation (-1, -1).  The key of the line through (r, c) is c - r
    at even parity and c - r - 1 at odd parity.
    """
    r, c = n
    d = c - r
    if (r + c) & 1:
        d -= 1
    return d


@dataclass(frozen=True)
class CosetLine:
    """A coset of the line {(yz)^i, (yz)^i x}, named by its key.

    The line with key d (even) is {(j, j+d), (j, j+d+1) : j in Z}; its
    canonical anchor is the even-parity member (0, d).
    """

    key: int

    def __post_init__(self) -> None:
        if self.key % 2 != 0:
            raise ValueError(f"coset line key must be even, got {self.key}")

    @property
    def anchor(self) -> Node:
        return Node(0, self.key)

    def contains(self, n: Node) -> bool:
        return line_key(n) == self.key

    def members(self, j_lo: int, j_hi: int) -> Iterator[Node]:
        """The dominoes for j in [j_lo, j_hi)."""
        for j in range(j_lo, j_hi):
            yield Node(j, j + self.key)
            yield Node(j, j + self.key + 1)


def coset_line(n: Node) -> CosetLine:
    """The coset line through n."""
    return CosetLine(line_key(n))
