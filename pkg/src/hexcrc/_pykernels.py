"""Reference constraint-propagation kernel, pure Python.

Solves the finite coloring problem shared by the torus search and the
ball refuter: given a graph where every node carries up to three
neighbor slots, assign each node a color in 0..k-1 so that

  * interior nodes (kind 0) see exactly row[color] neighbors of each
    color across their slots, and
  * boundary nodes (kind 1) see at most row[color] of each color.

The compiled backend implements the identical decision procedure; both
must explore nodes and colors in the same order so that search results
are byte-for-byte reproducible whichever backend is active:

  * next variable: the unassigned node with the most assigned neighbor
    slots, ties broken by the lowest node id;
  * colors are tried in ascending order;
  * after each assignment the direct constraints are checked and every
    unassigned neighbor is forward-checked for a viable color.
"""

from __future__ import annotations

from typing import Sequence


class BudgetExceeded(Exception):
    """The assignment budget ran out before the search finished."""


def solve(
    n: int,
    k: int,
    nbrs: Sequence[int],
    kind: Sequence[int],
    rows: Sequence[int],
    pins: Sequence[tuple[int, int]],
    sym_triple: tuple[int, int, int] | None = None,
    max_assigns: int | None = None,
) -> list[int] | None:
    """First coloring in the deterministic search order, or None.

    nbrs is a flat n*3 list of neighbor ids (-1 for an absent slot, ids
    may repeat for doubled edges), kind a length-n list (0 interior,
    1 boundary), rows a flat k*k profile matrix, pins (node, color)
    pre-assignments, sym_triple an optional (a, b, c) of nodes whose
    colors must be non-decreasing.

    max_assigns bounds the number of successful assignments (a measure
    of search effort that is identical in both backends); exceeding it
    raises BudgetExceeded, so a None return always means a completed
    proof of unsolvability.
    """
    colors = [-1] * n
    cnt = [0] * (n * k)
    nslots = [0] * n
    asn = [0] * n
    for i in range(n):
        s = 0
        for j in range(3):
            if nbrs[3 * i + j] >= 0:
                s += 1
        nslots[i] = s

    def sym_ok(i: int, c: int) -> bool:
        if sym_triple is None:
            return True
        a, b, t = sym_triple
        ca = c if a == i else colors[a]
        cb = c if b == i else colors[b]
        ct = c if t == i else colors[t]
        if 0 <= ca and 0 <= cb and ca > cb:
            return False
        if 0 <= cb and 0 <= ct and cb > ct:
            return False
        if 0 <= ca and 0 <= ct and ca > ct:
            return False
        return True

    def viable(m: int) -> bool:
        mb = m * k
        for cm in range(k):
            rb = cm * k
            fit = True
            for c2 in range(k):
                if cnt[mb + c2] > rows[rb + c2]:
                    fit = False
                    break
            if not fit:
                continue
            for j in range(3):
                w = nbrs[3 * m + j]
                if w >= 0 and colors[w] >= 0:
                    if cnt[w * k + cm] + 1 > rows[colors[w] * k + cm]:
                        fit = False
                        break
            if fit:
                return True
        return False

    def assign(i: int, c: int) -> bool:
        rb = c * k
        ib = i * k
        if asn[i] == nslots[i] and kind[i] == 0:
            for c2 in range(k):
                if cnt[ib + c2] != rows[rb + c2]:
                    return False
        else:
            for c2 in range(k):
                if cnt[ib + c2] > rows[rb + c2]:
                    return False
        if not sym_ok(i, c):
            return False
        colors[i] = c
        done = 0
        ok = True
        for j in range(3):
            m = nbrs[3 * i + j]
            if m < 0:
                continue
            cnt[m * k + c] += 1
            asn[m] += 1
            done = j + 1
            cm = colors[m]
            if cm >= 0:
                if cnt[m * k + c] > rows[cm * k + c]:
                    ok = False
                    break
                if kind[m] == 0 and asn[m] == nslots[m]:
                    mb2 = m * k
                    cb2 = cm * k
                    for c2 in range(k):
                        if cnt[mb2 + c2] != rows[cb2 + c2]:
                            ok = False
                            break
                    if not ok:
                        break
        if ok:
            for j in range(3):
                m = nbrs[3 * i + j]
                if m >= 0 and colors[m] < 0 and not viable(m):
                    ok = False
                    break
        if not ok:
            for j in range(done):
                m = nbrs[3 * i + j]
                if m < 0:
                    continue
                cnt[m * k + c] -= 1
                asn[m] -= 1
            colors[i] = -1
            return False
        return True

    def unassign(i: int) -> None:
        c = colors[i]
        for j in range(3):
            m = nbrs[3 * i + j]
            if m < 0:
                continue
            cnt[m * k + c] -= 1
            asn[m] -= 1
        colors[i] = -1

    def pick() -> int:
        best = -1
        best_a = -1
        for i in range(n):
            if colors[i] < 0 and asn[i] > best_a:
                best = i
                best_a = asn[i]
        return best

    assigns = 0
    for node, c in pins:
        if colors[node] >= 0:
            if colors[node] != c:
                return None
            continue
        if not 0 <= c < k or not assign(node, c):
            return None
        assigns += 1

    trail: list[int] = []
    node = pick()
    start = 0
    while node >= 0:
        c = start
        while c < k and not assign(node, c):
            c += 1
        if c < k:
            assigns += 1
            if max_assigns is not None and assigns > max_assigns:
                raise BudgetExceeded(f"assignment budget {max_assigns} exhausted")
            trail.append(node)
            node = pick()
            start = 0
            continue
        while True:
            if not trail:
                return None
            prev = trail.pop()
            pc = colors[prev]
            unassign(prev)
            if pc + 1 < k:
                node = prev
                start = pc + 1
                break

    for i in range(n):
        ib = i * k
        cb = colors[i] * k
        for c2 in range(k):
            if kind[i] == 0:
                assert cnt[ib + c2] == rows[cb + c2], "kernel invariant broken"
            else:
                assert cnt[ib + c2] <= rows[cb + c2], "kernel invariant broken"
    return list(colors)
