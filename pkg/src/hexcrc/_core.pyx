# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of hexcrc._pykernels.

Same inputs, same decision procedure, same outputs; only faster.  Any
divergence between the two backends is a bug, and the test suite
compares them call for call.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memset

from ._pykernels import BudgetExceeded


cdef struct State:
    int n
    int k
    int* nbrs
    unsigned char* kind
    int* rows
    int* colors
    int* cnt
    int* nslots
    int* asn
    int sa
    int sb
    int sc


cdef bint sym_ok(State* s, int i, int c) noexcept:
    cdef int ca, cb, ct
    if s.sa < 0:
        return True
    ca = c if s.sa == i else s.colors[s.sa]
    cb = c if s.sb == i else s.colors[s.sb]
    ct = c if s.sc == i else s.colors[s.sc]
    if ca >= 0 and cb >= 0 and ca > cb:
        return False
    if cb >= 0 and ct >= 0 and cb > ct:
        return False
    if ca >= 0 and ct >= 0 and ca > ct:
        return False
    return True


cdef bint viable(State* s, int m) noexcept:
    cdef int mb = m * s.k
    cdef int cm, c2, j, w
    cdef bint fit
    for cm in range(s.k):
        fit = True
        for c2 in range(s.k):
            if s.cnt[mb + c2] > s.rows[cm * s.k + c2]:
                fit = False
                break
        if not fit:
            continue
        for j in range(3):
            w = s.nbrs[3 * m + j]
            if w >= 0 and s.colors[w] >= 0:
                if s.cnt[w * s.k + cm] + 1 > s.rows[s.colors[w] * s.k + cm]:
                    fit = False
                    break
        if fit:
            return True
    return False


cdef bint assign(State* s, int i, int c) noexcept:
    cdef int rb = c * s.k
    cdef int ib = i * s.k
    cdef int c2, j, m, cm, mb2, cb2, done
    cdef bint ok
    if s.asn[i] == s.nslots[i] and s.kind[i] == 0:
        for c2 in range(s.k):
            if s.cnt[ib + c2] != s.rows[rb + c2]:
                return False
    else:
        for c2 in range(s.k):
            if s.cnt[ib + c2] > s.rows[rb + c2]:
                return False
    if not sym_ok(s, i, c):
        return False
    s.colors[i] = c
    done = 0
    ok = True
    for j in range(3):
        m = s.nbrs[3 * i + j]
        if m < 0:
            continue
        s.cnt[m * s.k + c] += 1
        s.asn[m] += 1
        done = j + 1
        cm = s.colors[m]
        if cm >= 0:
            if s.cnt[m * s.k + c] > s.rows[cm * s.k + c]:
                ok = False
                break
            if s.kind[m] == 0 and s.asn[m] == s.nslots[m]:
                mb2 = m * s.k
                cb2 = cm * s.k
                for c2 in range(s.k):
                    if s.cnt[mb2 + c2] != s.rows[cb2 + c2]:
                        ok = False
                        break
                if not ok:
                    break
    if ok:
        for j in range(3):
            m = s.nbrs[3 * i + j]
            if m >= 0 and s.colors[m] < 0 and not viable(s, m):
                ok = False
                break
    if not ok:
        for j in range(done):
            m = s.nbrs[3 * i + j]
            if m < 0:
                continue
            s.cnt[m * s.k + c] -= 1
            s.asn[m] -= 1
        s.colors[i] = -1
        return False
    return True


cdef void unassign(State* s, int i) noexcept:
    cdef int c = s.colors[i]
    cdef int j, m
    for j in range(3):
        m = s.nbrs[3 * i + j]
        if m < 0:
            continue
        s.cnt[m * s.k + c] -= 1
        s.asn[m] -= 1
    s.colors[i] = -1


cdef int pick(State* s) noexcept:
    cdef int best = -1
    cdef int best_a = -1
    cdef int i
    for i in range(s.n):
        if s.colors[i] < 0 and s.asn[i] > best_a:
            best = i
            best_a = s.asn[i]
    return best


def solve(
    n,
    k,
    nbrs,
    kind,
    rows,
    pins,
    sym_triple=None,
    max_assigns=None,
):
    """Compiled counterpart of hexcrc._pykernels.solve."""
    cdef State s
    cdef int i, j, c, node, start, prev, pc, c2, ib, cb
    cdef long assigns = 0
    cdef long budget = -1
    cdef int* trail
    cdef int depth = 0
    if max_assigns is not None:
        budget = max_assigns
    s.n = n
    s.k = k
    s.sa = s.sb = s.sc = -1
    if sym_triple is not None:
        s.sa = sym_triple[0]
        s.sb = sym_triple[1]
        s.sc = sym_triple[2]
    s.nbrs = <int*> malloc(3 * s.n * sizeof(int))
    s.kind = <unsigned char*> malloc(s.n)
    s.rows = <int*> malloc(s.k * s.k * sizeof(int))
    s.colors = <int*> malloc(s.n * sizeof(int))
    s.cnt = <int*> malloc(s.n * s.k * sizeof(int))
    s.nslots = <int*> malloc(s.n * sizeof(int))
    s.asn = <int*> malloc(s.n * sizeof(int))
    trail = <int*> malloc(s.n * sizeof(int))
    if (s.nbrs == NULL or s.kind == NULL or s.rows == NULL
            or s.colors == NULL or s.cnt == NULL or s.nslots == NULL
            or s.asn == NULL or trail == NULL):
        free(s.nbrs); free(s.kind); free(s.rows); free(s.colors)
        free(s.cnt); free(s.nslots); free(s.asn); free(trail)
        raise MemoryError()
    try:
        for i in range(3 * s.n):
            s.nbrs[i] = nbrs[i]
        for i in range(s.n):
            s.kind[i] = kind[i]
        for i in range(s.k * s.k):
            s.rows[i] = rows[i]
        memset(s.cnt, 0, s.n * s.k * sizeof(int))
        memset(s.asn, 0, s.n * sizeof(int))
        for i in range(s.n):
            s.colors[i] = -1
            c = 0
            for j in range(3):
                if s.nbrs[3 * i + j] >= 0:
                    c += 1
            s.nslots[i] = c

        for node_obj, c_obj in pins:
            node = node_obj
            c = c_obj
            if s.colors[node] >= 0:
                if s.colors[node] != c:
                    return None
                continue
            if c < 0 or c >= s.k or not assign(&s, node, c):
                return None
            assigns += 1

        node = pick(&s)
        start = 0
        while node >= 0:
            c = start
            while c < s.k and not assign(&s, node, c):
                c += 1
            if c < s.k:
                assigns += 1
                if budget >= 0 and assigns > budget:
                    raise BudgetExceeded(
                        f"assignment budget {max_assigns} exhausted"
                    )
                trail[depth] = node
                depth += 1
                node = pick(&s)
                start = 0
                continue
            while True:
                if depth == 0:
                    return None
                depth -= 1
                prev = trail[depth]
                pc = s.colors[prev]
                unassign(&s, prev)
                if pc + 1 < s.k:
                    node = prev
                    start = pc + 1
                    break

        for i in range(s.n):
            ib = i * s.k
            cb = s.colors[i] * s.k
            for c2 in range(s.k):
                if s.kind[i] == 0:
                    if s.cnt[ib + c2] != s.rows[cb + c2]:
                        raise AssertionError("kernel invariant broken")
                else:
                    if s.cnt[ib + c2] > s.rows[cb + c2]:
                        raise AssertionError("kernel invariant broken")
        return [s.colors[i] for i in range(s.n)]
    finally:
        free(s.nbrs); free(s.kind); free(s.rows); free(s.colors)
        free(s.cnt); free(s.nslots); free(s.asn); free(trail)
