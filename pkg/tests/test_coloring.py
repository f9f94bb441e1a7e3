"""Coloring verification tests against independent oracles.

parameter_matrix is checked against a direct per-vertex recount written
here, distance_coloring against a plain plane BFS on a large window,
and the equivalence machinery against hand-picked automorphism images.
"""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hexcrc.arrays import IntersectionArray, format_array
from hexcrc.coloring import (
    CapExceededError,
    CodeSet,
    HEXCOL_MAGIC,
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
    shift_cosets,
    shiftable_keys,
)
from hexcrc.grid import PERMUTATIONS, Node, X, Y, Z, step

PARITY = PeriodicColoring.from_rows([[0, 1], [1, 0]])
VSTRIPES = PeriodicColoring.from_rows([[0, 1], [0, 1]])
HSTRIPES = PeriodicColoring.from_rows([[0, 0], [1, 1]])
DIAG4 = PeriodicColoring.from_rows([[3, 2, 1, 2], [2, 1, 0, 1]])


def oracle_profiles(c: PeriodicColoring) -> dict[int, set[tuple[int, ...]]]:
    """Every neighbor color profile seen per color, recounted directly."""
    out: dict[int, set[tuple[int, ...]]] = {}
    for r in range(c.H):
        for cc in range(c.W):
            counts = [0] * c.k
            for g in (X, Y, Z):
                counts[c.node_color(step(Node(r, cc), g))] += 1
            out.setdefault(c.grid[r][cc], set()).add(tuple(counts))
    return out


small_grids = st.integers(min_value=2, max_value=3).flatmap(
    lambda k: st.tuples(
        st.sampled_from([2, 4]),
        st.sampled_from([2, 4, 6]),
    ).flatmap(
        lambda hw: st.lists(
            st.lists(st.integers(0, k - 1), min_size=hw[1], max_size=hw[1]),
            min_size=hw[0],
            max_size=hw[0],
        )
    )
)


@given(small_grids)
@settings(max_examples=60)
def test_parameter_matrix_matches_oracle(rows):
    colors = {v for row in rows for v in row}
    if colors != set(range(len(colors))):
        return
    c = PeriodicColoring.from_rows(rows, k=len(colors))
    oracle = oracle_profiles(c)
    try:
        m = parameter_matrix(c)
    except NotPerfectError as e:
        assert len(oracle[e.color]) > 1
        assert e.profile_a != e.profile_b
        return
    for color, profs in oracle.items():
        assert profs == {m.rows[color]}


def test_not_perfect_witness_is_first_in_scan_order():
    c = PeriodicColoring.from_rows([[0, 1], [1, 1]])
    with pytest.raises(NotPerfectError) as exc:
        parameter_matrix(c)
    e = exc.value
    assert e.color == 1
    assert e.node_a == Node(0, 1)
    assert e.node_b == Node(1, 0)
    assert e.profile_a == (2, 1)
    assert e.profile_b == (1, 2)


def test_constructor_validation():
    with pytest.raises(ValueError):
        PeriodicColoring.from_rows([[0, 1], [1, 0], [0, 1]])
    with pytest.raises(ValueError):
        PeriodicColoring.from_rows([[0, 1, 0], [1, 0, 1]])
    with pytest.raises(ValueError):
        PeriodicColoring(((0, 1), (1, 0)), k=3)
    with pytest.raises(ValueError):
        PeriodicColoring(((0, 2), (2, 0)), k=2)
    with pytest.raises(ValueError):
        PeriodicColoring(((0, 1), (1, 0, 1)), k=2)


def test_known_matrices():
    assert parameter_matrix(PARITY).rows == ((0, 3), (3, 0))
    assert parameter_matrix(VSTRIPES).rows == ((1, 2), (2, 1))
    assert parameter_matrix(HSTRIPES).rows == ((2, 1), (1, 2))
    assert format_array(IntersectionArray(parameter_matrix(DIAG4).rows)) == (
        "[03-102-201-30]"
    )


def test_is_distance_regular_positive_and_negative():
    for c in (PARITY, VSTRIPES, HSTRIPES, DIAG4):
        assert is_distance_regular(c)
    not_perfect = PeriodicColoring.from_rows([[0, 1], [1, 1]])
    assert not is_distance_regular(not_perfect)
    # perfect but not tridiagonal: swap colors of the parity coloring
    # with a 3-coloring whose classes are not distance classes
    non_tri = PeriodicColoring.from_rows([[0, 1, 2, 1], [1, 2, 1, 0]])
    try:
        m = parameter_matrix(non_tri)
        tri = m.is_tridiagonal()
    except NotPerfectError:
        tri = None
    if tri:
        pytest.skip("example turned out tridiagonal")
    assert not is_distance_regular(non_tri)


def test_intersection_array_of():
    arr = intersection_array_of(DIAG4)
    assert arr is not None and format_array(arr) == "[03-102-201-30]"
    assert intersection_array_of(PeriodicColoring.from_rows([[0, 1], [1, 1]])) is None


def test_color_and_lift_and_translate():
    assert DIAG4.color(0, 4) == 3
    assert DIAG4.color(-2, -4) == 3
    lifted = DIAG4.lift(4, 8)
    assert lifted.H == 4 and lifted.W == 8
    assert parameter_matrix(lifted).rows == parameter_matrix(DIAG4).rows
    with pytest.raises(ValueError):
        DIAG4.lift(3, 8)
    moved = DIAG4.translated(1, 1)
    assert moved.color(0, 0) == DIAG4.color(1, 1)
    with pytest.raises(ValueError):
        DIAG4.translated(1, 0)


def oracle_plane_distance(code_cells, H, W, r, c, radius=12):
    """Distance from (r, c) to the periodic code set by plane BFS."""
    from collections import deque

    seen = {Node(r, c): 0}
    q = deque([Node(r, c)])
    while q:
        n = q.popleft()
        if code_cells[n.r % H][n.c % W] == 0:
            return seen[n]
        if seen[n] >= radius:
            continue
        for g in (X, Y, Z):
            m = step(n, g)
            if m not in seen:
                seen[m] = seen[n] + 1
                q.append(m)
    raise AssertionError("code not reachable within radius")


def test_distance_coloring_matches_plane_oracle():
    code = CodeSet.from_coloring(DIAG4, 0)
    dc = distance_coloring(code, cap=8)
    for r in range(dc.H):
        for c in range(dc.W):
            assert dc.grid[r][c] == oracle_plane_distance(
                code.cells, code.H, code.W, r, c
            )


def test_distance_coloring_cap():
    code = CodeSet.from_coloring(DIAG4, 0)
    with pytest.raises(CapExceededError) as exc:
        distance_coloring(code, cap=2)
    assert exc.value.max_distance == 3
    assert exc.value.cap == 2


def test_code_set_validation():
    with pytest.raises(ValueError):
        CodeSet(((1, 1), (1, 1)))
    with pytest.raises(ValueError):
        CodeSet(((0, 2), (0, 0)))
    with pytest.raises(ValueError):
        CodeSet(((0,), (0,)))
    all_code = CodeSet(((0, 0), (0, 0)))
    dc = distance_coloring(all_code, cap=5)
    assert dc.k == 1 and dc.grid == ((0, 0), (0, 0))


def test_is_completely_regular():
    ok, arr = is_completely_regular(CodeSet.from_coloring(DIAG4, 0))
    assert ok and format_array(arr) == "[03-102-201-30]"
    # a code whose distance coloring is not perfect: two adjacent code
    # cells plus an isolated one on a 4x4 torus
    cells = [[1] * 4 for _ in range(4)]
    cells[0][0] = 0
    cells[0][1] = 0
    cells[2][3] = 0
    ok, arr = is_completely_regular(CodeSet(tuple(tuple(r) for r in cells)))
    assert not ok and arr is None


def test_diagonal_period_known_values():
    assert diagonal_period(PARITY) == 1
    assert diagonal_period(VSTRIPES) == 2
    assert diagonal_period(DIAG4) == 4


@given(st.sampled_from(PERMUTATIONS), st.integers(0, 7), st.integers(0, 7))
@settings(max_examples=25, deadline=None)
def test_apply_automorphism_preserves_class(perm, sr, sc):
    img = apply_automorphism(DIAG4, Node(sr, sc), perm)
    assert parameter_matrix(img).rows == parameter_matrix(DIAG4).rows
    assert diagonal_period(img) == diagonal_period(DIAG4)
    assert canonical_key(img) == canonical_key(DIAG4)
    assert equivalent(DIAG4, img)


def test_equivalence_basics():
    assert equivalent(PARITY, PARITY.translated(1, 1))
    assert equivalent(PARITY, PeriodicColoring.from_rows([[1, 0], [0, 1]]))
    assert not equivalent(PARITY, VSTRIPES)
    assert equivalent(VSTRIPES, HSTRIPES) is False
    # stripes against their own double-period lift: same coloring
    assert equivalent(VSTRIPES, VSTRIPES.lift(4, 4))


def test_equivalence_respects_color_labels():
    swapped = PeriodicColoring.from_rows([[1, 0], [1, 0]])
    # swapping the two stripe colors gives the same picture shifted by
    # one column, which is a glide image: still equivalent
    assert equivalent(VSTRIPES, swapped)
    # but [12-21] stripes are never equivalent to [21-12] stripes:
    # their matrices differ
    assert not equivalent(VSTRIPES, HSTRIPES)


def test_canonical_key_is_complete_for_samples():
    a = PeriodicColoring.from_rows([[0, 0, 1, 1], [1, 1, 0, 0]])
    b = PeriodicColoring.from_rows([[1, 1, 0, 0], [0, 0, 1, 1]])
    assert equivalent(a, b) == (canonical_key(a) == canonical_key(b))
    assert equivalent(a, VSTRIPES) == (canonical_key(a) == canonical_key(VSTRIPES))


def test_canonical_key_format():
    key = canonical_key(PARITY)
    assert key.startswith("k2m1:")
    assert canonical_key(VSTRIPES).startswith("k2m2:")


# ---------------------------------------------------------------------------
# Coset shifts
# ---------------------------------------------------------------------------


def oriented_diag4() -> PeriodicColoring:
    return apply_automorphism(DIAG4, Node(0, 0), PERMUTATIONS[4])


def test_shiftable_keys_depend_on_orientation():
    assert shiftable_keys(DIAG4, 8, 8) == []
    base = oriented_diag4()
    assert shiftable_keys(base, 8, 8) == [0, 2, 4, 6]


def test_all_line_keys():
    assert all_line_keys(8, 8) == [0, 2, 4, 6]
    assert all_line_keys(2, 4) == [0]
    assert all_line_keys(6, 4) == [0]


def test_shift_precondition_error_names_line_and_nodes():
    sel = ShiftSelection(8, 8, frozenset([0]))
    with pytest.raises(ShiftPeriodError) as exc:
        shift_cosets(DIAG4, sel)
    e = exc.value
    assert e.key == 0
    lifted = DIAG4.lift(8, 8)
    assert lifted.node_color(e.node_a) != lifted.node_color(e.node_b)


def test_shift_full_selection_is_translation():
    base = oriented_diag4()
    sel = ShiftSelection(8, 8, frozenset([0, 2, 4, 6]))
    out = shift_cosets(base, sel)
    assert out.grid == base.translated(-1, -1).grid
    assert equivalent(base, out)


def test_shift_single_line_gives_nonequivalent_same_array():
    base = oriented_diag4()
    out = shift_cosets(base, ShiftSelection(8, 8, frozenset([0])))
    assert parameter_matrix(out).rows == parameter_matrix(base).rows
    assert not equivalent(base, out)


def test_shift_preserves_untouched_lines():
    base = oriented_diag4()
    sel = ShiftSelection(8, 8, frozenset([2]))
    out = shift_cosets(base, sel)
    changed = [
        (r, c)
        for r in range(8)
        for c in range(8)
        if out.grid[r][c] != base.grid[r][c]
    ]
    for r, c in changed:
        assert sel.selects(Node(r, c))


def test_shift_selection_validation():
    with pytest.raises(ValueError):
        ShiftSelection(7, 8, frozenset([0]))
    with pytest.raises(ValueError):
        ShiftSelection(8, 8, frozenset([1]))
    with pytest.raises(ValueError):
        ShiftSelection(8, 8, frozenset([8]))
    with pytest.raises(ValueError):
        shift_cosets(DIAG4, ShiftSelection(6, 6, frozenset()))


def test_periodic_selection_enlarges_domain():
    sel = periodic_selection(DIAG4, [0], 2)
    assert sel.H == 4 and sel.W == 4
    assert sel.keys == frozenset([0])
    sel2 = periodic_selection(oriented_diag4(), [0, 1], 2)
    assert sel2.H == 8 and sel2.W == 8
    assert sel2.keys == frozenset([0, 2, 4, 6])


# ---------------------------------------------------------------------------
# HEXCOL
# ---------------------------------------------------------------------------


def test_hexcol_round_trip_bytes():
    arr = IntersectionArray(parameter_matrix(DIAG4).rows)
    text = dump_hexcol(arr, DIAG4)
    assert text.startswith(HEXCOL_MAGIC + "\n")
    loaded = load_hexcol(text)
    assert loaded.array == arr
    assert loaded.coloring == DIAG4
    assert dump_hexcol(loaded.array, loaded.coloring) == text


@pytest.mark.parametrize(
    "mangle",
    [
        lambda t: t.replace("HEXCOL 1", "HEXCOL 9"),
        lambda t: t.replace("size 2 4", "size 2 5"),
        lambda t: t.replace("size 2 4", "size 4 4"),
        lambda t: t.replace("size 2 4", "sizes 2 4"),
        lambda t: t + "2101\n",
        lambda t: t.replace("2101\n", ""),
        lambda t: t.replace("3212", "3912"),
        lambda t: t.replace("3212", "321"),
        lambda t: t.replace("array [03-102-201-30]", "array [03-102-201]"),
        lambda t: "HEXCOL 1\n",
    ],
)
def test_hexcol_rejects_malformed(mangle):
    arr = IntersectionArray(parameter_matrix(DIAG4).rows)
    text = dump_hexcol(arr, DIAG4)
    with pytest.raises(ValueError):
        load_hexcol(mangle(text))


def test_hexcol_rejects_colors_beyond_array_k():
    text = "HEXCOL 1\narray [03-30]\nsize 2 2\n02\n20\n"
    with pytest.raises(ValueError, match="k=2"):
        load_hexcol(text)


def test_hexcol_file_round_trip(tmp_path):
    from hexcrc.coloring import read_hexcol, write_hexcol

    arr = IntersectionArray(parameter_matrix(VSTRIPES).rows)
    p = tmp_path / "stripes.hexcol"
    write_hexcol(p, arr, VSTRIPES)
    loaded = read_hexcol(p)
    assert loaded.array == arr and loaded.coloring == VSTRIPES
