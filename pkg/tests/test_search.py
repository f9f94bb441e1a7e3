"""Search pipeline tests.

The two-color classification is small enough to recompute from scratch
on every run, so its full outcome table is frozen here. Larger runs are
exercised through the acceptance suite.
"""

from __future__ import annotations

import json
from fractions import Fraction

import pytest

from hexcrc.arrays import enumerate_candidates, format_array, parse
from hexcrc.coloring import PeriodicColoring, parameter_matrix
from hexcrc.search import (
    FEASIBLE,
    INFEASIBLE,
    UNDECIDED,
    SearchOutcome,
    classify,
    classify_array,
    enumerate_tori,
    forbidden_fragment_check,
    outcome_json,
    refutation_radius,
    report_lines,
    solve_torus,
    torus_class_sizes,
    torus_search,
    witness_filename,
)


def oracle_class_sizes(array, cells):
    """Recompute color class sizes from the ratio recurrence directly."""
    sizes = [Fraction(1)]
    for i in range(1, array.k):
        sizes.append(sizes[-1] * Fraction(array.b(i - 1), array.c(i)))
    total = sum(sizes)
    scaled = [s * cells / total for s in sizes]
    if any(s.denominator != 1 or s <= 0 for s in scaled):
        return None
    return [int(s) for s in scaled]


@pytest.mark.parametrize("text", ["[03-12]", "[12-111-21]", "[03-111-12]", "[12-201-12]"])
@pytest.mark.parametrize("cells", [4, 8, 12, 36, 196])
def test_class_sizes_match_oracle(text, cells):
    a = parse(text)
    assert torus_class_sizes(a, cells) == oracle_class_sizes(a, cells)


def test_class_sizes_of_actual_witness_count_colors():
    rows = ["0122101221", "0122101221"]
    c = PeriodicColoring.from_rows(rows, 3)
    a = parse("[12-111-12]")
    sizes = torus_class_sizes(a, 20)
    classes = c.color_classes()
    assert sizes == [len(classes[i]) for i in range(3)]


def test_class_size_prune_rejects_indivisible():
    a = parse("[03-111-12]")
    # class ratio is 1 : 3 : 3, so totals not divisible by 7 are impossible
    assert torus_class_sizes(a, 8) is None
    assert torus_class_sizes(a, 28) == [4, 12, 12]


def test_prune_never_removes_a_solvable_torus():
    # brute-check: every torus the solver can fill must pass the prune
    for text in ["[03-12]", "[12-21]", "[12-111-21]", "[03-102-30]"]:
        a = parse(text)
        for h, w in enumerate_tori(32):
            witness = solve_torus(a, h, w)
            if witness is not None:
                assert torus_class_sizes(a, h * w) is not None, (text, h, w)


def test_enumerate_tori_order_and_bounds():
    tori = enumerate_tori(16)
    assert tori[0] == (2, 2)
    assert all(h % 2 == 0 and w % 2 == 0 and h * w <= 16 for h, w in tori)
    keys = [(h * w, h) for h, w in tori]
    assert keys == sorted(keys)
    assert (2, 6) in tori and (6, 2) in tori
    assert enumerate_tori(16, min_cells=9) == [
        (2, 6), (6, 2), (2, 8), (4, 4), (8, 2)
    ]


def test_refutation_radius_known_values():
    assert refutation_radius(parse("[03-21]")) == 3
    # feasible arrays never refute
    assert refutation_radius(parse("[03-12]"), r_max=4) is None
    assert refutation_radius(parse("[12-111-21]"), r_max=4) is None


def test_forbidden_fragment_check_matches_known_cases():
    assert forbidden_fragment_check(parse("[03-111-111-30]")) is False
    assert forbidden_fragment_check(parse("[12-111-102-21]")) is True
    assert forbidden_fragment_check(parse("[12-201-111-21]")) is True
    # too short to contain a middle pair
    assert forbidden_fragment_check(parse("[03-111-12]")) is False


K2_EXPECTED = {
    "[03-12]": FEASIBLE,
    "[03-21]": INFEASIBLE,
    "[03-30]": FEASIBLE,
    "[12-12]": FEASIBLE,
    "[12-21]": FEASIBLE,
    "[21-12]": FEASIBLE,
}


def test_classify_two_colors_exactly():
    outcomes = classify(2, r_max=4, small_cells=16, max_cells=64)
    got = {o.array_string: o.status for o in outcomes}
    assert got == K2_EXPECTED
    by_array = {o.array_string: o for o in outcomes}
    assert by_array["[03-21]"].radius == 3
    for text, status in K2_EXPECTED.items():
        if status == FEASIBLE:
            w = by_array[text].witness
            assert parameter_matrix(w).rows == parse(text).rows


def test_classify_array_single():
    out = classify_array(parse("[03-30]"), r_max=3, small_cells=8, max_cells=8)
    assert out.status == FEASIBLE
    assert out.witness.H == 2 and out.witness.W == 2

    out = classify_array(parse("[03-21]"), r_max=4, small_cells=8, max_cells=8)
    assert out.status == INFEASIBLE and out.radius == 3


def test_classify_threads_match_serial():
    serial = report_lines(classify(2, max_cells=64))
    threaded = report_lines(classify(2, max_cells=64, threads=4))
    assert serial == threaded


def test_torus_search_returns_verified_witness():
    found = torus_search(parse("[12-111-21]"), max_cells=16)
    assert found is not None
    assert parameter_matrix(found).rows == parse("[12-111-21]").rows


def test_torus_search_none_when_too_small():
    # the smallest [03-111-12] witness needs 196 cells
    assert torus_search(parse("[03-111-12]"), max_cells=64) is None


def test_witness_filename():
    assert witness_filename(parse("[03-12]")) == "03-12.hexcol"
    assert witness_filename(parse("[12-111-21]")) == "12-111-21.hexcol"


def test_report_lines_format(tmp_path):
    outcomes = classify(2, max_cells=64)
    lines = report_lines(outcomes, out_dir=tmp_path)
    assert len(lines) == len(outcomes)
    assert any(line.startswith("[03-12] FEASIBLE 03-12.hexcol") for line in lines)
    assert "[03-21] INFEASIBLE@3" in lines
    assert (tmp_path / "03-12.hexcol").exists()
    # written witnesses load back to the recorded grid
    from hexcrc.coloring import read_hexcol

    loaded = read_hexcol(tmp_path / "03-12.hexcol")
    assert parameter_matrix(loaded.coloring).rows == parse("[03-12]").rows


def test_report_lines_undecided():
    out = SearchOutcome(array=parse("[03-12]"), status=UNDECIDED)
    assert report_lines([out]) == ["[03-12] UNDECIDED"]


def test_outcome_json_payloads():
    outcomes = classify(2, max_cells=64)
    by_array = {o.array_string: o for o in outcomes}

    d = json.loads(outcome_json(by_array["[03-12]"]))
    assert d["array"] == "[03-12]"
    assert d["status"] == "FEASIBLE"
    assert d["k"] == 2
    assert d["reverse"] == "[21-30]"
    assert len(d["grid"]) == d["height"]
    assert all(len(row) == d["width"] for row in d["grid"])

    d = json.loads(outcome_json(by_array["[03-21]"]))
    assert d["status"] == "INFEASIBLE" and d["radius"] == 3
    assert "grid" not in d


def test_classify_covers_whole_candidate_list():
    from hexcrc.arrays import class_representative

    outcomes = classify(2, max_cells=64)
    reps = {
        format_array(class_representative(a)) for a in enumerate_candidates(2)
    }
    assert [o.array_string for o in outcomes] == sorted(reps)
