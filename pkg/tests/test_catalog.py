"""Catalog data and renderer tests."""

from __future__ import annotations

import xml.etree.ElementTree as ET

import pytest

from hexcrc.catalog import data_dir, list_entries, list_names, load_entry, verify_all
from hexcrc.coloring import (
    NotPerfectError,
    PeriodicColoring,
    dump_hexcol,
    equivalent,
    load_hexcol,
    parameter_matrix,
)
from hexcrc.render import PALETTE, render

REQUIRED_NAMES = [
    "[03-30]",
    "[03-12]",
    "[12-12]",
    "[12-21].I",
    "[12-21].II",
    "[21-12].I",
    "[21-12].II",
    "[03-111-12].I",
    "[03-111-12].II",
    "[12-201-12].I",
    "[12-201-12].II",
    "[03-102-201-30].I",
    "[03-102-201-30].II",
    "[03-102-111-201-12]",
    "[03-102-102-201-30]",
]

# every feasible reversal class of the exhaustive classification at k <= 4
FEASIBLE_K_LE_4 = [
    "[03-12]", "[03-30]", "[12-12]", "[12-21]", "[21-12]",
    "[03-102-30]", "[03-111-12]", "[12-102-12]", "[12-111-12]",
    "[12-111-21]", "[12-201-12]", "[21-102-12]", "[21-111-12]",
    "[03-102-102-30]", "[03-102-201-30]", "[03-111-111-30]",
    "[12-102-111-21]", "[12-111-111-12]", "[12-111-111-21]",
    "[12-201-102-21]", "[21-102-201-12]", "[21-111-111-12]",
]


def test_list_names_sorted_and_complete():
    names = list_names()
    assert names == sorted(names)
    assert len(names) >= 25
    for required in REQUIRED_NAMES:
        assert required in names


def test_every_feasible_class_is_covered():
    covered = {e.array_string for e in list_entries()}
    for array_string in FEASIBLE_K_LE_4:
        assert array_string in covered


def test_load_entry_fields():
    e = load_entry("[12-201-12].II")
    assert e.variant == "II"
    assert e.array_string == "[12-201-12]"
    assert e.coloring.H == 6 and e.coloring.W == 6
    assert e.source != "unrecorded"
    single = load_entry("[03-30]")
    assert single.variant is None


def test_load_entry_unknown_name():
    with pytest.raises(KeyError):
        load_entry("[99-99]")


def test_verify_all_passes():
    ok, lines = verify_all()
    assert ok
    assert lines[-1].endswith("entries ok")
    assert "[03-111-12].I vs [03-111-12].II nonequivalent" in lines
    assert "[12-201-12].I vs [12-201-12].II nonequivalent" in lines


def test_files_round_trip_byte_identical():
    for path in sorted(data_dir().glob("*.hexcol")):
        text = path.read_text()
        doc = load_hexcol(text)
        assert dump_hexcol(doc.array, doc.coloring) == text


def test_every_entry_has_a_source_note():
    for e in list_entries():
        assert e.source != "unrecorded", e.name


def test_corrupting_a_cell_is_caught():
    e = load_entry("[03-30]")
    rows = [list(r) for r in e.coloring.grid]
    rows[0][0] = 1 - rows[0][0]
    mutated = PeriodicColoring(tuple(tuple(r) for r in rows), e.coloring.k)
    with pytest.raises(NotPerfectError) as info:
        parameter_matrix(mutated)
    assert info.value.node_a != info.value.node_b


def test_variant_pairs_nonequivalent_directly():
    for stem in ("[03-111-12]", "[12-201-12]", "[12-21]", "[21-12]"):
        a = load_entry(stem + ".I").coloring
        b = load_entry(stem + ".II").coloring
        assert not equivalent(a, b), stem


def test_render_ascii_spec_example():
    parity = PeriodicColoring.from_rows(["01", "10"], 2)
    assert render(parity, "ascii", (2, 4)) == "0101\n1010"


def test_render_ascii_equals_grid_digits():
    e = load_entry("[12-111-21]")
    expected = "\n".join(
        "".join(str(v) for v in row) for row in e.coloring.grid
    )
    assert render(e.coloring, "ascii") == expected


def test_render_window_too_small_rejected():
    e = load_entry("[03-111-12].I")
    with pytest.raises(ValueError):
        render(e.coloring, "ascii", (2, 2))
    with pytest.raises(ValueError):
        render(e.coloring, "svg", (13, 14))


def test_render_unknown_format_rejected():
    parity = PeriodicColoring.from_rows(["01", "10"], 2)
    with pytest.raises(ValueError):
        render(parity, "png")


def test_svg_structure_for_every_entry():
    for e in list_entries():
        svg = render(e.coloring, "svg")
        root = ET.fromstring(svg)
        polygons = [el for el in root.iter() if el.tag.endswith("polygon")]
        assert len(polygons) == e.coloring.H * e.coloring.W, e.name
        fills = {p.get("fill") for p in polygons}
        assert fills == {PALETTE[i] for i in range(e.coloring.k)}, e.name


def test_svg_deterministic_and_injective():
    seen = {}
    for e in list_entries():
        svg = render(e.coloring, "svg")
        assert svg == render(e.coloring, "svg")
        assert svg not in seen.values(), e.name
        seen[e.name] = svg
    # same-window entries must still differ
    by_window = {}
    for e in list_entries():
        key = (e.coloring.H, e.coloring.W)
        by_window.setdefault(key, []).append(seen[e.name])
    for key, outputs in by_window.items():
        assert len(set(outputs)) == len(outputs), key


def test_palette_bound():
    rows = [tuple(range(11)) + (10,)] * 2
    big = PeriodicColoring(tuple(rows), 11)
    with pytest.raises(ValueError):
        render(big, "svg")
