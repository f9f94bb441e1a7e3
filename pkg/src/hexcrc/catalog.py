"""Bundled catalog of verified distance-regular colorings.

The data directory ships one HEXCOL file per entry. Entry names use the
bracket notation of the intersection array, with a ``.I``/``.II`` suffix
where one array admits several nonequivalent colorings. ``verify_all``
re-derives every claim from the grids alone, so the data files never
need to be trusted.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .arrays import IntersectionArray
from .coloring import (
    PeriodicColoring,
    equivalent,
    is_distance_regular,
    parameter_matrix,
    read_hexcol,
)

_SERIES_SOURCE = "smallest torus admitting the single-ribbon repeat"
_SEARCH_SOURCE = "smallest-torus witness from the exhaustive classification search"

SOURCES: dict[str, str] = {
    "[03-12]": _SEARCH_SOURCE,
    "[03-30]": "two-cell checkerboard, the proper 2-coloring",
    "[12-12]": _SEARCH_SOURCE,
    "[12-21].I": "width-1 column stripes",
    "[12-21].II": "width-2 diagonal blocks, second equivalence class",
    "[21-12].I": "row stripes",
    "[21-12].II": "width-2 column stripes, second equivalence class",
    "[12-111-12]": _SERIES_SOURCE,
    "[12-111-21]": _SEARCH_SOURCE,
    "[21-111-12]": _SERIES_SOURCE,
    "[12-201-12].I": "first equivalence class from a pinned exhaustive search",
    "[12-201-12].II": "second equivalence class from a pinned exhaustive search",
    "[03-102-30]": _SEARCH_SOURCE,
    "[03-111-12].I": "first equivalence class from a pinned exhaustive search",
    "[03-111-12].II": "second equivalence class from a pinned exhaustive search",
    "[12-102-12]": _SEARCH_SOURCE,
    "[21-102-12]": _SEARCH_SOURCE,
    "[12-111-111-12]": _SERIES_SOURCE,
    "[12-111-111-21]": _SERIES_SOURCE,
    "[21-111-111-12]": _SERIES_SOURCE,
    "[12-201-102-21]": _SEARCH_SOURCE,
    "[21-102-201-12]": _SEARCH_SOURCE,
    "[03-102-102-30]": _SEARCH_SOURCE,
    "[03-102-201-30].I": (
        "orientation image of the two-row diagonal coloring; every coset "
        "line key admits a shift"
    ),
    "[03-102-201-30].II": "single-line coset shift (key 0) of [03-102-201-30].I",
    "[03-111-111-30]": _SEARCH_SOURCE,
    "[12-102-111-21]": _SEARCH_SOURCE,
    "[12-111-111-111-12]": _SERIES_SOURCE,
    "[12-111-111-111-21]": _SERIES_SOURCE,
    "[21-111-111-111-12]": _SERIES_SOURCE,
    "[12-201-102-201-12]": _SEARCH_SOURCE,
    "[03-102-102-201-30]": _SEARCH_SOURCE,
    "[03-102-111-201-12]": _SEARCH_SOURCE,
}


@dataclass(frozen=True)
class CatalogEntry:
    """One shipped coloring with its claimed array and generation note."""

    name: str
    array: IntersectionArray
    coloring: PeriodicColoring
    source: str
    variant: str | None

    @property
    def array_string(self) -> str:
        return self.name.split(".")[0]


def data_dir() -> Path:
    return Path(__file__).resolve().parent / "catalog_data"


def _name_from_filename(filename: str) -> tuple[str, str | None]:
    stem = filename.removesuffix(".hexcol")
    variant = None
    for tag in ("I", "II"):
        if stem.endswith("." + tag):
            stem = stem.removesuffix("." + tag)
            variant = tag
    name = f"[{stem}]" + (f".{variant}" if variant else "")
    return name, variant


def list_names() -> list[str]:
    """Deterministic sorted entry names."""
    return sorted(
        _name_from_filename(p.name)[0] for p in data_dir().glob("*.hexcol")
    )


def load_entry(name: str) -> CatalogEntry:
    filename = name.strip("[").replace("]", "") + ".hexcol"
    path = data_dir() / filename
    if not path.is_file():
        raise KeyError(f"no catalog entry named {name!r}")
    doc = read_hexcol(path)
    _, variant = _name_from_filename(filename)
    return CatalogEntry(
        name=name,
        array=doc.array,
        coloring=doc.coloring,
        source=SOURCES.get(name, "unrecorded"),
        variant=variant,
    )


def list_entries() -> list[CatalogEntry]:
    return [load_entry(name) for name in list_names()]


def verify_all() -> tuple[bool, list[str]]:
    """Recheck every entry from its grid alone.

    Verifies the parameter matrix against the claimed array, distance
    regularity, and pairwise nonequivalence of same-array variants.
    Returns (all ok, one report line per check).
    """
    entries = list_entries()
    lines = []
    ok = True
    for e in entries:
        try:
            matrix = parameter_matrix(e.coloring)
        except Exception as exc:
            lines.append(f"{e.name} FAIL {exc}")
            ok = False
            continue
        if matrix.rows != e.array.rows:
            lines.append(
                f"{e.name} FAIL matrix {matrix.rows} != claimed {e.array.rows}"
            )
            ok = False
        elif not is_distance_regular(e.coloring):
            lines.append(f"{e.name} FAIL matrix is not tridiagonal")
            ok = False
        else:
            lines.append(f"{e.name} ok {e.coloring.H}x{e.coloring.W}")

    by_array: dict[str, list[CatalogEntry]] = {}
    for e in entries:
        by_array.setdefault(e.array_string, []).append(e)
    for array_string in sorted(by_array):
        group = by_array[array_string]
        for i in range(len(group)):
            for j in range(i + 1, len(group)):
                a, b = group[i], group[j]
                if equivalent(a.coloring, b.coloring):
                    lines.append(f"{a.name} vs {b.name} FAIL equivalent")
                    ok = False
                else:
                    lines.append(f"{a.name} vs {b.name} nonequivalent")
    lines.append(f"{len(entries)} entries " + ("ok" if ok else "FAILED"))
    return ok, lines
