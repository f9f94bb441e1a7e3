"""Regenerate the bundled coloring catalog.

Each entry is either transcribed below as literal digit rows or derived
from another entry by an explicit transformation (orientation image,
coset-line shift). Before anything is written the script verifies every
entry: the grid must be a distance-regular coloring whose parameter
matrix equals the claimed array, same-array variants must be pairwise
nonequivalent, and the shift demonstration entry must admit the full
set of matrix-preserving line selections. A transcription error
therefore cannot reach the data files.

Usage: python3 tools/make_catalog.py [--out DIR] [--cross-check]

--cross-check additionally reruns the exhaustive classification for
k = 2, 3, 4 and confirms that every feasible reversal class is covered
by at least one entry.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from hexcrc.arrays import parse
from hexcrc.coloring import (
    PeriodicColoring,
    ShiftSelection,
    apply_automorphism,
    canonical_key,
    dump_hexcol,
    equivalent,
    is_distance_regular,
    parameter_matrix,
    read_hexcol,
    shift_cosets,
    shiftable_keys,
)
from hexcrc.grid import ORIGIN, PERMUTATIONS

DEFAULT_OUT = Path(__file__).resolve().parent.parent / "src" / "hexcrc" / "catalog_data"

# Literal entries. Rows are digit strings, one per grid row. Singles
# come from the smallest-torus witnesses of the exhaustive search;
# variant pairs come from pinned searches that separate the equivalence
# classes; the stripe colorings for two colors are written by hand.
TRANSCRIBED: dict[str, tuple[str, list[str]]] = {
    # two colors
    "[03-12]": ("[03-12]", ["0111", "1101"]),
    "[03-30]": ("[03-30]", ["01", "10"]),
    "[12-12]": ("[12-12]", ["001111", "111001"]),
    "[12-21].I": ("[12-21]", ["01", "01"]),
    "[12-21].II": ("[12-21]", ["0011", "1100"]),
    "[21-12].I": ("[21-12]", ["00", "11"]),
    "[21-12].II": ("[21-12]", ["0110", "0110"]),
    # three colors, series instances
    "[12-111-12]": ("[12-111-12]", ["0122101221", "0122101221"]),
    "[12-111-21]": ("[12-111-21]", ["0011", "1122"]),
    "[21-111-12]": ("[21-111-12]", ["001221", "001221"]),
    "[12-201-12].I": ("[12-201-12]", ["01", "01", "22", "10", "10", "22"]),
    "[12-201-12].II": (
        "[12-201-12]",
        ["001001", "122210", "122210", "001001", "210122", "210122"],
    ),
    # three colors, sporadic
    "[03-102-30]": ("[03-102-30]", ["012121", "121012"]),
    "[03-111-12].I": (
        "[03-111-12]",
        [
            "01101122222211",
            "12222221101101",
            "22110110112222",
            "11011222222110",
            "22222211011011",
            "21101101122222",
            "10112222221101",
            "22222110110112",
            "11011011222222",
            "01122222211011",
            "22221101101122",
            "10110112222221",
            "11222222110110",
            "22211011011222",
        ],
    ),
    "[03-111-12].II": (
        "[03-111-12]",
        [
            "01101222112221",
            "12221011012221",
            "12221122210110",
            "10110122211222",
            "11222101101222",
            "01222112221011",
            "21011012221122",
            "21122210110122",
            "10122211222101",
            "22101101222112",
            "22112221011012",
            "11012221122210",
            "22210110122211",
            "22211222101101",
        ],
    ),
    "[12-102-12]": (
        "[12-102-12]",
        [
            "00122122221221",
            "12222122100122",
            "12210012212222",
            "01221222212210",
            "22221221001221",
            "22100122122221",
            "12212222122100",
            "22212210012212",
            "21001221222212",
            "22122221221001",
            "22122100122122",
            "10012212222122",
            "21222212210012",
            "21221001221222",
        ],
    ),
    "[21-102-12]": (
        "[21-102-12]",
        ["000122212221", "000122212221", "212221000122", "212221000122"],
    ),
    # four colors, series instances
    "[12-111-111-12]": (
        "[12-111-111-12]",
        ["01233210123321", "01233210123321"],
    ),
    "[12-111-111-21]": ("[12-111-111-21]", ["012321", "012321"]),
    "[21-111-111-12]": ("[21-111-111-12]", ["00123321", "00123321"]),
    "[12-201-102-21]": ("[12-201-102-21]", ["01", "01", "32", "32"]),
    "[21-102-201-12]": ("[21-102-201-12]", ["00", "12", "33", "21"]),
    # four colors, sporadic ([03-102-201-30] is derived below)
    "[03-102-102-30]": (
        "[03-102-102-30]",
        [
            "01232123232321",
            "12323232101232",
            "23210123212323",
            "12321232323210",
            "23232321012321",
            "32101232123232",
            "23212323232101",
            "32323210123212",
            "21012321232323",
            "32123232321012",
            "23232101232123",
            "10123212323232",
            "21232323210123",
            "32321012321232",
        ],
    ),
    "[03-111-111-30]": (
        "[03-111-111-30]",
        ["01123221", "11012232", "32210112", "22321101"],
    ),
    "[12-102-111-21]": (
        "[12-102-111-21]",
        ["001221", "122332", "332212", "221001", "332122", "212332"],
    ),
    # five colors, series instances
    "[12-111-111-111-12]": (
        "[12-111-111-111-12]",
        ["012344321012344321", "012344321012344321"],
    ),
    "[12-111-111-111-21]": ("[12-111-111-111-21]", ["01234321", "01234321"]),
    "[21-111-111-111-12]": (
        "[21-111-111-111-12]",
        ["0012344321", "0012344321"],
    ),
    "[12-201-102-201-12]": (
        "[12-201-102-201-12]",
        ["01", "01", "32", "44", "23", "10", "10", "23", "44", "32"],
    ),
    # five colors, sporadic
    "[03-102-102-201-30]": (
        "[03-102-102-201-30]",
        ["012321", "123432", "432323", "321012", "432123", "323432"],
    ),
    "[03-102-111-201-12]": (
        "[03-102-111-201-12]",
        [
            "01223221",
            "12344432",
            "12344432",
            "01223221",
            "32210122",
            "44321234",
            "44321234",
            "32210122",
        ],
    ),
}

# Two-row diagonal coloring used as the seed for the shift entries.
DIAGONAL_SEED_ROWS = ["3212", "2101"]


def filename(name: str) -> str:
    return name.strip("[").replace("]", "") + ".hexcol"


def build_entries() -> dict[str, tuple[str, PeriodicColoring]]:
    entries: dict[str, tuple[str, PeriodicColoring]] = {}
    for name, (array_text, rows) in TRANSCRIBED.items():
        k = parse(array_text).k
        entries[name] = (array_text, PeriodicColoring.from_rows(rows, k))

    # [03-102-201-30].I is the orientation image of the diagonal seed;
    # its fundamental domain lines up with the coset lines so that every
    # line key admits a shift. .II shifts the single line with key 0.
    seed = PeriodicColoring.from_rows(DIAGONAL_SEED_ROWS, 4)
    base = apply_automorphism(seed, ORIGIN, PERMUTATIONS[4])
    entries["[03-102-201-30].I"] = ("[03-102-201-30]", base)
    selection = ShiftSelection(base.H, base.W, frozenset({0}))
    entries["[03-102-201-30].II"] = (
        "[03-102-201-30]",
        shift_cosets(base, selection),
    )
    return entries


def verify_entries(entries: dict[str, tuple[str, PeriodicColoring]]) -> list[str]:
    problems = []
    for name, (array_text, coloring) in sorted(entries.items()):
        claimed = parse(array_text)
        matrix = parameter_matrix(coloring)
        if matrix.rows != claimed.rows:
            problems.append(f"{name}: matrix {matrix.rows} != claimed {claimed.rows}")
        if not is_distance_regular(coloring):
            problems.append(f"{name}: not distance regular")

    by_array: dict[str, list[str]] = {}
    for name, (array_text, _) in entries.items():
        by_array.setdefault(array_text, []).append(name)
    for array_text, names in sorted(by_array.items()):
        names.sort()
        for i in range(len(names)):
            for j in range(i + 1, len(names)):
                a = entries[names[i]][1]
                b = entries[names[j]][1]
                if equivalent(a, b):
                    problems.append(f"{names[i]} and {names[j]} are equivalent")

    base = entries["[03-102-201-30].I"][1]
    keys = shiftable_keys(base, base.H, base.W)
    if keys != [0, 2, 4, 6]:
        problems.append(f"shift base keys {keys} != [0, 2, 4, 6]")
    return problems


def cross_check(entries: dict[str, tuple[str, PeriodicColoring]]) -> list[str]:
    from hexcrc.search import FEASIBLE, classify

    problems = []
    covered = {array_text for array_text, _ in entries.values()}
    for k in (2, 3, 4):
        for outcome in classify(k):
            if outcome.status == FEASIBLE and outcome.array_string not in covered:
                problems.append(f"feasible {outcome.array_string} has no entry")
    return problems


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=DEFAULT_OUT)
    ap.add_argument("--cross-check", action="store_true")
    args = ap.parse_args()

    entries = build_entries()
    problems = verify_entries(entries)
    if args.cross_check:
        problems += cross_check(entries)
    if problems:
        for p in problems:
            print("FAIL", p, file=sys.stderr)
        return 1

    args.out.mkdir(parents=True, exist_ok=True)
    for name, (array_text, coloring) in sorted(entries.items()):
        path = args.out / filename(name)
        text = dump_hexcol(parse(array_text), coloring)
        path.write_text(text)
        loaded = read_hexcol(path)
        assert dump_hexcol(loaded.array, loaded.coloring) == text
        print(f"wrote {path.name}: {coloring.H}x{coloring.W}")
    print(f"{len(entries)} entries, all verified")
    return 0


if __name__ == "__main__":
    sys.exit(main())
