"""Regenerate the bundled SERA key map (src/fidelmap/data/sera.tsv).

The table is data; this script only exists so that the file can be rebuilt
reproducibly after editing the series definitions below.

    python tools/build_sera_table.py
"""

from __future__ import annotations

import unicodedata
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src" / "fidelmap" / "data" / "sera.tsv"

# vowel suffix -> order offset inside a consonant series
CONSONANT_ORDERS = [("e", 0), ("u", 1), ("i", 2), ("a", 3), ("E", 4), ("ee", 4), ("", 5), ("o", 6)]
# bare vowel carriers use a different lettering: 'a' is first order, 'e'/'I' sixth
CARRIER_ORDERS = [("a", 0), ("u", 1), ("i", 2), ("A", 3), ("E", 4), ("ee", 4), ("e", 5), ("I", 5), ("o", 6)]
# labiovelar series living in their own 8-cell block (q, k, K, g, x-h)
SPLIT_LABIO_ORDERS = [("We", 0), ("Wi", 2), ("Wa", 3), ("W", 3), ("WE", 4), ("Wee", 4)]

# (comment, key prefixes, first-order code point, separate labiovelar block or None)
CONSONANTS = [
    ("h", ["h"], 0x1200, 0x1288),
    ("l", ["l"], 0x1208, None),
    ("H variant", ["H", "hh", "'h"], 0x1210, None),
    ("m", ["m"], 0x1218, None),
    ("s variant", ["ss", "'s", "s2"], 0x1220, None),
    ("r", ["r"], 0x1228, None),
    ("s", ["s"], 0x1230, None),
    ("x (sh)", ["x"], 0x1238, None),
    ("q", ["q"], 0x1240, 0x1248),
    ("b", ["b"], 0x1260, None),
    ("v", ["v"], 0x1268, None),
    ("t", ["t"], 0x1270, None),
    ("c (ch)", ["c"], 0x1278, None),
    ("h variant", ["h2"], 0x1280, 0x1288),
    ("n", ["n"], 0x1290, None),
    ("N (ny)", ["N"], 0x1298, None),
    ("k", ["k"], 0x12A8, 0x12B0),
    ("K (kh)", ["K"], 0x12B8, 0x12C0),
    ("w", ["w"], 0x12C8, None),
    ("z", ["z"], 0x12D8, None),
    ("Z (zh)", ["Z"], 0x12E0, None),
    ("y", ["y"], 0x12E8, None),
    ("d", ["d"], 0x12F0, None),
    ("j", ["j"], 0x1300, None),
    ("g", ["g"], 0x1308, 0x1310),
    ("T (t')", ["T"], 0x1320, None),
    ("C (ch')", ["C"], 0x1328, None),
    ("P (p')", ["P"], 0x1330, None),
    ("S (ts')", ["S"], 0x1338, None),
    ("S variant", ["SS", "'S", "S2"], 0x1340, None),
    ("f", ["f"], 0x1348, None),
    ("p", ["p"], 0x1350, None),
]

# all spellings of the 'h'-like letters share the labiovelar of the x-h block
H_LABIO_PREFIXES = ["h", "'h", "hh", "h2"]
H_LABIO = 0x128B

PUNCTUATION = [("::", 0x1362), (":", 0x1361), (";", 0x1364), (":-", 0x1365)]

# spellings seen in transliterated corpora for vowel-initial syllables
GLIDE_VARIANTS = [("ea", 0x12A0), ("eI", 0x12D5)]


def _has_wa(cp: int) -> bool:
    return unicodedata.name(chr(cp), "").endswith("WA")


def build() -> list[tuple[str, str, str]]:
    rows: list[tuple[str, str, str]] = []
    for comment, prefixes, base, labio in CONSONANTS:
        for prefix in prefixes:
            for suffix, off in CONSONANT_ORDERS:
                cp = base + off
                # the s-variant series writes its sixth order with E / ee
                if prefix in ("ss", "'s", "s2") and suffix in ("E", "ee"):
                    cp = base + 5
                rows.append((prefix + suffix, chr(cp), comment))
            if prefix in H_LABIO_PREFIXES:
                rows.append((prefix + "W", chr(H_LABIO), comment + " labiovelar"))
                rows.append((prefix + "Wa", chr(H_LABIO), comment + " labiovelar"))
                for suffix, off in SPLIT_LABIO_ORDERS:
                    if suffix not in ("W", "Wa"):
                        rows.append((prefix + suffix, chr(0x1288 + off), comment + " labiovelar"))
            elif labio is not None:
                for suffix, off in SPLIT_LABIO_ORDERS:
                    rows.append((prefix + suffix, chr(labio + off), comment + " labiovelar"))
            elif _has_wa(base + 7):
                rows.append((prefix + "W", chr(base + 7), comment + " labiovelar"))
                rows.append((prefix + "Wa", chr(base + 7), comment + " labiovelar"))

    for suffix, off in CARRIER_ORDERS:
        rows.append((suffix, chr(0x12A0 + off), "glottal vowel carrier"))
        rows.append(("'" + suffix, chr(0x12D0 + off), "pharyngeal vowel carrier"))
        rows.append((suffix + "2", chr(0x12D0 + off), "pharyngeal vowel carrier"))
    rows.append(("Wa", chr(0x12A7), "glottal labiovelar"))

    for key, cp in GLIDE_VARIANTS:
        rows.append((key, chr(cp), "glide spelling"))
    for key, cp in PUNCTUATION:
        rows.append((key, chr(cp), "punctuation"))
    return rows


def main() -> None:
    rows = build()
    keys = [k for k, _, _ in rows]
    dupes = {k for k in keys if keys.count(k) > 1}
    if dupes:
        raise SystemExit(f"duplicate keys: {sorted(dupes)}")
    lines = [
        "# SERA-based ASCII -> Ethiopic key map.",
        "# One entry per line: key<TAB>value. Order in this file is irrelevant;",
        "# the loader sorts longest key first, ties in ascending byte order.",
        "# Generated by tools/build_sera_table.py.",
    ]
    last = None
    for key, value, comment in rows:
        if comment != last:
            lines.append(f"# {comment}")
            last = comment
        lines.append(f"{key}\t{value}")
    OUT.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {len(rows)} entries to {OUT}")


if __name__ == "__main__":
    main()
