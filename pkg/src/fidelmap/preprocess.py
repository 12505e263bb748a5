"""Detection and neutralisation of inputs that the sorted REPLACE loop garbles.

The sorted loop fires long keys first, wherever they occur.  When a vowel
closes one syllable and the next character starts another, a two-character
key straddling the pair can fire before the intended syllable key:
``"meaza"`` becomes ``m|ea|za`` instead of ``me|a|za``; ``"le2"`` becomes
``l|e2`` instead of ``le|2``.

:func:`segment_clusters` repairs such input by inserting a boundary marker
(a character no key can contain) at the intended syllable boundaries, the
``me-a-za`` device, so any strategy then sees the right segmentation.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .engine import DEFAULT_BOUNDARY_MARKER, MatchStrategy, check_boundary_marker, converter_for
from .keymap import SortedKeyMap

VOWELS: frozenset[str] = frozenset("aeiouAEIOU")
_DIGITS = frozenset("0123456789")
_WORD_CHARS = frozenset("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789")


class RiskKind(enum.Enum):
    VOWEL_CLUSTER = "vowel-cluster"
    DIGIT_COLLISION = "digit-collision"


@dataclass(frozen=True)
class MalformationWarning:
    start: int
    length: int
    kind: RiskKind
    snippet: str


def _greedy_tokens(text: str, keymap: SortedKeyMap) -> tuple[dict[int, int], list[str | None]]:
    """Map token start -> end, and per-position owning key, for greedy segmentation."""
    ends: dict[int, int] = {}
    owner: list[str | None] = []
    pos = 0
    for span in converter_for(keymap).segment(text, MatchStrategy.GREEDY):
        ends[pos] = pos + len(span.text)
        owner.extend([span.key] * len(span.text))
        pos += len(span.text)
    return ends, owner


def _first_firing_key(text: str, i: int, keymap: SortedKeyMap) -> str | None:
    """Highest-priority key of length >= 2 starting at ``i``."""
    best = None
    rank = keymap.rank
    for length in range(2, min(keymap.max_key_length, len(text) - i) + 1):
        key = text[i : i + length]
        if key in rank and (best is None or rank[key] < rank[best]):
            best = key
    return best


def _scan(text: str, keymap: SortedKeyMap):
    ends, owner = _greedy_tokens(text, keymap)
    token_ends = set(ends.values())
    warnings: list[MalformationWarning] = []
    for i in range(len(text) - 1):
        ch, nxt = text[i], text[i + 1]
        if ch not in VOWELS or not (nxt in VOWELS or nxt in _DIGITS):
            continue
        # the intended reading must split the pair
        if i + 1 not in token_ends:
            continue
        intruder = _first_firing_key(text, i, keymap)
        intended = owner[i]
        if intruder is None or intended is None:
            continue
        if keymap.rank[intruder] < keymap.rank[intended]:
            kind = RiskKind.VOWEL_CLUSTER if nxt in VOWELS else RiskKind.DIGIT_COLLISION
            warnings.append(MalformationWarning(i, 2, kind, text[i : i + 2]))
    return warnings, ends


def detect_risks(text: str, keymap: SortedKeyMap) -> list[MalformationWarning]:
    """Return, ordered by offset, every spot the sorted loop would mis-segment.

    A risk is a vowel followed, inside a word, by a vowel or a digit, where a
    key straddling the pair outranks the greedy syllable that ends at the
    first character.  Digit risks only exist for dictionaries with
    vowel+digit keys such as ``"e2"``.
    """
    return _scan(text, keymap)[0]


def segment_clusters(
    text: str, keymap: SortedKeyMap, boundary_marker: str = DEFAULT_BOUNDARY_MARKER
) -> str:
    """Insert ``boundary_marker`` where :func:`detect_risks` found a risk.

    A marker goes between the two characters of each risky pair.  For a
    vowel cluster the second vowel's syllable is isolated on both sides,
    so ``"meaza"`` becomes ``"me|a|za"`` with ``|`` standing for the marker.
    Markers are only placed on greedy token boundaries, so greedy output
    is unchanged by this step.
    """
    check_boundary_marker(boundary_marker, keymap)
    warnings, ends = _scan(text, keymap)
    cuts: set[int] = set()
    for w in warnings:
        cut = w.start + 1
        cuts.add(cut)
        if w.kind is RiskKind.VOWEL_CLUSTER:
            after = ends[cut]
            if after < len(text) and text[after] in _WORD_CHARS:
                cuts.add(after)
    if not cuts:
        return text
    out = []
    prev = 0
    for cut in sorted(cuts):
        out.append(text[prev:cut])
        out.append(boundary_marker)
        prev = cut
    out.append(text[prev:])
    return "".join(out)


def strip_markers(text: str, boundary_marker: str = DEFAULT_BOUNDARY_MARKER) -> str:
    return text.replace(boundary_marker, "")
