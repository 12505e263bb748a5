"""Loading, validation and canonical ordering of key map dictionaries.

A key map pairs short ASCII keys (``"ssE"``, ``"hWa"``) with the Ethiopic
letters they stand for.  Conversion applies the entries in *canonical
order*: longer keys first, keys of equal length in ascending byte order
(so ``"hE"`` precedes ``"ha"`` because ``'E' < 'a'``).

The on-disk format is UTF-8 text, one ``key<TAB>value`` pair per line.
Blank lines and lines starting with ``#`` are ignored.
"""

from __future__ import annotations

import string
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from functools import cached_property
from importlib import resources
from pathlib import Path
from typing import TextIO

from .errors import DuplicateKey, InvalidKey, InvalidValue, MalformedLine

ETHIOPIC_FIRST = 0x1200
ETHIOPIC_LAST = 0x137F
MAX_KEY_LENGTH = 8
MAX_VALUE_LENGTH = 2

_PUNCTUATION = "?!.:;<>|+-*"
_QUOTES = "'`\""

#: The 76 ASCII characters keys may be built from.
ALPHABET: frozenset[str] = frozenset(
    string.ascii_lowercase + string.ascii_uppercase + string.digits + _PUNCTUATION + _QUOTES
)

BUNDLED_DICTIONARY = "sera.tsv"


def is_ethiopic(ch: str) -> bool:
    return ETHIOPIC_FIRST <= ord(ch) <= ETHIOPIC_LAST


def sort_key(key: str) -> tuple[int, bytes]:
    """Canonical comparison key: longest first, then ascending bytes."""
    return (-len(key), key.encode("ascii"))


@dataclass(frozen=True)
class KeyMapEntry:
    key: str
    value: str

    def __post_init__(self) -> None:
        validate_key(self.key)
        validate_value(self.value)


def validate_key(key: str, lineno: int | None = None) -> None:
    if not key:
        raise InvalidKey("empty key", lineno)
    if len(key) > MAX_KEY_LENGTH:
        raise InvalidKey(f"key {key!r} longer than {MAX_KEY_LENGTH} characters", lineno)
    for ch in key:
        if ch not in ALPHABET:
            raise InvalidKey(f"key {key!r} contains {ch!r}, outside the transliteration alphabet", lineno)


def validate_value(value: str, lineno: int | None = None) -> None:
    if not value:
        raise InvalidValue("empty value", lineno)
    if len(value) > MAX_VALUE_LENGTH:
        raise InvalidValue(f"value {value!r} has more than {MAX_VALUE_LENGTH} code points", lineno)
    for ch in value:
        if not is_ethiopic(ch):
            raise InvalidValue(
                f"value {value!r} contains U+{ord(ch):04X}, outside U+1200..U+137F", lineno
            )


def sort_entries(entries: Iterable[KeyMapEntry]) -> list[KeyMapEntry]:
    """Return ``entries`` in canonical replacement order.

    Raises DuplicateKey if two entries share a key, since the order between
    them would otherwise be decided by input order.
    """
    entries = list(entries)
    seen: set[str] = set()
    for entry in entries:
        if entry.key in seen:
            raise DuplicateKey(f"duplicate key {entry.key!r}")
        seen.add(entry.key)
    return sorted(entries, key=lambda e: sort_key(e.key))


@dataclass(frozen=True)
class SortedKeyMap:
    """An immutable dictionary held in canonical order.

    Build one with :func:`parse_dictionary`, :func:`load_dictionary` or
    :meth:`from_entries`; the constructor trusts its input is sorted.
    """

    entries: tuple[KeyMapEntry, ...] = ()
    key_index: dict[str, KeyMapEntry] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "key_index", {e.key: e for e in self.entries})

    @classmethod
    def from_entries(cls, entries: Iterable[KeyMapEntry]) -> SortedKeyMap:
        return cls(tuple(sort_entries(entries)))

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[str, str]]) -> SortedKeyMap:
        return cls.from_entries(KeyMapEntry(k, v) for k, v in pairs)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[KeyMapEntry]:
        return iter(self.entries)

    def __contains__(self, key: object) -> bool:
        return key in self.key_index

    def __getitem__(self, key: str) -> str:
        return self.key_index[key].value

    @property
    def keys(self) -> list[str]:
        return [e.key for e in self.entries]

    @cached_property
    def rank(self) -> dict[str, int]:
        """Position of each key in canonical order."""
        return {e.key: i for i, e in enumerate(self.entries)}

    @cached_property
    def max_key_length(self) -> int:
        return max((len(e.key) for e in self.entries), default=0)

    @cached_property
    def key_chars(self) -> frozenset[str]:
        return frozenset(ch for e in self.entries for ch in e.key)


def add_entry(keymap: SortedKeyMap, entry: KeyMapEntry) -> SortedKeyMap:
    """Return a new map with ``entry`` inserted at its canonical position."""
    if entry.key in keymap:
        raise DuplicateKey(f"duplicate key {entry.key!r}")
    target = sort_key(entry.key)
    entries = keymap.entries
    lo, hi = 0, len(entries)
    while lo < hi:
        mid = (lo + hi) // 2
        if sort_key(entries[mid].key) < target:
            lo = mid + 1
        else:
            hi = mid
    return SortedKeyMap(entries[:lo] + (entry,) + entries[lo:])


def parse_dictionary(source: TextIO | Iterable[str] | str) -> SortedKeyMap:
    """Parse ``key<TAB>value`` lines into a validated, sorted key map.

    ``source`` may be an open text stream, an iterable of lines, or the
    whole file content as one string.
    """
    if isinstance(source, str):
        source = source.splitlines()
    entries: list[KeyMapEntry] = []
    seen: dict[str, int] = {}
    for lineno, raw in enumerate(source, start=1):
        line = raw.rstrip("\r\n")
        if not line.strip() or line.startswith("#"):
            continue
        if "\t" not in line:
            raise MalformedLine(f"expected key<TAB>value, got {line!r}", lineno)
        key, _, value = line.partition("\t")
        if not key or not value:
            raise MalformedLine(f"empty field in {line!r}", lineno)
        if "\t" in value:
            raise MalformedLine(f"more than two fields in {line!r}", lineno)
        validate_key(key, lineno)
        validate_value(value, lineno)
        if key in seen:
            raise DuplicateKey(f"duplicate key {key!r} (first defined on line {seen[key]})", lineno)
        seen[key] = lineno
        entries.append(KeyMapEntry(key, value))
    return SortedKeyMap.from_entries(entries)


def serialize(keymap: SortedKeyMap) -> str:
    return "".join(f"{e.key}\t{e.value}\n" for e in keymap.entries)


def load_dictionary(path: str | Path | None = None) -> SortedKeyMap:
    """Load a dictionary file, or the bundled SERA map when ``path`` is None."""
    if path is None:
        return load_bundled()
    with open(path, encoding="utf-8") as fh:
        return parse_dictionary(fh)


_bundled: SortedKeyMap | None = None


def load_bundled() -> SortedKeyMap:
    global _bundled
    if _bundled is None:
        text = resources.files("fidelmap").joinpath("data").joinpath(BUNDLED_DICTIONARY).read_text("utf-8")
        _bundled = parse_dictionary(text)
    return _bundled
