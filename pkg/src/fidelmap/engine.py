"""ASCII -> Ethiopic conversion over a :class:`SortedKeyMap`.

Two matching strategies are available:

``PAPER``
    For every entry in canonical order, replace all occurrences of its key
    in the working text.  This reproduces the classic sorted-dictionary
    REPLACE loop, malformations included: in ``"meaza"`` the key ``"ea"``
    sorts before ``"me"`` and so wins.

``GREEDY``
    Scan left to right and, at every position, take the longest key that
    starts there.

Both strategies pass unmatched characters through unchanged, and treat the
request's boundary marker as a barrier that no key can span.  Markers are
removed from the output.
"""

from __future__ import annotations

import enum
import re
from collections.abc import Iterator
from dataclasses import dataclass
from typing import NamedTuple

from .errors import InvalidBoundaryMarker, InvalidUtf8, NonAsciiInput
from .keymap import ALPHABET, SortedKeyMap

DEFAULT_BOUNDARY_MARKER = "\x1f"


class MatchStrategy(enum.Enum):
    PAPER = "paper"
    GREEDY = "greedy"


class DecodePolicy(enum.Enum):
    STRICT = "strict"
    PASSTHROUGH = "passthrough"


class Span(NamedTuple):
    """A piece of the segmented input.

    ``key`` is the dictionary key that consumed ``text``, or None when the
    text passed through unmatched (then ``text`` is a single character).
    """

    text: str
    key: str | None


@dataclass(frozen=True)
class ConversionRequest:
    text: str
    strategy: MatchStrategy = MatchStrategy.PAPER
    policy: DecodePolicy = DecodePolicy.STRICT
    boundary_marker: str = DEFAULT_BOUNDARY_MARKER

    def __post_init__(self) -> None:
        check_boundary_marker(self.boundary_marker)


@dataclass(frozen=True)
class ConversionResult:
    output: str
    replacements: int = 0
    passthrough_chars: int = 0
    boundary_markers_stripped: int = 0


def check_boundary_marker(marker: str, keymap: SortedKeyMap | None = None) -> None:
    if len(marker) != 1:
        raise InvalidBoundaryMarker(f"boundary marker must be one character, got {marker!r}")
    if marker in ALPHABET:
        raise InvalidBoundaryMarker(f"boundary marker {marker!r} is in the transliteration alphabet")
    if keymap is not None and marker in keymap.key_chars:
        raise InvalidBoundaryMarker(f"boundary marker {marker!r} occurs in a dictionary key")


def decode_input(data: bytes, policy: DecodePolicy = DecodePolicy.STRICT) -> str:
    """Decode raw input bytes.

    Under STRICT every byte must be ASCII.  Under PASSTHROUGH the bytes are
    read as UTF-8; non-ASCII characters can never match a key (keys are
    ASCII), so they are carried through conversion untouched.
    """
    if policy is DecodePolicy.STRICT:
        for offset, byte in enumerate(data):
            if byte > 0x7F:
                raise NonAsciiInput(f"non-ASCII byte 0x{byte:02X}", offset)
        return data.decode("ascii")
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise InvalidUtf8(f"invalid UTF-8 ({exc.reason})", exc.start) from None


def encode_output(text: str) -> bytes:
    return text.encode("utf-8")


def _check_text(text: str, policy: DecodePolicy, marker: str) -> None:
    if policy is DecodePolicy.STRICT:
        for offset, ch in enumerate(text):
            if ord(ch) > 0x7F and ch != marker:
                raise NonAsciiInput(f"non-ASCII character U+{ord(ch):04X}", offset)


# Keys never contain whitespace, so words can be converted independently.
_WHITESPACE = re.compile(r"(\s+)")


class Converter:
    """Precomputed matching state for one key map.

    Holds a prefix tree for GREEDY and a per-word cache for both
    strategies.  Obtain one with :func:`converter_for`.
    """

    _CACHE_LIMIT = 200_000

    def __init__(self, keymap: SortedKeyMap):
        self.keymap = keymap
        self._rank = keymap.rank
        self._max = keymap.max_key_length
        self._trie: dict = {}
        for entry in keymap.entries:
            node = self._trie
            for ch in entry.key:
                node = node.setdefault(ch, {})
            node[None] = entry.key
        self._cache: dict[tuple[MatchStrategy, str], tuple[Span, ...]] = {}

    def segment(self, text: str, strategy: MatchStrategy) -> list[Span]:
        """Split ``text`` into matched and passthrough spans, in input order."""
        spans: list[Span] = []
        for piece in _WHITESPACE.split(text):
            if not piece:
                continue
            if piece[0].isspace():
                spans.extend(Span(ch, None) for ch in piece)
                continue
            cache_key = (strategy, piece)
            cached = self._cache.get(cache_key)
            if cached is None:
                if strategy is MatchStrategy.PAPER:
                    cached = tuple(self._segment_paper(piece))
                else:
                    cached = tuple(self._segment_greedy(piece))
                if len(self._cache) >= self._CACHE_LIMIT:
                    self._cache.clear()
                self._cache[cache_key] = cached
            spans.extend(cached)
        return spans

    def _segment_greedy(self, word: str) -> Iterator[Span]:
        i, n = 0, len(word)
        trie = self._trie
        while i < n:
            node = trie
            best = None
            j = i
            while j < n:
                node = node.get(word[j])
                if node is None:
                    break
                j += 1
                if None in node:
                    best = node[None]
            if best is None:
                yield Span(word[i], None)
                i += 1
            else:
                yield Span(best, best)
                i += len(best)

    def _segment_paper(self, word: str) -> list[Span]:
        # Only keys occurring in the original word can ever fire: replacement
        # values are non-ASCII, so they never create new key occurrences.
        index = self.keymap.key_index
        candidates = {
            word[i:j]
            for i in range(len(word))
            for j in range(i + 1, min(len(word), i + self._max) + 1)
            if word[i:j] in index
        }
        pieces: list[Span | str] = [word]
        for key in sorted(candidates, key=self._rank.__getitem__):
            next_pieces: list[Span | str] = []
            for piece in pieces:
                if isinstance(piece, Span) or key not in piece:
                    next_pieces.append(piece)
                    continue
                parts = piece.split(key)
                for k, part in enumerate(parts):
                    if k:
                        next_pieces.append(Span(key, key))
                    if part:
                        next_pieces.append(part)
            pieces = next_pieces
        spans: list[Span] = []
        for piece in pieces:
            if isinstance(piece, Span):
                spans.append(piece)
            else:
                spans.extend(Span(ch, None) for ch in piece)
        return spans

    def convert(self, request: ConversionRequest) -> ConversionResult:
        marker = request.boundary_marker
        check_boundary_marker(marker, self.keymap)
        _check_text(request.text, request.policy, marker)
        out: list[str] = []
        replacements = passthrough = stripped = 0
        for span in self.segment(request.text, request.strategy):
            if span.key is not None:
                out.append(self.keymap[span.key])
                replacements += 1
            elif span.text == marker:
                stripped += 1
            else:
                out.append(span.text)
                passthrough += 1
        return ConversionResult("".join(out), replacements, passthrough, stripped)


def converter_for(keymap: SortedKeyMap) -> Converter:
    # SortedKeyMap is frozen; cache the converter in its instance dict.
    conv = keymap.__dict__.get("_converter")
    if conv is None:
        conv = Converter(keymap)
        keymap.__dict__["_converter"] = conv
    return conv


def transliterate(request: ConversionRequest, keymap: SortedKeyMap) -> ConversionResult:
    """Convert ``request.text`` with ``keymap`` under ``request.strategy``."""
    return converter_for(keymap).convert(request)


def convert_text(
    text: str,
    keymap: SortedKeyMap,
    strategy: MatchStrategy = MatchStrategy.PAPER,
    policy: DecodePolicy = DecodePolicy.STRICT,
    boundary_marker: str = DEFAULT_BOUNDARY_MARKER,
) -> str:
    """Shorthand for ``transliterate(...).output``."""
    request = ConversionRequest(text, strategy, policy, boundary_marker)
    return transliterate(request, keymap).output


def segment(
    text: str, keymap: SortedKeyMap, strategy: MatchStrategy = MatchStrategy.GREEDY
) -> list[Span]:
    return converter_for(keymap).segment(text, strategy)
