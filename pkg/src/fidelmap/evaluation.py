"""Word-level accuracy arithmetic and encoding-size diagnostics."""

from __future__ import annotations

import enum
from collections.abc import Iterable
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal

from .errors import EmptySample, LengthMismatch, NotAsciiEncodable


@dataclass(frozen=True)
class AccuracyReport:
    total_words: int
    checked_words: int
    malformed_words: int
    accuracy_percent: float

    def __str__(self) -> str:
        return (
            f"words: {self.total_words}\n"
            f"checked: {self.checked_words}\n"
            f"malformed: {self.malformed_words}\n"
            f"accuracy: {self.accuracy_percent:.1f}%"
        )


@dataclass(frozen=True)
class WordDiff:
    position: int
    reference: str
    produced: str

    def to_tsv(self) -> str:
        return f"{self.position}\t{self.reference}\t{self.produced}"


def word_accuracy(checked: int, malformed: int, total: int | None = None) -> AccuracyReport:
    """Percentage of correct words among ``checked``, rounded half-up to 0.1.

    ``total`` defaults to ``checked``; pass it when only a prefix of the
    corpus was inspected by hand.

    >>> word_accuracy(1000, 23).accuracy_percent
    97.7
    """
    if total is None:
        total = checked
    if checked <= 0:
        raise EmptySample("no words were checked")
    if not 0 <= malformed <= checked <= total:
        raise ValueError(f"need 0 <= malformed <= checked <= total, got {malformed}, {checked}, {total}")
    exact = Decimal(100) * (checked - malformed) / Decimal(checked)
    percent = float(exact.quantize(Decimal("0.1"), rounding=ROUND_HALF_UP))
    return AccuracyReport(total, checked, malformed, percent)


def tokenize(text: str) -> list[str]:
    return text.split()


def compare_outputs(
    reference: Iterable[str] | str, produced: Iterable[str] | str
) -> tuple[int, int, list[WordDiff]]:
    """Compare two word streams position by position.

    Strings are split on whitespace first.  Returns ``(checked, malformed,
    diffs)``.
    """
    ref = tokenize(reference) if isinstance(reference, str) else list(reference)
    got = tokenize(produced) if isinstance(produced, str) else list(produced)
    if len(ref) != len(got):
        raise LengthMismatch(f"reference has {len(ref)} words, output has {len(got)}")
    diffs = [
        WordDiff(i, r, p)
        for i, (r, p) in enumerate(zip(ref, got))
        if r.encode("utf-8") != p.encode("utf-8")
    ]
    return len(ref), len(diffs), diffs


class Encoding(enum.Enum):
    ASCII = "ascii"
    UTF8 = "utf-8"


def encoded_length(text: str, encoding: Encoding = Encoding.UTF8) -> int:
    """Bytes needed by the raw encoded form of ``text`` (no object overhead)."""
    if encoding is Encoding.ASCII:
        try:
            return len(text.encode("ascii"))
        except UnicodeEncodeError as exc:
            raise NotAsciiEncodable(f"U+{ord(text[exc.start]):04X} at offset {exc.start}") from None
    return len(text.encode("utf-8"))
