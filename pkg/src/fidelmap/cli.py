"""Batch command line front end.

    fidelmap INPUT OUTPUT [--dict PATH] [--strategy paper|greedy] [--preprocess]
                          [--passthrough-non-ascii] [--reference PATH] [--report text|tsv]
    fidelmap --info [--dict PATH]

Exit status: 0 on success, 1 on conversion or I/O errors, 2 on bad arguments.
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import TextIO

from .engine import (
    DEFAULT_BOUNDARY_MARKER,
    ConversionRequest,
    DecodePolicy,
    MatchStrategy,
    converter_for,
    decode_input,
    encode_output,
)
from .errors import DecodeError, FidelMapError
from .evaluation import compare_outputs, word_accuracy
from .keymap import ETHIOPIC_FIRST, ETHIOPIC_LAST, SortedKeyMap, load_dictionary
from .preprocess import segment_clusters


@dataclass
class CliConfig:
    input_path: Path
    output_path: Path
    dictionary_path: Path | None = None
    strategy: MatchStrategy = MatchStrategy.PAPER
    preprocess: bool = False
    policy: DecodePolicy = DecodePolicy.STRICT
    reference_path: Path | None = None
    report_format: str = "text"


class ConversionFailed(FidelMapError):
    pass


def convert_stream(src, dst, keymap: SortedKeyMap, config: CliConfig, name: str = "<input>") -> int:
    """Convert binary line stream ``src`` into ``dst``; return the line count."""
    converter = converter_for(keymap)
    count = 0
    for lineno, raw in enumerate(src, start=1):
        try:
            text = decode_input(raw, config.policy)
        except DecodeError as exc:
            raise ConversionFailed(f"{name}:{lineno}: {exc}") from exc
        if config.preprocess:
            text = segment_clusters(text, keymap, DEFAULT_BOUNDARY_MARKER)
        result = converter.convert(ConversionRequest(text, config.strategy, config.policy))
        dst.write(encode_output(result.output))
        count += 1
    return count


def run(config: CliConfig, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        keymap = load_dictionary(config.dictionary_path)
    except (OSError, FidelMapError) as exc:
        print(f"fidelmap: dictionary {config.dictionary_path or '(bundled)'}: {exc}", file=err)
        return 1

    output_path = Path(config.output_path)
    tmp_name = None
    try:
        with open(config.input_path, "rb") as src:
            fd, tmp_name = tempfile.mkstemp(
                prefix=f".{output_path.name}.", dir=output_path.parent
            )
            with os.fdopen(fd, "wb") as dst:
                convert_stream(src, dst, keymap, config, str(config.input_path))
        os.replace(tmp_name, output_path)
        tmp_name = None
    except (OSError, FidelMapError) as exc:
        print(f"fidelmap: {exc}", file=err)
        return 1
    finally:
        if tmp_name is not None:
            os.unlink(tmp_name)

    if config.reference_path is not None:
        try:
            reference = Path(config.reference_path).read_text(encoding="utf-8")
            produced = output_path.read_text(encoding="utf-8")
            checked, malformed, diffs = compare_outputs(reference, produced)
            report = word_accuracy(checked, malformed)
        except (OSError, UnicodeDecodeError, FidelMapError) as exc:
            print(f"fidelmap: reference {config.reference_path}: {exc}", file=err)
            return 1
        if config.report_format == "tsv":
            print(f"# checked\t{report.checked_words}", file=out)
            print(f"# malformed\t{report.malformed_words}", file=out)
            print(f"# accuracy\t{report.accuracy_percent:.1f}", file=out)
            for d in diffs:
                print(d.to_tsv(), file=out)
        else:
            print(report, file=out)
            for d in diffs:
                print(f"  word {d.position}: expected {d.reference!r}, got {d.produced!r}", file=out)
    return 0


def info(dictionary_path: Path | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        keymap = load_dictionary(dictionary_path)
    except (OSError, FidelMapError) as exc:
        print(f"fidelmap: dictionary {dictionary_path or '(bundled)'}: {exc}", file=err)
        return 1
    block = ETHIOPIC_LAST - ETHIOPIC_FIRST + 1
    lengths = Counter(len(e.key) for e in keymap)
    covered = {ch for e in keymap for ch in e.value}
    print(f"dictionary: {dictionary_path or '(bundled SERA map)'}", file=out)
    print(f"entries: {len(keymap)}", file=out)
    print("key lengths:", file=out)
    for length in sorted(lengths):
        print(f"  {length}: {lengths[length]}", file=out)
    print(
        f"ethiopic coverage: {len(covered)} of {block} code points "
        f"(U+{ETHIOPIC_FIRST:04X}..U+{ETHIOPIC_LAST:04X})",
        file=out,
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fidelmap", description="Convert ASCII-transliterated Amharic text to Ethiopic script."
    )
    parser.add_argument("input", nargs="?", type=Path, help="transliterated input file")
    parser.add_argument("output", nargs="?", type=Path, help="UTF-8 output file")
    parser.add_argument("--dict", dest="dictionary", type=Path, help="key map file (default: bundled SERA map)")
    parser.add_argument("--strategy", choices=[s.value for s in MatchStrategy], default="paper")
    parser.add_argument("--preprocess", action="store_true", help="split risky vowel/digit clusters first")
    parser.add_argument(
        "--passthrough-non-ascii",
        action="store_true",
        help="accept UTF-8 input and copy non-ASCII characters through",
    )
    parser.add_argument("--reference", type=Path, help="correct Ethiopic text to score the output against")
    parser.add_argument("--report", choices=["text", "tsv"], default="text")
    parser.add_argument("--info", action="store_true", help="summarise the dictionary and exit")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.info:
        return info(args.dictionary)
    if args.input is None or args.output is None:
        parser.error("INPUT and OUTPUT are required unless --info is given")
    config = CliConfig(
        input_path=args.input,
        output_path=args.output,
        dictionary_path=args.dictionary,
        strategy=MatchStrategy(args.strategy),
        preprocess=args.preprocess,
        policy=DecodePolicy.PASSTHROUGH if args.passthrough_non_ascii else DecodePolicy.STRICT,
        reference_path=args.reference,
        report_format=args.report,
    )
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
