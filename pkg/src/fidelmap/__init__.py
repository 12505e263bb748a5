"""Convert ASCII-transliterated Amharic (SERA and its variants) to Ethiopic script."""

from .engine import (
    DEFAULT_BOUNDARY_MARKER,
    ConversionRequest,
    ConversionResult,
    DecodePolicy,
    MatchStrategy,
    Span,
    convert_text,
    decode_input,
    encode_output,
    segment,
    transliterate,
)
from .errors import FidelMapError
from .evaluation import AccuracyReport, Encoding, compare_outputs, encoded_length, word_accuracy
from .keymap import (
    ALPHABET,
    KeyMapEntry,
    SortedKeyMap,
    add_entry,
    load_bundled,
    load_dictionary,
    parse_dictionary,
    serialize,
    sort_entries,
)
from .preprocess import MalformationWarning, RiskKind, detect_risks, segment_clusters, strip_markers

__version__ = "0.1.0"
