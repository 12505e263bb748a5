import pytest
from hypothesis import given
from hypothesis import strategies as st

from fidelmap.engine import MatchStrategy, convert_text
from fidelmap.errors import InvalidBoundaryMarker
from fidelmap.keymap import SortedKeyMap
from fidelmap.preprocess import RiskKind, detect_risks, segment_clusters, strip_markers

M = "\x1f"
PAPER, GREEDY = MatchStrategy.PAPER, MatchStrategy.GREEDY
words = st.text(alphabet="abdeghiklmnostuxyzAEIOU0123'2 ", max_size=30)


def test_meaza_vowel_cluster(sera):
    (w,) = detect_risks("meaza", sera)
    assert (w.start, w.length, w.kind, w.snippet) == (1, 2, RiskKind.VOWEL_CLUSTER, "ea")


def test_clean_word_has_no_risks(sera):
    assert detect_risks("ngussE", sera) == []
    assert detect_risks("ngussee", sera) == []  # 'ee' is one spelled vowel here


def test_ke200xi_digit_collision(sera):
    (w,) = detect_risks("ke200xi", sera)
    assert (w.start, w.kind, w.snippet) == (1, RiskKind.DIGIT_COLLISION, "e2")


@pytest.mark.parametrize("word", ["meaza", "xi235", "ke200xi", "yeInfalot", "le2 se'at"])
def test_every_exemplar_is_flagged(sera, word):
    assert detect_risks(word, sera)


def test_digit_risk_needs_a_digit_key():
    km = SortedKeyMap.from_pairs([("le", "ለ"), ("e", "እ"), ("l", "ል")])
    assert detect_risks("le2", km) == []


def test_intended_digit_key_not_flagged(sera):
    # a lone 'e2' is meant as the key itself
    assert detect_risks("e2", sera) == []


@pytest.mark.parametrize(
    "raw, expected",
    [
        ("meaza", f"me{M}a{M}za"),
        ("abc", "abc"),
        ("le2 se'at", f"le{M}2 se'at"),
        ("yeInfalot", f"ye{M}I{M}nfalot"),
        ("zea", f"ze{M}a"),
        ("bea", "bea"),  # "be" outranks "ea", the sorted loop already splits it right
    ],
)
def test_segment_clusters(sera, raw, expected):
    assert segment_clusters(raw, sera) == expected


def test_preprocessed_le2_gives_correct_form(sera):
    assert convert_text(segment_clusters("le2 se'at", sera), sera, PAPER) == "ለ2 ሰዐት"


@pytest.mark.parametrize("word", ["meaza", "xi235", "ke200xi", "yeInfalot", "le2 se'at"])
def test_preprocessing_changes_paper_output(sera, word):
    assert convert_text(segment_clusters(word, sera), sera, PAPER) != convert_text(word, sera, PAPER)


def test_bad_marker(sera):
    with pytest.raises(InvalidBoundaryMarker):
        segment_clusters("meaza", sera, "-")


@given(words)
def test_segmentation_preserves_content(sera, text):
    assert strip_markers(segment_clusters(text, sera)) == text


@given(words)
def test_segmentation_idempotent(sera, text):
    once = segment_clusters(text, sera)
    assert segment_clusters(once, sera) == once
    assert detect_risks(once, sera) == []


@given(words)
def test_no_risks_means_no_change(sera, text):
    if not detect_risks(text, sera):
        assert segment_clusters(text, sera) == text


@given(words)
def test_greedy_output_unchanged_by_segmentation(sera, text):
    assert convert_text(segment_clusters(text, sera), sera, GREEDY) == convert_text(text, sera, GREEDY)


@given(words)
def test_warnings_are_ordered_and_in_bounds(sera, text):
    warnings = detect_risks(text, sera)
    starts = [w.start for w in warnings]
    assert starts == sorted(starts)
    for w in warnings:
        assert 0 <= w.start and w.start + w.length <= len(text)
        assert text[w.start : w.start + w.length] == w.snippet
