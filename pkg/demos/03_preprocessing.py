"""
Repairing inputs before conversion
==================================

detect_risks finds vowel pairs and vowel+digit pairs that a straddling key
would steal under sorted replacement. segment_clusters inserts an invisible
boundary marker (U+001F by default) so the intended syllables match.
"""

from fidelmap import convert_text, detect_risks, load_bundled, segment_clusters, strip_markers

sera = load_bundled()

for word in ["meaza", "xi235", "ke200xi", "yeInfalot", "le2 se'at", "ngussE"]:
    risks = detect_risks(word, sera)
    fixed = segment_clusters(word, sera)
    print(f"{word:10} {[(w.start, w.snippet, w.kind.value) for w in risks]}")
    print(f"{'':10} {fixed.replace(chr(0x1f), '|'):14} {convert_text(word, sera)} -> {convert_text(fixed, sera)}")
    assert strip_markers(fixed) == word
