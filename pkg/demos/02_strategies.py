"""
Sorted global replacement versus greedy longest match
=====================================================

The PAPER strategy applies each key to the whole text in sorted order.
The GREEDY strategy scans left to right taking the longest key at each
position. They agree on most words and part ways where keys overlap.
"""

from fidelmap import MatchStrategy, convert_text, load_bundled, segment

sera = load_bundled()

for word in ["ngussE", "ngu'sE", "ngus2ee", "selam"]:
    print(word, convert_text(word, sera), convert_text(word, sera, MatchStrategy.GREEDY))

# 'e2' is a key (a pharyngeal vowel) and sorts before 'le', so it fires first
print(convert_text("le2 se'at", sera))                         # ልዕ ሰዐት
print(convert_text("le2 se'at", sera, MatchStrategy.GREEDY))   # ለ2 ሰዐት

# the segmentations make the difference visible
for strategy in MatchStrategy:
    spans = segment("meaza", sera, strategy)
    print(strategy.value, "|".join(s.text for s in spans))
