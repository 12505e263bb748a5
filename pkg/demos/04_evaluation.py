"""
Scoring output and measuring size
=================================

Word accuracy is computed from counts, rounded half-up to one decimal.
"""

from fidelmap import Encoding, compare_outputs, encoded_length, word_accuracy

# test1 was checked on its first thousand words only
print(word_accuracy(1000, 23, total=32480))
print(word_accuracy(123, 2).accuracy_percent)    # 98.4
print(word_accuracy(1277, 5).accuracy_percent)   # 99.6, computed from the counts

checked, malformed, diffs = compare_outputs("ለ2 ሰዐት", "ልዕ ሰዐት")
print(checked, malformed, [d.to_tsv() for d in diffs])

# raw encoded sizes of the same word, no interpreter overhead
for spelling in ["ngu'sE", "ngussee", "ngus2ee"]:
    print(spelling, encoded_length(spelling, Encoding.ASCII))
print("ንጉሥ", encoded_length("ንጉሥ", Encoding.UTF8))
