"""
Building and ordering a key map
===============================

A key map pairs ASCII keys with Ethiopic letters. Conversion walks the map
longest key first; keys of equal length go in ascending byte order.
"""

from fidelmap import KeyMapEntry, SortedKeyMap, add_entry, load_bundled, parse_dictionary, serialize

# the 'h' series, deliberately shuffled
h_series = parse_dictionary(
    "he\tሀ\nhu\tሁ\nhi\tሂ\nha\tሃ\nhE\tሄ\nhee\tሄ\nh\tህ\nho\tሆ\n"
)
print(h_series.keys)  # ['hee', 'hE', 'ha', 'he', 'hi', 'ho', 'hu', 'h'] -- 'E' (0x45) sorts before 'a'

# maps are immutable; add_entry returns a new one with the key in place
small = SortedKeyMap.from_pairs([("n", "ን")])
small = add_entry(small, KeyMapEntry("gu", "ጉ"))
small = add_entry(small, KeyMapEntry("ssE", "ሥ"))
print(small.keys)  # ['ssE', 'gu', 'n']

# the file format is just key<TAB>value lines
print(serialize(small), end="")

# the bundled SERA map
sera = load_bundled()
print(len(sera), "entries")
print([e.key for e in sera if e.value == "ኋ"])  # every spelling of the hWa letter
