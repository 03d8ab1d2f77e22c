"""Transliterating Roman-Urdu text with the bundled lexicon and rule chart.

Run with ``python demos/01_transliterate.py``.
"""

import roman_urdu as ru

engine = ru.default_engine()

# Known words come straight from the lexicon; punctuation is mapped to
# its Urdu counterpart and whitespace is kept as-is.
print(engine("kya hai?"))

# Words typed without a space ("apko" for "ap ko") are split into
# lexicon words; anything else falls back to the grapheme rules.
out = engine.transliterate("apko salam, khan sahib.")
print(out.text)
for trace in out.traces:
    print(f"  {trace.input:>8} -> {trace.output:<8} {trace.route.value}")

# The rule chart on its own: longest pattern first, so "kh" beats "k".
rules = ru.default_rules()
print(ru.map_word(rules, "khan"), ru.map_word(rules, "shehzad"))
