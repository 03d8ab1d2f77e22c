"""How "bahar" (spring / outside) is resolved from sentence context.

Each sense of an ambiguous key carries a set of cue words. The sense with
most cues present elsewhere in the sentence wins; ties go to the sense
whose cue is nearest; with no cues at all the most frequent sense is used.
"""

import roman_urdu as ru

lex = ru.fixture_lexicon()
for sense in ru.lookup(lex, "bahar"):
    print(sense.urdu_form, sense.frequency, sorted(sense.characteristics))

for text in ["bahar phool khilte hain", "bahar jao", "bahar acha tha"]:
    sentence = ru.split_sentences(ru.tokenize(text))[0]
    result = ru.choose(ru.lookup(lex, "bahar"), sentence, 0)
    scores = ", ".join(f"{s.entry.urdu_form}:{s.match_count}" for s in result.scores)
    print(f"{text!r:28} -> {result.chosen.urdu_form} ({result.method.value}; {scores})")

# Two occurrences in one sentence are resolved separately.
engine = ru.default_engine()
print(engine("bahar jao aur bahar phool dekho."))

# Under the "first" policy a cue-free word takes the sense listed first
# in the lexicon file instead of the most frequent one.
print(ru.default_engine(zero_score_policy="first")("bahar acha tha."))
