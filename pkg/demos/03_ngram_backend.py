"""The optional n-gram backend: pick the sense the Urdu language model prefers.

The model is trained on Urdu text (here: the gold side of the bundled
corpus) and scores each candidate given the Urdu words already chosen
to its left.
"""

import roman_urdu as ru

gold = ru.read_gold(ru.data_path("fixture_corpus.txt"))
model = ru.train_ngram([list(c.gold_urdu_words) for c in gold], 2)
print(f"order={model.order} vocabulary={len(model.vocabulary)}")

ctx = ("کا",)
for word in ["موسم", "بہار", "گھر"]:
    print(f"P({word} | {ctx[0]}) = {ru.ngram_probability(model, ctx, word):.4f}")

engine = ru.Engine(
    ru.corpus_lexicon(),
    ru.default_rules(),
    ru.EngineConfig(disambiguation_backend="ngram"),
    model,
)
out = engine.transliterate("ghar se bahar jao. phool bahar mein khilte hain.")
print(out.text)
for t in out.traces:
    if t.route is ru.Route.LEXICON_DISAMBIGUATED:
        probs = ", ".join(f"{s.entry.urdu_form}={s.probability:.3f}" for s in t.detail.scores)
        print(f"  {t.input}: {probs}")
