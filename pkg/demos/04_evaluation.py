"""Word accuracy on the 20-sentence gold corpus, overall and for ambiguous words."""

import sys

import roman_urdu as ru
from roman_urdu.evaluation import format_report

gold = ru.read_gold(ru.data_path("fixture_corpus.txt"))

for policy in ("frequency", "first"):
    report = ru.evaluate_engine(ru.default_engine(zero_score_policy=policy), gold)
    print(f"zero-score policy {policy!r}: {report.summary_line()}")

# Full per-case table for the default engine.
format_report(ru.evaluate_engine(ru.default_engine(), gold), sys.stdout)
