import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

import roman_urdu as ru
from roman_urdu.cli import main

DATA = Path(str(ru.data_path("")))
FIXTURE = str(DATA / "fixture_lexicon.tsv")
CORPUS_LEX = str(DATA / "corpus_lexicon.tsv")
RULES = str(DATA / "rules.tsv")
GOLDEN = Path(__file__).parent / "golden"


def run(argv, stdin=b""):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, stdin=io.BytesIO(stdin), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_transliterate_stdin():
    code, out, err = run(["transliterate", "--lexicon", FIXTURE, "--rules", RULES], "kya hai?".encode())
    assert (code, out, err) == (0, "کیا ہے؟", "")


def test_transliterate_file(tmp_path):
    src = tmp_path / "in.txt"
    src.write_text("bahar jao.\nbahar phool hain.\n", encoding="utf-8")
    code, out, _ = run(["transliterate", "--lexicon", CORPUS_LEX, "--rules", RULES, str(src)])
    assert code == 0 and out == "باہر جاؤ۔\nبہار پھول ہیں۔\n"


def test_trace_goes_to_stderr():
    code, out, err = run(["transliterate", "--lexicon", FIXTURE, "--rules", RULES, "--trace"], b"bahar jao")
    assert code == 0 and out == "باہر جاؤ"
    recs = [json.loads(line) for line in err.splitlines()]
    assert [r["route"] for r in recs] == ["LexiconDisambiguated", "LexiconUnique"]
    assert set(recs[0]) >= {"input", "output", "route", "scores"}
    assert recs[0]["scores"][0] == {"urdu": "باہر", "frequency": 300, "matches": 1, "nearest_cue": 1}


def test_json_lines_format():
    code, out, err = run(
        ["transliterate", "--lexicon", FIXTURE, "--rules", RULES, "--format", "json-lines"], b"apko khan"
    )
    recs = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and err == ""
    assert [(r["input"], r["output"], r["route"]) for r in recs] == [
        ("apko", "آپ کو", "Segmented"),
        ("khan", "خان", "CharMapped"),
    ]
    assert recs[1]["fully_mapped"] is True


@pytest.mark.parametrize(
    "flags, text, expected",
    [
        (["--no-punct-map"], "kya hai?", "کیا ہے?"),
        (["--no-segmentation"], "apko", "اپکو"),
        (["--zero-score-policy", "first"], "bahar", "بہار"),
        ([], "bahar", "باہر"),
    ],
)
def test_engine_flags(flags, text, expected):
    code, out, _ = run(["transliterate", "--lexicon", FIXTURE, "--rules", RULES, *flags], text.encode())
    assert code == 0 and out == expected


def test_ngram_backend(tmp_path):
    corpus = tmp_path / "urdu.txt"
    corpus.write_text("موسم بہار\nموسم بہار\n", encoding="utf-8")
    argv = ["transliterate", "--lexicon", CORPUS_LEX, "--rules", RULES, "--backend", "ngram",
            "--ngram-corpus", str(corpus)]
    assert run(argv, "mausam bahar".encode())[:2] == (0, "موسم بہار")
    assert run(argv[:-2], b"bahar")[0] == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["transliterate", "--rules", RULES],
        ["transliterate", "--lexicon", FIXTURE],
        ["eval", "--rules", RULES],
        ["lexicon-stats"],
        [],
        ["frobnicate"],
        ["transliterate", "--lexicon", FIXTURE, "--rules", RULES, "--backend", "magic"],
    ],
)
def test_usage_errors(argv):
    code, out, err = run(argv)
    assert code == 1 and out == "" and err.startswith("error:")


def test_bad_lexicon_is_data_error(tmp_path):
    bad = tmp_path / "bad.tsv"
    bad.write_text("kya\tکیا\t500\t\nbahar\tبہار\n", encoding="utf-8")
    code, out, err = run(["transliterate", "--lexicon", str(bad), "--rules", RULES], b"kya")
    assert code == 2 and out == ""
    assert f"{bad}:2" in err


def test_missing_file_is_data_error(tmp_path):
    code, _, err = run(["transliterate", "--lexicon", str(tmp_path / "nope.tsv"), "--rules", RULES])
    assert code == 2 and "nope.tsv" in err


def test_invalid_utf8_input():
    code, _, err = run(["transliterate", "--lexicon", FIXTURE, "--rules", RULES], b"kya \xff")
    assert code == 2 and "UTF-8" in err


def test_eval_report():
    code, out, _ = run(["eval", "--lexicon", CORPUS_LEX, "--rules", RULES, str(DATA / "fixture_corpus.txt")])
    assert code == 0
    assert out.splitlines()[-1] == "accuracy=1.000000 ambiguous_accuracy=1.000000"


def test_eval_alignment_error(tmp_path):
    gold = tmp_path / "gold.txt"
    gold.write_text("kya hai\nکیا\n", encoding="utf-8")
    code, out, err = run(["eval", "--lexicon", FIXTURE, "--rules", RULES, str(gold)])
    assert code == 3 and out == ""
    assert "gold.txt:1" in err


def test_eval_empty_warns():
    code, out, err = run(["eval", "--lexicon", FIXTURE, "--rules", RULES], b"")
    assert code == 0 and "warning" in err
    assert out.splitlines()[-1] == "accuracy=1.000000 ambiguous_accuracy=1.000000"


def test_lexicon_stats():
    code, out, _ = run(["lexicon-stats", "--lexicon", FIXTURE])
    assert code == 0
    assert out == "entries=14\nkeys=13\nambiguous_keys=1\nmax_senses=2\n"


def test_subprocess_utf8_stdout():
    proc = subprocess.run(
        [sys.executable, "-m", "roman_urdu", "transliterate", "--lexicon", FIXTURE, "--rules", RULES],
        input="kya hai?".encode(), capture_output=True, env={"PYTHONIOENCODING": "ascii", "PATH": ""},
    )
    assert proc.returncode == 0 and proc.stdout.decode("utf-8") == "کیا ہے؟"


def test_eval_golden():
    code, out, _ = run(["eval", "--lexicon", CORPUS_LEX, "--rules", RULES, str(DATA / "fixture_corpus.txt")])
    assert out == (GOLDEN / "corpus_eval.txt").read_text(encoding="utf-8")
