import io

import pytest
from hypothesis import given
from hypothesis import strategies as st

from roman_urdu import DuplicateRuleError, RuleParseError, RuleTable, load_rules, loads_rules, map_word
from roman_urdu.char_mapper import map_word_segments


def test_empty_stream():
    assert len(load_rules(io.BytesIO(b""))) == 0


def test_fixture_chart(rules):
    assert rules.max_pattern_len == 2
    for dg in ["kh", "gh", "ch", "sh", "th", "ph", "aa", "ee", "oo"]:
        assert dg in rules
    for ch in "abcdefghijklmnopqrstuvwxyz":
        assert ch in rules


def test_duplicate_rule():
    with pytest.raises(DuplicateRuleError) as exc:
        loads_rules("kh\tخ\nkh\tک\n")
    assert exc.value.line == 2


@pytest.mark.parametrize("line", ["kh", "kh\tخ\textra", "khhh\tخ", "K\tک", "k\t", "\tک"])
def test_malformed_rule(line):
    with pytest.raises(RuleParseError):
        loads_rules("a\tا\n" + line + "\n")


def test_map_examples(rules):
    assert map_word(rules, "") == ("", True)
    assert map_word(rules, "khan") == ("خان", True)
    assert map_word(rules.without("x"), "x7") == ("x7", False)


def test_longest_match_beats_prefix(rules):
    assert map_word(rules, "kh") == ("خ", True)
    assert map_word(rules, "khh") == ("خہ", True)


def test_trigraph_preferred():
    table = RuleTable.from_pairs([("s", "س"), ("sh", "ش"), ("shh", "X"), ("h", "ہ")])
    assert map_word(table, "shhh") == ("Xہ", True)
    assert map_word(table, "shsh") == ("شش", True)


def test_rule_file_order_irrelevant():
    pairs = [("k", "ک"), ("kh", "خ"), ("a", "ا"), ("n", "ن")]
    a = RuleTable.from_pairs(pairs)
    b = RuleTable.from_pairs(reversed(pairs))
    assert map_word(a, "khan") == map_word(b, "khan")


@given(st.text(alphabet="abcdefghijklmnopqrstuvwxyz1'", max_size=20))
def test_consumption(word):
    table = loads_rules("kh\tخ\nsh\tش\nshh\tX\na\tا\nk\tک\n")
    pieces = map_word_segments(table, word)
    assert "".join(src for src, _ in pieces) == word
    assert sum(len(src) for src, _ in pieces) == len(word)
    urdu, full = map_word(table, word)
    assert full == all(out is not None for _, out in pieces)
