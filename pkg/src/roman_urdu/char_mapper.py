"""Greedy longest-match grapheme rules for words missing from the lexicon."""

from __future__ import annotations

import io
import os
from dataclasses import dataclass, field
from typing import BinaryIO, Iterable

from .errors import DuplicateRuleError, RuleParseError

MAX_PATTERN_LEN = 3


@dataclass(frozen=True)
class MappingRule:
    pattern: str
    output: str
    load_order: int = 0


@dataclass
class RuleTable:
    rules: dict[str, MappingRule] = field(default_factory=dict)

    @property
    def max_pattern_len(self) -> int:
        return max((len(p) for p in self.rules), default=0)

    def __len__(self) -> int:
        return len(self.rules)

    def __contains__(self, pattern: str) -> bool:
        return pattern in self.rules

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[str, str]]) -> "RuleTable":
        table = cls()
        for pattern, output in pairs:
            _check_rule(pattern, output)
            if pattern in table.rules:
                raise DuplicateRuleError(f"duplicate rule for {pattern!r}")
            table.rules[pattern] = MappingRule(pattern, output, len(table.rules))
        return table

    def without(self, *patterns: str) -> "RuleTable":
        """Copy of the table with the given patterns removed."""
        return RuleTable.from_pairs((r.pattern, r.output) for r in self.rules.values() if r.pattern not in patterns)


def _check_rule(pattern: str, output: str, name=None, lineno=None) -> None:
    if not 1 <= len(pattern) <= MAX_PATTERN_LEN:
        raise RuleParseError(f"pattern must be 1-{MAX_PATTERN_LEN} letters, got {pattern!r}", name, lineno)
    if not (pattern.isalpha() and pattern.isascii() and pattern.islower()):
        raise RuleParseError(f"pattern must be lowercase Latin letters, got {pattern!r}", name, lineno)
    if not output:
        raise RuleParseError(f"empty output for {pattern!r}", name, lineno)


def load_rules(source: BinaryIO | Iterable[bytes], name: str = "<rules>") -> RuleTable:
    """Parse ``pattern<TAB>output`` lines; ``#`` lines are comments."""
    table = RuleTable()
    first_seen: dict[str, int] = {}
    for lineno, raw in enumerate(source, start=1):
        try:
            line = raw.decode("utf-8") if isinstance(raw, bytes) else raw
        except UnicodeDecodeError as exc:
            raise RuleParseError(f"invalid UTF-8: {exc.reason}", name, lineno) from exc
        line = line.rstrip("\r\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) != 2:
            raise RuleParseError(f"expected 2 tab-separated columns, got {len(cols)}", name, lineno)
        pattern, output = cols[0].strip(), cols[1].strip()
        _check_rule(pattern, output, name, lineno)
        if pattern in first_seen:
            raise DuplicateRuleError(
                f"duplicate rule for {pattern!r} (first on line {first_seen[pattern]})", name, lineno
            )
        first_seen[pattern] = lineno
        table.rules[pattern] = MappingRule(pattern, output, len(table.rules))
    return table


def read_rules(path: str | os.PathLike) -> RuleTable:
    with open(path, "rb") as fh:
        return load_rules(fh, name=os.fspath(path))


def loads_rules(text: str, name: str = "<string>") -> RuleTable:
    return load_rules(io.BytesIO(text.encode("utf-8")), name=name)


def map_word_segments(table: RuleTable, word: str) -> list[tuple[str, str | None]]:
    """Greedy scan of ``word``: (consumed input, rule output or None if copied)."""
    out = []
    longest = table.max_pattern_len
    i = 0
    while i < len(word):
        for size in range(min(longest, len(word) - i), 0, -1):
            rule = table.rules.get(word[i:i + size])
            if rule is not None:
                out.append((rule.pattern, rule.output))
                i += size
                break
        else:
            out.append((word[i], None))
            i += 1
    return out


def map_word(table: RuleTable, word: str) -> tuple[str, bool]:
    """Convert ``word`` with the rule table.

    Characters no rule covers are copied through unchanged and make the
    second element False.
    """
    pieces = map_word_segments(table, word)
    urdu = "".join(src if out is None else out for src, out in pieces)
    return urdu, all(out is not None for _, out in pieces)
