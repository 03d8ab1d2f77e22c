"""Roman key -> Urdu sense multimap, loaded from a TSV file.

File format, UTF-8, one sense per line, ``#`` lines ignored::

    roman_key<TAB>urdu_form<TAB>frequency<TAB>cue,cue,...

The fourth column may be empty (or left off entirely).
"""

from __future__ import annotations

import io
import os
from dataclasses import dataclass, field
from typing import BinaryIO, Iterable, Iterator

from .errors import DuplicateEntryError, LexiconParseError

DEFAULT_MAX_SEGMENTS = 3


def normalize_key(roman: str) -> str:
    """Lowercase ``roman`` and strip non-letters from both ends."""
    s = roman.lower()
    i, j = 0, len(s)
    while i < j and not s[i].isalpha():
        i += 1
    while j > i and not s[j - 1].isalpha():
        j -= 1
    return s[i:j]


@dataclass(frozen=True)
class LexiconEntry:
    roman_key: str
    urdu_form: str
    frequency: int
    characteristics: frozenset[str] = frozenset()
    load_order: int = 0

    @property
    def rank_key(self) -> tuple[int, int]:
        """Sort key for the per-key sense list: frequency desc, then file order."""
        return (-self.frequency, self.load_order)


class _TrieNode:
    __slots__ = ("children", "terminal")

    def __init__(self):
        self.children: dict[str, _TrieNode] = {}
        self.terminal = False


class KeyTrie:
    """Character trie over the lexicon keys, used to enumerate prefixes."""

    def __init__(self, keys: Iterable[str] = ()):
        self.root = _TrieNode()
        for k in keys:
            self.insert(k)

    def insert(self, key: str) -> None:
        node = self.root
        for ch in key:
            node = node.children.setdefault(ch, _TrieNode())
        node.terminal = True

    def prefix_ends(self, text: str, start: int = 0) -> list[int]:
        """End offsets ``e`` such that ``text[start:e]`` is a key, ascending."""
        ends = []
        node = self.root
        for pos in range(start, len(text)):
            node = node.children.get(text[pos])
            if node is None:
                break
            if node.terminal:
                ends.append(pos + 1)
        return ends


@dataclass
class Lexicon:
    entries: dict[str, list[LexiconEntry]] = field(default_factory=dict)
    key_index: KeyTrie = field(default_factory=KeyTrie)

    def __len__(self) -> int:
        return sum(len(v) for v in self.entries.values())

    def __contains__(self, key: str) -> bool:
        return key in self.entries

    def __iter__(self) -> Iterator[LexiconEntry]:
        for senses in self.entries.values():
            yield from senses

    def keys(self):
        return self.entries.keys()

    @classmethod
    def from_entries(cls, entries: Iterable[LexiconEntry]) -> "Lexicon":
        lex = cls()
        for e in entries:
            senses = lex.entries.setdefault(e.roman_key, [])
            if any(s.urdu_form == e.urdu_form for s in senses):
                raise DuplicateEntryError(f"duplicate entry {e.roman_key!r} -> {e.urdu_form!r}")
            senses.append(e)
        for k, senses in lex.entries.items():
            senses.sort(key=lambda s: s.rank_key)
            lex.key_index.insert(k)
        return lex


def _parse_cues(field_text: str) -> frozenset[str]:
    cues = (normalize_key(c) for c in field_text.split(","))
    return frozenset(c for c in cues if c)


def load_lexicon(source: BinaryIO | Iterable[bytes], name: str = "<lexicon>") -> Lexicon:
    """Parse a lexicon TSV stream.

    Raises LexiconParseError (with the line number) on a wrong column
    count, a bad frequency, an empty key or form, or a sense listed as
    its own cue; DuplicateEntryError when a (key, form) pair repeats.
    """
    entries: list[LexiconEntry] = []
    seen: dict[tuple[str, str], int] = {}
    for lineno, raw in enumerate(source, start=1):
        try:
            line = raw.decode("utf-8") if isinstance(raw, bytes) else raw
        except UnicodeDecodeError as exc:
            raise LexiconParseError(f"invalid UTF-8: {exc.reason}", name, lineno) from exc
        line = line.rstrip("\r\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) not in (3, 4):
            raise LexiconParseError(f"expected 4 tab-separated columns, got {len(cols)}", name, lineno)
        key = normalize_key(cols[0])
        form = cols[1].strip()
        if not key:
            raise LexiconParseError(f"empty roman key in {cols[0]!r}", name, lineno)
        if not form:
            raise LexiconParseError("empty urdu form", name, lineno)
        freq_text = cols[2].strip()
        if not freq_text.isdigit() or not freq_text.isascii():
            raise LexiconParseError(f"frequency must be a non-negative integer, got {freq_text!r}", name, lineno)
        cues = _parse_cues(cols[3]) if len(cols) == 4 else frozenset()
        if key in cues:
            raise LexiconParseError(f"{key!r} lists itself as a characteristic", name, lineno)
        if (key, form) in seen:
            raise DuplicateEntryError(
                f"duplicate entry {key!r} -> {form!r} (first on line {seen[key, form]})", name, lineno
            )
        seen[key, form] = lineno
        entries.append(LexiconEntry(key, form, int(freq_text), cues, len(entries)))
    return Lexicon.from_entries(entries)


def read_lexicon(path: str | os.PathLike) -> Lexicon:
    with open(path, "rb") as fh:
        return load_lexicon(fh, name=os.fspath(path))


def loads_lexicon(text: str, name: str = "<string>") -> Lexicon:
    return load_lexicon(io.BytesIO(text.encode("utf-8")), name=name)


def lookup(lex: Lexicon, key: str) -> list[LexiconEntry]:
    return list(lex.entries.get(key, ()))


def is_ambiguous(lex: Lexicon, key: str) -> bool:
    return len(lex.entries.get(key, ())) >= 2


def segment_compound(lex: Lexicon, token: str, max_segments: int = DEFAULT_MAX_SEGMENTS) -> list[str] | None:
    """Split an unknown token into 2..max_segments lexicon keys.

    Returns the split with the fewest segments; among those, the one
    whose segment lengths are lexicographically largest (leftmost-longest).
    None when no such split exists.
    """
    n = len(token)
    if n < 2 or max_segments < 2:
        return None
    # best[i] = best segmentation of token[i:] as a tuple of end offsets,
    # preferring fewer segments and then longer leading segments.
    best: list[tuple[int, ...] | None] = [None] * (n + 1)
    best[n] = ()
    for i in range(n - 1, -1, -1):
        chosen = None
        for end in reversed(lex.key_index.prefix_ends(token, i)):
            rest = best[end]
            if rest is None or (i == 0 and end == n):
                continue
            cand = (end,) + rest
            if chosen is None or len(cand) < len(chosen):
                chosen = cand
        best[i] = chosen
    ends = best[0]
    if ends is None or not 2 <= len(ends) <= max_segments:
        return None
    out, prev = [], 0
    for e in ends:
        out.append(token[prev:e])
        prev = e
    return out
