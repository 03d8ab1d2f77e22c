"""Tokenization, sentence splitting and output reconstruction.

Tokens partition the input exactly, so any text can be rebuilt from its
tokens with a subset of them replaced.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import UsageError

DEFAULT_TERMINATORS = frozenset({".", "!", "?", "۔", "؟"})


class TokenKind(str, enum.Enum):
    WORD = "Word"
    PUNCT = "Punct"
    WHITESPACE = "Whitespace"
    TERMINATOR = "Terminator"


@dataclass(frozen=True)
class Token:
    text: str
    kind: TokenKind
    start: int  # code point offset into the input
    end: int

    @property
    def is_word(self) -> bool:
        return self.kind is TokenKind.WORD


@dataclass(frozen=True)
class Sentence:
    tokens: tuple[Token, ...]
    index: int
    # index of tokens[0] in the document token list
    offset: int = 0

    def words(self) -> list[tuple[int, Token]]:
        """(local position, token) for every Word token, in order."""
        return [(i, t) for i, t in enumerate(self.tokens) if t.is_word]

    @property
    def text(self) -> str:
        return "".join(t.text for t in self.tokens)


def _char_class(ch: str, terminators: frozenset[str]) -> TokenKind:
    if ch.isalpha():
        return TokenKind.WORD
    if ch.isspace():
        return TokenKind.WHITESPACE
    if ch in terminators:
        return TokenKind.TERMINATOR
    return TokenKind.PUNCT


def tokenize(text: str | bytes, terminators: Iterable[str] = DEFAULT_TERMINATORS) -> list[Token]:
    """Split ``text`` into Word, Whitespace, Terminator and Punct tokens.

    Words and whitespace are maximal runs; terminators and other
    punctuation (digits and apostrophes included) are one character each.
    Bytes are decoded as strict UTF-8, and a ``str`` holding lone
    surrogates is rejected the same way.
    """
    if isinstance(text, (bytes, bytearray)):
        text = bytes(text).decode("utf-8")
    else:
        text.encode("utf-8")
    terms = frozenset(terminators)
    if any(len(t) != 1 for t in terms):
        raise UsageError("terminators must be single characters")

    tokens: list[Token] = []
    i, n = 0, len(text)
    while i < n:
        kind = _char_class(text[i], terms)
        j = i + 1
        if kind in (TokenKind.WORD, TokenKind.WHITESPACE):
            while j < n and _char_class(text[j], terms) is kind:
                j += 1
        tokens.append(Token(text[i:j], kind, i, j))
        i = j
    return tokens


def split_sentences(tokens: Sequence[Token]) -> list[Sentence]:
    """Group tokens into sentences, each closed by at most one terminator.

    Whitespace right after a terminator stays with the sentence it closes,
    so a terminator is always the last non-whitespace token of its
    sentence. Input consisting only of whitespace yields no sentences.
    """
    sentences: list[Sentence] = []
    current: list[Token] = []
    start = 0
    closed = False

    def flush() -> None:
        nonlocal current, start
        if any(t.kind is not TokenKind.WHITESPACE for t in current):
            sentences.append(Sentence(tuple(current), len(sentences), start))
        start += len(current)
        current = []

    for tok in tokens:
        if closed and tok.kind is not TokenKind.WHITESPACE:
            flush()
            closed = False
        current.append(tok)
        if tok.kind is TokenKind.TERMINATOR:
            closed = True
    flush()
    return sentences


def reconstruct(tokens: Sequence[Token], replacements: Mapping[int, str] | None = None) -> str:
    """Concatenate token texts, substituting ``replacements[i]`` for token i."""
    replacements = replacements or {}
    for idx in replacements:
        if not 0 <= idx < len(tokens):
            raise UsageError(f"replacement index {idx} out of range for {len(tokens)} tokens")
    return "".join(replacements.get(i, t.text) for i, t in enumerate(tokens))
