"""Sentence-by-sentence transliteration of Roman-Urdu text.

Each Word token goes through, in order: lexicon lookup (with
disambiguation when a key has several senses), compound splitting for
unknown tokens, and finally the grapheme rule table. Everything that is
not a word is copied through, except punctuation covered by the
punctuation map.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Mapping, Sequence, Union

from . import disambiguator as dis
from .char_mapper import RuleTable, map_word
from .disambiguator import DisambiguationResult, NgramModel
from .errors import UsageError
from .lexicon import Lexicon, lookup, normalize_key, segment_compound
from .segmentation import DEFAULT_TERMINATORS, Sentence, TokenKind, reconstruct, split_sentences, tokenize

DEFAULT_PUNCTUATION_MAP = {".": "۔", "?": "؟", ",": "،"}
BACKENDS = ("context", "ngram")


class Route(str, enum.Enum):
    LEXICON_UNIQUE = "LexiconUnique"
    LEXICON_DISAMBIGUATED = "LexiconDisambiguated"
    SEGMENTED = "Segmented"
    CHAR_MAPPED = "CharMapped"
    PASS_THROUGH = "PassThrough"


@dataclass(frozen=True)
class EngineConfig:
    zero_score_policy: str = "frequency"
    disambiguation_backend: str = "context"
    map_punctuation: bool = True
    segmentation_enabled: bool = True
    max_segments: int = 3
    punctuation_map: Mapping[str, str] = field(default_factory=lambda: dict(DEFAULT_PUNCTUATION_MAP))
    terminators: frozenset[str] = DEFAULT_TERMINATORS

    def __post_init__(self):
        if self.zero_score_policy not in dis.ZERO_SCORE_POLICIES:
            raise UsageError(f"zero_score_policy must be one of {dis.ZERO_SCORE_POLICIES}")
        if self.disambiguation_backend not in BACKENDS:
            raise UsageError(f"disambiguation_backend must be one of {BACKENDS}")
        if self.max_segments < 2:
            raise UsageError("max_segments must be >= 2")


@dataclass(frozen=True)
class TokenTrace:
    input: str
    output: str
    route: Route
    # DisambiguationResult, sub-traces of a split compound, or the
    # fully_mapped flag of a rule-table conversion
    detail: Union[DisambiguationResult, tuple["TokenTrace", ...], bool, None] = None
    token_index: int | None = None
    sentence_index: int | None = None

    @property
    def units(self) -> list[str]:
        """Output words as scored by the evaluator (compounds count per part)."""
        if self.route is Route.SEGMENTED:
            return [t.output for t in self.detail]
        return [self.output]


@dataclass(frozen=True)
class TransliterationOutput:
    text: str
    traces: tuple[TokenTrace, ...]


def _disambiguate(candidates, sentence, position, config, model, left_context) -> DisambiguationResult:
    if len(candidates) == 1 or config.disambiguation_backend == "context":
        return dis.choose(candidates, sentence, position, config.zero_score_policy)
    if model is None:
        raise UsageError("the ngram backend needs a trained NgramModel")
    return dis.choose_ngram(model, candidates, left_context)


def _lexicon_trace(text, candidates, sentence, position, config, model, left_context) -> TokenTrace:
    if len(candidates) == 1:
        result = dis.choose(candidates, sentence, position)
        return TokenTrace(text, candidates[0].urdu_form, Route.LEXICON_UNIQUE, result)
    result = _disambiguate(candidates, sentence, position, config, model, left_context)
    return TokenTrace(text, result.chosen.urdu_form, Route.LEXICON_DISAMBIGUATED, result)


def transliterate_word(
    lex: Lexicon,
    table: RuleTable,
    config: EngineConfig,
    sentence: Sentence,
    position: int,
    *,
    model: NgramModel | None = None,
    left_context: Sequence[str] = (),
) -> TokenTrace:
    """Transliterate the Word token at ``sentence.tokens[position]``.

    ``model`` and ``left_context`` (Urdu words already chosen earlier in
    the sentence) are only consulted by the n-gram backend.
    """
    if not 0 <= position < len(sentence.tokens) or not sentence.tokens[position].is_word:
        raise UsageError(f"position {position} is not a Word token")
    text = sentence.tokens[position].text
    key = normalize_key(text)
    where = dict(token_index=sentence.offset + position, sentence_index=sentence.index)

    candidates = lookup(lex, key)
    if candidates:
        trace = _lexicon_trace(text, candidates, sentence, position, config, model, left_context)
        return TokenTrace(trace.input, trace.output, trace.route, trace.detail, **where)

    if config.segmentation_enabled:
        parts = segment_compound(lex, key, config.max_segments)
        if parts is not None:
            subs: list[TokenTrace] = []
            history = list(left_context)
            for part in parts:
                sub = _lexicon_trace(part, lookup(lex, part), sentence, position, config, model, history)
                subs.append(sub)
                history.append(sub.output)
            output = " ".join(s.output for s in subs)
            return TokenTrace(text, output, Route.SEGMENTED, tuple(subs), **where)

    if not any("a" <= ch <= "z" for ch in key):
        return TokenTrace(text, text, Route.PASS_THROUGH, None, **where)
    urdu, fully_mapped = map_word(table, key)
    return TokenTrace(text, urdu, Route.CHAR_MAPPED, fully_mapped, **where)


def transliterate_text(
    lex: Lexicon,
    table: RuleTable,
    config: EngineConfig,
    text: str | bytes,
    *,
    model: NgramModel | None = None,
) -> TransliterationOutput:
    tokens = tokenize(text, config.terminators)
    replacements: dict[int, str] = {}
    traces: list[TokenTrace] = []
    for sentence in split_sentences(tokens):
        history: list[str] = []
        for pos, tok in enumerate(sentence.tokens):
            gi = sentence.offset + pos
            if tok.is_word:
                trace = transliterate_word(lex, table, config, sentence, pos, model=model, left_context=history)
                traces.append(trace)
                history.extend(trace.units)
                replacements[gi] = trace.output
            elif config.map_punctuation and tok.kind in (TokenKind.PUNCT, TokenKind.TERMINATOR):
                mapped = config.punctuation_map.get(tok.text)
                if mapped is not None:
                    replacements[gi] = mapped
    return TransliterationOutput(reconstruct(tokens, replacements), tuple(traces))


class Engine:
    """Lexicon, rule table, configuration and optional n-gram model bundled together."""

    def __init__(self, lexicon: Lexicon, rules: RuleTable, config: EngineConfig | None = None,
                 ngram_model: NgramModel | None = None):
        self.lexicon = lexicon
        self.rules = rules
        self.config = config or EngineConfig()
        self.ngram_model = ngram_model
        if self.config.disambiguation_backend == "ngram" and ngram_model is None:
            raise UsageError("the ngram backend needs a trained NgramModel")

    def transliterate(self, text: str | bytes) -> TransliterationOutput:
        return transliterate_text(self.lexicon, self.rules, self.config, text, model=self.ngram_model)

    def __call__(self, text: str | bytes) -> str:
        return self.transliterate(text).text
