"""Pick one Urdu sense for an ambiguous Roman key.

The default backend counts how many of a sense's cue words occur
elsewhere in the same sentence and takes the sense with the most hits.
When several senses tie on hits, the one whose nearest hit sits closest
to the ambiguous word wins, then frequency, then file order. With no
hits at all, the most frequent sense is used (or the first one listed in
the lexicon file, under the ``"first"`` policy).

An add-one smoothed n-gram model over Urdu words is available as an
alternative backend.
"""

from __future__ import annotations

import enum
import math
import os
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from .errors import UsageError
from .lexicon import LexiconEntry, normalize_key
from .segmentation import Sentence

PAD = "<s>"
ZERO_SCORE_POLICIES = ("frequency", "first")


class Method(str, enum.Enum):
    UNIQUE = "Unique"
    CONTEXT_MAX = "ContextMax"
    FREQUENCY_DEFAULT = "FrequencyDefault"
    FIRST_DEFAULT = "FirstDefault"
    NGRAM_MAX = "NgramMax"


class CandidateScore(NamedTuple):
    entry: LexiconEntry
    match_count: int
    # word distance to the closest matching cue, None without a match
    nearest_cue: int | None = None
    probability: float | None = None


@dataclass(frozen=True)
class DisambiguationResult:
    chosen: LexiconEntry
    scores: tuple[CandidateScore, ...]
    method: Method


def _cue_positions(sentence: Sentence, target_position: int) -> dict[str, list[int]]:
    """Normalized word -> word ordinals at which it occurs, minus the target."""
    if not 0 <= target_position < len(sentence.tokens) or not sentence.tokens[target_position].is_word:
        raise UsageError(f"position {target_position} is not a Word token of sentence {sentence.index}")
    seen: dict[str, list[int]] = defaultdict(list)
    ordinal = target_ordinal = 0
    for i, tok in enumerate(sentence.tokens):
        if not tok.is_word:
            continue
        if i == target_position:
            target_ordinal = ordinal
        else:
            seen[normalize_key(tok.text)].append(ordinal)
        ordinal += 1
    return {w: [abs(o - target_ordinal) for o in ords] for w, ords in seen.items()}


def context_score(candidate: LexiconEntry, sentence: Sentence, target_position: int) -> int:
    """Number of distinct sentence words (target excluded) among the candidate's cues."""
    words = _cue_positions(sentence, target_position)
    return len(candidate.characteristics & words.keys())


def _score(candidate: LexiconEntry, words: dict[str, list[int]]) -> CandidateScore:
    hits = candidate.characteristics & words.keys()
    nearest = min((d for w in hits for d in words[w]), default=None)
    return CandidateScore(candidate, len(hits), nearest)


def _context_rank(s: CandidateScore):
    nearest = math.inf if s.nearest_cue is None else s.nearest_cue
    return (-s.match_count, nearest, s.entry.rank_key)


def _default(candidates: Sequence[LexiconEntry], zero_score_policy: str) -> tuple[LexiconEntry, Method]:
    if zero_score_policy == "frequency":
        return min(candidates, key=lambda e: e.rank_key), Method.FREQUENCY_DEFAULT
    if zero_score_policy == "first":
        return min(candidates, key=lambda e: e.load_order), Method.FIRST_DEFAULT
    raise UsageError(f"unknown zero-score policy {zero_score_policy!r}")


def choose(
    candidates: Sequence[LexiconEntry],
    sentence: Sentence,
    target_position: int,
    zero_score_policy: str = "frequency",
) -> DisambiguationResult:
    if not candidates:
        raise UsageError("choose() needs at least one candidate")
    if len(candidates) == 1:
        only = candidates[0]
        return DisambiguationResult(only, (CandidateScore(only, 0),), Method.UNIQUE)

    words = _cue_positions(sentence, target_position)
    scores = tuple(_score(c, words) for c in candidates)
    if max(s.match_count for s in scores) > 0:
        best = min(scores, key=_context_rank)
        return DisambiguationResult(best.entry, scores, Method.CONTEXT_MAX)
    chosen, method = _default(candidates, zero_score_policy)
    return DisambiguationResult(chosen, scores, method)


@dataclass(frozen=True)
class NgramModel:
    order: int
    counts: dict[tuple[str, ...], dict[str, int]]
    vocabulary: frozenset[str]
    context_totals: dict[tuple[str, ...], int] = field(default_factory=dict, repr=False)

    def context_of(self, history: Sequence[str]) -> tuple[str, ...]:
        """Last ``order - 1`` words of ``history``, left-padded."""
        k = self.order - 1
        if k == 0:
            return ()
        ctx = tuple(history)[-k:]
        return (PAD,) * (k - len(ctx)) + ctx


def train_ngram(sentences: Iterable[Sequence[str]], n: int) -> NgramModel:
    if n < 1:
        raise UsageError(f"n-gram order must be >= 1, got {n}")
    counts: dict[tuple[str, ...], Counter] = defaultdict(Counter)
    vocab: set[str] = set()
    n_sentences = 0
    for sent in sentences:
        n_sentences += 1
        padded = [PAD] * (n - 1) + list(sent)
        for i in range(n - 1, len(padded)):
            counts[tuple(padded[i - n + 1:i])][padded[i]] += 1
        vocab.update(sent)
    if n_sentences == 0:
        raise UsageError("cannot train an n-gram model on an empty corpus")
    if not vocab:
        raise UsageError("training corpus contains no words")
    frozen = {ctx: dict(c) for ctx, c in counts.items()}
    totals = {ctx: sum(c.values()) for ctx, c in frozen.items()}
    return NgramModel(n, frozen, frozenset(vocab), totals)


def read_ngram_corpus(path: str | os.PathLike) -> list[list[str]]:
    """One Urdu sentence per line, whitespace separated; blank lines skipped."""
    with open(path, encoding="utf-8") as fh:
        return [line.split() for line in fh if line.strip()]


def ngram_probability(model: NgramModel, context: Sequence[str], word: str) -> float:
    ctx = model.context_of(context)
    seen = model.counts.get(ctx, {})
    return (seen.get(word, 0) + 1) / (model.context_totals.get(ctx, 0) + len(model.vocabulary))


def choose_ngram(
    model: NgramModel, candidates: Sequence[LexiconEntry], left_context: Sequence[str] = ()
) -> DisambiguationResult:
    if not candidates:
        raise UsageError("choose_ngram() needs at least one candidate")
    scores = tuple(
        CandidateScore(c, 0, None, ngram_probability(model, left_context, c.urdu_form)) for c in candidates
    )
    best = min(scores, key=lambda s: (-s.probability, s.entry.rank_key))
    return DisambiguationResult(best.entry, scores, Method.NGRAM_MAX)
