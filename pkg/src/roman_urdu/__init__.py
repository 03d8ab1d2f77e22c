"""Context-aware Roman-Urdu to Urdu script transliteration."""

from importlib import resources

from .char_mapper import MappingRule, RuleTable, load_rules, loads_rules, map_word, read_rules
from .disambiguator import (
    CandidateScore,
    DisambiguationResult,
    Method,
    NgramModel,
    choose,
    choose_ngram,
    context_score,
    ngram_probability,
    train_ngram,
)
from .errors import (
    AlignmentError,
    DataError,
    DuplicateEntryError,
    DuplicateRuleError,
    LexiconParseError,
    RuleParseError,
    TransliterationError,
    UsageError,
)
from .evaluation import EvalCase, EvalReport, evaluate, evaluate_engine, read_gold
from .lexicon import (
    Lexicon,
    LexiconEntry,
    is_ambiguous,
    load_lexicon,
    loads_lexicon,
    lookup,
    normalize_key,
    read_lexicon,
    segment_compound,
)
from .pipeline import Engine, EngineConfig, Route, TokenTrace, TransliterationOutput, transliterate_text, transliterate_word
from .segmentation import Sentence, Token, TokenKind, reconstruct, split_sentences, tokenize

__version__ = "0.1.0"


def data_path(name: str):
    """Path of a file shipped in ``roman_urdu/data`` (fixture lexicons, rules, corpus)."""
    return resources.files(__name__).joinpath("data", name)


def fixture_lexicon() -> Lexicon:
    return read_lexicon(data_path("fixture_lexicon.tsv"))


def corpus_lexicon() -> Lexicon:
    return read_lexicon(data_path("corpus_lexicon.tsv"))


def default_rules() -> RuleTable:
    return read_rules(data_path("rules.tsv"))


def default_engine(**config) -> Engine:
    """Engine over the corpus lexicon and the bundled rule chart."""
    return Engine(corpus_lexicon(), default_rules(), EngineConfig(**config))
