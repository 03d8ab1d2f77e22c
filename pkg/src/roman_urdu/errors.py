"""Exception hierarchy shared by the engine, the loaders and the CLI."""


class TransliterationError(Exception):
    """Base class for every error raised by this package."""


class UsageError(TransliterationError, ValueError):
    """An API was called with arguments that violate its preconditions."""


class DataError(TransliterationError, ValueError):
    """A data file (lexicon, rules, corpus) could not be parsed.

    ``source`` and ``line`` are kept so that callers can point at the
    offending location.
    """

    def __init__(self, message, source=None, line=None):
        self.source = source
        self.line = line
        where = ""
        if source is not None and line is not None:
            where = f"{source}:{line}: "
        elif source is not None:
            where = f"{source}: "
        elif line is not None:
            where = f"line {line}: "
        super().__init__(where + message)


class LexiconParseError(DataError):
    pass


class DuplicateEntryError(LexiconParseError):
    pass


class RuleParseError(DataError):
    pass


class DuplicateRuleError(RuleParseError):
    pass


class AlignmentError(TransliterationError, ValueError):
    """System output and gold reference cannot be lined up word by word."""

    def __init__(self, message, case=None, position=None):
        self.case = case
        self.position = position
        super().__init__(message)
