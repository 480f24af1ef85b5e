"""Exception hierarchy.

Every error raised on purpose by the package derives from ``TaggerError`` so
callers (and the CLI) can tell them apart from programming errors.
"""


class TaggerError(Exception):
    """Base class for all package errors."""


class CorpusError(TaggerError):
    """Problems with corpus text or corpus structure."""


class CorpusParseError(CorpusError):
    """A line of a tagged corpus file could not be parsed."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class TagsetViolationError(CorpusParseError):
    """A tag label is not part of the tagset."""

    def __init__(self, tag, line=None):
        self.tag = tag
        super().__init__(f"unknown tag {tag!r}", line=line)


class EmptyCorpusError(CorpusError):
    pass


class DomainError(TaggerError, ValueError):
    """An argument lies outside the domain of an operation (unknown tag, empty sentence...)."""


class DegenerateCountsError(TaggerError):
    """Counts carry no trigram evidence, so interpolation weights are undefined."""


class ModelLoadError(TaggerError):
    """Base class for failures while reading a serialized model."""


class VersionMismatchError(ModelLoadError):
    pass


class TruncatedModelError(ModelLoadError):
    pass


class ChecksumError(ModelLoadError):
    pass


class CapExceededError(DomainError):
    """Sentence too long for exhaustive decoding."""


class AlignmentError(TaggerError):
    """Gold and predicted corpora do not line up token by token."""

    def __init__(self, message, sentence=None, token=None):
        self.sentence = sentence
        self.token = token
        super().__init__(message)
