"""Exception types shared across the package.

Each exception carries a short machine-readable ``code`` used verbatim in
CLI error messages and in JSON error bodies served over HTTP.
"""

from __future__ import annotations


class TopicMapError(Exception):
    """Base class for all package errors."""

    code = "Error"


class InvalidParamsError(TopicMapError, ValueError):
    code = "InvalidParams"


class EmptyCorpusError(TopicMapError, ValueError):
    code = "EmptyCorpus"


class UnknownTermError(TopicMapError, KeyError):
    code = "UnknownTerm"

    def __init__(self, term: str):
        super().__init__(term)
        self.term = term

    def __str__(self) -> str:
        return f"term not in vocabulary: {self.term!r}"


class ZeroVectorError(TopicMapError, ValueError):
    code = "ZeroVector"


class MalformedQuestionFileError(TopicMapError, ValueError):
    code = "MalformedQuestionFile"

    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class EmptyInputError(TopicMapError, ValueError):
    code = "EmptyInput"


class EmptyGraphError(TopicMapError, ValueError):
    code = "EmptyGraph"


class FewerTermsThanRequested(UserWarning):
    """Warning: the filtered vocabulary is smaller than the requested map size."""


class MissingVectorWarning(UserWarning):
    """Warning: frequent terms lacked trained vectors and were dropped from the map."""
