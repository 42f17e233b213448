"""Shared exception types."""

from __future__ import annotations


class ConceptNavError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(ConceptNavError, ValueError):
    """A document or context violates a structural invariant."""


class CycleError(ValidationError):
    """A declared order relation contains a cycle."""


class ParseError(ConceptNavError, ValueError):
    """Malformed input text.

    Line-oriented parsers set ``line`` (1-based); byte-framed parsers
    set ``offset`` (0-based byte position).
    """

    def __init__(self, message: str, *, line: int | None = None,
                 offset: int | None = None):
        self.line = line
        self.offset = offset
        if line is not None:
            message = f"line {line}: {message}"
        elif offset is not None:
            message = f"byte {offset}: {message}"
        super().__init__(message)


class MagnitudeError(ConceptNavError, ValueError):
    """A string could not be read as a byte magnitude."""


class ScalingError(ConceptNavError, ValueError):
    """Conceptual scaling failed for a record/tag/value triple."""

    def __init__(self, record: str, tag: str, value: str, reason: str):
        self.record = record
        self.tag = tag
        self.value = value
        super().__init__(
            f"cannot scale {tag}={value!r} of record {record!r}: {reason}")
