""" Exception hierarchy shared by every pcgroup module. """

from __future__ import annotations


class PcGroupError(Exception):
    """Base class for all errors raised by pcgroup."""


class ConfigurationError(PcGroupError):
    """config.yaml could not be read or validated."""


class PresentationError(PcGroupError):
    """A presentation, word or argument is malformed."""


class InconsistentSystemError(PcGroupError):
    """A linear system over GF(p) has no solution."""


class NotAbelianError(PcGroupError):
    """An operation that needs an abelian subgroup got a nonabelian one."""


class NotContainedError(PcGroupError):
    """A subgroup is not contained in the subgroup it was paired with."""


class EnumerationCapError(PcGroupError):
    """Element enumeration would exceed the configured order cap."""


class ResourceCapError(PcGroupError):
    """A presentation grew past the configured generator cap."""


class HypothesisError(PcGroupError):
    """A theorem was applied to a group outside its hypotheses."""


class ReductionError(PcGroupError):
    """Generator reduction is undefined for this group shape."""


class StructureContradiction(PcGroupError):
    """A constructive step or structural claim failed on a concrete group."""


class ParseError(PcGroupError):
    """Syntax error in a presentation file."""

    def __init__(self, message: str, line: int = 0, column: int = 0) -> None:
        self.line = line
        self.column = column
        super().__init__(f"{message} (line {line}, column {column})")
