"""Exception hierarchy shared by every layer of the package."""

from __future__ import annotations


class NaflError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(NaflError):
    """Malformed formula text. Carries 1-based line and column."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.raw_message = message
        self.line = line
        self.column = column


class UnknownTokenError(ParseError):
    """A character that belongs to no token of the formula grammar."""


class VocabularyError(NaflError):
    """More atoms than the exhaustive decision procedures support."""


class UnknownAtomError(NaflError):
    """Formula mentions an atom outside the theory's vocabulary."""


class IllegalAxiomError(NaflError):
    """Formula outside the theory syntax was offered as an axiom."""

    def __init__(self, formula_text: str, reason: str):
        super().__init__(f"{formula_text} cannot be added as an axiom: {reason}")
        self.formula_text = formula_text
        self.reason = reason


class InconsistentTheoryError(NaflError):
    """Axiom set has no model."""


class BoundExceededError(NaflError):
    """Enumeration bound (depth or vocabulary) exceeded."""


class NoSuperpositionError(NaflError):
    """Every atom is decided, so no superposed model exists."""


class TimelineError(NaflError):
    """Base class for timeline-evaluation errors."""


class OutOfOrderTimeError(TimelineError):
    """Declaration timestamp does not advance the last epoch."""


class BeforeExperimentError(TimelineError):
    """Query time precedes the first epoch."""


class IllegalPropositionError(TimelineError):
    """Queried formula is outside the active theory syntax."""


class UnprovableRetroError(TimelineError):
    """Retroactive assertion not provable in the interpretation at its time."""


class ScenarioError(NaflError):
    """Base class for scenario-file errors."""


class ScenarioParseError(ScenarioError):
    """Malformed scenario file. Carries the 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"{message} (line {line})")
        self.line = line


class ScenarioValidationError(ScenarioError):
    """Well-formed scenario file with unsatisfiable references or ordering."""


class ScenarioExecutionError(ScenarioError):
    """A scenario event failed; names the originating event."""

    def __init__(self, event_text: str, cause: Exception):
        super().__init__(f"event '{event_text}' failed: {cause}")
        self.event_text = event_text
        self.cause = cause


class TooFewSamplesError(NaflError):
    """Histogram bins too thin for a chi-square test (expected count < 5)."""
