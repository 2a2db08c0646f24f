"""Exception types shared across the package."""


class RansomEconError(Exception):
    """Base class for all domain errors raised by this package."""


class ZeroProbabilityError(RansomEconError):
    """A solver needed a win probability strictly above zero."""


class ZeroDenominatorError(RansomEconError):
    """A solver divided by a quantity that turned out to be zero."""


class ZeroCostError(RansomEconError):
    """A ratio against the attack cost was requested with zero cost."""


class NotAchievableError(RansomEconError):
    """No probability in [0, 1] satisfies the requested condition."""


class GridTooLargeError(RansomEconError):
    """A sweep grid exceeds the configured cell cap."""


class ScenarioError(RansomEconError):
    """Base class for scenario-file errors; always carries a source position."""

    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.message = message


class ScenarioSyntaxError(ScenarioError):
    """A line does not match the scenario grammar."""


class ScenarioValidationError(ScenarioError):
    """A well-formed value violates a constraint of its target field."""


class DuplicateKeyError(ScenarioError):
    """A key or section appeared more than once."""


class UnknownKeyError(ScenarioError):
    """A key or section is not part of the grammar."""
