"""Exception types shared across the library."""


class RamlabError(Exception):
    """Base class for all ramlab errors."""


class ParseError(RamlabError):
    """Malformed problem file or polynomial text."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        loc = ""
        if line is not None:
            loc = f" (line {line}, column {column})"
        super().__init__(message + loc)


class ValidationError(RamlabError):
    """Structurally valid input that violates a semantic requirement."""


class PrecisionUnderflow(RamlabError):
    """A quantity cannot be certified within the available precision."""


class NotCoprime(RamlabError):
    """Residue factors share a common factor, so lifting is impossible."""


class NotAPthPower(RamlabError):
    """A series is not a p-th power; carries the first offending exponent."""

    def __init__(self, exponent, message=None):
        self.exponent = exponent
        super().__init__(
            message or f"coefficient at exponent {exponent} is not a p-th power"
        )


class RadicalInconclusive(RamlabError):
    """Radical degree could not be certified after exhausting the doubling policy."""


class MixedInseparableCase(RamlabError):
    """Inseparable splitting shape outside the supported cases."""


class NotIsolated(RamlabError):
    """Subgroup fails the convexity requirement for quotient orders."""


class NonSquarefreeInput(RamlabError):
    """Defining polynomial has repeated factors where squarefree input is required."""


class PrecisionTooSmall(RamlabError):
    """Requested working precision is below the minimum for the construction."""


class ComputationError(RamlabError):
    """Internal inconsistency detected during a computation."""
