"""Exception hierarchy shared by the whole package.

Validation failures carry a stable machine-readable ``code`` plus a
``details`` dict so the CLI and the HTTP service can surface them without
string parsing.
"""


class BoolhoodError(Exception):
    """Base class for every error raised by this package."""


class DimensionMismatchError(BoolhoodError):
    """Operands live over different variable counts."""


class CapabilityError(BoolhoodError):
    """The request is well-formed but exceeds a configured size cap."""


class IntegrityError(BoolhoodError):
    """Two independent computations of the same value disagree."""


class ValidationError(BoolhoodError):
    """Input rejected with a named property violation.

    Codes in use: syntax, bad_index, empty_clause, empty_function,
    duplicate_literal, mixed_sign, sign_conflict, non_antichain, non_cover,
    not_positive, degenerate, bad_truth_table.
    """

    def __init__(self, code, message, **details):
        super().__init__(message)
        self.code = code
        self.details = details


class ParseError(ValidationError):
    """Syntax-level rejection; ``position`` is a 0-based character offset."""

    def __init__(self, message, position, **details):
        super().__init__("syntax", message, position=position, **details)
        self.position = position
