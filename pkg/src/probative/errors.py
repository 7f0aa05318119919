"""Exception types shared across the package.

Structural problems discovered by validation are reported as findings,
not raised; the exceptions here cover operations whose preconditions were
violated or whose result is undefined.
"""

from __future__ import annotations


class ProbativeError(Exception):
    """Base class for all package-specific errors."""


class CycleError(ProbativeError):
    """The graph contains a directed cycle."""


class UnknownNodeError(ProbativeError):
    """A node id does not exist in the model."""


class UnknownStateError(ProbativeError):
    """A state label does not belong to the referenced node."""


class MissingParentError(ProbativeError):
    """A CPT lookup did not supply a state for every parent."""


class IncompleteAssignmentError(ProbativeError):
    """A full-joint evaluation was asked for a partial assignment."""


class ImpossibleEvidenceError(ProbativeError):
    """The observed evidence has probability zero under the model."""


class StructureError(ProbativeError):
    """The network shape does not meet the requirements of a CPT-local
    likelihood-ratio formula; use the inference-based route instead."""


class ZeroOverZeroError(ProbativeError):
    """Both likelihoods are zero; the ratio is undefined."""


class PriorOverrideError(ProbativeError):
    """A prior override was requested for a node that has parents."""


class UnknownFixtureError(ProbativeError):
    """No bundled fixture with the given name."""


class ParseError(ProbativeError):
    """Syntax error in the textual model language.

    Carries the 1-based position of the offending token, what the parser
    expected and what it found.
    """

    def __init__(self, line: int, column: int, expected: str, found: str, message: str | None = None):
        self.line = line
        self.column = column
        self.expected = expected
        self.found = found
        self.message = message or f"expected {expected}, found {found}"
        super().__init__(f"{self.message} (line {line}, column {column})")


class SchemaError(ProbativeError):
    """A JSON document does not match the model document schema.

    ``path`` is a JSON-pointer-style location of the violation.
    """

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


class ModelValidationError(ProbativeError):
    """A parsed model failed semantic validation.

    Carries the full ValidationReport so callers can show every finding.
    """

    def __init__(self, report):
        self.report = report
        lines = "; ".join(f"{f.code} at {f.location}: {f.message}" for f in report.findings)
        super().__init__(f"model failed validation: {lines}")
