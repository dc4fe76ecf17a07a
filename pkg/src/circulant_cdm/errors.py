"""
Exception types raised by the package.

All of them derive from the builtin exception a caller would expect, so
``except ValueError`` keeps working for input problems.
"""


class InvalidSpecError(ValueError):
    """A connection set, order or vertex is out of range."""


class UnsupportedValencyError(ValueError):
    """Valency above 5 is outside the classification."""


class OracleRefusalError(ValueError):
    """The exhaustive oracle refuses orders above its configured maximum."""


class LabelingDefectError(RuntimeError):
    """A construction produced a labeling the verifier rejects, or a search
    that must succeed was exhausted."""


class SearchTimeoutError(TimeoutError):
    """A budgeted search ran out of time before deciding."""

    def __init__(self, message: str, nodes_explored: int = 0):
        super().__init__(message)
        self.nodes_explored = nodes_explored
