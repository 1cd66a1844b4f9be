"""Exception hierarchy shared by every module.

The CLI maps these classes onto exit codes, so the split matters.
"""


class VBraidError(Exception):
    """Base class for all library errors."""


class ParseError(VBraidError, ValueError):
    """Malformed text input. ``position`` is a character offset when known."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class StrandMismatch(VBraidError, ValueError):
    pass


class MoveNotApplicable(VBraidError):
    """A move or rewrite whose precondition does not hold on its input."""


class RelationMismatch(MoveNotApplicable):
    pass


class NotDestabilizable(MoveNotApplicable):
    pass


class NotAllowed(MoveNotApplicable):
    """A classical L-move blocked by virtual crossings on both sides of the cut."""


class ResourceLimitError(VBraidError):
    """State-sum crossing cap or similar resource bound exceeded."""


class InvalidInput(VBraidError, ValueError):
    """Well-formed input outside an operation's domain (e.g. a link where a knot is required)."""
