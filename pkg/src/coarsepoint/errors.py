"""Exception types shared across the package."""


class CoarsePointError(Exception):
    """Base class for all pipeline errors."""


class ParameterError(CoarsePointError, ValueError):
    """An argument is outside its documented domain."""


class DataError(CoarsePointError):
    """Inputs are structurally inconsistent: misaligned sections, missing or
    unknown image ids, counts that do not line up."""


class SamplerError(CoarsePointError):
    """A rejection sampler exceeded its redraw budget."""


class AssignmentError(CoarsePointError):
    """Candidates cannot be assigned to objects (no anchors available)."""


class RecordParseError(CoarsePointError):
    """A record file could not be parsed; carries the offending line number."""

    def __init__(self, message, line_number=None, path=None):
        if line_number is not None:
            message = f"{path or '<records>'}: line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number
        self.path = path


class BridgeError(CoarsePointError):
    """An external estimator command failed, timed out, or produced
    unparsable output."""
