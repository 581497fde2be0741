"""Exception hierarchy shared across the package."""


class BtbsError(Exception):
    """Base class for all errors raised by this package."""


class ShapeError(BtbsError):
    """Structurally malformed input: wrong length, heterogeneous batch,
    bad permutation, incomplete register."""


class InvariantError(ShapeError):
    """A parsed document violates a register invariant (node set, entry
    counts, angle ranges)."""


class ZeroStateError(BtbsError):
    """A state vector with (numerically) zero norm was supplied."""


class DomainError(BtbsError):
    """A scalar argument is outside its documented domain."""


class ParseError(BtbsError):
    """A serialized document could not be read; the message carries
    line/field context."""


class RenderError(BtbsError):
    """The register is too large to render legibly."""


class ConvergenceError(BtbsError):
    """The eigensolver failed to meet the residual bound."""
