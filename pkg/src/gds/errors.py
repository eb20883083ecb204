"""Exception hierarchy shared by every module of the package."""


class EvidenceError(ValueError):
    """Base class for all invalid-evidence conditions."""


class FrameMismatch(EvidenceError):
    """Two objects that must share a frame of discernment do not."""


class UnknownElement(EvidenceError):
    """A label is not a member of the frame."""


class EmptySetMass(EvidenceError):
    """Non-zero mass was assigned to the empty proposition."""


class MagnitudeOutOfRange(EvidenceError):
    """A mass magnitude lies outside [0, 1]."""


class NotNormalized(EvidenceError):
    """Masses do not sum to one."""


class ConflictSingularity(EvidenceError):
    """The conflict coefficient is (numerically) equal to 1."""


class TotalConflict(ConflictSingularity):
    """Classical Dempster combination with K >= 1."""


class InfeasibleParameters(EvidenceError):
    """Sweep parameters (x, y) produce a mass with magnitude above 1."""


class ParseError(EvidenceError):
    """Malformed evidence file."""


class DivisionByZero(ZeroDivisionError):
    """Complex division by a zero-modulus divisor."""


class MagnitudeWarning(UserWarning):
    """A fused mass has magnitude greater than 1."""
