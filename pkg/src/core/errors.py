"""Exception hierarchy shared by every analysis module."""


class CirculantToolkitError(Exception):
    """Base class for all domain errors raised by the toolkit"""


class ConnectionSetError(CirculantToolkitError, ValueError):
    """Invalid connection set"""


class ZeroGeneratorError(ConnectionSetError):
    """A generator is congruent to 0 mod n"""


class NotInverseClosedError(ConnectionSetError):
    """A generator is listed without its additive inverse"""


class OutOfRangeError(ConnectionSetError):
    """A generator lies outside (-n, n)"""


class TokenError(ConnectionSetError):
    """A token cannot be parsed as a generator"""


class VertexRangeError(CirculantToolkitError, IndexError):
    """Vertex id outside [0, n)"""


class SizeCapError(CirculantToolkitError):
    """Graph order exceeds the configured cap"""


class PartitionKindError(CirculantToolkitError):
    """Quotient requested for a partition of kind none"""


class WrongKindError(CirculantToolkitError):
    """Operation requires a different twin kind"""


class NotTwinFreeError(CirculantToolkitError):
    """Co-twin analysis requires a twin-free graph"""


class LimitExceededError(CirculantToolkitError):
    """Automorphism enumeration grew past its limit"""


class InvariantViolation(CirculantToolkitError, AssertionError):
    """A proven structural property failed; indicates a bug"""


class CoTwinInvariantError(InvariantViolation):
    """Positive circulant co-twin detection with k even"""


class BetaNotAutomorphismError(InvariantViolation):
    """The simultaneous co-twin swap is not an automorphism"""
