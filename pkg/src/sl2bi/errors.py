"""Exception types raised across the package."""


class Sl2biError(Exception):
    """Base class for all package errors."""


class NotAPath(Sl2biError):
    pass


class InvalidP(Sl2biError, ValueError):
    pass


class SignMismatch(Sl2biError):
    pass


class TooLarge(Sl2biError, ValueError):
    pass


class ParityMismatch(Sl2biError, ValueError):
    pass


class DimMismatch(Sl2biError, ValueError):
    pass


class NotScalar(Sl2biError):
    """A central element that should act as a scalar does not."""


class ZeroTrace(Sl2biError):
    """An even-dimensional trace vanished, so the twist is undetermined."""

    def __init__(self, message, candidates=()):
        super().__init__(message)
        self.candidates = tuple(candidates)


class NotIrreducible(Sl2biError, ValueError):
    pass


class IrrationalSpectrum(Sl2biError):
    pass


class ClosureFailure(Sl2biError):
    """An operator image left the subspace it must preserve."""


class BadParity(Sl2biError, ValueError):
    pass


class BadVertex(Sl2biError, ValueError):
    pass


class DecompositionMismatch(Sl2biError):
    pass
