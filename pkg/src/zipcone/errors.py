"""Exception types shared across the package."""


class ZipconeError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(ZipconeError):
    pass


class InvalidCartan(ZipconeError):
    pass


class NonFiniteSystem(ZipconeError):
    pass


class NotAnAutomorphism(ZipconeError):
    pass


class DoesNotPreserveBase(ZipconeError):
    pass


class CapExceeded(ZipconeError):
    def __init__(self, message, partial_count=None):
        super().__init__(message)
        self.partial_count = partial_count


class DimensionTooLarge(ZipconeError):
    pass


class SingularMap(ZipconeError):
    pass


class InvalidR(ZipconeError):
    pass


class RankTooLarge(ZipconeError):
    pass


class UnknownPreset(ZipconeError):
    pass


class BadParams(ZipconeError):
    pass


class InternalError(ZipconeError):
    pass
