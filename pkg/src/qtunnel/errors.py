"""Exception hierarchy shared by all qtunnel modules."""


class QTunnelError(ValueError):
    """Base class for validation errors raised by qtunnel."""


class IndexOutOfRange(QTunnelError, IndexError):
    pass


class UnsupportedSize(QTunnelError):
    pass


class NotNormalized(QTunnelError):
    pass


class LengthMismatch(QTunnelError):
    pass


class DuplicateQubit(QTunnelError):
    pass


class SizeMismatch(QTunnelError):
    pass


class TooLarge(QTunnelError):
    pass


class BadLength(QTunnelError):
    pass


class EigenFailure(QTunnelError, ArithmeticError):
    pass
