"""Exception types shared by every module."""


class PspinError(Exception):
    """Base class; the CLI maps it to exit code 1."""


class InvalidArgument(PspinError, ValueError):
    pass


class GammaPoleError(PspinError, ArithmeticError):
    """Raised when a Gamma factor sits on a pole with no cancelling prefactor."""


class MalformedSeries(PspinError):
    pass


class UnsupportedSector(PspinError):
    pass


class UseKpRoute(PspinError):
    """p=2 open sectors go through the Gaussian (Kontsevich-Penner) route."""


class ParseError(PspinError):
    def __init__(self, message, row=None):
        self.row = row
        if row is not None:
            message = "row %d: %s" % (row, message)
        super().__init__(message)
