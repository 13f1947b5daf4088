"""Exception types raised by the library.

Verdicts (negative minors, chain violations, non-S ratios) are returned as
values; exceptions are reserved for malformed input and contract breaches.
"""


class TnnError(ValueError):
    """Base class for all library errors."""


class InvalidSpec(TnnError):
    pass


class EmptyWindow(TnnError):
    pass


class OutOfWindow(TnnError):
    def __init__(self, exponent, series="f"):
        self.exponent = exponent
        self.series = series
        super().__init__(f"coefficient {series}[{exponent}] is outside the known window")


class UntrustedEntry(TnnError):
    pass


class ShapeMismatch(TnnError):
    pass


class DegenerateSpec(TnnError):
    pass


class PoleHit(TnnError):
    pass


class ZeroCoefficient(TnnError):
    pass
