"""Exception hierarchy shared across the package.

CLI exit codes: ParameterError -> 2, SegmentCapError -> 3, everything
else that signals a failed check -> 1.
"""


class RauzyError(Exception):
    """Base class for all package errors."""


class ParameterError(RauzyError):
    """Invalid argument, out-of-range parameter, or violated precondition."""


class SpectralError(ParameterError):
    """Matrix does not satisfy the spectral requirements (hyperbolic, |det| = 1)."""


class ConvergenceError(RauzyError):
    """An iterative limit failed to stabilise within the configured budget."""


class SegmentCapError(RauzyError):
    """A patch grew past the configured segment cap."""

    def __init__(self, count: int, cap: int):
        super().__init__(f"patch holds {count} segments, cap is {cap}")
        self.count = count
        self.cap = cap


class DynamicsError(RauzyError):
    """A domain-exchange orbit left its domain beyond the certified bound."""


class InconsistencyError(RauzyError):
    """Computed interval data contradicts itself beyond certified bounds."""
