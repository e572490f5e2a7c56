"""Exception hierarchy shared by all quadcap modules."""


class QuadcapError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(QuadcapError):
    """Input outside the documented domain (non-squarefree m, bad Sigma, ...)."""


class ShapeError(QuadcapError):
    """Incompatible matrix / homomorphism shapes."""


class UnsupportedError(QuadcapError):
    """Operation requested outside its supported range (infinite module
    in brute-force mode, module order != 2 in the two-term pipeline, ...)."""


class SearchBoundExceeded(QuadcapError):
    """An exhaustive search hit its configured cap.  Carries the cap so the
    caller can report it; never a silent wrong answer."""

    def __init__(self, message, bound=None):
        super().__init__(message)
        self.bound = bound


class PrecisionExceeded(QuadcapError):
    """Certified-precision evaluation failed even at the maximum working
    precision."""


class InconsistencyError(QuadcapError):
    """Two independent computation routes disagreed.  This is the package's
    core alarm: it carries the full diagnostics of both routes."""

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}
