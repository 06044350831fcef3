"""Exception types raised across the library."""


class UnruhlabError(Exception):
    """Base class for every library-specific error."""


class BadPartitionError(UnruhlabError):
    """Subsystem dimensions do not factor the matrix dimension."""


class NotHermitianError(UnruhlabError):
    """Operation requires a Hermitian matrix."""


class NotPSDError(UnruhlabError):
    """Operation requires a positive semidefinite matrix."""


class UnphysicalStateError(UnruhlabError):
    """Strict-mode state construction hit a materially negative eigenvalue."""

    def __init__(self, message, eigenvalues=None):
        super().__init__(message)
        self.eigenvalues = tuple(eigenvalues) if eigenvalues is not None else None


class UnknownPresetError(UnruhlabError):
    """State preset name is not one of the recognized families."""


class BadPhysicalParamError(UnruhlabError):
    """Acceleration, mode frequency and light speed must be positive and finite."""


class BadRindlerParamError(UnruhlabError):
    """Acceleration parameter r must lie in [0, pi/4]."""


class BadProbabilityError(UnruhlabError):
    """Channel parameters p and mu must lie in [0, 1]."""


class NotAPauliChannelError(UnruhlabError):
    """Operation is defined only for Pauli-type channels."""


class ChannelNotTracePreservingError(UnruhlabError):
    """Constructed Kraus set failed the completeness check."""


class NotXFormError(UnruhlabError):
    """Matrix has weight outside the diagonal and anti-diagonal."""


class ClosedFormDomainError(UnruhlabError):
    """A closed-form radicand came out materially negative.

    Carries the offending subexpression value so convention mismatches can
    be diagnosed instead of silently clamped.
    """

    def __init__(self, label, value):
        super().__init__(f"negative radicand in {label}: {value:.6e}")
        self.label = label
        self.value = value


class BadSweepSpecError(UnruhlabError):
    """Sweep grid is empty or leaves a parameter's domain."""


class BadPlotRequestError(UnruhlabError):
    """Rows handed to the plotter do not share a single scanned parameter."""
