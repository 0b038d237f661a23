"""Exception types shared across the package."""


class PolyzoneError(Exception):
    """Base class for all polyzone errors."""


class MissingAmbientDegree(PolyzoneError):
    """An operation needed the degree class n but the polynomial carries none."""


class ZeroLeadingCoefficient(PolyzoneError):
    """from_roots was given a zero leading coefficient."""


class DegreeExceedsN(PolyzoneError):
    """A coefficient vector is too long for the requested degree class n."""


class DegreeMismatch(PolyzoneError):
    """An operand was required to have exact degree n and does not."""


class SigmaMismatch(PolyzoneError):
    """The operator shift is not n/2, so it is not the Bernstein-type operator."""


class EmptyPointSet(PolyzoneError):
    """min_s_for needs at least one point."""


class DegreeZero(PolyzoneError):
    """A constant polynomial has no roots to find."""


class NonFiniteCoefficient(PolyzoneError):
    """Root finding requires finite coefficients."""


class Unconverged(PolyzoneError):
    """A RootSet operation requires every root to carry a residual certificate."""


class RootFindingFailed(PolyzoneError):
    """An internal root computation did not certify all roots."""


class NotSelfInversive(PolyzoneError):
    """A self-inversive hypothesis check failed on a verifier input."""


class DegenerateInstance(PolyzoneError):
    """A generated instance degenerated numerically and must be resampled."""
