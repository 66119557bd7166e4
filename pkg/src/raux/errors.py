"""Exception hierarchy for domain errors.

Every precondition violation raises a subclass of RauxError so the CLI can
map them to exit status 1 without pattern-matching on messages.
"""


class RauxError(Exception):
    """Base class for all domain errors."""


class PoleError(RauxError):
    """Evaluation at (or too close to) a pole of the function."""


class BranchCutError(RauxError):
    """Argument lies on a branch cut (e.g. the negative real axis)."""


class RegionError(RauxError):
    """Point outside the validity region of the requested expansion."""


class JetOrderError(RauxError):
    """A jet of insufficient truncation order was supplied."""


class ParityError(RauxError):
    """Polynomial has the wrong parity or degree for the decomposition."""


class ConditioningError(RauxError):
    """Quadrature oscillation/scale estimate exceeds the accuracy budget."""


class PoleProximityError(RauxError):
    """Integration path passes too close to a pole of the integrand."""


class ConvergenceError(RauxError):
    """Iteration failed to converge within its budget."""


class EdgeZeroError(RauxError):
    """A zero sits on (or hugs) a counting-box edge after max perturbations."""


class CaptureError(RauxError):
    """Newton refinement started from a point not near any zero."""
