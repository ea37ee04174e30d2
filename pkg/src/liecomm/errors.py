"""Exception hierarchy shared by all liecomm modules."""


class LiecommError(Exception):
    """Base class for all errors raised by this package."""


# --- dense linear algebra ---------------------------------------------------

class NotHermitian(LiecommError):
    """Input matrix fails the Hermitian precondition."""


class NotUnitary(LiecommError):
    """Input matrix fails the unitarity precondition."""


class NoConvergence(LiecommError):
    """An iteration exhausted its budget without meeting its tolerance."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class OutsideInjectivityDomain(LiecommError):
    """A matrix-logarithm eigenphase violates the principal-branch margin."""


# --- algebra layer ----------------------------------------------------------

class AlgebraMismatch(LiecommError):
    """Operands belong to different algebras."""


class IndexOutOfRange(LiecommError):
    """A frame index is outside the valid range or violates distinctness."""


# --- root systems and tori --------------------------------------------------

class NotApplicable(LiecommError):
    """Operation is undefined for this root-system type."""


class InvalidPresentation(LiecommError):
    """Root-system data is inconsistent (e.g. Jacobi identity fails)."""


class UnsupportedType(LiecommError):
    """Root-system type outside the supported classical families."""


# --- solvers ----------------------------------------------------------------

class NotInComplement(LiecommError):
    """Element has a component along the torus where none is allowed."""


class NotRegular(LiecommError):
    """Element is not regular (adjoint gap below threshold)."""


class TargetTooLarge(LiecommError):
    """Target norm exceeds the solver's neighbourhood bound."""


class SpectrumTooLarge(LiecommError):
    """Adjoint spectrum too large for the series inversion to converge."""


class SolverFailure(LiecommError):
    """A solver stage failed; ``stage`` names the failing step."""

    def __init__(self, message, stage=None):
        super().__init__(message)
        self.stage = stage


class MeasurementFailure(LiecommError):
    """A sweep sample failed; carries the partial report with failing seeds."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


# --- certificates -----------------------------------------------------------

class CertificateError(LiecommError):
    """Certificate file cannot be parsed or has an invalid schema."""


class VerificationFailure(LiecommError):
    """An independent re-check of a certificate failed."""

    def __init__(self, message, check=None):
        super().__init__(message)
        self.check = check
