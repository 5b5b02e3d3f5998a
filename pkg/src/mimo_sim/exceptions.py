"""Exception hierarchy shared across the simulator."""


class MimoSimError(Exception):
    """Base class for all simulator errors."""


class DimMismatchError(MimoSimError):
    """Operands have incompatible dimensions."""


class NotHermitianError(MimoSimError):
    """A matrix that must be Hermitian is not, beyond tolerance."""


class IndefiniteCovarianceError(MimoSimError):
    """A covariance matrix has eigenvalues below the clipping tolerance."""


class InvalidGridError(MimoSimError):
    """Requested cell count cannot form the requested grid."""


class LayoutTimeoutError(MimoSimError):
    """Rejection sampling could not fill every cell within the draw budget."""


class NonPositiveDistanceError(MimoSimError):
    """Path loss requested for a non-positive distance."""


class ZeroBetaError(MimoSimError):
    """Power allocation requested with a zero large-scale gain."""


class TooManyUsersError(MimoSimError):
    """More users than orthogonal pilot sequences."""


class ZeroPilotPowerError(MimoSimError):
    """LS estimation requested with zero pilot power."""


class SingularSError(MimoSimError):
    """The LS-estimate covariance is singular; MMSE statistics undefined."""


class SingularOmegaError(MimoSimError):
    """The despread-pilot covariance is singular; MMSE estimate undefined."""


class DegenerateDenominatorError(MimoSimError):
    """Nonzero signal power with a zero interference-plus-noise power."""


class ConfigError(MimoSimError):
    """Base class for configuration problems (CLI exit code 2)."""


class ParseError(ConfigError):
    """Config file could not be parsed; message carries the position."""


class UnknownKeyError(ConfigError):
    """Config file contains a key the schema does not define."""


class OutOfRangeError(ConfigError):
    """Config value violates a documented constraint."""


class UnknownPresetError(ConfigError):
    """Requested preset name does not exist."""


class ValidationFailureError(MimoSimError):
    """A moment-identity validation run exceeded its tolerance."""
