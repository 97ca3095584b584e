"""Exception hierarchy.

Every error raised by the library derives from :class:`SqueezedVacuumError`,
so the CLI can map them all to exit status 2 in one place.
"""


class SqueezedVacuumError(Exception):
    pass


class DomainError(SqueezedVacuumError, ValueError):
    """Argument outside the time domain or the mathematical domain of a function."""


class InvalidArgumentError(SqueezedVacuumError, ValueError):
    pass


class InvalidParamsError(SqueezedVacuumError, ValueError):
    """Bogoliubov pair violates |mu|^2 - |nu|^2 = 1."""


class IntegrationError(SqueezedVacuumError, RuntimeError):
    """Integrator failed or the Wronskian drifted past the allowed budget."""


class NoInstantaneousVacuumError(SqueezedVacuumError, ValueError):
    pass


class DecompositionError(SqueezedVacuumError, ValueError):
    pass


class UnsupportedKindError(SqueezedVacuumError, ValueError):
    pass


class InsufficientDataError(SqueezedVacuumError, ValueError):
    pass


class BelowGroundStateError(SqueezedVacuumError, ValueError):
    """Energy below omega/2, where no real squeeze parameters exist."""


class ImaginaryOrderError(SqueezedVacuumError, ValueError):
    """Heavy field (m > 3/2 H0): Hankel order is imaginary."""


class AsymptoticRegimeError(SqueezedVacuumError, ValueError):
    pass


class ConfigError(SqueezedVacuumError, ValueError):
    pass
