"""Exception taxonomy shared by the library and the command-line tool.

Three families matter to callers:

* :class:`ConfigError` -- the inputs themselves are malformed (bad field
  values, unparseable config file, illegal integrator step).  The CLI maps
  these to exit code 2.
* :class:`PhysicsDomainError` -- the inputs are well formed but describe a
  regime the model refuses (trap instability, rotating-wall window
  violations, adiabaticity premise failures).  Exit code 3.
* :class:`IntegrationAbortError` -- a numerical run had to stop (non-finite
  state, particle coincidence).  Exit code 4.
"""


class ConfigError(ValueError):
    """Invalid configuration value, file, or command-line input."""


class StepSizeError(ConfigError):
    """Requested integrator step violates the cyclotron resolution guard."""


class PhysicsDomainError(ValueError):
    """Physically meaningful inputs outside the validity of the model."""


class TrapInstabilityError(PhysicsDomainError):
    """Trap does not confine: the axial frequency is too large for the field."""


class NoRadialConfinementError(PhysicsDomainError):
    """Rotating-wall frequency below the window: no radial restoring force."""


class SeparationAxisError(PhysicsDomainError):
    """Rotating-wall frequency above the window: weak axis is no longer x."""


class UnstableModeError(PhysicsDomainError):
    """Linearized dynamics produced an eigenvalue with a real part."""


class AdiabaticPremiseError(PhysicsDomainError):
    """Effective off-resonant pulse requested without |detuning| >= 5*rabi."""


class DegenerateCurveError(PhysicsDomainError):
    """Phase curve carries no usable fringe slope anywhere on the grid."""


class IntegrationAbortError(RuntimeError):
    """Classical integration aborted (non-finite state or coincidence)."""
