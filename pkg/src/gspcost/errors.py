"""Exception hierarchy shared across the toolkit.

Input-side problems (malformed files, bad configuration) derive from
``InputError`` so the command line can map them to exit code 2; failures
of the numerics themselves derive from ``ComputationError`` (exit code 1).
"""


class InputError(ValueError):
    """A user-supplied file or option is malformed."""


class HamiltonianFormatError(InputError):
    """Hamiltonian file violates the schema."""


class ConfigError(InputError):
    """Run configuration is incomplete or inconsistent."""


class ComputationError(RuntimeError):
    """A numerical stage failed."""


class SolverError(ComputationError):
    """Eigensolver did not converge to the requested residual."""


class FilterDepletionError(ComputationError):
    """Booster filter removed all amplitude from the state."""
