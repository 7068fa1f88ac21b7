"""Exception types shared across the package.

The CLI maps these onto exit codes: input/validation problems exit 2,
exhausted caps exit 3.
"""


class PPCoverError(Exception):
    """Base class for all package errors."""


class InputError(PPCoverError, ValueError):
    """Malformed user input (cycle strings, group files, parameters)."""


class ValidationError(PPCoverError, ValueError):
    """A structural precondition failed (normality, containment, transitivity...)."""


class CapExceeded(PPCoverError, RuntimeError):
    """A configured size cap or step budget would be exceeded.

    ``cap`` names the configuration value, ``limit`` is its setting and
    ``needed`` the size that was requested (when known).
    """

    def __init__(self, cap, limit, needed=None, what=""):
        self.cap = cap
        self.limit = limit
        self.needed = needed
        msg = f"{cap} cap exceeded (limit {limit}"
        if needed is not None:
            msg += f", needed {needed}"
        msg += ")"
        if what:
            msg = f"{what}: {msg}"
        super().__init__(msg)


class NotAnAutomorphism(ValidationError):
    """Generator images do not extend to an automorphism."""


class TheoremViolation(PPCoverError, AssertionError):
    """A computation contradicted a published theorem; always a bug."""
