"""Exception types shared across the package.

The CLI maps these onto exit codes: bad input 1, a failed verification
assertion 2, an exceeded size budget 3.
"""


class WeylkitError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(WeylkitError):
    """Malformed type string, invalid rank, bad ids, violated preconditions."""


class BudgetExceededError(WeylkitError):
    """A requested computation is larger than the configured size budget."""


class VerificationError(WeylkitError):
    """A checked identity that is supposed to hold did not.

    Raised by constructors and report functions whose whole point is to
    certify a closed-form claim against a direct computation.
    """
