"""Exception hierarchy.

Every error carries a stable string ``code`` (``E_PARSE``, ``E_BUDGET``, ...)
which the command line front end maps to an exit status.
"""


class SphereArrError(Exception):
    """Base class for all errors raised by this package."""

    code = "E_INTERNAL"

    def __init__(self, code=None, message=""):
        if code is not None:
            self.code = code
        self.message = message
        super().__init__(f"{self.code}: {message}" if message else self.code)


class InputError(SphereArrError):
    """Malformed or semantically invalid user input (arrangements, words)."""

    code = "E_INPUT"


class BudgetError(SphereArrError):
    """A configured size limit was exceeded; nothing was truncated silently."""

    code = "E_BUDGET"


class ComputationError(SphereArrError):
    """An internal consistency check failed.

    For valid input these never fire; seeing one means either the input
    violated a precondition or there is a bug.
    """

    code = "E_INTERNAL"
