"""Exception taxonomy shared across the package.

The CLI maps these onto exit codes: UsageError -> 2, ResourceCapError -> 3,
VerificationError -> 1.
"""


class UsageError(ValueError):
    """A precondition on user-supplied input was violated."""


class ResourceCapError(RuntimeError):
    """A configured vertex/state cap was exceeded; the message names the cap."""


class VerificationError(AssertionError):
    """An internal check of a mathematically guaranteed property failed.

    Raised only for properties that are theorems given correct code, so a
    VerificationError always indicates an implementation bug.
    """
