"""Exception types shared across the library.

The CLI maps these onto exit codes (precondition violations -> 2,
resource-guard rejections -> 3), so library code should raise the most
specific class that applies.
"""


class PreconditionError(ValueError):
    """An operation was invoked with arguments outside its contract."""


class ResourceGuardError(RuntimeError):
    """An enumeration was rejected because it exceeds the configured guard."""


class SelfCheckError(RuntimeError):
    """An internal dual-route computation disagreed with itself.

    Raised by operations that compute a value both from a closed-form
    identity and from a direct definition-level computation; disagreement
    means a bug, never a user error.
    """
