"""Exception hierarchy shared by all modules.

Each class maps to one CLI exit code so command wrappers can translate
failures into machine-parseable one-line diagnostics.
"""


class MPMError(Exception):
    """Base class for all errors raised by this package."""

    exit_code = 1


class ValidationError(MPMError):
    """Invalid argument, shape mismatch, or config inconsistency."""

    exit_code = 2


class DataFormatError(MPMError):
    """Problem with an on-disk artifact (dataset container or checkpoint).

    ``code`` distinguishes failure kinds: "corrupt-container",
    "manifest-mismatch", "version-mismatch".
    """

    exit_code = 3

    def __init__(self, code: str, message: str):
        super().__init__(f"{code}: {message}")
        self.code = code


class NonFiniteError(MPMError):
    """A loss or intermediate tensor became NaN/Inf at runtime."""

    exit_code = 4
