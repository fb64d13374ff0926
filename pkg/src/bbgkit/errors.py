"""Exception types shared across the package.

Each maps onto one CLI exit code: input errors exit 2, uncertified
hypotheses exit 3.
"""


class BBGKitError(Exception):
    """Base class for all package errors."""


class InputError(BBGKitError, ValueError):
    """Malformed or inconsistent user input (unknown vertex, bad JSON, ...)."""


class PreconditionError(BBGKitError, ValueError):
    """An operation was called outside its documented domain."""


class DimensionError(PreconditionError):
    """The flag complex has the wrong dimension for the requested operation."""


class HypothesisNotCertified(BBGKitError):
    """Biconnectivity or simple connectivity could not be certified.

    ``status`` is the verdict-level label reported to callers and ``detail``
    explains which hypothesis failed.
    """

    def __init__(self, detail, status="NOT_APPLICABLE"):
        super().__init__(detail)
        self.detail = detail
        self.status = status
