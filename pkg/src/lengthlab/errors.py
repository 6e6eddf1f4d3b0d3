"""Exception hierarchy shared by the whole package."""


class LengthLabError(Exception):
    pass


class InputError(LengthLabError, ValueError):
    """Malformed or mismatched input (degrees, non-members, bad formats)."""


class CapacityError(LengthLabError):
    """A computation needs more elements or cosets than the active limit allows."""

    def __init__(self, message, required=None):
        super().__init__(message)
        self.required = required


class DomainError(LengthLabError, ValueError):
    """The operation is not defined for this kind of group."""


class FieldError(LengthLabError, ValueError):
    pass


class NormalizationError(InputError):
    pass


class NotSemidirectError(InputError):
    pass


class CoprimalityError(LengthLabError):
    pass


class InternalConsistencyError(LengthLabError):
    """A series failed to ascend strictly; indicates an algorithm bug."""


class CertificateError(LengthLabError):
    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class CorpusSyntaxError(LengthLabError):
    def __init__(self, message, line, column, source="<corpus>"):
        super().__init__(f"{source}:{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column
        self.source = source
