"""Exception hierarchy.  The CLI maps these onto exit codes."""


class SactsError(Exception):
    pass


class InputError(SactsError, ValueError):
    """Malformed table, file, or argument (exit status 2)."""


class ParseError(InputError):
    def __init__(self, message, path=None, line=None, column=None):
        self.path = path
        self.line = line
        self.column = column
        where = ":".join(str(p) for p in (path, line, column) if p is not None)
        super().__init__(f"{where}: {message}" if where else message)


class ValidationError(InputError):
    """A table violates a monoid/act/congruence/homomorphism axiom.

    ``witness`` holds the first violating tuple found.
    """

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class PreconditionError(InputError):
    pass


class CapExceeded(SactsError):
    """An enumeration guard was hit (exit status 3)."""

    def __init__(self, what, size, cap, flag):
        self.what = what
        self.size = size
        self.cap = cap
        self.flag = flag
        super().__init__(f"{what}: size {size} exceeds cap {cap}; raise it with {flag}")


class ConsistencyError(SactsError):
    """Two routes that must agree produced different answers.  Always a bug."""

    def __init__(self, message, report=None):
        self.report = report
        super().__init__(message)
