"""Exception hierarchy shared by all scap modules."""


class ScapError(Exception):
    """Base class for every error raised by scap."""


class ParameterError(ScapError, ValueError):
    """An argument is outside its supported range or inconsistent."""


class CorpusError(ScapError):
    """A corpus is unusable: missing files, empty training sets, failed validation."""

    def __init__(self, message, violations=None):
        super().__init__(message)
        self.violations = list(violations or [])


class ManifestError(CorpusError):
    """A manifest line could not be parsed."""

    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno


class LexError(ScapError):
    """Java source could not be tokenized."""

    def __init__(self, message, offset):
        super().__init__(f"{message} at byte offset {offset}")
        self.offset = offset


class DegenerateSampleError(ScapError, ValueError):
    """A statistical test is undefined for the given sample (e.g. zero variance)."""
