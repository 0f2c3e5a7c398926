"""Exception hierarchy shared by the aligner, harness and CLI."""


class AlignError(Exception):
    """Base class for all errors raised by bitalign."""


class InputError(AlignError):
    """Bad user input: empty sequences, malformed files, oversized inputs."""


class ParseError(InputError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ConfigError(AlignError, ValueError):
    """Invalid aligner configuration (window sizes, incompatible flags)."""


class InternalConsistencyError(AlignError):
    """A DP table or traceback violated an invariant that must always hold."""


class OutOfStoredRegionError(InternalConsistencyError):
    """Traceback (or a test accessor) touched table data that was discarded."""
