from typing import Optional


class KellyError(Exception):
    exit_code = 2

    def __init__(self, message, error=None):
        if error:
            message = f"{message}: {error}"
        super().__init__(message)

    def __str__(self):
        return f"{self.args[0]}"

    @classmethod
    def exit_code_for(cls, exc: BaseException) -> int:
        """Exit status the command line reports for `exc`."""
        if isinstance(exc, KellyError):
            return exc.exit_code
        return InternalInvariantError.exit_code


class CapacityError(KellyError):
    exit_code = 3


class ConstructionError(KellyError):
    exit_code = 4


class DomainError(KellyError):
    pass


class FormatError(KellyError):
    def __init__(self, message, error=None, line: Optional[int] = None):
        if line is not None:
            message = f"{message} (line {line})"
        super().__init__(message, error)
        self.line = line


class InternalInvariantError(KellyError):
    exit_code = 4


class ReplayError(DomainError):
    def __init__(self, message, error=None, step_index: Optional[int] = None):
        if step_index is not None:
            message = f"step {step_index}: {message}"
        super().__init__(message, error)
        self.step_index = step_index


class StructuralError(KellyError):
    pass


class UnsupportedError(KellyError):
    pass
