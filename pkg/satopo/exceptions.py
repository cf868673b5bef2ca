from typing import Any, Optional


class SatopoError(Exception):
    pass


class DegenerateInputError(SatopoError):
    pass


class InfiniteCriticalSetError(DegenerateInputError):
    pass


class EndpointRootError(SatopoError):
    def __init__(self, message: str, endpoint: str):
        super().__init__(message)
        self.endpoint: str = endpoint


class PreconditionError(SatopoError):
    pass


class SeparationError(PreconditionError):
    def __init__(self, message: str, conflict: Optional[Any] = None):
        super().__init__(message)
        self.conflict: Optional[Any] = conflict


class InstabilityError(SatopoError):
    pass


class HypothesisViolation(SatopoError):
    pass


class ExpressionError(SatopoError):
    pass


class CorpusParseError(SatopoError):
    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number: int = line_number
