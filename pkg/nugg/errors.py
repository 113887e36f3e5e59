from typing import Optional


class NuggError(Exception):
    pass


class DomainError(NuggError, ValueError):
    pass


class CapabilityError(NuggError, NotImplementedError):
    pass


class DegreeSingularityError(NuggError, ZeroDivisionError):
    def __init__(self, message: str, node: Optional[int] = None) -> None:
        super().__init__(message)
        self.node = node
