"""Exceptions and the shared validation/verdict records."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


class CauchydenError(Exception):
    """Base class for all library errors."""


class StructureError(CauchydenError):
    """Malformed input: non-total tables, dangling or duplicate ids."""


class CapExceeded(CauchydenError):
    """An exhaustive search would exceed its configured size cap."""


class PreconditionError(CauchydenError):
    """An operation was called on input outside its domain.

    ``certificate`` carries whatever witness explains the failure.
    """

    def __init__(self, message: str, certificate: Any = None):
        super().__init__(message)
        self.certificate = certificate


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    axiom: str | None = None
    witness: tuple = ()

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def passed(cls) -> "ValidationReport":
        return cls(True)

    @classmethod
    def failed(cls, axiom: str, *witness: Any) -> "ValidationReport":
        return cls(False, axiom, tuple(witness))


@dataclass
class Verdict:
    """A yes/no answer together with a finite certificate.

    Truthiness is the answer; ``certificate`` is JSON-friendly data.
    """

    holds: bool
    certificate: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.holds
