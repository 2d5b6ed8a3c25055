"""Shared validity-report type returned by the validators."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class ValidityReport:
    ok: bool
    failures: list[str] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def from_failures(cls, failures: list[str], details: dict | None = None) -> "ValidityReport":
        return cls(ok=not failures, failures=failures, details=details or {})
