"""Self-verifying inequality reports emitted by every checker."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class BoundReport:
    """One named inequality check: ``lhs <= rhs + tol``.

    The pass flag is always recomputable from (lhs, rhs, tol); ``slack``
    is rhs - lhs. Equality checks are encoded as lhs = |a - b|, rhs = 0.
    """

    name: str
    lhs: float
    rhs: float
    slack: float
    tol: float
    passed: bool
    regime_flags: tuple = ()

    @classmethod
    def compare(cls, name, lhs, rhs, tol, flags=()) -> "BoundReport":
        lhs = float(lhs)
        rhs = float(rhs)
        return cls(name, lhs, rhs, rhs - lhs, float(tol), lhs <= rhs + tol, tuple(flags))

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "slack": self.slack,
            "tol": self.tol,
            "pass": self.passed,
            "regime_flags": list(self.regime_flags),
        }
