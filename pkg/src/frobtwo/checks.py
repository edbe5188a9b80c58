"""Exact identity checks and their JSON form."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import IdentityMismatch


def frac_str(x) -> str:
    """``p/q``, or ``p`` when the denominator is 1."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class IdentityCheck:
    """Both sides of one exact identity. Truthy iff they agree."""

    name: str
    lhs: Fraction
    rhs: Fraction

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs

    def __bool__(self):
        return self.ok

    def require(self) -> "IdentityCheck":
        if not self.ok:
            raise IdentityMismatch(f"{self.name}: {frac_str(self.lhs)} != {frac_str(self.rhs)}")
        return self

    def to_json(self) -> dict:
        return {"status": "pass" if self.ok else "fail", "lhs": frac_str(self.lhs), "rhs": frac_str(self.rhs)}


def all_ok(checks) -> bool:
    return all(c.ok for c in checks)
