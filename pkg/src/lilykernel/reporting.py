"""Per-run empirical measurements.

Class-level constants (profile counts per core vertex, closure blowups,
approximation ratios, lily ratios, kernel sizes) are never hardcoded;
instead every run can record what it actually observed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction


@dataclass(frozen=True)
class Measurement:
    name: str
    value: Fraction
    instance: str

    def __post_init__(self):
        if self.value < 0:
            raise ValueError(f"measurement {self.name} is negative: {self.value}")


@dataclass
class EmpiricalConstants:
    """Append-only log of named per-instance measurements."""

    measurements: list[Measurement] = field(default_factory=list)

    def record(self, name: str, value, instance: str = "?") -> None:
        self.measurements.append(Measurement(name, Fraction(value), instance))

    def by_name(self, name: str) -> list[Measurement]:
        return [m for m in self.measurements if m.name == name]

    def lines(self) -> list[str]:
        return [
            f"const {m.name} {m.value.numerator}/{m.value.denominator} {m.instance}"
            for m in self.measurements
        ]
