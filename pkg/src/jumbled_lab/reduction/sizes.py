"""Measured text length against the predicted growth rate."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from jumbled_lab.reduction.abc3 import Abc3ReductionText


@dataclass(frozen=True)
class SizeReport:
    variant: str
    n: int
    k: int
    s: int
    predicted: float

    @property
    def ratio(self) -> float:
        return self.s / self.predicted


def predicted_length(n: int, k: int, variant: str) -> float:
    """Growth rate with unit constant: k*n^(1+2/k), k*n^(1+1/k) or n^(3/2)."""
    if variant == "abc3":
        return n ** 1.5
    if variant == "standard":
        return k * n ** (1 + 2 / k)
    if variant == "strong":
        return k * n ** (1 + 1 / k)
    raise ValueError(f"unknown variant {variant!r}")


def size_report(construction, variant: Optional[str] = None) -> SizeReport:
    if isinstance(construction, Abc3ReductionText):
        variant, k = "abc3", 2
    else:
        variant = variant or construction.basis.variant
        k = construction.basis.k
    n = construction.instance.n
    return SizeReport(variant, n, k, len(construction.text), predicted_length(n, k, variant))
