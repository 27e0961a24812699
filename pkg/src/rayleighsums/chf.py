"""Power sums over the nontrivial zeros of the Kummer function 1F1(a; b; z).

S_p = sum over zeros z_k of z_k^(-p) converges for p > 1 only, so tables
start at S_2. The convolution recurrence is

    S_2 = a(a-b) / (b^2 (b+1)),
    S_3 = a(a-b)(b-2a) / (b^3 (b+1)(b+2)),
    S_{k+1} = [ (b-2a) S_k + b * sum_{m=2}^{k-1} S_m S_{k-m+1} ] / (b(k+b)),
    k >= 3.

Zeros are generally complex and are never enumerated here; the sums are
exact rationals computed from the series coefficients alone, which is
valid regardless of where the zeros lie. a = 0 gives the constant
function, hence no zeros and all sums zero, consistent with the seeds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import ClassVar

from .errors import InvalidParameterError, PoleError

__all__ = ["ChfParams", "STable", "s_table"]


@dataclass(frozen=True)
class ChfParams:
    """Kummer parameters; b must not be zero or a negative integer."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        a = Fraction(self.a)
        b = Fraction(self.b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        if b.denominator == 1 and b <= 0:
            raise InvalidParameterError(
                f"b = {b} is zero or a negative integer; 1F1(a; b; z) is undefined"
            )


@dataclass(frozen=True)
class STable:
    """Entries S_2 .. S_order (index 2 is the first convergent sum)."""

    params: ChfParams
    order: int
    entries: tuple
    provenance: str

    family: ClassVar[str] = "chf"
    start: ClassVar[int] = 2

    def entry(self, p: int) -> Fraction:
        if not 2 <= p <= self.order:
            raise IndexError(f"S_{p} not in table reaching S_{self.order}")
        return self.entries[p - 2]


def s_table(params: ChfParams, order: int) -> STable:
    """Exact S_2 .. S_order by the convolution recurrence."""
    if order < 2:
        raise InvalidParameterError("the first convergent sum is S_2; order must be >= 2")
    a, b = params.a, params.b
    entries = [a * (a - b) / (b * b * (b + 1))]
    if order >= 3:
        entries.append(a * (a - b) * (b - 2 * a) / (b**3 * (b + 1) * (b + 2)))
    for k in range(3, order):
        if not b + k:
            raise PoleError(f"S_{k + 1} divides by (b + {k}) = 0", index=k)
        acc = Fraction(0)
        for m in range(2, k):
            acc += entries[m - 2] * entries[k - m - 1]
        entries.append(((b - 2 * a) * entries[k - 2] + b * acc) / (b * (k + b)))
    return STable(params=params, order=order, entries=tuple(entries), provenance="riccati")
