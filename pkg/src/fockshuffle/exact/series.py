"""Truncated expansions of rational functions in an auxiliary variable z."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class Direction(Enum):
    AT_INFINITY = "inf"  # powers of z^-1
    AT_ZERO = "zero"  # powers of z


class SeriesPoleError(ArithmeticError):
    """The function cannot be expanded as a power series in the chosen direction."""


@dataclass(frozen=True)
class TruncSeries:
    direction: Direction
    order: int
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.order + 1:
            raise ValueError("coefficient count must be order + 1")

    def __getitem__(self, k: int):
        """Coefficient k; zero for negative k."""
        if k < 0:
            return self.coeffs[0] * 0
        return self.coeffs[k]

    def truncate(self, n: int) -> "TruncSeries":
        return TruncSeries(self.direction, n, self.coeffs[: n + 1])

    def __mul__(self, other: "TruncSeries") -> "TruncSeries":
        if other.direction != self.direction:
            raise ValueError("cannot multiply series in different directions")
        n = min(self.order, other.order)
        out = []
        for k in range(n + 1):
            acc = self.coeffs[0] * other.coeffs[k]
            for i in range(1, k + 1):
                acc = acc + self.coeffs[i] * other.coeffs[k - i]
            out.append(acc)
        return TruncSeries(self.direction, n, tuple(out))

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return (
            self.direction == other.direction
            and self.order == other.order
            and all(a == b for a, b in zip(self.coeffs, other.coeffs))
        )

    __hash__ = None


class ZRational:
    """num(z) / den(z) with coefficients in a field; both are maps power -> coefficient.

    Powers may be negative, so ``1 - z^-1`` is ``{0: 1, -1: -1}``.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: dict, den: dict):
        self.num = {k: v for k, v in num.items() if v != 0}
        self.den = {k: v for k, v in den.items() if v != 0}
        if not self.den:
            raise ZeroDivisionError("zero denominator in z")

    @staticmethod
    def _mul(a: dict, b: dict) -> dict:
        out: dict = {}
        for i, x in a.items():
            for j, y in b.items():
                k = i + j
                out[k] = out[k] + x * y if k in out else x * y
        return out

    def __mul__(self, other: "ZRational") -> "ZRational":
        return ZRational(self._mul(self.num, other.num), self._mul(self.den, other.den))


def expand_series(f: ZRational, direction: Direction, order: int) -> TruncSeries:
    """Coefficients 0..order of f expanded at z = infinity (in z^-1) or at z = 0 (in z)."""
    if order < 0:
        raise ValueError("order must be non-negative")
    sgn = -1 if direction is Direction.AT_INFINITY else 1
    # re-index by the expansion variable u (u = z^-1 or u = z)
    num = {sgn * k: v for k, v in f.num.items()}
    den = {sgn * k: v for k, v in f.den.items()}
    d0 = min(den)
    lead = den[d0]
    try:
        inv_lead = 1 / lead
    except ZeroDivisionError as exc:
        raise SeriesPoleError("leading denominator coefficient is not invertible") from exc
    num = {k - d0: v for k, v in num.items()}
    den = {k - d0: v for k, v in den.items()}
    if num and min(num) < 0:
        raise SeriesPoleError("function has a pole at the expansion point")
    zero = lead * 0
    out = []
    for k in range(order + 1):
        acc = num.get(k, zero)
        for j in range(1, k + 1):
            dj = den.get(j)
            if dj is not None:
                acc = acc - dj * out[k - j]
        out.append(acc * inv_lead)
    return TruncSeries(direction, order, tuple(out))
