"""Truncated power series in ``u`` whose coefficients are Laurent polynomials
in ``t``.  All arithmetic is exact modulo ``u^(order+1)``; divisions that do
not come out even raise :class:`ArithmeticError`."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .polynomial import ONE, ZERO, IntPoly

__all__ = ["BivariateSeries"]


@dataclass(frozen=True)
class BivariateSeries:
    order: int
    coeffs: tuple[IntPoly, ...]

    def __init__(self, order: int, coeffs: Sequence[IntPoly | int] = ()):
        if order < 0:
            raise ValueError("series order must be nonnegative")
        cs = [c if isinstance(c, IntPoly) else IntPoly.constant(c) for c in coeffs[: order + 1]]
        cs += [ZERO] * (order + 1 - len(cs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __getitem__(self, k: int) -> IntPoly:
        if 0 <= k <= self.order:
            return self.coeffs[k]
        return ZERO

    def truncate(self, order: int) -> BivariateSeries:
        return BivariateSeries(order, self.coeffs[: order + 1])

    def _common(self, other: BivariateSeries) -> int:
        return min(self.order, other.order)

    def __add__(self, other: BivariateSeries) -> BivariateSeries:
        n = self._common(other)
        return BivariateSeries(n, [self[k] + other[k] for k in range(n + 1)])

    def __neg__(self) -> BivariateSeries:
        return BivariateSeries(self.order, [-c for c in self.coeffs])

    def __sub__(self, other: BivariateSeries) -> BivariateSeries:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (IntPoly, int)):
            return BivariateSeries(self.order, [c * other for c in self.coeffs])
        n = self._common(other)
        out = [ZERO] * (n + 1)
        for i in range(n + 1):
            a = self[i]
            if a.is_zero():
                continue
            for j in range(n + 1 - i):
                out[i + j] = out[i + j] + a * other[j]
        return BivariateSeries(n, out)

    __rmul__ = __mul__

    def times_u(self, k: int = 1) -> BivariateSeries:
        """Multiply by ``u^k`` keeping the order."""
        return BivariateSeries(self.order, [ZERO] * k + list(self.coeffs[: self.order + 1 - k]))

    def div_u(self, k: int = 1) -> BivariateSeries:
        """Divide by ``u^k``; the first ``k`` coefficients must vanish.
        The order drops by ``k``."""
        if any(not c.is_zero() for c in self.coeffs[:k]):
            raise ArithmeticError(f"series is not divisible by u^{k}")
        return BivariateSeries(self.order - k, self.coeffs[k:])

    def map_coeffs(self, fn) -> BivariateSeries:
        return BivariateSeries(self.order, [fn(c) for c in self.coeffs])

    def inverse(self) -> BivariateSeries:
        """Multiplicative inverse; the constant term must be ``1`` or ``-1``."""
        a0 = self[0]
        if a0 not in (ONE, -ONE):
            raise ArithmeticError("only series with constant term +-1 are invertible here")
        sign = a0.coeffs[0]
        out = [a0]
        for k in range(1, self.order + 1):
            acc = ZERO
            for j in range(1, k + 1):
                acc = acc + self[j] * out[k - j]
            out.append(acc * (-sign))
        return BivariateSeries(self.order, out)

    def sqrt(self) -> BivariateSeries:
        """Square root with constant term 1 by Newton iteration,
        doubling the precision at each step."""
        if self[0] != ONE:
            raise ArithmeticError("square root needs constant term 1")
        root = BivariateSeries(0, [ONE])
        prec = 0
        while prec < self.order:
            prec = min(2 * prec + 1, self.order)
            s = root.truncate(prec) if root.order >= prec else BivariateSeries(prec, root.coeffs)
            residual = self.truncate(prec) - s * s
            step = (residual * s.inverse()).map_coeffs(lambda c: c.exact_div(2))
            root = s + step
        return root.truncate(self.order) if root.order >= self.order else BivariateSeries(self.order, root.coeffs)

    def to_json(self) -> list:
        return [c.to_json() for c in self.coeffs]
