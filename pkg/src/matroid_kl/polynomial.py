"""Exact Laurent polynomials in one variable ``t`` with integer coefficients.

An :class:`IntPoly` stores the lowest exponent together with a dense tuple of
coefficients, so ``IntPoly(-1, (2, 0, 3))`` is ``2 t^-1 + 3 t``.  Values are
always kept canonical (no zero coefficients at either end; the zero
polynomial is ``IntPoly(0, ())``), which makes ``==`` and ``hash``
structural.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "IntPoly",
    "ZERO",
    "ONE",
    "T",
    "poly_add",
    "poly_mul",
    "substitute_power",
    "is_palindromic",
    "palindromic_completion",
]


def _canonical(low: int, coeffs: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    start = 0
    stop = len(coeffs)
    while start < stop and coeffs[start] == 0:
        start += 1
    while stop > start and coeffs[stop - 1] == 0:
        stop -= 1
    if start == stop:
        return 0, ()
    return low + start, tuple(int(c) for c in coeffs[start:stop])


@dataclass(frozen=True, init=False)
class IntPoly:
    low: int
    coeffs: tuple[int, ...]

    def __init__(self, low: int = 0, coeffs: Iterable[int] = ()):
        low, coeffs = _canonical(int(low), list(coeffs))
        object.__setattr__(self, "low", low)
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], low: int = 0) -> IntPoly:
        """Build ``sum(c_i t^(low+i))`` from an ordinary coefficient list."""
        return cls(low, coeffs)

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> IntPoly:
        return cls(exponent, (coefficient,))

    @classmethod
    def constant(cls, c: int) -> IntPoly:
        return cls(0, (c,))

    @classmethod
    def from_terms(cls, terms: dict[int, int]) -> IntPoly:
        """Build from a sparse ``{exponent: coefficient}`` mapping."""
        if not terms:
            return ZERO
        lo = min(terms)
        hi = max(terms)
        dense = [0] * (hi - lo + 1)
        for k, c in terms.items():
            dense[k - lo] += c
        return cls(lo, dense)

    # -- inspection -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def high(self) -> int | float:
        """Largest exponent with nonzero coefficient; ``-inf`` for zero."""
        if not self.coeffs:
            return -math.inf
        return self.low + len(self.coeffs) - 1

    @property
    def degree(self) -> int | float:
        return self.high

    def is_polynomial(self) -> bool:
        """True when there are no negative powers of ``t``."""
        return not self.coeffs or self.low >= 0

    def __getitem__(self, k: int) -> int:
        i = k - self.low
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def terms(self) -> dict[int, int]:
        return {self.low + i: c for i, c in enumerate(self.coeffs) if c}

    def to_list(self) -> list[int]:
        """Coefficients from degree 0 upward.  Only valid for polynomials."""
        if not self.is_polynomial():
            raise ValueError(f"{self} has negative exponents")
        if not self.coeffs:
            return []
        return [0] * self.low + list(self.coeffs)

    def to_json(self):
        if self.is_polynomial():
            return self.to_list()
        return {"low": self.low, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, data) -> IntPoly:
        if isinstance(data, dict):
            return cls(int(data.get("low", 0)), [int(c) for c in data["coeffs"]])
        return cls(0, [int(c) for c in data])

    def __call__(self, x):
        return sum(c * x ** (self.low + i) for i, c in enumerate(self.coeffs))

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return poly_add(self, other)

    __radd__ = __add__

    def __neg__(self) -> IntPoly:
        return IntPoly(self.low, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return poly_add(self, -other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return poly_add(other, -self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> IntPoly:
        if n < 0:
            raise ValueError("negative powers are only defined for monomials")
        out = ONE
        for _ in range(n):
            out = out * self
        return out

    def shift(self, k: int) -> IntPoly:
        """Multiply by ``t^k``."""
        if not self.coeffs:
            return self
        return IntPoly(self.low + k, self.coeffs)

    def exact_div(self, c: int) -> IntPoly:
        """Divide every coefficient by the integer ``c``; raise if inexact."""
        if c == 0:
            raise ZeroDivisionError("division of IntPoly by zero")
        out = []
        for x in self.coeffs:
            q, r = divmod(x, c)
            if r:
                raise ArithmeticError(f"{self} is not divisible by {c}")
            out.append(q)
        return IntPoly(self.low, out)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly.constant(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.low == other.low and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.low, self.coeffs))

    def __repr__(self):
        return f"IntPoly({self.low}, {self.coeffs})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in sorted(self.terms().items()):
            if k == 0:
                mono = str(abs(c))
            else:
                power = "t" if k == 1 else f"t^{k}"
                mono = power if abs(c) == 1 else f"{abs(c)}{power}"
            if not parts:
                parts.append(mono if c > 0 else "-" + mono)
            else:
                parts.append(("+ " if c > 0 else "- ") + mono)
        return " ".join(parts)


def _coerce(x):
    if isinstance(x, IntPoly):
        return x
    if isinstance(x, int):
        return IntPoly.constant(x)
    return NotImplemented


ZERO = IntPoly()
ONE = IntPoly(0, (1,))
T = IntPoly(1, (1,))


def poly_add(f: IntPoly, g: IntPoly) -> IntPoly:
    if not f.coeffs:
        return g
    if not g.coeffs:
        return f
    lo = min(f.low, g.low)
    hi = max(f.high, g.high)
    out = [0] * (hi - lo + 1)
    for i, c in enumerate(f.coeffs):
        out[f.low - lo + i] += c
    for i, c in enumerate(g.coeffs):
        out[g.low - lo + i] += c
    return IntPoly(lo, out)


def poly_mul(f: IntPoly, g: IntPoly) -> IntPoly:
    if not f.coeffs or not g.coeffs:
        return ZERO
    out = [0] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, a in enumerate(f.coeffs):
        if a:
            for j, b in enumerate(g.coeffs):
                out[i + j] += a * b
    return IntPoly(f.low + g.low, out)


def substitute_power(f: IntPoly, k: int) -> IntPoly:
    """Return ``f(t^k)``."""
    if k == 0:
        raise ValueError("substitute_power needs a nonzero exponent")
    return IntPoly.from_terms({e * k: c for e, c in f.terms().items()})


def is_palindromic(f: IntPoly, n: int) -> bool:
    """Whether ``f(t) == t^n f(1/t)``, i.e. ``a_k == a_{n-k}`` for all ``k``."""
    return all(f[n - k] == c for k, c in f.terms().items())


def palindromic_completion(f: IntPoly, d: int) -> IntPoly:
    """The unique ``g`` with ``deg g < d/2`` such that ``f + g`` is in ``Pal(d)``.

    Coefficients at ``k >= d/2`` are left alone, so the lower half is forced:
    ``g_k = f_{d-k} - f_k`` for ``k < d/2``.  Exponents below ``d - high(f)``
    and above ``d - low(f)`` have nothing to mirror, which bounds the loop.
    """
    if d < 0:
        raise ValueError("palindromic_completion needs d >= 0")
    if not f.coeffs:
        return ZERO
    lo = min(f.low, d - f.high)
    terms = {}
    k = lo
    while 2 * k < d:
        diff = f[d - k] - f[k]
        if diff:
            terms[k] = diff
        k += 1
    return IntPoly.from_terms(terms)
