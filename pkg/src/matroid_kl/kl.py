"""Kazhdan-Lusztig and Z-polynomials, the tau invariant, characteristic
polynomials, and both sides of the deletion formula.

The KL polynomial of every upper interval ``[F, E]`` is computed in one pass
from the top of the lattice down: with ``f_F = sum_{G > F} t^(rk G - rk F)
P_[G,E]``, the polynomial ``P_[F,E]`` is the palindromic completion of
``f_F`` in degree ``crk F``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import ColoopError, MatroidError
from .matroid import Matroid, closure, contract, delete, is_coloop, localize
from .polynomial import ONE, T, IntPoly, palindromic_completion

__all__ = [
    "KLTable",
    "kl_table",
    "kl_polynomial",
    "z_polynomial",
    "tau",
    "linear_coefficient",
    "mobius_from",
    "char_polynomial",
    "interval_char_polynomial",
    "s_set",
    "deletion_rhs_P",
    "deletion_rhs_Z",
    "DeletionCheck",
    "verify_deletion",
]


@dataclass(frozen=True)
class KLTable:
    matroid: Matroid
    p_of_interval: dict[int, IntPoly] = field(repr=False)
    z: IntPoly

    @property
    def kl(self) -> IntPoly:
        return self.p_of_interval[self.matroid.flats[0]]


def _mask_array(M: Matroid) -> np.ndarray:
    dtype = np.int64 if M.n < 63 else object
    return np.array(M.flats, dtype=dtype)


@lru_cache(maxsize=512)
def kl_table(M: Matroid) -> KLTable:
    flats = M.flats
    rank_of = M.rank_of
    d = M.rank
    masks = _mask_array(M)
    # row j holds the coefficients of t^(rk G) P_[G,E] for G = flats[j]
    shifted = np.zeros((len(flats), d + 1), dtype=object)
    table: dict[int, IntPoly] = {}
    for i in range(len(flats) - 1, -1, -1):
        F = flats[i]
        r = rank_of[F]
        if r == d:
            P = ONE
        else:
            # strict supersets have strictly higher rank, hence larger index
            above = np.nonzero((masks[i + 1 :] & F) == F)[0] + (i + 1)
            total = shifted[above].sum(axis=0)
            f = IntPoly(0, [int(c) for c in total[r:]])
            P = palindromic_completion(f, d - r)
        table[F] = P
        for k, c in enumerate(P.coeffs):
            shifted[i, r + P.low + k] = c
    z = IntPoly(0, [int(c) for c in shifted.sum(axis=0)]) if len(flats) else ONE
    return KLTable(M, table, z)


def kl_polynomial(M: Matroid) -> IntPoly:
    return kl_table(M).kl


def z_polynomial(M: Matroid) -> IntPoly:
    """``Z_M = sum_F t^(rk F) P_{M_F}``."""
    return kl_table(M).z


def tau(M: Matroid) -> int:
    """Coefficient of ``t^((rk-1)/2)`` in ``P_M`` for odd rank, else 0."""
    if M.rank % 2 == 0:
        return 0
    return kl_polynomial(M)[(M.rank - 1) // 2]


def linear_coefficient(M: Matroid) -> int:
    """Number of coatoms minus number of atoms."""
    if M.rank < 1:
        raise MatroidError("linear_coefficient needs a matroid of positive rank")
    return len(M.coatoms) - len(M.atoms)


def mobius_from(M: Matroid, G: int) -> dict[int, int]:
    """``mu(G, H)`` for every flat ``H >= G``."""
    masks = _mask_array(M)
    start = M.index[G]
    mu = np.zeros(len(M.flats), dtype=object)
    out = {}
    for i in range(start, len(M.flats)):
        H = M.flats[i]
        if H & G != G:
            continue
        if i == start:
            val = 1
        else:
            below = np.nonzero((masks[start:i] & ~H) == 0)[0] + start
            val = -int(mu[below].sum()) if len(below) else 0
        mu[i] = val
        out[H] = val
    return out


def interval_char_polynomial(M: Matroid, G: int, F: int) -> IntPoly:
    """Characteristic polynomial of the minor ``M_G^F``, read off the
    Mobius function of ``M`` on the interval ``[G, F]``."""
    top = M.rank_of[F]
    terms: dict[int, int] = {}
    for H, m in mobius_from(M, G).items():
        if H & F == H and m:
            k = top - M.rank_of[H]
            terms[k] = terms.get(k, 0) + m
    return IntPoly.from_terms(terms)


def char_polynomial(M: Matroid) -> IntPoly:
    """``chi_M(t) = sum_F mu(0, F) t^(crk F)``."""
    return interval_char_polynomial(M, M.flats[0], M.full)


def s_set(M: Matroid, e) -> list[int]:
    """Flats ``F`` with ``e`` not in ``F`` and ``F + e`` also a flat."""
    bit = 1 << M.position(e)
    return [F for F in M.flats if not F & bit and (F | bit) in M.rank_of]


def _require_non_coloop(M: Matroid, e) -> int:
    if is_coloop(M, e):
        raise ColoopError(f"element {e!r} is a coloop; the deletion formula does not apply")
    return 1 << M.position(e)


def _correction_terms(M: Matroid, e, bit: int):
    """Yield ``(tau(M_{F+e}) t^(crk F / 2), F)`` for the even-corank ``F`` in S."""
    for F in s_set(M, e):
        c = M.corank(F)
        if c % 2:
            continue
        weight = tau(contract(M, F | bit))
        if weight:
            yield IntPoly.monomial(c // 2, weight), F


def deletion_rhs_P(M: Matroid, e) -> IntPoly:
    """``P_{M\\e} - t P_{M_e} + sum_{F in S} tau(M_{F+e}) t^(crk F/2) P_{M^F}``."""
    bit = _require_non_coloop(M, e)
    total = kl_polynomial(delete(M, e)) - T * kl_polynomial(contract(M, closure(M, bit)))
    for w, F in _correction_terms(M, e, bit):
        total = total + w * kl_polynomial(localize(M, F))
    return total


def deletion_rhs_Z(M: Matroid, e) -> IntPoly:
    """``Z_{M\\e} + sum_{F in S} tau(M_{F+e}) t^(crk F/2) Z_{M^F}``."""
    bit = _require_non_coloop(M, e)
    total = z_polynomial(delete(M, e))
    for w, F in _correction_terms(M, e, bit):
        total = total + w * z_polynomial(localize(M, F))
    return total


@dataclass(frozen=True)
class DeletionCheck:
    element: object
    formula: str
    status: str
    lhs: IntPoly | None = None
    rhs: IntPoly | None = None

    @property
    def passed(self) -> bool:
        return self.status != "fail"

    def to_json(self) -> dict:
        return {
            "element": self.element,
            "formula": self.formula,
            "status": self.status,
            "lhs": None if self.lhs is None else self.lhs.to_json(),
            "rhs": None if self.rhs is None else self.rhs.to_json(),
        }


def verify_deletion(M: Matroid) -> list[DeletionCheck]:
    """Check both deletion formulas at every element; coloops are skipped."""
    out = []
    P = kl_polynomial(M)
    Z = z_polynomial(M)
    for e in M.labels:
        if is_coloop(M, e):
            for formula in ("P", "Z"):
                out.append(DeletionCheck(e, formula, "skipped-coloop"))
            continue
        for formula, lhs, rhs_fn in (("P", P, deletion_rhs_P), ("Z", Z, deletion_rhs_Z)):
            rhs = rhs_fn(M, e)
            out.append(DeletionCheck(e, formula, "pass" if lhs == rhs else "fail", lhs, rhs))
    return out

