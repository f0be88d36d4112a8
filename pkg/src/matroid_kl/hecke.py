"""The free module ``H(M)`` over ``Z[t, 1/t]`` with basis the flats of ``M``.

Elements are :class:`HElement` values.  This module builds the zeta basis,
tests perversity, decomposes perverse elements in the zeta basis, and
implements the maps ``Delta`` (deletion), ``Phi`` and the bar involution,
along with :func:`verify_hecke`, which runs all of the structural checks
on one matroid.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping

from .errors import MatroidError
from .kl import interval_char_polynomial, kl_table, s_set, tau, z_polynomial
from .matroid import (
    Matroid,
    _drop_position,
    bits,
    closure,
    compress,
    contract,
    delete,
    is_coloop,
    localize,
)
from .polynomial import ONE, ZERO, IntPoly, is_palindromic, substitute_power

__all__ = [
    "HElement",
    "basis",
    "zeta",
    "is_perverse",
    "decompose_perverse",
    "delta_map",
    "phi_map",
    "bar_involution",
    "verify_hecke",
    "HeckeCheck",
]


class HElement:
    """``sum_F coords[F] * F`` with Laurent polynomial coordinates."""

    __slots__ = ("matroid", "coords")

    def __init__(self, matroid: Matroid, coords: Mapping[int, IntPoly] | None = None):
        self.matroid = matroid
        clean = {}
        for F, p in (coords or {}).items():
            if F not in matroid.rank_of:
                raise MatroidError(f"{matroid.labels_of(F)} is not a flat")
            if isinstance(p, int):
                p = IntPoly.constant(p)
            if not p.is_zero():
                clean[F] = p
        self.coords = clean

    def __getitem__(self, F: int) -> IntPoly:
        return self.coords.get(F, ZERO)

    def _combine(self, other: HElement, sign: int) -> HElement:
        if other.matroid != self.matroid:
            raise MatroidError("elements live in different modules")
        out = dict(self.coords)
        for F, p in other.coords.items():
            out[F] = out.get(F, ZERO) + (p if sign > 0 else -p)
        return HElement(self.matroid, out)

    def __add__(self, other: HElement) -> HElement:
        return self._combine(other, 1)

    def __sub__(self, other: HElement) -> HElement:
        return self._combine(other, -1)

    def scale(self, c) -> HElement:
        if isinstance(c, int):
            c = IntPoly.constant(c)
        return HElement(self.matroid, {F: c * p for F, p in self.coords.items()})

    def __eq__(self, other):
        if not isinstance(other, HElement):
            return NotImplemented
        return self.matroid == other.matroid and self.coords == other.coords

    def __repr__(self):
        inner = ", ".join(
            f"{self.matroid.labels_of(F)}: {p}" for F, p in sorted(self.coords.items())
        )
        return f"HElement({{{inner}}})"

    def to_json(self) -> list[dict]:
        M = self.matroid
        return [
            {"flat": M.labels_of(F), "poly": p.to_json()}
            for F, p in sorted(self.coords.items(), key=lambda kv: M.index[kv[0]])
        ]


def basis(M: Matroid, F) -> HElement:
    return HElement(M, {M.flat_mask(F): ONE})


@lru_cache(maxsize=4096)
def _zeta(M: Matroid, F: int) -> HElement:
    MF = localize(M, F)
    table = kl_table(MF).p_of_interval
    positions = bits(F)
    top = M.rank_of[F]
    coords = {}
    for G in M.flats:
        if G & F == G:
            P = table[compress(G, positions)]
            coords[G] = substitute_power(P, -2).shift(top - M.rank_of[G])
    return HElement(M, coords)


def zeta(M: Matroid, F) -> HElement:
    """``zeta^F = sum_{G <= F} t^(rk F - rk G) P_{M_G^F}(t^-2) G``."""
    return _zeta(M, M.flat_mask(F))


def _verdier_sums(alpha: HElement) -> dict[int, IntPoly]:
    M = alpha.matroid
    out = {}
    for F in M.flats:
        r = M.rank_of[F]
        acc = ZERO
        for G, p in alpha.coords.items():
            if G & F == F:
                acc = acc + p.shift(r - M.rank_of[G])
        out[F] = acc
    return out


def is_perverse(alpha: HElement) -> bool:
    """Polynomial coordinates, and ``sum_{G >= F} t^(rk F - rk G) alpha_G``
    palindromic of degree 0 at every flat ``F``."""
    if not all(p.is_polynomial() for p in alpha.coords.values()):
        return False
    return all(is_palindromic(s, 0) for s in _verdier_sums(alpha).values())


def decompose_perverse(alpha: HElement) -> dict[int, int]:
    """Coefficients of a perverse element in the zeta basis: ``F -> alpha_F(0)``.

    The expansion is re-assembled and compared with ``alpha`` before
    returning.
    """
    if not is_perverse(alpha):
        raise MatroidError("decompose_perverse needs a perverse element")
    M = alpha.matroid
    coeffs = {F: alpha[F][0] for F in M.flats}
    rebuilt = HElement(M)
    for F, c in coeffs.items():
        if c:
            rebuilt = rebuilt + zeta(M, F).scale(c)
    if rebuilt != alpha:
        raise ArithmeticError("zeta-basis reconstruction does not reproduce the input")
    return coeffs


def delta_map(M: Matroid, e, alpha: HElement, target: Matroid | None = None) -> HElement:
    """``Delta(F) = t^(-delta(F)) (F - e)`` extended linearly into
    ``H(M \\ e)``.  ``delta(F)`` is the rank drop of ``F - e`` in ``M \\ e``."""
    p = M.position(e)
    D = target if target is not None else delete(M, e)
    bit = 1 << p
    out: dict[int, IntPoly] = {}
    for F, poly in alpha.coords.items():
        G = _drop_position(F & ~bit, p)
        drop = M.rank_of[F] - D.rank_of[G]
        out[G] = out.get(G, ZERO) + poly.shift(-drop)
    return HElement(D, out)


def phi_map(M: Matroid, alpha: HElement) -> IntPoly:
    """``sum_F t^(-rk F) alpha_F``."""
    total = ZERO
    for F, p in alpha.coords.items():
        total = total + p.shift(-M.rank_of[F])
    return total


@lru_cache(maxsize=4096)
def _bar_basis(M: Matroid, F: int) -> dict[int, IntPoly]:
    top = M.rank_of[F]
    out = {}
    for G in M.flats:
        if G & F == G:
            chi = interval_char_polynomial(M, G, F)
            out[G] = substitute_power(chi, 2).shift(M.rank_of[G] - top)
    return out


def bar_involution(M: Matroid, alpha: HElement) -> HElement:
    """``bar(alpha) = sum_F alpha_F(1/t) bar(F)`` where
    ``bar(F) = sum_{G <= F} t^(rk G - rk F) chi_{M_G^F}(t^2) G``.

    The fixed points are exactly the elements satisfying the Verdier
    condition.
    """
    out: dict[int, IntPoly] = {}
    for F, p in alpha.coords.items():
        conj = substitute_power(p, -1)
        for G, q in _bar_basis(M, F).items():
            out[G] = out.get(G, ZERO) + conj * q
    return HElement(M, out)


@dataclass(frozen=True)
class HeckeCheck:
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"check": self.name, "status": "pass" if self.passed else "fail", "detail": self.detail}


def expected_delta_decomposition(M: Matroid, e, D: Matroid) -> dict[int, int]:
    """Zeta coefficients of ``Delta(zeta^E)`` predicted by the
    deletion formula: 1 at ``E - e`` and ``tau(M_{F+e})`` at each ``F`` in S."""
    p = M.position(e)
    bit = 1 << p
    expected = {G: 0 for G in D.flats}
    expected[D.full] += 1
    for F in s_set(M, e):
        expected[_drop_position(F, p)] += tau(contract(M, F | bit))
    return expected


def verify_hecke(M: Matroid) -> list[HeckeCheck]:
    """Zeta perversity and decomposition, Delta(zeta^E) decomposition,
    Phi compatibility, bar fixed points and bar squared, plus the closure
    lemma, on a single matroid."""
    checks: list[HeckeCheck] = []
    flats = M.flats

    def add(name: str, ok: bool, detail: str = ""):
        checks.append(HeckeCheck(name, bool(ok), detail))

    bad = [M.labels_of(F) for F in flats if not is_perverse(zeta(M, F))]
    add("zeta-perverse", not bad, f"non-perverse at {bad}" if bad else "")

    bad = []
    for F in flats:
        dec = decompose_perverse(zeta(M, F))
        if any(c != (1 if G == F else 0) for G, c in dec.items()):
            bad.append(M.labels_of(F))
    add("zeta-decomposition-indicator", not bad, f"wrong at {bad}" if bad else "")

    bad = [M.labels_of(F) for F in flats if bar_involution(M, zeta(M, F)) != zeta(M, F)]
    add("bar-fixes-zeta", not bad, f"not fixed: {bad}" if bad else "")

    bad = []
    for F in flats:
        probe = basis(M, F).scale(IntPoly(-1, (1, 0, 3)))
        if bar_involution(M, bar_involution(M, probe)) != probe:
            bad.append(M.labels_of(F))
    add("bar-squared-identity", not bad, f"fails on {bad}" if bad else "")

    bad = []
    for F in flats:
        Z = z_polynomial(localize(M, F))
        if phi_map(M, zeta(M, F)) != substitute_power(Z, -2).shift(M.rank_of[F]):
            bad.append(M.labels_of(F))
    add("phi-of-zeta", not bad, f"fails at {bad}" if bad else "")

    zE = zeta(M, M.full)
    for e in M.labels:
        if is_coloop(M, e):
            continue
        D = delete(M, e)
        beta = delta_map(M, e, zE, D)
        perverse = is_perverse(beta)
        add(f"delta-zeta-perverse[{e}]", perverse)
        if perverse:
            got = decompose_perverse(beta)
            want = expected_delta_decomposition(M, e, D)
            add(f"delta-zeta-decomposition[{e}]", got == want, "" if got == want else f"{got} != {want}")
        bad = [
            M.labels_of(F)
            for F in flats
            if phi_map(D, delta_map(M, e, zeta(M, F), D)) != phi_map(M, zeta(M, F))
        ]
        add(f"phi-delta-compatibility[{e}]", not bad, f"fails at {bad}" if bad else "")
        bad = [
            D.labels_of(H)
            for H in D.flats
            if M.rank_of[closure(M, D.labels_of(H))] != D.rank_of[H]
        ]
        add(f"closure-rank-lemma[{e}]", not bad, f"fails at {bad}" if bad else "")
    return checks
