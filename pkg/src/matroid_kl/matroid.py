"""Matroids given explicitly by their lattice of flats.

Flats are Python ints used as bitsets over element *positions* ``0..n-1``.
Each position carries a label (the original element id), and labels survive
every minor operation, so an element keeps its name after deletions and
contractions.  Operations that take an element take its label; operations
that take a flat accept either a bitmask or a collection of labels.
"""

from __future__ import annotations

from itertools import combinations
from typing import Hashable, Iterable, Sequence

from .errors import (
    AxiomError,
    InvalidElementError,
    MatroidError,
    NotAFlatError,
    SizeCapError,
)

__all__ = [
    "DEFAULT_CAP",
    "Matroid",
    "from_flats",
    "closure",
    "uniform_matroid",
    "boolean_matroid",
    "direct_sum",
    "delete",
    "contract",
    "localize",
    "minor",
    "is_coloop",
    "simplify",
    "check_cap",
]

DEFAULT_CAP = 24


def popcount(x: int) -> int:
    return bin(x).count("1")


def bits(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def compress(mask: int, positions: Sequence[int]) -> int:
    """Re-index ``mask`` onto ``positions``: bit ``i`` of the result is
    bit ``positions[i]`` of the input."""
    out = 0
    for i, p in enumerate(positions):
        if mask >> p & 1:
            out |= 1 << i
    return out


def check_cap(n: int, cap: int | None = DEFAULT_CAP) -> None:
    if cap is not None and n > cap:
        raise SizeCapError(f"ground set of size {n} exceeds the cap of {cap} elements")


class Matroid:
    """A matroid on positions ``0..n-1`` stored as its ranked lattice of flats.

    The constructor trusts its input; use :func:`from_flats` for validation.
    ``flats`` is sorted by ``(rank, mask)`` so ``flats[0]`` is the bottom
    element (the empty set when the matroid is simple) and ``flats[-1]`` is
    the full ground set.
    """

    def __init__(self, labels: Sequence[Hashable], rank_of: dict[int, int]):
        self.labels = tuple(labels)
        self.n = len(self.labels)
        self.rank_of = dict(rank_of)
        self.flats = tuple(sorted(self.rank_of, key=lambda F: (self.rank_of[F], F)))
        self.full = (1 << self.n) - 1
        self.rank = self.rank_of[self.full] if self.flats else 0
        self.index = {F: i for i, F in enumerate(self.flats)}
        self._pos = {lab: i for i, lab in enumerate(self.labels)}
        if len(self._pos) != self.n:
            raise MatroidError("element labels must be distinct")
        self._key = None

    # -- element and flat lookup -------------------------------------------

    def position(self, label) -> int:
        try:
            return self._pos[label]
        except (KeyError, TypeError):
            raise InvalidElementError(f"{label!r} is not an element of this matroid") from None

    def mask_of(self, labels: Iterable) -> int:
        mask = 0
        for lab in labels:
            mask |= 1 << self.position(lab)
        return mask

    def labels_of(self, mask: int) -> list:
        return [self.labels[i] for i in bits(mask)]

    def flat_mask(self, F) -> int:
        """Normalise a flat given as a bitmask or as a collection of labels."""
        mask = F if isinstance(F, int) else self.mask_of(F)
        if mask not in self.rank_of:
            raise NotAFlatError(f"{self.labels_of(mask & self.full)} is not a flat")
        return mask

    def is_flat(self, mask: int) -> bool:
        return mask in self.rank_of

    def corank(self, F: int) -> int:
        return self.rank - self.rank_of[F]

    def flats_of_rank(self, k: int) -> list[int]:
        return [F for F in self.flats if self.rank_of[F] == k]

    @property
    def atoms(self) -> list[int]:
        return self.flats_of_rank(1)

    @property
    def coatoms(self) -> list[int]:
        if self.rank == 0:
            return []
        return self.flats_of_rank(self.rank - 1)

    def is_simple(self) -> bool:
        if 0 not in self.rank_of:
            return False
        return all((1 << i) in self.rank_of for i in range(self.n))

    def rank_profile(self) -> tuple[int, ...]:
        """Number of flats in each rank (the Whitney numbers of the second kind)."""
        counts = [0] * (self.rank + 1)
        for F in self.flats:
            counts[self.rank_of[F]] += 1
        return tuple(counts)

    # -- equality as labelled matroids -------------------------------------

    def _labelled_key(self):
        if self._key is None:
            self._key = (
                frozenset(self.labels),
                frozenset(frozenset(self.labels_of(F)) for F in self.flats),
            )
        return self._key

    def __eq__(self, other):
        if not isinstance(other, Matroid):
            return NotImplemented
        return self._labelled_key() == other._labelled_key()

    def __hash__(self):
        return hash(self._labelled_key())

    def __repr__(self):
        return f"<Matroid rank {self.rank} on {self.n} elements, {len(self.flats)} flats>"

    def to_json(self) -> dict:
        out = {"n": self.n, "flats": [bits(F) for F in self.flats]}
        if self.labels != tuple(range(self.n)):
            out["labels"] = list(self.labels)
        return out

    def validate(self, require_simple: bool = True) -> None:
        """Re-run the axiom checks of :func:`from_flats` on this matroid."""
        ranks = _validate_flats(self.n, set(self.flats), require_simple)
        if ranks != self.rank_of:
            raise AxiomError("rank", "stored ranks disagree with the lattice rank function")


def _minimal_supersets(F: int, flats_by_size: list[int]) -> list[int]:
    covers: list[int] = []
    for G in flats_by_size:
        if G != F and G & F == F and not any(C & G == C for C in covers):
            covers.append(G)
    return covers


def _validate_flats(n: int, flats: set[int], require_simple: bool) -> dict[int, int]:
    full = (1 << n) - 1
    for F in flats:
        if F < 0 or F & ~full:
            raise AxiomError("ground-set", f"flat {bits(F)} uses elements outside 0..{n - 1}", [F])
    if full not in flats:
        raise AxiomError("full-set", "the ground set E is not a flat", [full])
    if require_simple:
        if 0 not in flats:
            raise AxiomError("simplicity", "the empty set is not a flat", [0])
        for i in range(n):
            if (1 << i) not in flats:
                raise AxiomError("simplicity", f"singleton {{{i}}} is not a flat", [1 << i])

    by_size = sorted(flats, key=lambda F: (popcount(F), F))
    for F, G in combinations(by_size, 2):
        if F & G not in flats:
            raise AxiomError(
                "intersection",
                f"{bits(F)} and {bits(G)} are flats but their intersection {bits(F & G)} is not",
                [F, G],
            )

    covers = {}
    for F in by_size:
        cov = _minimal_supersets(F, by_size)
        covers[F] = cov
        seen = 0
        for G in cov:
            part = G & ~F
            if part & seen:
                raise AxiomError(
                    "cover-partition",
                    f"covers of {bits(F)} overlap outside it (at {bits(part & seen)})",
                    [F, G],
                )
            seen |= part
        if seen != full & ~F:
            raise AxiomError(
                "cover-partition",
                f"covers of flat {bits(F)} miss the elements {bits(full & ~F & ~seen)}",
                [F] + cov,
            )

    # longest-chain layering; the bottom flat is by_size[0] after the
    # intersection check
    rank = {by_size[0]: 0}
    for F in by_size:
        r = rank[F]
        for G in covers[F]:
            if rank.get(G, -1) < r + 1:
                rank[G] = r + 1
    for F in by_size:
        for G in covers[F]:
            if rank[G] != rank[F] + 1:
                raise AxiomError(
                    "graded",
                    f"cover {bits(F)} < {bits(G)} jumps from rank {rank[F]} to {rank[G]}",
                    [F, G],
                )
    return rank


def _as_mask(S, n: int) -> int:
    if isinstance(S, int):
        return S
    mask = 0
    for i in S:
        i = int(i)
        if not 0 <= i < n:
            raise AxiomError("ground-set", f"element {i} is outside 0..{n - 1}", [])
        mask |= 1 << i
    return mask


def from_flats(
    n: int,
    flats: Iterable,
    labels: Sequence | None = None,
    *,
    require_simple: bool = True,
    cap: int | None = DEFAULT_CAP,
) -> Matroid:
    """Validate a family of flats on ``{0..n-1}`` and build the matroid.

    Each flat may be a bitmask or an iterable of element indices.  Ranks are
    recomputed from the lattice.  Raises :class:`AxiomError` naming the axiom
    and the witness sets on failure.
    """
    check_cap(n, cap)
    masks = {_as_mask(F, n) for F in flats}
    rank = _validate_flats(n, masks, require_simple)
    return Matroid(labels if labels is not None else range(n), rank)


def closure(M: Matroid, S) -> int:
    """Smallest flat containing ``S`` (a mask or a collection of labels)."""
    mask = S if isinstance(S, int) else M.mask_of(S)
    # flats are sorted by rank, so the first superset is the closure
    for F in M.flats:
        if F & mask == mask:
            return F
    raise MatroidError("set is not contained in the ground set")


def simplify(M: Matroid) -> Matroid:
    """Drop loops and keep the lowest position of every parallel class."""
    if M.is_simple():
        return M
    bottom = M.flats[0]
    reps = sorted(min(bits(A & ~bottom)) for A in M.flats_of_rank(1))
    rank = {}
    for F in M.flats:
        rank[compress(F, reps)] = M.rank_of[F]
    return Matroid([M.labels[p] for p in reps], rank)


def uniform_matroid(corank: int, rank: int, *, cap: int | None = DEFAULT_CAP) -> Matroid:
    """``U_{m,d}`` with the corank first: ``d + m`` elements, rank ``d``.

    Flats are all subsets of size less than ``d`` together with the full set.
    For ``d <= 1`` and ``m >= 1`` this is not simple, and the simplification
    is returned.
    """
    m, d = corank, rank
    if m < 0 or d < 0:
        raise MatroidError("uniform_matroid needs nonnegative corank and rank")
    n = d + m
    check_cap(n, cap)
    full = (1 << n) - 1
    ranks = {full: d}
    for k in range(d):
        for combo in combinations(range(n), k):
            mask = 0
            for i in combo:
                mask |= 1 << i
            ranks[mask] = k
    return simplify(Matroid(range(n), ranks))


def boolean_matroid(n: int, *, cap: int | None = DEFAULT_CAP) -> Matroid:
    if n < 0:
        raise MatroidError("boolean_matroid needs n >= 0")
    check_cap(n, cap)
    return Matroid(range(n), {mask: popcount(mask) for mask in range(1 << n)})


def direct_sum(M1: Matroid, M2: Matroid, *, cap: int | None = DEFAULT_CAP) -> Matroid:
    """Disjoint union.  Labels are kept when the two label sets are disjoint,
    otherwise the result is labelled ``0..n1+n2-1``."""
    check_cap(M1.n + M2.n, cap)
    if set(M1.labels).isdisjoint(M2.labels):
        labels = M1.labels + M2.labels
    else:
        labels = range(M1.n + M2.n)
    rank = {}
    for F in M1.flats:
        for G in M2.flats:
            rank[F | (G << M1.n)] = M1.rank_of[F] + M2.rank_of[G]
    return Matroid(labels, rank)


def _drop_position(mask: int, p: int) -> int:
    low = mask & ((1 << p) - 1)
    return low | ((mask >> (p + 1)) << p)


def delete(M: Matroid, e) -> Matroid:
    """``M \\ e``: flats are ``F - e`` for every flat ``F``."""
    p = M.position(e)
    bit = 1 << p
    rank = {}
    for F in M.flats:
        G = F & ~bit
        # rank of G in M\e is the rank of its closure in M, which is G itself
        # when G is a flat and F otherwise
        r = M.rank_of[G] if G in M.rank_of else M.rank_of[F]
        key = _drop_position(G, p)
        if rank.get(key, -1) < r:
            rank[key] = r
    labels = M.labels[:p] + M.labels[p + 1 :]
    return Matroid(labels, rank)


def _interval(M: Matroid, F: int, G: int) -> Matroid:
    """The interval ``[F, G]`` as a matroid on ``G - F``, simplified."""
    positions = bits(G & ~F)
    base = M.rank_of[F]
    rank = {}
    for H in M.flats:
        if H & F == F and H & G == H:
            rank[compress(H, positions)] = M.rank_of[H] - base
    return simplify(Matroid([M.labels[p] for p in positions], rank))


def contract(M: Matroid, F) -> Matroid:
    """``M_F``: the upper interval ``[F, E]``, simplified."""
    F = M.flat_mask(F)
    return _interval(M, F, M.full)


def localize(M: Matroid, F) -> Matroid:
    """``M^F``: the lower interval ``[0, F]`` on the ground set ``F``."""
    F = M.flat_mask(F)
    return _interval(M, M.flats[0], F)


def minor(M: Matroid, F, G) -> Matroid:
    """``M_F^G``: the interval ``[F, G]``."""
    F = M.flat_mask(F)
    G = M.flat_mask(G)
    if F & G != F:
        raise NotAFlatError(f"{M.labels_of(F)} is not below {M.labels_of(G)}")
    return _interval(M, F, G)


def is_coloop(M: Matroid, e) -> bool:
    """An element is a coloop iff ``E - e`` is a flat, i.e. deleting it
    drops the rank."""
    p = M.position(e)
    return (M.full & ~(1 << p)) in M.rank_of
