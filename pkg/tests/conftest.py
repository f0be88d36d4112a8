from itertools import combinations, permutations

import pytest

from matroid_kl.matroid import Matroid, bits, closure, contract
from matroid_kl.polynomial import IntPoly


def poly(*coeffs, low=0):
    return IntPoly(low, coeffs)


def lattice_isomorphic(M: Matroid, N: Matroid) -> bool:
    """Brute force over element bijections (small matroids only)."""
    if M.n != N.n or M.rank_profile() != N.rank_profile():
        return False
    target = set(N.flats)
    for perm in permutations(range(N.n)):
        image = set()
        for F in M.flats:
            G = 0
            for i in bits(F):
                G |= 1 << perm[i]
            image.add(G)
        if image == target:
            return True
    return False


def subset_rank(M: Matroid, S: int) -> int:
    return M.rank_of[closure(M, S)]


def char_poly_whitney(M: Matroid) -> IntPoly:
    """sum over all subsets S of (-1)^|S| t^(r(E) - r(S))."""
    terms = {}
    for S in range(1 << M.n):
        k = M.rank - subset_rank(M, S)
        terms[k] = terms.get(k, 0) + (-1) ** bin(S).count("1")
    return IntPoly.from_terms(terms)


def kl_oracle(M: Matroid, _memo=None) -> IntPoly:
    """P_M straight from the defining properties, recursing through explicit
    contraction matroids rather than the lattice table."""
    if _memo is None:
        _memo = {}
    if M in _memo:
        return _memo[M]
    d = M.rank
    if d == 0:
        return IntPoly.constant(1)
    f = IntPoly()
    for F in M.flats:
        if F != 0:
            f = f + kl_oracle(contract(M, F), _memo).shift(M.rank_of[F])
    # unknown P has coefficients p_k for k < d/2; palindromicity of f + P
    # pins p_k + f_k = f_{d-k}
    P = IntPoly.from_terms({k: f[d - k] - f[k] for k in range((d + 1) // 2)})
    _memo[M] = P
    return P


def z_oracle(M: Matroid) -> IntPoly:
    total = IntPoly()
    for F in M.flats:
        total = total + kl_oracle(contract(M, F)).shift(M.rank_of[F])
    return total


@pytest.fixture
def triangle():
    from matroid_kl.matroid import from_flats

    return from_flats(3, [[], [0], [1], [2], [0, 1, 2]])


def all_subsets(n):
    for k in range(n + 1):
        yield from combinations(range(n), k)
