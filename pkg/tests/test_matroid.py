import itertools

import pytest

from conftest import all_subsets, lattice_isomorphic, subset_rank
from matroid_kl.errors import AxiomError, InvalidElementError, NotAFlatError, SizeCapError
from matroid_kl.graphs import build_family, graphic_matroid
from matroid_kl.matroid import (
    Matroid,
    boolean_matroid,
    closure,
    contract,
    delete,
    direct_sum,
    from_flats,
    is_coloop,
    localize,
    minor,
    simplify,
    uniform_matroid,
)


def sample_matroids():
    out = [
        boolean_matroid(0),
        boolean_matroid(3),
        uniform_matroid(1, 3),
        uniform_matroid(2, 3),
        uniform_matroid(1, 4),
    ]
    for spec in [("cycle", 5), ("complete", 4), ("thagomizer", 3), ("saw", 3, 2), ("fan", 4), ("kbipartite", 2, 3)]:
        out.append(graphic_matroid(build_family(*spec)))
    return out


SAMPLES = sample_matroids()


# -- from_flats ---------------------------------------------------------------


def test_from_flats_rank_one():
    M = from_flats(1, [[], [0]])
    assert M.rank == 1 and M.n == 1


def test_from_flats_triangle(triangle):
    assert triangle.rank == 2
    assert triangle.rank_profile() == (1, 3, 1)


def test_from_flats_cover_partition_failure():
    with pytest.raises(AxiomError) as err:
        from_flats(3, [[], [0], [1], [2], [0, 1], [0, 1, 2]])
    assert err.value.axiom == "cover-partition"
    assert "cover-partition" in str(err.value)
    assert err.value.witnesses


def test_from_flats_other_axioms():
    with pytest.raises(AxiomError) as err:
        from_flats(2, [[], [0], [1]])
    assert err.value.axiom == "full-set"
    with pytest.raises(AxiomError) as err:
        from_flats(4, [[], [0], [1], [2], [3], [0, 1, 2], [1, 2, 3], [0, 1, 2, 3]])
    assert err.value.axiom == "intersection"
    with pytest.raises(AxiomError) as err:
        from_flats(2, [[], [0], [0, 1]])
    assert err.value.axiom == "simplicity"


def test_from_flats_cap():
    with pytest.raises(SizeCapError):
        from_flats(30, [list(range(30))], require_simple=False)


def test_from_flats_round_trips_every_sample():
    for M in SAMPLES:
        N = from_flats(M.n, [[i for i in range(M.n) if F >> i & 1] for F in M.flats])
        assert N.rank_of == M.rank_of


# -- closure ------------------------------------------------------------------


def test_closure_examples(triangle):
    for M in SAMPLES:
        for F in M.flats:
            assert closure(M, F) == F
        assert closure(M, 0) == 0
    assert closure(triangle, [0, 1]) == 0b111


def test_closure_is_intersection_of_containing_flats():
    for M in SAMPLES[:6]:
        for S in range(1 << M.n):
            expected = M.full
            for F in M.flats:
                if F & S == S:
                    expected &= F
            assert closure(M, S) == expected


# -- constructors ---------------------------------------------------------------


def test_uniform_examples():
    U = uniform_matroid(1, 3)
    assert U.n == 4
    assert set(U.flats) == {S for S in range(16) if bin(S).count("1") <= 2} | {15}
    assert lattice_isomorphic(U, graphic_matroid(build_family("cycle", 4)))
    assert uniform_matroid(0, 3) == boolean_matroid(3)
    assert uniform_matroid(1, 1).n == 1


def test_boolean_examples():
    B0 = boolean_matroid(0)
    assert B0.flats == (0,) and B0.rank == 0
    assert len(boolean_matroid(2).flats) == 4
    path = graphic_matroid(build_family("kbipartite", 1, 3))
    assert boolean_matroid(3) == path


def test_direct_sum_examples(triangle):
    assert direct_sum(boolean_matroid(1), boolean_matroid(1)) == boolean_matroid(2)
    M = uniform_matroid(1, 3)
    assert direct_sum(M, boolean_matroid(0)) == M
    T = direct_sum(triangle, triangle)
    assert T.rank == 4 and len(T.flats) == 25
    T.validate()


def test_direct_sum_keeps_disjoint_labels():
    A = Matroid(["a", "b"], {0: 0, 1: 1, 2: 1, 3: 2})
    B = Matroid(["c"], {0: 0, 1: 1})
    assert direct_sum(A, B).labels == ("a", "b", "c")


# -- minors -------------------------------------------------------------------


def test_delete_examples(triangle):
    U = uniform_matroid(1, 3)
    for e in U.labels:
        assert lattice_isomorphic(delete(U, e), boolean_matroid(3))
    assert lattice_isomorphic(delete(boolean_matroid(4), 2), boolean_matroid(3))
    D = delete(triangle, 1)
    assert D.labels == (0, 2)
    assert lattice_isomorphic(D, boolean_matroid(2))


def test_delete_invalid_element():
    with pytest.raises(InvalidElementError):
        delete(boolean_matroid(2), 7)


def test_contract_examples():
    for M in SAMPLES:
        assert contract(M, 0) == M
        assert contract(M, M.full).rank == 0
    U = uniform_matroid(1, 3)
    assert lattice_isomorphic(contract(U, [0]), uniform_matroid(1, 2))


def test_contract_rejects_non_flat(triangle):
    with pytest.raises(NotAFlatError):
        contract(triangle, [0, 1])


def test_localize_examples():
    for M in SAMPLES:
        assert localize(M, M.full) == M
        assert localize(M, 0).rank == 0
    U = uniform_matroid(1, 4)
    for F in U.flats_of_rank(2):
        assert lattice_isomorphic(localize(U, F), boolean_matroid(2))


def test_minor_examples():
    U = uniform_matroid(1, 4)
    for M in SAMPLES:
        assert minor(M, 0, M.full) == M
        for F in M.flats[:5]:
            assert minor(M, F, F).rank == 0
    assert minor(U, [0], U.full) == contract(U, [0])
    with pytest.raises(NotAFlatError):
        minor(U, [0], [1])


def test_is_coloop_examples():
    for e in range(4):
        assert is_coloop(boolean_matroid(4), e)
    # d = 1 simplifies to a single coloop
    for d in range(2, 6):
        U = uniform_matroid(1, d)
        assert not any(is_coloop(U, e) for e in U.labels)
    path = graphic_matroid(build_family("kbipartite", 1, 3))
    assert all(is_coloop(path, e) for e in path.labels)


def test_simplify_examples():
    for M in SAMPLES:
        assert simplify(M) is M
    parallel = Matroid([0, 1], {0: 0, 3: 1})
    S = simplify(parallel)
    assert S.n == 1 and S.rank == 1
    loopy = Matroid(["x", "loop", "y"], {0b010: 0, 0b011: 1, 0b110: 1, 0b111: 2})
    S = simplify(loopy)
    assert S.labels == ("x", "y")
    assert S == Matroid(["x", "y"], {0: 0, 1: 1, 2: 1, 3: 2})


# -- properties -----------------------------------------------------------------


def test_all_outputs_satisfy_axioms():
    for M in SAMPLES:
        M.validate()
        for e in M.labels:
            delete(M, e).validate()
        for F in M.flats:
            contract(M, F).validate()
            localize(M, F).validate()


def test_delete_commutes():
    for M in SAMPLES:
        for e, f in itertools.combinations(M.labels, 2):
            assert delete(delete(M, e), f) == delete(delete(M, f), e)


def test_localize_is_iterated_deletion():
    for M in SAMPLES:
        for F in M.flats:
            N = M
            for lab in M.labels_of(M.full & ~F):
                N = delete(N, lab)
            assert localize(M, F) == N


def test_minor_order_independent():
    for M in SAMPLES:
        for F in M.flats:
            for G in M.flats:
                if F & G != F:
                    continue
                lower_then_upper = contract(localize(M, G), M.labels_of(F))
                C = contract(M, F)
                G_in_C = closure(C, [x for x in M.labels_of(G) if x in C.labels])
                upper_then_lower = localize(C, G_in_C)
                assert lower_then_upper == upper_then_lower == minor(M, F, G)


def test_deletion_rank_and_coloops():
    for M in SAMPLES:
        for e in M.labels:
            r = delete(M, e).rank
            assert r in (M.rank - 1, M.rank)
            assert (r == M.rank) == (not is_coloop(M, e))


def test_delete_matches_subset_ranks():
    # independent oracle: rank in M\e of S is the rank of S in M
    for M in SAMPLES[:6]:
        for e in M.labels:
            D = delete(M, e)
            for S in range(1 << D.n):
                labs = D.labels_of(S)
                assert subset_rank(D, S) == subset_rank(M, M.mask_of(labs))


def test_uniform_flats_by_brute_force():
    for m, d in [(1, 2), (1, 4), (2, 3), (3, 2)]:
        U = uniform_matroid(m, d)
        expected = {sum(1 << i for i in S) for S in all_subsets(m + d) if len(S) < d} | {U.full}
        assert set(U.flats) == expected


def test_cap():
    with pytest.raises(SizeCapError):
        boolean_matroid(25)
    with pytest.raises(SizeCapError):
        uniform_matroid(1, 5, cap=4)
