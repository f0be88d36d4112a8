import networkx as nx
import pytest

from conftest import lattice_isomorphic
from matroid_kl.errors import MatroidError
from matroid_kl.graphs import (
    Graph,
    build_family,
    graph_contract,
    graph_delete,
    graphic_matroid,
    is_connected,
    parallel_connection,
    parse_family,
)
from matroid_kl.matroid import boolean_matroid, closure, contract, delete, direct_sum, simplify, uniform_matroid


def nx_iso(G: Graph, H: Graph) -> bool:
    return nx.is_isomorphic(nx.Graph(G.to_networkx()), nx.Graph(H.to_networkx()))


def closed_sets_oracle(G: Graph) -> set[int]:
    """Edge sets F such that every edge joining two vertices connected in F is in F."""
    out = set()
    m = len(G.edges)
    for F in range(1 << m):
        h = nx.Graph()
        h.add_nodes_from(range(G.vertex_count))
        h.add_edges_from(G.edges[i] for i in range(m) if F >> i & 1)
        comp = {v: k for k, c in enumerate(nx.connected_components(h)) for v in c}
        closed = all(F >> i & 1 or comp[u] != comp[v] for i, (u, v) in enumerate(G.edges))
        if closed:
            out.add(F)
    return out


def test_triangle():
    M = graphic_matroid(build_family("cycle", 3))
    assert M.rank == 2 and len(M.flats) == 5


def test_c4_is_uniform():
    assert lattice_isomorphic(graphic_matroid(build_family("cycle", 4)), uniform_matroid(1, 3))


def test_k4():
    M = graphic_matroid(build_family("complete", 4))
    assert M.rank == 3 and len(M.flats) == 15
    assert M.rank_profile() == (1, 6, 7, 1)


@pytest.mark.parametrize("spec", ["cycle:5", "complete:4", "saw:3,2", "fan:4", "thagomizer:3", "kbipartite:2,3"])
def test_flats_match_connectivity_oracle(spec):
    name, params = parse_family(spec)
    G = build_family(name, *params)
    assert set(graphic_matroid(G).flats) == closed_sets_oracle(G)


def test_graph_delete_and_contract_examples():
    C4 = build_family("cycle", 4)
    assert nx_iso(graph_delete(C4, 0), Graph(4, ((0, 1), (1, 2), (2, 3))))
    assert nx_iso(graph_contract(C4, 0), build_family("cycle", 3))
    T = build_family("thagomizer", 3)
    special = len(T.edges) - 1
    S = graph_contract(T, special)
    assert nx.is_tree(nx.Graph(S.to_networkx()))
    M = graphic_matroid(S)
    assert M.n == 3 and set(M.flats) == set(range(1 << M.n))


def test_contract_loop_rejected():
    G = Graph(2, ((0, 1), (1, 1)))
    with pytest.raises(MatroidError):
        graph_contract(G, 1)


def test_loops_and_multi_edges_simplify():
    G = Graph(3, ((0, 1), (0, 1), (1, 2), (2, 2)))
    M = graphic_matroid(G)
    assert M.labels == (0, 2)
    assert set(M.flats) == {0, 1, 2, 3}


def test_families():
    assert nx_iso(build_family("fan", 2), build_family("cycle", 3))
    for n in range(3, 8):
        assert nx_iso(build_family("fanpartial", n, n - 2), build_family("cycle", n + 1))
    assert nx_iso(build_family("saw", 2, 2), build_family("thagomizer", 2))
    assert len(build_family("cycle", 2).edges) == 1
    S = build_family("saw", 4, 3)
    assert S.vertex_count == 7 and len(S.edges) == 10
    assert len(build_family("thagomizer", 4).edges) == 9
    D = build_family("doublecycle", 4, 5)
    assert D.vertex_count == 7 and len(D.edges) == 8
    assert len(build_family("kbipartite", 2, 4).edges) == 8


def test_family_ranges():
    for spec in [("cycle", 1), ("saw", 1, 0), ("saw", 3, 4), ("fan", 0), ("fanpartial", 4, 3), ("thagomizer", 0), ("kbipartite", 0, 2)]:
        with pytest.raises(MatroidError):
            build_family(*spec)
    with pytest.raises(MatroidError):
        build_family("nope", 3)
    with pytest.raises(MatroidError):
        build_family("cycle", 3, 4)


def test_parse_family():
    assert parse_family("saw:3,3") == ("saw", (3, 3))
    assert parse_family("cycle:6") == ("cycle", (6,))
    with pytest.raises(MatroidError):
        parse_family("cycle:x")


def test_parallel_connection_examples():
    C3 = build_family("cycle", 3)
    pc = parallel_connection(C3, 0, C3, 0)
    assert len(pc.graph.edges) == 5
    assert nx_iso(pc.graph, build_family("doublecycle", 3, 3))
    assert nx_iso(pc.graph, build_family("thagomizer", 2))
    assert pc.graph.edges[pc.edge] == C3.edges[0]
    for m in range(3, 7):
        for n in range(3, 7):
            pc = parallel_connection(build_family("cycle", m), 0, build_family("cycle", n), 0)
            assert nx_iso(pc.graph, build_family("doublecycle", m, n))
    for n in range(3, 8):
        for r in range(0, n - 1):
            # glue along the last spoke of the smaller fan
            H1 = build_family("fan", n - r - 1)
            pc = parallel_connection(H1, n - r - 2, build_family("cycle", r + 3), 0)
            assert nx_iso(pc.graph, build_family("fanpartial", n, r)), (n, r)


def test_parallel_connection_sides_share_only_the_edge():
    pc = parallel_connection(build_family("cycle", 4), 1, build_family("complete", 4), 2)
    s1, s2 = pc.sides
    assert s1 & s2 == {pc.edge}
    assert s1 | s2 == set(range(len(pc.graph.edges)))


def test_delete_commutes_with_graphic():
    for spec in [("cycle", 5), ("complete", 4), ("saw", 3, 2), ("thagomizer", 3), ("fan", 4)]:
        G = build_family(*spec)
        M = graphic_matroid(G)
        for e in range(len(G.edges)):
            assert graphic_matroid(graph_delete(G, e)) == delete(M, e)


def test_contract_commutes_with_graphic():
    for spec in [("cycle", 5), ("complete", 4), ("saw", 3, 2), ("thagomizer", 3), ("fan", 4)]:
        G = build_family(*spec)
        M = graphic_matroid(G)
        for e in range(len(G.edges)):
            lhs = simplify(contract(M, closure(M, [e])))
            rhs = simplify(graphic_matroid(graph_contract(G, e)))
            assert lattice_isomorphic(lhs, rhs)


def test_trees_are_boolean():
    for n in range(1, 8):
        T = nx.random_labeled_tree(n + 1, seed=n)
        G = Graph(n + 1, tuple(T.edges()))
        M = graphic_matroid(G)
        assert M.rank == n and set(M.flats) == set(range(1 << n))
        assert M == boolean_matroid(n)


def test_parallel_connection_contraction_is_direct_sum():
    cases = [
        (build_family("cycle", 4), 0, build_family("cycle", 5), 0),
        (build_family("complete", 4), 0, build_family("cycle", 3), 1),
        (build_family("fan", 3), 4, build_family("cycle", 4), 2),
    ]
    for H1, e1, H2, e2 in cases:
        pc = parallel_connection(H1, e1, H2, e2)
        lhs = graphic_matroid(graph_contract(pc.graph, pc.edge))
        rhs = direct_sum(graphic_matroid(graph_contract(H1, e1)), graphic_matroid(graph_contract(H2, e2)))
        assert lattice_isomorphic(lhs, rhs)


def test_is_connected():
    assert is_connected(build_family("cycle", 5))
    assert not is_connected(Graph(4, ((0, 1), (2, 3))))
    assert is_connected(Graph(4, ((0, 1), (2, 3))), [0, 1])


def test_json_round_trip():
    G = build_family("saw", 3, 1)
    assert Graph.from_json(G.to_json()) == G
    with pytest.raises(MatroidError):
        Graph(2, ((0, 2),))
