"""Graphs, their cycle matroids, and the graph families with closed forms.

Edge order is the ground-set order of the associated matroid.  Every edge
also carries a label (by default its index) which survives deletion and
contraction, so ``graphic_matroid(graph_delete(G, e))`` and
``delete(graphic_matroid(G), e)`` can be compared as labelled matroids.

Family edge orders:

* ``cycle:n``: ``(0,1), (1,2), ..., (n-2,n-1), (n-1,0)``; ``cycle:2`` is the
  single edge ``(0,1)``.
* ``fan:n``: the spokes ``(0,i)`` for ``i = 1..n``, then the path edges
  ``(i,i+1)``.
* ``fanpartial:n,r``: ``fan:n`` with the spokes ``(0,n-r)..(0,n-1)`` removed.
* ``saw:n,r``: the central ``n``-cycle as in ``cycle:n``, then for each of the
  first ``r`` central edges ``(u,w)`` a new vertex ``v`` with edges
  ``(u,v), (v,w)``.  For ``n = 2`` the central cycle is one edge and every
  triangle is glued to it.
* ``thagomizer:n``: ``K_{2,n}`` in the ``kbipartite:2,n`` order, then the
  special edge ``(0,1)`` last.
* ``doublecycle:m,n``: ``parallel_connection(cycle:m, 0, cycle:n, 0)``.
* ``kbipartite:a,b``: ``(i, a+j)`` in lexicographic order.
* ``complete:n``: ``(i,j)`` with ``i < j`` in lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, NamedTuple, Sequence

from .errors import MatroidError
from .matroid import DEFAULT_CAP, Matroid, bits, check_cap, simplify

__all__ = [
    "Graph",
    "graphic_matroid",
    "graph_delete",
    "graph_contract",
    "build_family",
    "parse_family",
    "parallel_connection",
    "ParallelConnection",
    "is_connected",
    "FAMILIES",
]


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple[Hashable, ...] = ()

    def __post_init__(self):
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        for u, v in edges:
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise MatroidError(f"edge ({u}, {v}) has an endpoint outside 0..{self.vertex_count - 1}")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(len(edges))))
        elif len(self.labels) != len(edges):
            raise MatroidError("need exactly one label per edge")
        else:
            object.__setattr__(self, "labels", tuple(self.labels))

    @classmethod
    def from_json(cls, data: dict) -> Graph:
        return cls(int(data["vertices"]), tuple(tuple(e) for e in data["edges"]))

    def to_json(self) -> dict:
        return {"vertices": self.vertex_count, "edges": [list(e) for e in self.edges]}

    def edge_index(self, label) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise MatroidError(f"no edge labelled {label!r}") from None

    def to_networkx(self):
        import networkx as nx

        G = nx.MultiGraph()
        G.add_nodes_from(range(self.vertex_count))
        G.add_edges_from(self.edges)
        return G


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def _closure_and_rank(G: Graph, mask: int) -> tuple[int, int]:
    uf = _UnionFind(G.vertex_count)
    rank = 0
    for i in bits(mask):
        u, v = G.edges[i]
        if uf.union(u, v):
            rank += 1
    closed = 0
    for i, (u, v) in enumerate(G.edges):
        if uf.find(u) == uf.find(v):
            closed |= 1 << i
    return closed, rank


def is_connected(G: Graph, vertices: Sequence[int] | None = None) -> bool:
    """Whether the subgraph on ``vertices`` (default: all) spanned by the
    edges inside it is connected."""
    verts = set(range(G.vertex_count)) if vertices is None else set(vertices)
    if not verts:
        return True
    uf = _UnionFind(G.vertex_count)
    for u, v in G.edges:
        if u in verts and v in verts:
            uf.union(u, v)
    return len({uf.find(v) for v in verts}) == 1


def graphic_matroid(G: Graph, *, cap: int | None = DEFAULT_CAP) -> Matroid:
    """The cycle matroid of ``G``, simplified (loops dropped, one edge kept per
    parallel class).  Flats are enumerated by closing ``F + e`` from every
    known flat ``F``."""
    check_cap(len(G.edges), cap)
    m = len(G.edges)
    bottom, _ = _closure_and_rank(G, 0)
    rank = {bottom: 0}
    frontier = [bottom]
    while frontier:
        nxt = []
        for F in frontier:
            for i in range(m):
                if not F >> i & 1:
                    C, r = _closure_and_rank(G, F | (1 << i))
                    if C not in rank:
                        rank[C] = r
                        nxt.append(C)
        frontier = nxt
    return simplify(Matroid(G.labels, rank))


def graph_delete(G: Graph, e: int) -> Graph:
    """Remove the edge at index ``e``."""
    if not 0 <= e < len(G.edges):
        raise MatroidError(f"edge index {e} out of range")
    edges = G.edges[:e] + G.edges[e + 1 :]
    labels = G.labels[:e] + G.labels[e + 1 :]
    return Graph(G.vertex_count, edges, labels)


def graph_contract(G: Graph, e: int) -> Graph:
    """Identify the endpoints of edge ``e`` and drop it.  Multi-edges and
    loops created by the identification are kept."""
    if not 0 <= e < len(G.edges):
        raise MatroidError(f"edge index {e} out of range")
    a, b = G.edges[e]
    if a == b:
        raise MatroidError(f"edge {e} is a loop and cannot be contracted")
    keep, gone = min(a, b), max(a, b)

    def relabel(x: int) -> int:
        if x == gone:
            x = keep
        return x - 1 if x > gone else x

    edges = tuple((relabel(u), relabel(v)) for u, v in G.edges[:e] + G.edges[e + 1 :])
    labels = G.labels[:e] + G.labels[e + 1 :]
    return Graph(G.vertex_count - 1, edges, labels)


class ParallelConnection(NamedTuple):
    graph: Graph
    edge: int
    sides: tuple[frozenset[int], frozenset[int]]


def parallel_connection(H1: Graph, e1: int, H2: Graph, e2: int) -> ParallelConnection:
    """Glue ``H2`` onto ``H1`` along ``e2 ~ e1``, first endpoint to first
    endpoint.  The result keeps ``H1``'s vertices and edges in place and
    appends the other edges of ``H2``.  Returned ``sides`` are the edge-index
    sets of the two halves; both contain the connection edge."""
    for H, e in ((H1, e1), (H2, e2)):
        if not 0 <= e < len(H.edges):
            raise MatroidError(f"edge index {e} out of range")
        if H.edges[e][0] == H.edges[e][1]:
            raise MatroidError("the connection edge cannot be a loop")
    u1, v1 = H1.edges[e1]
    u2, v2 = H2.edges[e2]
    vmap = {u2: u1, v2: v1}
    nxt = H1.vertex_count
    for x in range(H2.vertex_count):
        if x not in vmap:
            vmap[x] = nxt
            nxt += 1
    edges = list(H1.edges)
    side2 = {e1}
    for i, (a, b) in enumerate(H2.edges):
        if i != e2:
            side2.add(len(edges))
            edges.append((vmap[a], vmap[b]))
    side1 = frozenset(range(len(H1.edges)))
    return ParallelConnection(Graph(nxt, tuple(edges)), e1, (side1, frozenset(side2)))


# -- families ---------------------------------------------------------------


def _cycle(n: int) -> Graph:
    if n < 2:
        raise MatroidError("cycle needs n >= 2")
    if n == 2:
        return Graph(2, ((0, 1),))
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def _fan(n: int) -> Graph:
    if n < 1:
        raise MatroidError("fan needs n >= 1")
    spokes = [(0, i) for i in range(1, n + 1)]
    path = [(i, i + 1) for i in range(1, n)]
    return Graph(n + 1, tuple(spokes + path))


def _fan_partial(n: int, r: int) -> Graph:
    if n < 2 or not 0 <= r <= n - 2:
        raise MatroidError("fanpartial needs n >= 2 and 0 <= r <= n-2")
    removed = {(0, i) for i in range(n - r, n)}
    F = _fan(n)
    return Graph(n + 1, tuple(e for e in F.edges if e not in removed))


def _saw(n: int, r: int) -> Graph:
    if n < 2 or not 0 <= r <= n:
        raise MatroidError("saw needs n >= 2 and 0 <= r <= n")
    central = _cycle(n).edges
    edges = list(central)
    v = n
    for i in range(r):
        a, b = central[i % len(central)]
        edges += [(a, v), (v, b)]
        v += 1
    return Graph(v, tuple(edges))


def _kbipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise MatroidError("kbipartite needs a, b >= 1")
    return Graph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))


def _complete(n: int) -> Graph:
    if n < 1:
        raise MatroidError("complete needs n >= 1")
    return Graph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def _thagomizer(n: int) -> Graph:
    if n < 1:
        raise MatroidError("thagomizer needs n >= 1")
    K = _kbipartite(2, n)
    return Graph(K.vertex_count, K.edges + ((0, 1),))


def _double_cycle(m: int, n: int) -> Graph:
    if m < 3 or n < 3:
        raise MatroidError("doublecycle needs m, n >= 3")
    return parallel_connection(_cycle(m), 0, _cycle(n), 0).graph


FAMILIES = {
    "cycle": (_cycle, 1),
    "fan": (_fan, 1),
    "fanpartial": (_fan_partial, 2),
    "saw": (_saw, 2),
    "thagomizer": (_thagomizer, 1),
    "doublecycle": (_double_cycle, 2),
    "kbipartite": (_kbipartite, 2),
    "complete": (_complete, 1),
}


def build_family(name: str, *params: int) -> Graph:
    try:
        builder, arity = FAMILIES[name]
    except KeyError:
        raise MatroidError(f"unknown graph family {name!r}") from None
    if len(params) != arity:
        raise MatroidError(f"family {name!r} takes {arity} parameter(s), got {len(params)}")
    return builder(*(int(p) for p in params))


def parse_family(spec: str) -> tuple[str, tuple[int, ...]]:
    """Split ``"saw:3,3"`` into ``("saw", (3, 3))``."""
    name, _, rest = spec.partition(":")
    try:
        params = tuple(int(x) for x in rest.split(",")) if rest else ()
    except ValueError:
        raise MatroidError(f"bad family spec {spec!r}") from None
    return name.strip(), params
