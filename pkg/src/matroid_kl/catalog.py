"""Fixed catalogs of test matroids.

* every connected simple graph on 2 to 6 vertices with at most 8 edges, one
  per isomorphism class (taken from the networkx graph atlas);
* uniform matroids of corank 1 and 2 on at most 8 elements, rank >= 2.
"""

from __future__ import annotations

import random
from functools import lru_cache

import networkx as nx

from .graphs import Graph, build_family, graphic_matroid
from .matroid import Matroid, uniform_matroid

__all__ = [
    "connected_graphs",
    "uniform_catalog",
    "deletion_catalog",
    "hecke_catalog",
    "sample_direct_sum_pairs",
]


@lru_cache(maxsize=None)
def connected_graphs(max_vertices: int = 6, max_edges: int = 8) -> tuple[tuple[str, Graph], ...]:
    out = []
    for idx, g in enumerate(nx.graph_atlas_g()):
        nv = g.number_of_nodes()
        if 2 <= nv <= max_vertices and g.number_of_edges() <= max_edges and nx.is_connected(g):
            out.append((f"atlas:{idx}", Graph(nv, tuple(sorted(g.edges())))))
    return tuple(out)


def uniform_catalog(coranks=(1, 2), max_ground: int = 8) -> list[tuple[str, Matroid]]:
    return [
        (f"uniform:{m},{d}", uniform_matroid(m, d))
        for m in coranks
        for d in range(2, max_ground - m + 1)
    ]


def deletion_catalog() -> list[tuple[str, Matroid]]:
    graphs = [(name, graphic_matroid(G)) for name, G in connected_graphs()]
    return graphs + uniform_catalog()


def hecke_catalog() -> list[tuple[str, Matroid]]:
    specs = [("cycle", (4,)), ("cycle", (5,)), ("complete", (4,)), ("thagomizer", (2,)), ("thagomizer", (3,))]
    return [
        (f"{name}:{','.join(map(str, params))}", graphic_matroid(build_family(name, *params)))
        for name, params in specs
    ]


def sample_direct_sum_pairs(
    count: int = 50, seed: int = 0, max_flats: int = 3000
) -> list[tuple[str, str, Matroid, Matroid]]:
    """Random pairs of positive-rank catalog matroids whose direct sum has
    at most ``max_flats`` flats (the sum's lattice is the product)."""
    pool = [(n, M) for n, M in deletion_catalog() if M.rank > 0]
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        (n1, M1), (n2, M2) = rng.choice(pool), rng.choice(pool)
        if len(M1.flats) * len(M2.flats) <= max_flats:
            out.append((n1, n2, M1, M2))
    return out
