"""Independent reference implementations used only by the tests."""
import itertools

import networkx as nx
from networkx.algorithms import isomorphism

from aegame.graph import TargetFamily


def pattern_graph(family: TargetFamily) -> nx.Graph:
    g = nx.Graph()
    g.add_edges_from(family.pattern_edges)
    return g


def has_pattern(n, edges, family: TargetFamily) -> bool:
    """Subgraph (not necessarily induced) search with networkx."""
    host = nx.Graph()
    host.add_nodes_from(range(n))
    host.add_edges_from(edges)
    gm = isomorphism.GraphMatcher(host, pattern_graph(family))
    return gm.subgraph_is_monomorphic()


def all_pairs(n):
    return list(itertools.combinations(range(n), 2))


def brute_r(n, b):
    """Free edges before Avoider's last move, by simulating the counts."""
    free = n * (n - 1) // 2
    while True:
        last = free
        free -= 1
        if free == 0:
            return last
        free -= min(b, free)
        if free == 0:
            return last
