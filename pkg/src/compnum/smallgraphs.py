"""Exhaustive enumeration of small graphs, one per isomorphism class.

The canonical form of a graph is the lexicographically least adjacency
bitstring over all vertex permutations, the bitstring reading the upper
triangle pairs (0,1), (0,2), (1,2), (0,3), ... left to right.  Bit weights
are chosen so that integer order on masks equals lexicographic order on
bitstrings; enumeration then walks masks in ascending order and each mask
not yet claimed by an earlier orbit is its orbit's canonical
representative.  Built-in enumeration stops at six vertices; larger sweeps
consume an external graph6 stream instead.
"""

from __future__ import annotations

from itertools import combinations, permutations

from .graph import Graph

MAX_BUILTIN_N = 6


def _pair_weights(n: int) -> dict[tuple[int, int], int]:
    pairs = list(combinations(range(n), 2))
    nbits = len(pairs)
    return {p: 1 << (nbits - 1 - i) for i, p in enumerate(pairs)}


def canonical_mask(n: int, mask: int) -> int:
    """Least adjacency mask over all vertex permutations."""
    weights = _pair_weights(n)
    pairs = list(weights)
    best = mask
    for perm in permutations(range(n)):
        img = 0
        for (u, v) in pairs:
            if mask & weights[(u, v)]:
                a, b = perm[u], perm[v]
                img |= weights[(a, b) if a < b else (b, a)]
        if img < best:
            best = img
    return best


def graph_from_mask(n: int, mask: int) -> Graph:
    weights = _pair_weights(n)
    return Graph.from_edges(n, [p for p, w in weights.items() if mask & w])


def mask_from_graph(graph: Graph) -> int:
    weights = _pair_weights(graph.n)
    return sum(w for p, w in weights.items() if graph.has_edge(*p))


def canonical_graph(graph: Graph) -> Graph:
    return graph_from_mask(graph.n, canonical_mask(graph.n, mask_from_graph(graph)))


def enumerate_small_graphs(n: int, connected_only: bool = False):
    """Yield one canonical representative per isomorphism class of graphs
    on n vertices, in ascending canonical order."""
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    if n > MAX_BUILTIN_N:
        raise ValueError(
            f"built-in enumeration is capped at {MAX_BUILTIN_N} vertices; "
            f"feed a graph6 stream for larger sweeps")
    if n == 0:
        yield Graph(0, ())
        return
    weights = _pair_weights(n)
    pairs = list(weights)
    perm_tables = []
    for perm in permutations(range(n)):
        table = []
        for (u, v) in pairs:
            a, b = perm[u], perm[v]
            table.append((weights[(u, v)], weights[(a, b) if a < b else (b, a)]))
        perm_tables.append(table)
    nbits = len(pairs)
    seen = bytearray(1 << nbits)
    for mask in range(1 << nbits):
        if seen[mask]:
            continue
        for table in perm_tables:
            img = 0
            for src, dst in table:
                if mask & src:
                    img |= dst
            seen[img] = 1
        graph = graph_from_mask(n, mask)
        if connected_only and not graph.is_connected():
            continue
        yield graph
