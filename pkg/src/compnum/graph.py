"""Core graph and digraph types.

Undirected graphs store one adjacency bitmask per vertex, so neighbourhood,
clique and subset tests are single integer operations.  Vertices are dense
indices 0..n-1; optional display labels ride along but never take part in
equality or hashing.  All values are immutable after construction and safe
to share across threads or processes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations


def bits(mask: int):
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1."""

    n: int
    rows: tuple[int, ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        if len(self.rows) != self.n:
            raise ValueError("adjacency rows do not match vertex count")
        for v, row in enumerate(self.rows):
            if row >> self.n:
                raise ValueError(f"adjacency bit out of range in row {v}")
            if (row >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for u in range(self.n):
            for v in bits(self.rows[u]):
                if not (self.rows[v] >> u) & 1:
                    raise ValueError(f"adjacency not symmetric at {u},{v}")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("labels do not match vertex count")

    @classmethod
    def from_edges(cls, n: int, edges, labels=None) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if (rows[u] >> v) & 1:
                raise ValueError(f"duplicate edge ({u},{v})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows), None if labels is None else tuple(labels))

    # -- basic queries -----------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return popcount(self.rows[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.rows[u]) if u < v]

    @cached_property
    def edge_count(self) -> int:
        return sum(popcount(r) for r in self.rows) // 2

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def isolated_vertices(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if self.rows[v] == 0)

    def is_clique(self, members) -> bool:
        mem = list(members)
        return all(self.has_edge(u, v) for u, v in combinations(mem, 2))

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= self.rows[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == self.vertex_mask

    def label_of(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)


@dataclass(frozen=True)
class Digraph:
    """Simple directed graph: no self-arcs, no parallel arcs."""

    n: int
    arcs: tuple[tuple[int, int], ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        seen = set()
        for u, v in self.arcs:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"arc ({u},{v}) out of range")
            if u == v:
                raise ValueError(f"self-arc at vertex {u}")
            if (u, v) in seen:
                raise ValueError(f"duplicate arc ({u},{v})")
            seen.add((u, v))
        if self.arcs != tuple(sorted(self.arcs)):
            raise ValueError("arcs must be sorted; use Digraph.from_arcs")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("labels do not match vertex count")

    @classmethod
    def from_arcs(cls, n: int, arcs, labels=None) -> "Digraph":
        return cls(n, tuple(sorted(set(map(tuple, arcs)))),
                   None if labels is None else tuple(labels))

    @cached_property
    def in_rows(self) -> tuple[int, ...]:
        rows = [0] * self.n
        for u, v in self.arcs:
            rows[v] |= 1 << u
        return tuple(rows)

    @cached_property
    def out_rows(self) -> tuple[int, ...]:
        rows = [0] * self.n
        for u, v in self.arcs:
            rows[u] |= 1 << v
        return tuple(rows)

    def in_degree(self, v: int) -> int:
        return popcount(self.in_rows[v])

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(bits(self.in_rows[v]))

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(bits(self.out_rows[v]))

    def label_of(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)


@dataclass(frozen=True)
class AcyclicLabeling:
    """Bijection vertex -> 1..n that strictly decreases along every arc."""

    labels: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.labels) != list(range(1, len(self.labels) + 1)):
            raise ValueError("labels must be a bijection onto 1..n")

    def of(self, v: int) -> int:
        return self.labels[v]

    def validates(self, digraph: Digraph) -> bool:
        return all(self.labels[u] > self.labels[v] for u, v in digraph.arcs)


@dataclass(frozen=True)
class DirectedCycle:
    """Witness for a non-acyclic digraph: consecutive vertices are arcs,
    and so is (last, first)."""

    vertices: tuple[int, ...]


def acyclic_labeling(digraph: Digraph) -> AcyclicLabeling | DirectedCycle:
    """Return an acyclic labeling of the digraph, or a directed cycle.

    Labels are assigned 1, 2, ... by repeatedly taking the smallest-index
    remaining vertex with no out-arc into the remaining set, so the result
    is deterministic.  A cycle is a result, not an error.
    """
    n = digraph.n
    remaining = (1 << n) - 1
    out = list(digraph.out_rows)
    labels = [0] * n
    for next_label in range(1, n + 1):
        pick = -1
        for v in bits(remaining):
            if out[v] & remaining == 0:
                pick = v
                break
        if pick < 0:
            return _extract_cycle(digraph, remaining)
        labels[pick] = next_label
        remaining &= ~(1 << pick)
    return AcyclicLabeling(tuple(labels))


def _extract_cycle(digraph: Digraph, remaining: int) -> DirectedCycle:
    # every remaining vertex has an out-arc into the remaining set, so
    # following smallest out-neighbours must revisit a vertex
    start = next(bits(remaining))
    path = [start]
    index = {start: 0}
    v = start
    while True:
        v = next(bits(digraph.out_rows[v] & remaining))
        if v in index:
            cycle = path[index[v]:]
            # rotate so the smallest vertex comes first
            k = cycle.index(min(cycle))
            return DirectedCycle(tuple(cycle[k:] + cycle[:k]))
        index[v] = len(path)
        path.append(v)


def competition_graph(digraph: Digraph) -> Graph:
    """Graph on V(D) with an edge xy whenever x and y share an out-neighbour.

    Equivalently the union, over all vertices z, of the complete graph on
    the in-neighbourhood of z.
    """
    n = digraph.n
    rows = [0] * n
    for z in range(n):
        group = digraph.in_rows[z]
        if popcount(group) >= 2:
            for u in bits(group):
                rows[u] |= group & ~(1 << u)
    return Graph(n, tuple(rows), digraph.labels)


def add_isolated(graph: Graph, k: int) -> Graph:
    """Return the graph together with k extra isolated vertices appended."""
    if k < 0:
        raise ValueError("isolate count must be nonnegative")
    if k == 0:
        return graph
    labels = None
    if graph.labels is not None:
        labels = graph.labels + tuple(f"i{j + 1}" for j in range(k))
    return Graph(graph.n + k, graph.rows + (0,) * k, labels)
