"""Shared independent oracles for the test suite.

Everything here is deliberately naive: pair scans, full DFS, subset
enumeration.  These functions never share code with the library paths they
check.
"""

from __future__ import annotations

import random
from itertools import combinations

from compnum.graph import Digraph, Graph


def brute_competition_graph(digraph: Digraph) -> Graph:
    """Pair scan over all vertex pairs and potential common out-neighbours."""
    arcs = set(digraph.arcs)
    edges = []
    for x, y in combinations(range(digraph.n), 2):
        if any((x, z) in arcs and (y, z) in arcs for z in range(digraph.n)):
            edges.append((x, y))
    return Graph.from_edges(digraph.n, edges)


def has_directed_cycle(digraph: Digraph) -> bool:
    color = [0] * digraph.n

    def visit(v) -> bool:
        color[v] = 1
        for w in digraph.out_neighbors(v):
            if color[w] == 1 or (color[w] == 0 and visit(w)):
                return True
        color[v] = 2
        return False

    return any(color[v] == 0 and visit(v) for v in range(digraph.n))


def find_hole_by_scan(graph: Graph):
    """Exhaustive induced-cycle search; None when the graph is chordal."""
    for size in range(4, graph.n + 1):
        for sub in combinations(range(graph.n), size):
            degs = [sum(1 for u in sub if u != v and graph.has_edge(u, v))
                    for v in sub]
            if all(d == 2 for d in degs) and _connected_subset(graph, sub):
                return sub
    return None


def _connected_subset(graph: Graph, sub) -> bool:
    sub = set(sub)
    seen = {next(iter(sub))}
    frontier = list(seen)
    while frontier:
        v = frontier.pop()
        for u in graph.neighbors(v):
            if u in sub and u not in seen:
                seen.add(u)
                frontier.append(u)
    return seen == sub


def raw_dag_oracle(graph: Graph, k: int):
    """Unmemoized sweep of every (ordering, in-neighbourhood) choice.

    Exponential; only for tiny instances.  Returns (realizable,
    max_predators) like the library oracle.
    """
    from compnum.graph import add_isolated

    target = add_isolated(graph, k)
    total = target.n
    edges = set(target.edges())
    options = [frozenset()]
    for size in range(1, total + 1):
        for sub in combinations(range(total), size):
            if size < 2 or all(target.has_edge(u, v)
                               for u, v in combinations(sub, 2)):
                options.append(frozenset(sub))

    best = [None]

    def rec(placed: tuple, covered: frozenset, predators: int):
        if len(placed) == total:
            if covered == edges:
                if best[0] is None or predators > best[0]:
                    best[0] = predators
            return
        for w in range(total):
            if w in placed:
                continue
            for group in options:
                if not group <= set(placed):
                    continue
                extra = {(min(u, v), max(u, v))
                         for u, v in combinations(sorted(group), 2)}
                rec(placed + (w,), covered | frozenset(extra),
                    predators + (1 if not group else 0))

    rec((), frozenset(), 0)
    return best[0] is not None, best[0]


def random_graph(rng: random.Random, n: int) -> Graph:
    edges = [(u, v) for u, v in combinations(range(n), 2)
             if rng.random() < rng.random()]
    return Graph.from_edges(n, edges)


def random_digraph(rng: random.Random, n: int, p: float = 0.3) -> Digraph:
    arcs = [(u, v) for u in range(n) for v in range(n)
            if u != v and rng.random() < p]
    return Digraph.from_arcs(n, arcs)
