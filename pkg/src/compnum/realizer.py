"""Exact competition numbers and predator indices with witness digraphs.

Search model.  A realization of G plus k isolated vertices is rebuilt as an
ordered placement of vertices: each placed vertex may take as in-neighbour
set one clique of G drawn from the vertices placed before it.  Three
reductions make this complete:

* an added isolate never needs out-arcs (an out-arc from an isolate forces
  its head's in-neighbourhood to be a singleton, which induces no edge, so
  the arc can be deleted);
* every in-neighbourhood of size >= 2 is a clique of G inside V(G), because
  an isolate inside one would pick up an edge in the competition graph;
* singleton in-neighbourhoods induce no edge and only raise the prey count,
  so they are never needed for feasibility or for maximizing predators.

Since isolates send no arcs, they can all be placed last, where they may
host arbitrary cliques of G; the search therefore walks orderings of V(G)
only and finishes each branch with an exact set-cover of the leftover
edges, one clique per isolate.  States are memoized on (placed-vertex
bitmask, covered-edge bitmask).  Hosting a clique that is maximal within
the placed prefix dominates hosting any sub-clique, so only those are
branched on.  Everything is verified after the fact: every witness is
re-checked against the competition-graph definition and given an acyclic
labeling before it is returned.

The number of prey (vertices of nonzero in-degree) of an optimal witness is
the minimum possible, and the predator count n + k minus prey is the
maximum; with k = k(G) the latter is the primary predator index.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .cliques import maximal_cliques_in
from .ecc import cover_solver, min_cover_of_edges, theta_e
from .graph import (AcyclicLabeling, Digraph, Graph, add_isolated,
                    acyclic_labeling, bits, competition_graph, popcount)


class RealizationError(RuntimeError):
    """A digraph failed re-verification against its claimed competition
    graph; raised instead of trusting any construction."""


@dataclass(frozen=True)
class Realization:
    """A verified witness digraph for G together with k isolated vertices."""

    digraph: Digraph
    k: int
    labeling: AcyclicLabeling
    prey_count: int
    predator_count: int
    sink_map: tuple[tuple[int, int], ...] | None = None

    def witness_arcs(self) -> list[list[int]]:
        return [[u, v] for u, v in self.digraph.arcs]


def certify_realization(graph: Graph, digraph: Digraph, k: int,
                        sink_map=None) -> Realization:
    """Check a claimed realization and package it; never trust, verify."""
    if digraph.n != graph.n + k:
        raise RealizationError(
            f"digraph has {digraph.n} vertices, expected {graph.n + k}")
    comp = competition_graph(digraph)
    if comp != add_isolated(graph, k):
        raise RealizationError("competition graph mismatch")
    labeling = acyclic_labeling(digraph)
    if not isinstance(labeling, AcyclicLabeling):
        raise RealizationError(f"digraph contains a cycle: {labeling.vertices}")
    prey = sum(1 for v in range(digraph.n) if digraph.in_rows[v])
    if graph.edge_count > 0 and prey < theta_e(graph):
        raise RealizationError("fewer prey than the edge clique cover number")
    return Realization(digraph, k, labeling, prey, digraph.n - prey,
                       None if sink_map is None else tuple(sink_map))


class _Found(Exception):
    pass


class _Search:
    """Exact placement search on a graph without isolated vertices."""

    def __init__(self, graph: Graph):
        self.graph = graph
        self.n = graph.n
        self.all_mask = graph.vertex_mask
        self.solver = cover_solver(graph)
        self.full_edges = self.solver.full_mask
        self._options: dict[int, tuple] = {}

    def _clique_options(self, placed: int):
        """Cliques maximal within the placed prefix, largest first."""
        cached = self._options.get(placed)
        if cached is None:
            opts = []
            for cm in maximal_cliques_in(self.graph, placed):
                members = tuple(bits(cm))
                opts.append((members, self.solver.edge_mask_of(members)))
            opts.sort(key=lambda t: (-popcount(t[1]), t[0]))
            cached = tuple(opts)
            self._options[placed] = cached
        return cached

    def feasible(self, k: int):
        """Decision: a placement plan realizing G plus k isolates, or None."""
        result = []
        visited = set()

        def rec(placed, covered, trail):
            rem = self.full_edges & ~covered
            if self.solver.size(rem) <= k:
                result.append((list(trail), rem))
                raise _Found
            if placed == self.all_mask:
                return
            if self.solver.size(rem) > k + self.n - popcount(placed):
                return
            state = (placed, covered)
            if state in visited:
                return
            visited.add(state)
            options = self._clique_options(placed)
            for w in bits(self.all_mask & ~placed):
                wbit = 1 << w
                for members, em in options:
                    if em & ~covered:
                        trail.append((w, members))
                        rec(placed | wbit, covered | em, trail)
                        trail.pop()
                trail.append((w, None))
                rec(placed | wbit, covered, trail)
                trail.pop()

        try:
            rec(0, 0, [])
        except _Found:
            return result[0]
        return None

    def minimize(self, k: int):
        """Minimum total clique count (= prey count) over all realizations
        with k isolates, with a witness plan; None if infeasible."""
        floor = self.solver.size(self.full_edges)
        best: list = [None, None]
        visited: dict[tuple[int, int], int] = {}

        def rec(placed, covered, used, trail):
            rem = self.full_edges & ~covered
            c = self.solver.size(rem)
            if c <= k:
                total = used + c
                if best[0] is None or total < best[0]:
                    best[0] = total
                    best[1] = (list(trail), rem)
                    if total == floor:
                        raise _Found
            if placed == self.all_mask:
                return
            if c > k + self.n - popcount(placed):
                return
            if best[0] is not None and used + c >= best[0]:
                return
            state = (placed, covered)
            seen = visited.get(state)
            if seen is not None and seen <= used:
                return
            visited[state] = used
            options = self._clique_options(placed)
            for w in bits(self.all_mask & ~placed):
                wbit = 1 << w
                for members, em in options:
                    if em & ~covered:
                        trail.append((w, members))
                        rec(placed | wbit, covered | em, used + 1, trail)
                        trail.pop()
                trail.append((w, None))
                rec(placed | wbit, covered, used, trail)
                trail.pop()

        try:
            rec(0, 0, 0, [])
        except _Found:
            pass
        if best[0] is None:
            return None
        return best[0], best[1]

    def build(self, budget: int, plan) -> Digraph:
        """Turn a placement plan into a digraph on n + budget vertices."""
        placements, rem = plan
        arcs = []
        for w, members in placements:
            if members is not None:
                arcs.extend((v, w) for v in members)
        leftover = min_cover_of_edges(self.graph, rem)
        if len(leftover) > budget:
            raise RealizationError("isolate budget exceeded by plan")
        for j, clique in enumerate(leftover):
            arcs.extend((v, self.n + j) for v in clique)
        return Digraph.from_arcs(self.n + budget, arcs)


@lru_cache(maxsize=None)
def _search(graph: Graph) -> _Search:
    return _Search(graph)


def _split_isolates(graph: Graph) -> tuple[Graph, tuple[int, ...]]:
    isolates = graph.isolated_vertices()
    if not isolates:
        return graph, ()
    keep = [v for v in range(graph.n) if graph.rows[v]]
    index = {v: i for i, v in enumerate(keep)}
    rows = tuple(
        sum(1 << index[u] for u in bits(graph.rows[v])) for v in keep)
    return Graph(len(keep), rows), isolates


def _expand_plan(graph: Graph, core: Graph, isolates, budget: int,
                 k: int, digraph: Digraph, sink_map=None) -> Realization:
    """Map a core-level witness back onto the original vertex indices."""
    keep = [v for v in range(graph.n) if graph.rows[v]]
    mapping = {i: v for i, v in enumerate(keep)}
    for j in range(budget):
        if j < len(isolates):
            mapping[core.n + j] = isolates[j]
        else:
            mapping[core.n + j] = graph.n + (j - len(isolates))
    arcs = [(mapping[u], mapping[v]) for u, v in digraph.arcs]
    out = Digraph.from_arcs(graph.n + k, arcs, labels=None)
    mapped_sinks = None
    if sink_map is not None:
        mapped_sinks = tuple((i, mapping[w]) for i, w in sink_map)
    return certify_realization(graph, out, k, mapped_sinks)


def realizable_with(graph: Graph, k: int) -> Realization | None:
    """A verified realization of the graph plus k isolates, or None."""
    if k < 0:
        raise ValueError("isolate count must be nonnegative")
    core, isolates = _split_isolates(graph)
    budget = k + len(isolates)
    if core.edge_count == 0:
        return certify_realization(graph, Digraph.from_arcs(graph.n + k, ()), k)
    search = _search(core)
    plan = search.feasible(budget)
    if plan is None:
        return None
    return _expand_plan(graph, core, isolates, budget, k,
                        search.build(budget, plan))


@lru_cache(maxsize=None)
def competition_number(graph: Graph) -> tuple[int, Realization]:
    """The least k for which the graph plus k isolates is the competition
    graph of an acyclic digraph, with a verified witness.

    The ascent starts from the classical floor max(0, theta_e - n + 2),
    raised to 1 when the graph has an edge but no isolated vertex: the
    minimal vertex of any acyclic labeling sends no arcs, so a competition
    graph of an acyclic digraph always has an isolated vertex.
    """
    core, isolates = _split_isolates(graph)
    if core.edge_count == 0:
        witness = certify_realization(graph, Digraph.from_arcs(graph.n, ()), 0)
        return 0, witness
    theta = theta_e(core)
    lower = max(0, theta - core.n + 2, 1)
    search = _search(core)
    for k0 in range(lower, theta + 1):
        if search.feasible(k0) is not None:
            break
    else:
        raise RuntimeError("no realization found up to the cover-size bound")
    k = max(0, k0 - len(isolates))
    budget = k + len(isolates)
    plan = search.feasible(budget)
    digraph = search.build(budget, plan)
    return k, _expand_plan(graph, core, isolates, budget, k, digraph)


def max_predators_with(graph: Graph, k: int) -> tuple[int, Realization] | None:
    """Maximum number of in-degree-0 vertices over realizations with a
    given isolate count k (not necessarily the competition number), with a
    witness attaining it.  Returns None when no realization exists."""
    if k < 0:
        raise ValueError("isolate count must be nonnegative")
    core, isolates = _split_isolates(graph)
    budget = k + len(isolates)
    if core.edge_count == 0:
        witness = certify_realization(graph, Digraph.from_arcs(graph.n + k, ()), k)
        return graph.n + k, witness
    search = _search(core)
    result = search.minimize(budget)
    if result is None:
        return None
    m_star, plan = result
    witness = _expand_plan(graph, core, isolates, budget, k,
                           search.build(budget, plan))
    assert witness.prey_count == m_star
    return graph.n + k - m_star, witness


@lru_cache(maxsize=None)
def primary_predator_index(graph: Graph) -> tuple[int, Realization]:
    """Maximum number of in-degree-0 vertices over all acyclic digraphs
    whose competition graph is the graph plus k(G) isolates."""
    k, _ = competition_number(graph)
    result = max_predators_with(graph, k)
    assert result is not None
    return result


def min_prey_count(graph: Graph) -> int:
    """Minimum number of nonzero-in-degree vertices over realizations at
    the competition number; always at least theta_e."""
    p, witness = primary_predator_index(graph)
    return witness.prey_count


@dataclass(frozen=True)
class OracleResult:
    realizable: bool
    max_predators: int | None


def dag_oracle(graph: Graph, k: int, cap: int = 6) -> OracleResult:
    """Independent check by sweeping every labeled acyclic digraph.

    Recursion over topological placements: vertices are laid down one at a
    time and each chooses any in-neighbour set among the already placed
    vertices that is a clique of the target graph (including the empty set
    and singletons, and isolates may send or receive arcs).  Memoization on
    (placed set, covered edges) collapses the walk without changing the
    decision or the maximum predator count.  Test-side use only.
    """
    total = graph.n + k
    if total > cap:
        raise ValueError(f"oracle capped at {cap} vertices, got {total}")
    target = add_isolated(graph, k)
    full = (1 << total) - 1
    edges = target.edges()
    edge_index = {e: i for i, e in enumerate(edges)}
    full_edges = (1 << len(edges)) - 1

    options = [(0, 0)]
    for size in range(1, total + 1):
        for sub in combinations(range(total), size):
            if size >= 2 and not target.is_clique(sub):
                continue
            mask = 0
            for v in sub:
                mask |= 1 << v
            em = 0
            for u, v in combinations(sub, 2):
                em |= 1 << edge_index[(u, v)]
            options.append((mask, em))

    memo: dict[tuple[int, int], int | None] = {}

    def best(placed: int, covered: int) -> int | None:
        if placed == full:
            return 0 if covered == full_edges else None
        key = (placed, covered)
        if key in memo:
            return memo[key]
        out: int | None = None
        for w in bits(full & ~placed):
            wbit = 1 << w
            for mask, em in options:
                if mask & ~placed:
                    continue
                sub = best(placed | wbit, covered | em)
                if sub is None:
                    continue
                cand = sub + (1 if mask == 0 else 0)
                if out is None or cand > out:
                    out = cand
        memo[key] = out
        return out

    res = best(0, 0)
    return OracleResult(res is not None, res)


def realization_json_dict(k: int, p: int, prey: int,
                          realization: Realization) -> dict:
    return {
        "k": k,
        "p": p,
        "prey": prey,
        "witness_arcs": realization.witness_arcs(),
    }
