"""Certified builders and verifiers for effective competition covers.

An effective competition cover is a minimum edge clique cover of maximal
cliques C_1..C_t together with an accompanying acyclic digraph whose only
nonzero-in-degree vertices are t pairwise distinct sinks w_1..w_t, where
w_i is a common out-neighbour of every vertex of C_i.  Three builders
produce such digraphs (for chordal graphs, for graphs whose maximal
cliques each pin all their vertices to occupied edges, and for covers with
a simplicial-vertex-rich subfamily); a verifier checks arbitrary claimed
triples; and a Hall-style certificate extracts, from any realization, a
system of distinct prey matched to the cover.

Builders never trust their construction: every output is re-verified
against the competition-graph definition before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cliques import (EliminationOrdering, chordality, every_vertex_on_occupied_edge,
                      maximal_clique_masks, occupied_edges)
from .ecc import CliqueCover, min_edge_clique_cover, theta_e
from .graph import Digraph, Graph, add_isolated, bits, competition_graph, popcount
from .realizer import (Realization, RealizationError, certify_realization,
                       competition_number)


class NotChordalError(ValueError):
    def __init__(self, hole):
        super().__init__(f"graph is not chordal; induced cycle {hole.vertices}")
        self.hole = hole


@dataclass(frozen=True)
class EffectiveCoverCertificate:
    """Outcome of checking a (graph, cover, digraph) triple."""

    cover: CliqueCover
    digraph: Digraph
    checks: tuple[tuple[str, bool], ...]
    valid: bool
    failure: str | None
    sink_map: tuple[tuple[int, int], ...] | None
    realization: Realization | None

    def to_json_dict(self) -> dict:
        return {
            "valid": self.valid,
            "failure": self.failure,
            "checks": {name: ok for name, ok in self.checks},
            "sink_map": None if self.sink_map is None
            else [[i, w] for i, w in self.sink_map],
        }


@dataclass(frozen=True)
class HallCertificate:
    """Common-out-neighbour sets per cover clique and a matching that
    saturates the cover with pairwise distinct prey."""

    sets: tuple[tuple[int, ...], ...]
    matching: tuple[tuple[int, int], ...]

    def to_json_dict(self) -> dict:
        return {
            "sets": [list(s) for s in self.sets],
            "matching": [[i, w] for i, w in self.matching],
        }


def _max_bipartite_matching(adjacency) -> list:
    """Kuhn augmenting paths; deterministic given the adjacency order."""
    match_right: dict[int, int] = {}

    def try_assign(i, seen):
        for r in adjacency[i]:
            if r in seen:
                continue
            seen.add(r)
            if r not in match_right or try_assign(match_right[r], seen):
                match_right[r] = i
                return True
        return False

    for i in range(len(adjacency)):
        try_assign(i, set())
    match_left: list = [None] * len(adjacency)
    for r, i in match_right.items():
        match_left[i] = r
    return match_left


# ---------------------------------------------------------------------------
# chordal graphs


def chordal_realizer(graph: Graph) -> tuple[Realization, CliqueCover]:
    """Build an effective competition cover for a chordal graph.

    Takes a perfect elimination ordering [v1..vn], a minimum cover of
    maximal cliques reordered by the sorted position tuples of their
    members, identifies each cover clique with the closed later
    neighbourhood of its earliest vertex, and points that neighbourhood at
    the vertex one position earlier (the first clique at a fresh isolate).
    The result realizes the graph with one added isolate and exactly
    theta_e prey.
    """
    if graph.edge_count == 0:
        raise ValueError("graph must have at least one edge")
    if graph.isolated_vertices():
        raise ValueError("strip isolated vertices before building")
    peo = chordality(graph)
    if not isinstance(peo, EliminationOrdering):
        raise NotChordalError(peo)
    order = peo.order
    pos = {v: i + 1 for i, v in enumerate(order)}

    base = min_edge_clique_cover(graph)
    keyed = sorted(base.cliques, key=lambda c: tuple(sorted(pos[v] for v in c)))
    cover = CliqueCover(tuple(keyed), True, True, True)

    n = graph.n
    arcs = []
    sink_map = []
    suffix = [0] * (n + 2)
    mask = 0
    for i in range(n, 0, -1):
        mask |= 1 << order[i - 1]
        suffix[i] = mask
    for idx, clique in enumerate(cover.cliques):
        nk = min(pos[v] for v in clique)
        head = order[nk - 1]
        closed = ((1 << head) | graph.rows[head]) & suffix[nk]
        if closed != _mask_of(clique):
            raise RealizationError(
                f"cover clique {clique} is not a closed later neighbourhood")
        if idx == 0 and nk != 1:
            raise RealizationError("first cover clique misses the first vertex")
        sink = n if nk == 1 else order[nk - 2]
        sink_map.append((idx, sink))
        arcs.extend((v, sink) for v in clique)

    digraph = Digraph.from_arcs(n + 1, arcs)
    realization = certify_realization(graph, digraph, 1, sink_map)
    cert = verify_effective_cover(graph, cover, digraph)
    if not cert.valid:
        raise RealizationError(f"chordal construction failed: {cert.failure}")
    return realization, cover


def _mask_of(members) -> int:
    m = 0
    for v in members:
        m |= 1 << v
    return m


# ---------------------------------------------------------------------------
# occupied-edge graphs


def rebuild_star(graph: Graph, realization: Realization) -> Realization:
    """Rewire any realization into one with exactly theta_e prey.

    Requires that in every maximal clique each vertex lies on an edge
    occupied by that clique (then the maximal cliques are the unique
    minimum cover).  Every clique is redirected at the common out-neighbour,
    of smallest label in the input's acyclic labeling, of the endpoints of
    its occupied edges; the input labeling stays acyclic for the result.
    """
    ok, witness = every_vertex_on_occupied_edge(graph)
    if not ok:
        clique, vertex = witness
        raise ValueError(
            f"vertex {vertex} of maximal clique {clique} lies on no edge "
            f"occupied by it")
    certify_realization(graph, realization.digraph, realization.k)

    cliques = [tuple(bits(c)) for c in maximal_clique_masks(graph)
               if popcount(c) >= 2]
    if len(cliques) != theta_e(graph):
        raise RealizationError(
            "maximal cliques do not form a minimum cover despite the "
            "occupied-edge hypothesis")
    labels = realization.labeling.labels
    digraph = realization.digraph
    arcs = []
    sink_map = []
    for idx, clique in enumerate(cliques):
        candidates = set()
        for u, v in occupied_edges(graph, clique):
            candidates.update(bits(digraph.out_rows[u] & digraph.out_rows[v]))
        if not candidates:
            raise RealizationError(
                f"no common out-neighbour for the occupied edges of {clique}")
        sink = min(candidates, key=lambda w: labels[w])
        sink_map.append((idx, sink))
        arcs.extend((v, sink) for v in clique)

    sinks = [w for _, w in sink_map]
    if len(set(sinks)) != len(sinks):
        raise RealizationError("rebuilt sinks are not pairwise distinct")
    for u, v in arcs:
        if labels[u] <= labels[v]:
            raise RealizationError(
                "input labeling is no longer acyclic on the rebuilt digraph")
    star = Digraph.from_arcs(digraph.n, arcs)
    rebuilt = certify_realization(graph, star, realization.k, sink_map)
    if rebuilt.prey_count != theta_e(graph):
        raise RealizationError("rebuilt digraph does not have theta_e prey")
    return rebuilt


# ---------------------------------------------------------------------------
# simplicial-vertex families


def simplicial_family_realizer(graph: Graph, cover: CliqueCover,
                               family) -> Realization:
    """Build an accompanying digraph from a simplicial-vertex-rich subfamily.

    ``family`` lists indices into ``cover``; it must have theta_e - k + 1
    members and the subgraph spanned by the edges those cliques cover must
    contain at least theta_e - k simplicial vertices, where k is the
    competition number.  Family cliques are ranked by how many of those
    simplicial vertices they contain; the first k cover cliques feed fresh
    isolates and every later family clique feeds a fresh simplicial vertex
    drawn from the earlier family cliques.  The result is verified and
    rejected with a diagnostic rather than trusted.
    """
    if graph.edge_count == 0:
        raise ValueError("graph must have at least one edge")
    if graph.isolated_vertices():
        raise ValueError("strip isolated vertices before building")
    if not (cover.covers_all_edges and cover.all_maximal and cover.is_minimum):
        raise ValueError("cover must be a minimum cover of maximal cliques")
    family = sorted(set(family))
    if any(not 0 <= i < cover.theta for i in family):
        raise ValueError("family indices out of range")
    k, _ = competition_number(graph)
    theta = cover.theta
    if len(family) != theta - k + 1:
        raise ValueError(
            f"family must have theta_e - k + 1 = {theta - k + 1} members, "
            f"got {len(family)}")

    rows = [0] * graph.n
    for i in family:
        for clique in (cover.cliques[i],):
            for a in clique:
                for b in clique:
                    if a != b:
                        rows[a] |= 1 << b
    edge_graph = Graph(graph.n, tuple(rows))
    simplicial = set()
    for v in range(graph.n):
        nb = edge_graph.rows[v]
        if nb and all(nb & ~(1 << u) & ~edge_graph.rows[u] == 0 for u in bits(nb)):
            simplicial.add(v)
    if len(simplicial) < theta - k:
        raise ValueError(
            f"only {len(simplicial)} simplicial vertices in the family "
            f"subgraph; need at least {theta - k}")

    fam_sorted = sorted(family,
                        key=lambda i: (-len(simplicial & set(cover.cliques[i])),
                                       cover.cliques[i]))
    rest_sorted = sorted(i for i in range(theta) if i not in set(family))
    ordered = rest_sorted + fam_sorted

    arcs = []
    host_of: dict[int, int] = {}
    for slot in range(k):
        host = graph.n + slot
        host_of[ordered[slot]] = host
        arcs.extend((v, host) for v in cover.cliques[ordered[slot]])
    used: set[int] = set()
    reachable: set[int] = set(cover.cliques[ordered[k - 1]]) if k >= 1 else set()
    for j in range(k, theta):
        pool = sorted((simplicial & reachable) - used)
        if not pool:
            raise RealizationError(
                "ran out of fresh simplicial vertices; construction "
                "preconditions too weak for this input")
        sink = pool[0]
        used.add(sink)
        host_of[ordered[j]] = sink
        arcs.extend((v, sink) for v in cover.cliques[ordered[j]])
        reachable |= set(cover.cliques[ordered[j]])

    digraph = Digraph.from_arcs(graph.n + k, arcs)
    sink_map = tuple((i, host_of[i]) for i in range(theta))
    realization = certify_realization(graph, digraph, k, sink_map)
    cert = verify_effective_cover(graph, cover, digraph)
    if not cert.valid:
        raise RealizationError(
            f"simplicial-family construction failed verification: "
            f"{cert.failure}")
    return realization


# ---------------------------------------------------------------------------
# verification


_FAILURES = {
    "cliques are cliques": "cover contains a non-clique",
    "covers all edges": "cover does not cover all edges",
    "cover minimum": "cover not minimum",
    "all cliques maximal": "cover contains a non-maximal clique",
    "isolate count equals competition number": "isolate count differs from k",
    "competition graph matches": "competition graph mismatch",
    "prey count equals cover size": "prey count differs from cover size",
    "sinks assigned": "no distinct sink assignment covers the cliques",
}


def verify_effective_cover(graph: Graph, cover: CliqueCover,
                           digraph: Digraph) -> EffectiveCoverCertificate:
    """Check whether a cover plus digraph witnesses an effective
    competition cover; every failed condition is named individually."""
    checks: list[tuple[str, bool]] = []
    sink_map = None
    realization = None

    def record(name: str, ok: bool) -> bool:
        checks.append((name, ok))
        return ok

    cliques_ok = all(c and graph.is_clique(c) and len(set(c)) == len(c)
                     for c in cover.cliques)
    record("cliques are cliques", cliques_ok)
    covered = set()
    if cliques_ok:
        for c in cover.cliques:
            for i, u in enumerate(c):
                for v in c[i + 1:]:
                    covered.add((min(u, v), max(u, v)))
    covers_all = cliques_ok and covered == set(graph.edges())
    record("covers all edges", covers_all)
    minimum = covers_all and cover.theta == theta_e(graph)
    record("cover minimum", minimum)
    maximal_set = set(maximal_clique_masks(graph))
    all_max = cliques_ok and all(_mask_of(c) in maximal_set for c in cover.cliques)
    record("all cliques maximal", all_max)

    k, _ = competition_number(graph)
    iso_ok = digraph.n == graph.n + k
    record("isolate count equals competition number", iso_ok)
    comp_ok = iso_ok and competition_graph(digraph) == add_isolated(graph, k)
    record("competition graph matches", comp_ok)

    prey = [v for v in range(digraph.n) if digraph.in_rows[v]]
    prey_ok = len(prey) == cover.theta
    record("prey count equals cover size", prey_ok)

    adjacency = []
    for c in cover.cliques:
        mask = _mask_of(c)
        adjacency.append([w for w in prey if digraph.in_rows[w] & mask == mask])
    match = _max_bipartite_matching(adjacency)
    sinks_ok = cliques_ok and all(w is not None for w in match)
    record("sinks assigned", sinks_ok)

    valid = all(ok for _, ok in checks)
    failure = None
    for name, ok in checks:
        if not ok:
            failure = _FAILURES[name]
            break
    if valid:
        sink_map = tuple((i, w) for i, w in enumerate(match))
        realization = certify_realization(graph, digraph, k, sink_map)
    return EffectiveCoverCertificate(cover, digraph, tuple(checks), valid,
                                     failure, sink_map, realization)


def hall_certificate(graph: Graph, cover: CliqueCover,
                     digraph: Digraph) -> HallCertificate:
    """Match every cover clique to a distinct prey that two of its members
    feed.  The sets A_i collect, per clique, the common out-neighbours of
    pairs inside it; a matching saturating the cover always exists for a
    genuine realization, so a missing matching aborts loudly."""
    if not (cover.covers_all_edges and cover.all_maximal and cover.is_minimum):
        raise ValueError("cover must be a minimum cover of maximal cliques")
    k = digraph.n - graph.n
    if k < 0 or competition_graph(digraph) != add_isolated(graph, k):
        raise ValueError("digraph does not realize the graph plus isolates")
    sets = []
    for c in cover.cliques:
        mask = _mask_of(c)
        members = tuple(v for v in range(digraph.n)
                        if popcount(digraph.in_rows[v] & mask) >= 2)
        if not members:
            raise ValueError(f"clique {c} has no fed prey; not a realization")
        sets.append(members)
    match = _max_bipartite_matching([list(s) for s in sets])
    if any(w is None for w in match):
        raise RuntimeError(
            "no matching saturates the cover cliques; this contradicts a "
            "proven guarantee and indicates a library bug")
    matching = tuple((i, w) for i, w in enumerate(match))
    return HallCertificate(tuple(sets), matching)
